#include <string>
#include <vector>

#include "mmsim/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mmsim::run_cli(args);
}
