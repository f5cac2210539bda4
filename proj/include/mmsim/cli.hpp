#pragma once

#include <string>
#include <vector>

namespace mmsim {

// Exit codes: 0 success, 1 config/usage error, 2 invariant violation,
// 3 I/O failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace mmsim
