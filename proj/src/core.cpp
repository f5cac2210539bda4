#include "mmsim/core.hpp"

namespace mmsim {

std::string format_price(Price subticks, std::int64_t scale) {
    std::string out;
    std::uint64_t a = subticks < 0 ? static_cast<std::uint64_t>(-(subticks + 1)) + 1
                                   : static_cast<std::uint64_t>(subticks);
    std::uint64_t s = static_cast<std::uint64_t>(scale);
    if (subticks < 0) out += '-';
    out += std::to_string(a / s);
    std::uint64_t rem = a % s;
    if (rem == 0) return out;
    out += '.';
    for (int digit = 0; digit < 12 && rem != 0; ++digit) {
        rem *= 10;
        out += static_cast<char>('0' + rem / s);
        rem %= s;
    }
    return out;
}

}  // namespace mmsim
