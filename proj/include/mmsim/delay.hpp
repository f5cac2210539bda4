#pragma once

#include <deque>

#include "mmsim/core.hpp"

namespace mmsim {

// Fixed-length FIFO modelling confirmation latency: what goes in at step t
// comes out at step t + delay. Shifted exactly once per simulation step.
// delay 0 passes straight through.
struct DelayLine {
    long long delay = 0;
    std::deque<Orders> buffer;  // oldest first, always `delay` entries

    static DelayLine with_delay(long long d) {
        DelayLine line;
        line.delay = d;
        line.buffer.assign(static_cast<std::size_t>(d), Orders{});
        return line;
    }

    Orders shift(Orders incoming) {
        if (delay == 0) return incoming;
        buffer.push_back(std::move(incoming));
        Orders out = std::move(buffer.front());
        buffer.pop_front();
        return out;
    }
};

}  // namespace mmsim
