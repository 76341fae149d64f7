// Per-query instrumentation counters. Owned by the caller, passed
// explicitly; the index itself holds no mutable state.
#pragma once

#include "augms/common.hpp"

namespace augms {

struct query_stats {
    u64 direct_extensions = 0;
    u64 jumps = 0;
    u64 lce_calls = 0;
    u64 lce_skips = 0;

    void reset() { *this = query_stats{}; }

    query_stats& operator+=(const query_stats& o) {
        direct_extensions += o.direct_extensions;
        jumps += o.jumps;
        lce_calls += o.lce_calls;
        lce_skips += o.lce_skips;
        return *this;
    }

    bool operator==(const query_stats&) const = default;
};

}  // namespace augms
