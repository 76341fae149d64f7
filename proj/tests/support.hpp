// Shared helpers for the test executables.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "augms/rlbwt.hpp"
#include "augms/text.hpp"
#include "augms/textgen.hpp"
#include "augms/thresholds.hpp"
#include "oracle/oracle.hpp"

namespace augms::testing {

// Text bytes as the oracle wants them: 0-based, sentinel included.
inline std::vector<u8> oracle_text(const text& t) {
    std::vector<u8> v(t.size());
    for (u64 i = 1; i <= t.size(); ++i) v[i - 1] = t[i];
    return v;
}

inline std::vector<u8> to_bytes(const std::string& s) {
    return std::vector<u8>(s.begin(), s.end());
}

// Flattens the built threshold data into the oracle's pair records.
inline std::vector<oracle::pair_info> oracle_pairs(const rlbwt& rb, const thr_raw& raw) {
    std::vector<oracle::pair_info> out;
    for (u64 x = 1; x <= rb.runs(); ++x) {
        auto p = raw.lay.index_of_run(rb, x);
        if (!p) continue;
        const u8 c = rb.head(x);
        const u64 ord = rb.run_ordinal(x);
        oracle::pair_info pi;
        pi.e1 = rb.run_end(rb.runs_of(c)[ord - 2]);
        pi.s2 = rb.run_start(x);
        pi.t = raw.thr_pos[*p];
        pi.lce_e = raw.lce_e[*p];
        pi.lce_s = raw.lce_s[*p];
        pi.used_e = raw.used_e[*p];
        pi.used_s = raw.used_s[*p];
        out.push_back(pi);
    }
    return out;
}

inline std::vector<u8> random_text_bytes(u64 n, u32 sigma, std::mt19937_64& rng) {
    auto alpha = gen_alphabet(sigma);
    return random_bytes(n, alpha, rng);
}

}  // namespace augms::testing
