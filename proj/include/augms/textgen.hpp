// Deterministic input generators for tests and benchmarks.
#pragma once

#include <random>

#include "augms/text.hpp"

namespace augms {

inline std::vector<u8> gen_alphabet(u32 sigma) {
    // 4 gets DNA, anything else gets letters; both stay printable.
    std::vector<u8> a;
    if (sigma == 4) {
        a = {'A', 'C', 'G', 'T'};
    } else {
        for (u32 i = 0; i < sigma; ++i) a.push_back(static_cast<u8>('a' + i));
    }
    return a;
}

inline std::vector<u8> random_bytes(u64 n, const std::vector<u8>& alpha, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> pick(0, alpha.size() - 1);
    std::vector<u8> out(n);
    for (u64 i = 0; i < n; ++i) out[i] = alpha[pick(rng)];
    return out;
}

// Point mutations at the given rate, each to a different symbol.
inline std::vector<u8> mutate(std::vector<u8> seq, double rate, const std::vector<u8>& alpha,
                              std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<u64> pick(0, alpha.size() - 1);
    for (auto& b : seq) {
        if (coin(rng) >= rate) continue;
        u8 nb = b;
        while (nb == b && alpha.size() > 1) nb = alpha[pick(rng)];
        b = nb;
    }
    return seq;
}

// Mutated copies of one seed sequence, a separator after each copy.
inline std::vector<u8> make_pangenome(u64 seed_len, u32 copies, double divergence, u64 seed) {
    std::mt19937_64 rng(seed);
    auto alpha = gen_alphabet(4);
    auto base = random_bytes(seed_len, alpha, rng);
    std::vector<u8> out;
    out.reserve((seed_len + 1) * copies);
    for (u32 c = 0; c < copies; ++c) {
        auto copy = c == 0 ? base : mutate(base, divergence, alpha, rng);
        out.insert(out.end(), copy.begin(), copy.end());
        out.push_back(RECORD_SEP);
    }
    return out;
}

// Substring of one record (never crosses separators), point-mutated.
inline std::vector<u8> sample_read(const std::vector<u8>& pan, u64 record_len, u32 copies, u64 len,
                                   double err, std::mt19937_64& rng) {
    auto alpha = gen_alphabet(4);
    std::uniform_int_distribution<u64> pick_copy(0, copies - 1);
    std::uniform_int_distribution<u64> pick_off(0, record_len - len);
    u64 start = pick_copy(rng) * (record_len + 1) + pick_off(rng);
    std::vector<u8> read(pan.begin() + start, pan.begin() + start + len);
    return mutate(std::move(read), err, alpha, rng);
}

}  // namespace augms
