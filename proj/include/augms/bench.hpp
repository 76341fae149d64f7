// Benchmark records and the query loop they measure. One row per
// (variant, backend); counters come from a single pass, timing from
// all repeats together.
#pragma once

#include <chrono>
#include <iomanip>

#include "augms/io.hpp"
#include "augms/matcher.hpp"

namespace augms {

struct bench_record {
    std::string variant;
    std::string lce_backend_name;
    u64 n = 0, r = 0;
    index_sections sections;
    u64 patterns = 0;
    u32 repeats = 1;
    u64 total_query_us = 0;
    query_stats stats;
    u64 ms_checksum = 0;

    double n_over_r() const { return r ? static_cast<double>(n) / static_cast<double>(r) : 0.0; }
    double mean_pattern_us() const {
        u64 q = patterns * repeats;
        return q ? static_cast<double>(total_query_us) / static_cast<double>(q) : 0.0;
    }
    double skip_fraction() const {
        return stats.jumps ? static_cast<double>(stats.lce_skips) / static_cast<double>(stats.jumps) : 0.0;
    }
};

inline const char* bench_csv_header() {
    return "variant,lce_backend,n,r,n_over_r,index_bytes,header_bytes,rlbwt_bytes,"
           "thresholds_bytes,thr_lce_bytes,lce_bytes,patterns,repeats,total_query_us,"
           "mean_pattern_us,direct_extensions,jumps,lce_calls,lce_skips,skip_fraction,ms_checksum";
}

inline void write_bench_csv_row(std::ostream& out, const bench_record& b) {
    out << b.variant << ',' << b.lce_backend_name << ',' << b.n << ',' << b.r << ','
        << std::fixed << std::setprecision(2) << b.n_over_r() << ','
        << b.sections.total() << ',' << b.sections.header << ',' << b.sections.rlbwt << ','
        << b.sections.thresholds << ',' << b.sections.thr_lce << ',' << b.sections.lce << ','
        << b.patterns << ',' << b.repeats << ',' << b.total_query_us << ','
        << std::setprecision(2) << b.mean_pattern_us() << ','
        << b.stats.direct_extensions << ',' << b.stats.jumps << ',' << b.stats.lce_calls << ','
        << b.stats.lce_skips << ',' << std::setprecision(4) << b.skip_fraction() << ','
        << std::hex << std::setw(16) << std::setfill('0') << b.ms_checksum
        << std::dec << std::setfill(' ') << '\n';
    out << std::defaultfloat;
}

// Queries all patterns `repeats` times; counters and checksum from the
// first pass only (they are deterministic across passes).
inline bench_record run_bench(const ms_index& ix, const std::vector<std::vector<u8>>& patterns,
                              u32 repeats, ms_mode mode) {
    bench_record rec;
    rec.variant = to_string(ix.encoding());
    rec.lce_backend_name = ix.lce.kind() == lce_kind::naive ? "naive" : "lcp-rmq";
    rec.n = ix.n();
    rec.r = ix.r();
    rec.patterns = patterns.size();
    rec.repeats = repeats;

    std::ostringstream sink(std::ios::binary);
    save_index(ix, sink, &rec.sections);

    fnv1a64 h;
    auto t0 = std::chrono::steady_clock::now();
    for (u32 rep = 0; rep < repeats; ++rep) {
        query_stats st;
        fnv1a64 hh;
        for (const auto& p : patterns) {
            auto ms = ix.query(p.data(), p.size(), mode, st);
            fold_ms(hh, ms);
        }
        if (rep == 0) {
            rec.stats = st;
            h = hh;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    rec.total_query_us =
        static_cast<u64>(std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
    rec.ms_checksum = h.value();
    return rec;
}

}  // namespace augms
