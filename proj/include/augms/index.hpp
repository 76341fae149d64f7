// The complete query index: RLBWT + thresholds + threshold LCEs + LCE
// backend, with the construction pipeline that assembles them.
#pragma once

#include "augms/lce.hpp"
#include "augms/matcher.hpp"
#include "augms/rlbwt.hpp"
#include "augms/suffix.hpp"
#include "augms/thresholds.hpp"

namespace augms {

struct build_options {
    thr_encoding encoding = thr_encoding::full;
    thr_storage storage = thr_storage::array;
    lce_kind lce = lce_kind::naive;
};

struct ms_index {
    rlbwt rb;
    threshold_table thr;
    thr_lce_table tlce;
    lce_backend lce;

    u64 n() const { return rb.size(); }
    u64 r() const { return rb.runs(); }
    thr_encoding encoding() const { return tlce.encoding(); }

    matching_statistics query(const std::string& pattern, ms_mode mode, query_stats& st,
                              const compute_opts& opts = {}) const {
        return compute_ms(rb, thr, tlce, lce, pattern, mode, st, opts);
    }

    matching_statistics query(const u8* pat, u64 m, ms_mode mode, query_stats& st,
                              const compute_opts& opts = {}) const {
        return compute_ms(rb, thr, tlce, lce, pat, m, mode, st, opts);
    }
};

inline ms_index build_index(text t, const build_options& opt = {}) {
    suffix_bundle b = build_suffix_bundle(std::move(t));
    ms_index ix;
    ix.rb = rlbwt::from_bundle(b);
    thr_raw raw = build_augmented(b, ix.rb);
    ix.thr = threshold_table::build(raw, ix.rb, opt.storage);
    ix.tlce = thr_lce_table::encode(raw, opt.encoding, b.n());
    ix.lce = opt.lce == lce_kind::naive ? lce_backend::make_naive(b) : lce_backend::make_lcp_rmq(b);
    return ix;
}

}  // namespace augms
