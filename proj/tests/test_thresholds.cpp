#include <random>
#include <sstream>
#include <string>

#include "augms/thresholds.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace augms;
using namespace augms::testing;

namespace {

struct built {
    suffix_bundle b;
    rlbwt rb;
    thr_raw raw;
};

built make(const std::string& s) {
    built r;
    r.b = build_suffix_bundle(text::build(s));
    r.rb = rlbwt::from_bundle(r.b);
    r.raw = build_augmented(r.b, r.rb);
    return r;
}

}  // namespace

TEST_CASE("encoding names round trip") {
    for (auto e : {thr_encoding::phoni, thr_encoding::full, thr_encoding::byte,
                   thr_encoding::bv_full, thr_encoding::bv_byte, thr_encoding::dac,
                   thr_encoding::bv_dac}) {
        auto back = encoding_from_string(to_string(e));
        REQUIRE(back.has_value());
        CHECK(*back == e);
    }
    CHECK(!encoding_from_string("nope").has_value());
    CHECK(std::string(to_string(thr_encoding::bv_dac)) == "bv-dac");
}

TEST_CASE("pair layout on abracadabra") {
    auto m = make("abracadabra");
    // Runs: a r d $ r c a b. Second runs exist for 'a' (run 7) and 'r' (run 5).
    CHECK(m.raw.lay.pairs() == 2);
    CHECK(m.raw.pairs() == 2);
    REQUIRE(m.raw.lay.index_of_run(m.rb, 5).has_value());
    REQUIRE(m.raw.lay.index_of_run(m.rb, 7).has_value());
    for (u64 x : {1, 2, 3, 4, 6, 8})
        CHECK(!m.raw.lay.index_of_run(m.rb, x).has_value());
    // Layout is grouped by symbol byte: 'a' pair first, then 'r'.
    CHECK(*m.raw.lay.index_of_run(m.rb, 7) == 0);
    CHECK(*m.raw.lay.index_of_run(m.rb, 5) == 1);
}

TEST_CASE("threshold positions and flank values on abracadabra") {
    auto m = make("abracadabra");
    // lcp = 0 0 1 4 1 1 0 3 0 0 0 2 (rows 1..12)
    // 'a' pair: e1 = 1, s2 = 7. Minimum of lcp[2..7] is 0, last at row 7.
    u64 ia = *m.raw.lay.index_of_run(m.rb, 7);
    CHECK(m.raw.thr_pos[ia] == 7);
    CHECK(m.raw.used_e[ia]);
    CHECK_FALSE(m.raw.used_s[ia]);
    CHECK(m.raw.lce_e[ia] == 0);  // min lcp[2..6], a genuinely zero flank
    CHECK(m.raw.lce_s[ia] == 0);  // unused, stored as zero

    // 'r' pair: e1 = 2, s2 = 5. Minimum of lcp[3..5] is 1, last at row 5.
    u64 ir = *m.raw.lay.index_of_run(m.rb, 5);
    CHECK(m.raw.thr_pos[ir] == 5);
    CHECK(m.raw.used_e[ir]);
    CHECK_FALSE(m.raw.used_s[ir]);
    CHECK(m.raw.lce_e[ir] == 1);  // min lcp[3..4]
    CHECK(m.raw.lce_s[ir] == 0);
}

TEST_CASE("threshold storages agree") {
    auto m = make("abracadabra");
    auto arr = threshold_table::build(m.raw, m.rb, thr_storage::array);
    auto sbv = threshold_table::build(m.raw, m.rb, thr_storage::sigma_bv);
    CHECK(arr.storage() == thr_storage::array);
    CHECK(sbv.storage() == thr_storage::sigma_bv);
    for (u64 x = 1; x <= m.rb.runs(); ++x) {
        CHECK(arr.lookup(m.rb, x) == sbv.lookup(m.rb, x));
        CHECK(arr.pair_index(m.rb, x) == sbv.pair_index(m.rb, x));
    }
    CHECK(arr.lookup(m.rb, 5) == 5);
    CHECK(arr.lookup(m.rb, 7) == 7);
    CHECK(!arr.lookup(m.rb, 1).has_value());
    CHECK(!arr.lookup(m.rb, 4).has_value());
}

TEST_CASE("storages agree on random texts") {
    std::mt19937_64 rng(401);
    for (int trial = 0; trial < 20; ++trial) {
        u32 sigma = trial % 2 ? 2 : 4;
        auto m = built{};
        m.b = build_suffix_bundle(text::build(random_text_bytes(50 + rng() % 300, sigma, rng)));
        m.rb = rlbwt::from_bundle(m.b);
        m.raw = build_augmented(m.b, m.rb);
        auto arr = threshold_table::build(m.raw, m.rb, thr_storage::array);
        auto sbv = threshold_table::build(m.raw, m.rb, thr_storage::sigma_bv);
        for (u64 x = 1; x <= m.rb.runs(); ++x)
            REQUIRE(arr.lookup(m.rb, x) == sbv.lookup(m.rb, x));
    }
}

TEST_CASE("the brute force validator accepts built thresholds") {
    std::mt19937_64 rng(409);
    for (int trial = 0; trial < 30; ++trial) {
        u32 sigma = (trial % 3 == 0) ? 2 : (trial % 3 == 1) ? 4 : 20;
        auto bytes = trial % 5 == 4 ? make_pangenome(120, 3, 0.03, 700 + trial)
                                    : random_text_bytes(40 + rng() % 250, sigma, rng);
        auto m = built{};
        m.b = build_suffix_bundle(text::build(bytes));
        m.rb = rlbwt::from_bundle(m.b);
        m.raw = build_augmented(m.b, m.rb);
        auto rep = oracle::check_thresholds(oracle_text(m.b.txt), oracle_pairs(m.rb, m.raw));
        REQUIRE_MESSAGE(rep.ok, rep.detail);
    }
}

TEST_CASE("the brute force validator rejects corrupted thresholds") {
    auto m = make("abracadabra");
    auto ot = oracle_text(m.b.txt);
    auto good = oracle_pairs(m.rb, m.raw);
    REQUIRE(oracle::check_thresholds(ot, good).ok);

    auto bad = good;
    bad[1].t = 3;  // 'r' pair: row 4 has lcp 4, much closer to the later run
    CHECK_FALSE(oracle::check_thresholds(ot, bad).ok);

    bad = good;
    bad[0].lce_e = 2;  // overshoots the true flank minimum of 0
    CHECK_FALSE(oracle::check_thresholds(ot, bad).ok);

    bad = good;
    bad[0].used_s = true;  // t = s2 leaves no s side
    CHECK_FALSE(oracle::check_thresholds(ot, bad).ok);
}

TEST_CASE("flank value encodings") {
    // Synthetic raw table exercising small, byte-boundary and large values.
    thr_raw raw;
    raw.thr_pos = {10, 20, 30, 40};
    raw.lce_e = {0, 255, 256, 70000};
    raw.lce_s = {3, 0, 12, 500};
    raw.used_e = {1, 1, 1, 1};
    raw.used_s = {1, 0, 1, 1};
    const u64 n = 100000;

    auto probe = [&](thr_encoding enc) {
        return thr_lce_table::encode(raw, enc, n);
    };

    SUBCASE("phoni stores nothing") {
        auto t = probe(thr_encoding::phoni);
        CHECK(t.pairs() == 4);  // layout is known, payload is not kept
        for (u64 i = 0; i < 4; ++i) {
            CHECK(!t.lookup(i, thr_side::e).has_value());
            CHECK(!t.lookup(i, thr_side::s).has_value());
        }
    }
    SUBCASE("full is always exact") {
        auto t = probe(thr_encoding::full);
        for (u64 i = 0; i < 4; ++i) {
            CHECK(t.lookup(i, thr_side::e) == raw.lce_e[i]);
        }
        CHECK(t.lookup(0, thr_side::s) == 3);
        CHECK(t.lookup(3, thr_side::s) == 500);
    }
    SUBCASE("byte caps at one byte") {
        auto t = probe(thr_encoding::byte);
        CHECK(t.lookup(0, thr_side::e) == 0);
        CHECK(t.lookup(1, thr_side::e) == 255);
        CHECK(!t.lookup(2, thr_side::e).has_value());  // 256 does not fit
        CHECK(!t.lookup(3, thr_side::e).has_value());
        CHECK(t.lookup(2, thr_side::s) == 12);
    }
    SUBCASE("bv variants hide unused sides") {
        for (auto enc : {thr_encoding::bv_full, thr_encoding::bv_byte, thr_encoding::bv_dac}) {
            auto t = probe(enc);
            CHECK(!t.lookup(1, thr_side::s).has_value());  // unused side
            CHECK(t.lookup(0, thr_side::s) == 3);
            CHECK(t.lookup(0, thr_side::e) == 0);  // used zero stays visible
            if (enc == thr_encoding::bv_byte) {
                CHECK(!t.lookup(3, thr_side::e).has_value());
            } else {
                CHECK(t.lookup(3, thr_side::e) == 70000);
            }
        }
    }
    SUBCASE("dac is exact at any magnitude") {
        auto t = probe(thr_encoding::dac);
        for (u64 i = 0; i < 4; ++i) CHECK(t.lookup(i, thr_side::e) == raw.lce_e[i]);
    }
    SUBCASE("all encodings serialize and reload") {
        for (auto enc : {thr_encoding::phoni, thr_encoding::full, thr_encoding::byte,
                         thr_encoding::bv_full, thr_encoding::bv_byte, thr_encoding::dac,
                         thr_encoding::bv_dac}) {
            auto t = probe(enc);
            std::ostringstream os;
            u64 bytes = t.serialize(os);
            CHECK(bytes == os.str().size());
            std::istringstream is(os.str());
            thr_lce_table t2;
            t2.load(is);
            CHECK(t2.encoding() == enc);
            REQUIRE(t2.pairs() == t.pairs());
            for (u64 i = 0; i < t.pairs(); ++i) {
                CHECK(t2.lookup(i, thr_side::e) == t.lookup(i, thr_side::e));
                CHECK(t2.lookup(i, thr_side::s) == t.lookup(i, thr_side::s));
            }
        }
    }
}

TEST_CASE("unused flanks load as unknown only for bv encodings") {
    auto m = make("abracadabra");
    // Pair 0 ('a'): used_e with raw value 0; s side unused.
    auto full = thr_lce_table::encode(m.raw, thr_encoding::full, m.rb.size());
    auto bv = thr_lce_table::encode(m.raw, thr_encoding::bv_full, m.rb.size());
    CHECK(full.lookup(0, thr_side::e) == 0);
    CHECK(bv.lookup(0, thr_side::e) == 0);
    CHECK(full.lookup(0, thr_side::s) == 0);  // plain encodings surface the stored zero
    CHECK(!bv.lookup(0, thr_side::s).has_value());
}

TEST_CASE("threshold table serialization round trips") {
    auto m = make("abracadabra");
    for (auto st : {thr_storage::array, thr_storage::sigma_bv}) {
        auto t = threshold_table::build(m.raw, m.rb, st);
        std::ostringstream os;
        u64 bytes = t.serialize(os);
        CHECK(bytes == os.str().size());
        std::istringstream is(os.str());
        threshold_table t2;
        t2.load(is, m.rb);
        CHECK(t2.storage() == st);
        for (u64 x = 1; x <= m.rb.runs(); ++x)
            CHECK(t2.lookup(m.rb, x) == t.lookup(m.rb, x));
    }
}
