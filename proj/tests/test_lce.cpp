#include <random>
#include <sstream>
#include <string>

#include "augms/lce.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace augms;
using namespace augms::testing;

TEST_CASE("known values on abracadabra") {
    auto b = build_suffix_bundle(text::build(std::string("abracadabra")));
    for (auto be : {lce_backend::make_naive(b), lce_backend::make_lcp_rmq(b)}) {
        CHECK(be.lce_nocount(8, 10) == 0);
        CHECK(be.lce_nocount(1, 8) == 4);
        CHECK(be.lce_nocount(10, 8) == 0);
        for (u64 i = 1; i <= b.n(); ++i) CHECK(be.lce_nocount(i, i) == b.n() - i + 1);
        CHECK_THROWS_AS(be.lce_nocount(0, 5), std::out_of_range);
        CHECK_THROWS_AS(be.lce_nocount(5, 13), std::out_of_range);
    }
}

TEST_CASE("counted queries bump lce_calls only") {
    auto b = build_suffix_bundle(text::build(std::string("abracadabra")));
    auto be = lce_backend::make_naive(b);
    query_stats st;
    CHECK(be.lce(1, 8, st) == 4);
    CHECK(st.lce_calls == 1);
    CHECK(be.lce_nocount(1, 8) == 4);
    CHECK(st.lce_calls == 1);
    CHECK(st.jumps == 0);
    CHECK(st.lce_skips == 0);
}

TEST_CASE("backends agree with the brute force") {
    std::mt19937_64 rng(307);
    for (int trial = 0; trial < 25; ++trial) {
        u32 sigma = trial % 2 ? 2 : 4;
        u64 n = 2 + rng() % 500;
        auto txt = text::build(random_text_bytes(n, sigma, rng));
        auto b = build_suffix_bundle(txt);
        auto naive = lce_backend::make_naive(b);
        auto rmq = lce_backend::make_lcp_rmq(b);
        auto ot = oracle_text(txt);
        const u64 N = txt.size();
        for (int q = 0; q < 300; ++q) {
            u64 i = 1 + rng() % N;
            u64 j = 1 + rng() % N;
            u64 want = oracle::lce(ot, i, j);
            REQUIRE(naive.lce_nocount(i, j) == want);
            REQUIRE(rmq.lce_nocount(i, j) == want);
        }
    }
}

TEST_CASE("serialize round trip preserves answers") {
    auto b = build_suffix_bundle(text::build(std::string("abracadabra")));
    for (auto kind : {lce_kind::naive, lce_kind::lcp_rmq}) {
        auto be = kind == lce_kind::naive ? lce_backend::make_naive(b)
                                          : lce_backend::make_lcp_rmq(b);
        std::ostringstream os;
        u64 bytes = be.serialize(os);
        CHECK(bytes == os.str().size());
        std::istringstream is(os.str());
        lce_backend be2;
        be2.load(is);
        CHECK(be2.kind() == kind);
        CHECK(be2.lce_nocount(1, 8) == 4);
        CHECK(be2.lce_nocount(8, 10) == 0);
        CHECK(be2.lce_nocount(12, 12) == 1);
    }
}

TEST_CASE("rmq backend serializes larger than naive on plain text") {
    auto b = build_suffix_bundle(text::build(std::string("abracadabra")));
    std::ostringstream a, c;
    lce_backend::make_naive(b).serialize(a);
    lce_backend::make_lcp_rmq(b).serialize(c);
    CHECK(a.str().size() < c.str().size());
}
