#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <thread>

#include <renum/oracle.hpp>
#include <renum/support_index.hpp>

#include "helpers.hpp"

using namespace renum;

TEST_CASE("rank over run starts of the running example") {
    auto [t, o, ix] = test::make_pipeline("abaabababa");
    (void)t;
    (void)o;
    // S_start = {1, 2, 5, 6, 7}
    REQUIRE(ix.rank_start(1) == 1);
    REQUIRE(ix.rank_start(2) == 2);
    REQUIRE(ix.rank_start(4) == 2);
    REQUIRE(ix.rank_start(5) == 3);
    REQUIRE(ix.rank_start(6) == 4);
    REQUIRE(ix.rank_start(7) == 5);
    REQUIRE(ix.rank_start(11) == 5);
}

TEST_CASE("root representation of the running example") {
    auto [t, o, ix] = test::make_pipeline("abaabababa");
    (void)t;
    const auto& root = ix.root_repr();
    REQUIRE(root.iv == interval{1, 11});
    REQUIRE(root.depth == 0);
    REQUIRE(root.sa_first == 11);
    REQUIRE(root.children.size() == 3);
    REQUIRE(root.children[0] == ext_repr_child{1, 1, 1, 11});
    REQUIRE(root.children[1] == ext_repr_child{2, 2, 7, o.sa[2]});
    REQUIRE(root.children[2] == ext_repr_child{3, 8, 11, o.sa[8]});
}

TEST_CASE("support build succeeds on the smallest structures") {
    auto [t, o, ix] = test::make_pipeline("aaaaaa");
    (void)t;
    (void)o;
    REQUIRE(ix.r() == 2);
    REQUIRE(ix.lf(1) > 0);
}

TEST_CASE("support build rejects byte soup") {
    // valid run structure, but the LF cycle closes early: not a BWT
    std::vector<std::uint8_t> byte_of{0, '$', 'a', 'b'};
    std::vector<sym_t> not_a_bwt{2, 1, 3, 2};  // "a$ba"
    auto seq = rlbwt_sequence::encode(not_a_bwt, byte_of);
    REQUIRE_THROWS_AS(support_index::build(std::move(seq)), malformed_rlbwt);

    std::vector<sym_t> two_sentinels{1, 2, 1, 2};
    auto seq2 = rlbwt_sequence::encode(two_sentinels, byte_of);
    REQUIRE_THROWS_AS(support_index::build(std::move(seq2)), malformed_rlbwt);
}

TEST_CASE("LF and its inverse on the running example") {
    auto [t, o, ix] = test::make_pipeline("abaabababa");
    (void)t;
    REQUIRE(ix.lf(8) == ix.lf(7) + 1);
    REQUIRE(ix.lf_inverse(9) == 3);
    // i = ell(x) hits D_LF[x] exactly: positions 1,2,5,6,7 are run starts
    for (pos_t start : {1, 2, 5, 6, 7}) REQUIRE(ix.lf(start) == lf_naive(o, start));
    for (pos_t i = 1; i <= o.n; ++i) {
        REQUIRE(ix.lf(i) == lf_naive(o, i));
        REQUIRE(ix.lf_inverse(ix.lf(i)) == i);
        REQUIRE(ix.lf(ix.lf_inverse(i)) == i);
    }
    REQUIRE_THROWS_AS(ix.lf(0), out_of_range_error);
    REQUIRE_THROWS_AS(ix.lf_inverse(12), out_of_range_error);
}

TEST_CASE("LF agrees with the oracle exhaustively") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 25; ++round) {
        auto [t, o, ix] = test::make_pipeline(test::random_text(rng, 2 + rng() % 250, 1 + rng() % 6));
        (void)t;
        for (pos_t i = 1; i <= o.n; ++i) {
            REQUIRE(ix.lf(i) == lf_naive(o, i));
            REQUIRE(ix.lf_inverse(ix.lf(i)) == i);
        }
    }
    // one larger instance, repetitive enough to stack runs
    std::string big = test::repetitive_corpus(200, 9, 10, 3, 5);
    auto [t, o, ix] = test::make_pipeline(big.substr(0, 1800));
    (void)t;
    for (pos_t i = 1; i <= o.n; ++i) REQUIRE(ix.lf(i) == lf_naive(o, i));
}

TEST_CASE("range distinct matches the paper and the oracle") {
    auto [t, o, ix] = test::make_pipeline("abaabababa");
    (void)t;
    auto rd = ix.range_distinct(4, 7);
    REQUIRE(rd == std::vector<rd_entry>{{1, 5, 5}, {2, 7, 7}, {3, 4, 6}});
    REQUIRE(ix.range_distinct(3, 3) == std::vector<rd_entry>{{3, 3, 3}});
    REQUIRE_THROWS_AS(ix.range_distinct(5, 4), out_of_range_error);

    std::mt19937_64 rng(37);
    for (int round = 0; round < 20; ++round) {
        auto [t2, o2, ix2] =
            test::make_pipeline(test::random_text(rng, 2 + rng() % 60, 1 + rng() % 6));
        (void)t2;
        auto span = std::span<const sym_t>(o2.bwt).subspan(1);
        for (pos_t b = 1; b <= o2.n; ++b)
            for (pos_t e = b; e <= o2.n; ++e) {
                auto expect = rd_naive(span, b, e);
                auto got = ix2.range_distinct(b, e);
                REQUIRE(got.size() == expect.size());
                for (std::size_t k = 0; k < got.size(); ++k) {
                    REQUIRE(got[k].symbol == expect[k].symbol);
                    REQUIRE(got[k].first == expect[k].first);
                    REQUIRE(got[k].last == expect[k].last);
                }
            }
    }
}

TEST_CASE("extended range distinct carries toehold sa-values") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 30; ++round) {
        auto [t, o, ix] = test::make_pipeline(test::random_text(rng, 2 + rng() % 150, 1 + rng() % 5));
        (void)t;
        std::uniform_int_distribution<pos_t> dist(1, o.n);
        for (int q = 0; q < 40; ++q) {
            pos_t b = dist(rng), e = dist(rng);
            if (b > e) std::swap(b, e);
            for (const auto& hit : ix.extended_range_distinct(b, e, o.sa[b]))
                REQUIRE(hit.sa_first == o.sa[hit.first]);
        }
        // singleton off a run start exercises the else-branch of the toehold
        for (pos_t i = 1; i <= o.n; ++i) {
            auto one = ix.extended_range_distinct(i, i, o.sa[i]);
            REQUIRE(one.size() == 1);
            REQUIRE(one[0].sa_first == o.sa[i]);
        }
    }
}

TEST_CASE("phi walks the suffix array left to right") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 30; ++round) {
        auto [t, o, ix] = test::make_pipeline(test::random_text(rng, 2 + rng() % 200, 1 + rng() % 6));
        (void)t;
        pos_t cur = o.sa[1];
        for (pos_t i = 2; i <= o.n; ++i) {
            cur = ix.phi(cur);
            REQUIRE(cur == o.sa[i]);
        }
        REQUIRE_THROWS_AS(ix.phi(o.sa[o.n]), last_suffix);
    }
}

TEST_CASE("support index stays within the size guardrail") {
    std::mt19937_64 rng(47);
    for (int round = 0; round < 30; ++round) {
        auto [t, o, ix] = test::make_pipeline(test::random_text(rng, 2 + rng() % 500, 1 + rng() % 6));
        (void)t;
        (void)o;
        REQUIRE(ix.stored_entries() <= 12 * (ix.r() + ix.sigma()));
    }
}

TEST_CASE("queries are safe under concurrent readers") {
    auto [t, o, ix] = test::make_pipeline(test::repetitive_corpus(100, 8, 20, 4, 9).substr(0, 800));
    (void)t;
    const support_index& shared = ix;
    const oracle_bundle& ob = o;
    std::vector<std::thread> workers;
    std::vector<bool> ok(4, false);
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&, w] {
            bool good = true;
            for (pos_t i = 1; i <= ob.n; ++i) {
                if (shared.lf(i) != lf_naive(ob, i)) good = false;
                if (shared.lf_inverse(shared.lf(i)) != i) good = false;
            }
            ok[w] = good;
        });
    }
    for (auto& th : workers) th.join();
    for (int w = 0; w < 4; ++w) REQUIRE(ok[w]);
}
