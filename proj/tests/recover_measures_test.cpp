#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <renum/measures.hpp>
#include <renum/recover.hpp>
#include <renum/verify.hpp>

#include "helpers.hpp"

using namespace renum;

TEST_CASE("extract recovers the paper's interval") {
    auto [t, o, ix] = test::make_pipeline("abaabababa");
    (void)t;
    (void)o;
    REQUIRE(test::recover_bytes(ix, {4, 7}, 3) == "aba");
    REQUIRE(test::recover_bytes(ix, {1, 11}, 0).empty());
    REQUIRE(test::recover_bytes(ix, {1, 1}, 1) == std::string(1, '\0'));  // the sentinel itself
}

TEST_CASE("extract refuses to walk past the end of the text") {
    auto [t, o, ix] = test::make_pipeline("abaabababa");
    (void)t;
    // interval of "a$" is a singleton; the text ends 2 symbols in
    pos_t b = 0;
    for (pos_t i = 1; i <= o.n; ++i)
        if (o.sa[i] == 10) b = i;
    REQUIRE(test::recover_bytes(ix, {b, b}, 2) == std::string("a") + '\0');
    REQUIRE_THROWS_AS(extract(ix, {b, b}, 3), out_of_range_error);
    REQUIRE_THROWS_AS(extract(ix, {0, 1}, 1), out_of_range_error);
}

TEST_CASE("extract reproduces every oracle node string") {
    std::mt19937_64 rng(89);
    for (int round = 0; round < 60; ++round) {
        auto [t, o, ix] = test::make_pipeline(test::random_text(rng, 2 + rng() % 150, 1 + rng() % 5));
        std::string bytes = denormalize(t, t.symbols);
        for (const auto& nd : oracle_explicit_nodes(o))
            REQUIRE(test::recover_bytes(ix, nd.iv, nd.depth) ==
                    bytes.substr(o.sa[nd.iv.b] - 1, nd.depth));
    }
}

TEST_CASE("extract_sa lists the occurrences of aba") {
    auto [t, o, ix] = test::make_pipeline("abaabababa");
    (void)t;
    auto occ = extract_sa(ix, {4, 7}, o.sa[4]);
    REQUIRE(occ == std::vector<pos_t>{8, 1, 6, 4});  // SA order
    REQUIRE(std::set<pos_t>(occ.begin(), occ.end()) == std::set<pos_t>{1, 4, 6, 8});
    REQUIRE(extract_sa(ix, {4, 4}, o.sa[4]) == std::vector<pos_t>{8});
}

TEST_CASE("extract_sa equals oracle suffix array slices") {
    std::mt19937_64 rng(97);
    for (int round = 0; round < 60; ++round) {
        auto [t, o, ix] = test::make_pipeline(test::random_text(rng, 2 + rng() % 150, 1 + rng() % 5));
        (void)t;
        std::uniform_int_distribution<pos_t> dist(1, o.n);
        for (int q = 0; q < 20; ++q) {
            pos_t b = dist(rng), e = dist(rng);
            if (b > e) std::swap(b, e);
            auto occ = extract_sa(ix, {b, e}, o.sa[b]);
            REQUIRE(occ.size() == e - b + 1);
            for (pos_t i = b; i <= e; ++i) REQUIRE(occ[i - b] == o.sa[i]);
        }
    }
}

TEST_CASE("delta of small texts through the traversal") {
    auto [t1, o1, ix1] = test::make_pipeline("ab");
    (void)t1;
    (void)o1;
    REQUIRE(delta(ix1) == rational{3, 1});

    auto [t2, o2, ix2] = test::make_pipeline("abcdefgh");
    (void)o2;
    REQUIRE(delta(ix2) == rational{static_cast<std::uint64_t>(t2.sigma), 1});

    auto [t3, o3, ix3] = test::make_pipeline("abaabababa");
    (void)o3;
    REQUIRE(delta(ix3) == delta_naive(t3));
    REQUIRE(delta(ix3) == rational{3, 1});
}

TEST_CASE("delta matches the naive measure on random texts") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 120; ++round) {
        auto [t, o, ix] = test::make_pipeline(test::random_text(rng, 2 + rng() % 180, 1 + rng() % 6));
        (void)o;
        rational got = delta(ix);
        rational expect = delta_naive(t);
        REQUIRE(got == expect);
        REQUIRE(got.value() >= static_cast<double>(t.sigma));
    }
}

TEST_CASE("lcp position sets of the running example") {
    auto [t, o, ix] = test::make_pipeline("abaabababa");
    (void)t;
    (void)o;
    std::map<std::uint64_t, std::vector<pos_t>> sets;
    lcp_value_sets(ix, [&](std::uint64_t t_, const std::vector<pos_t>& p) { sets[t_] = p; });
    REQUIRE(sets.at(0) == std::vector<pos_t>{1, 2, 8});
    REQUIRE(sets.at(1) == std::vector<pos_t>{3, 4});
    REQUIRE(sets.at(2) == std::vector<pos_t>{9, 10});
    REQUIRE(sets.at(3) == std::vector<pos_t>{5, 6});  // formal definition, not the figure caption
    REQUIRE(sets.at(4) == std::vector<pos_t>{11});
    REQUIRE(sets.at(5) == std::vector<pos_t>{7});
}

TEST_CASE("lcp position sets partition and reconstruct the LCP array") {
    std::mt19937_64 rng(103);
    for (int round = 0; round < 80; ++round) {
        auto [t, o, ix] = test::make_pipeline(test::random_text(rng, 2 + rng() % 180, 1 + rng() % 6));
        (void)t;
        std::vector<std::int64_t> lcp(o.n + 1, -1);
        std::uint64_t total = 0;
        lcp_value_sets(ix, [&](std::uint64_t t_, const std::vector<pos_t>& positions) {
            for (pos_t p : positions) {
                REQUIRE(p >= 1);
                REQUIRE(p <= o.n);
                REQUIRE(lcp[p] == -1);
                lcp[p] = static_cast<std::int64_t>(t_);
                ++total;
            }
        });
        REQUIRE(total == o.n);  // {1} + the n-1 positions of [2, n]
        REQUIRE(lcp[1] == 0);
        for (pos_t i = 2; i <= o.n; ++i) REQUIRE(lcp[i] == static_cast<std::int64_t>(o.lcp[i]));
    }
}
