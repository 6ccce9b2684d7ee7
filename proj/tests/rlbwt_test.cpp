#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include <renum/oracle.hpp>
#include <renum/rlbwt.hpp>

#include "helpers.hpp"

using namespace renum;

namespace {

rlbwt_sequence running_example_rlbwt() {
    text t = normalize("abaabababa", sentinel_policy::append_if_missing, '$');
    oracle_bundle o = build_oracle(t);
    std::vector<sym_t> bwt(o.bwt.begin() + 1, o.bwt.end());
    return rlbwt_sequence::encode(bwt, t.byte_of);
}

std::string serialized(const rlbwt_sequence& seq) {
    std::ostringstream out(std::ios::binary);
    seq.serialize(out);
    return std::move(out).str();
}

}  // namespace

TEST_CASE("encode produces the paper's five runs") {
    rlbwt_sequence seq = running_example_rlbwt();
    REQUIRE(seq.r() == 5);
    REQUIRE(seq.n() == 11);
    REQUIRE(seq.sigma() == 3);
    // heads in symbol space: $=1, a=2, b=3
    REQUIRE(seq.run_at(1) == run{2, 1});
    REQUIRE(seq.run_at(2) == run{3, 2});
    REQUIRE(seq.run_at(3) == run{1, 5});
    REQUIRE(seq.run_at(4) == run{3, 6});
    REQUIRE(seq.run_at(5) == run{2, 7});
    REQUIRE(seq.run_start(6) == 12);
}

TEST_CASE("encode handles single-run and alternating inputs") {
    std::vector<std::uint8_t> byte_of{0, 'a', 'b'};
    std::vector<sym_t> aaaa{1, 1, 1, 1};
    REQUIRE(rlbwt_sequence::encode(aaaa, byte_of).r() == 1);
    std::vector<sym_t> ab{1, 2};
    REQUIRE(rlbwt_sequence::encode(ab, byte_of).r() == 2);
}

TEST_CASE("access equals the decoded sequence") {
    rlbwt_sequence seq = running_example_rlbwt();
    REQUIRE(seq.access(8) == 2);   // 8th BWT symbol is a
    REQUIRE(seq.access(1) == seq.run_head(1));
    REQUIRE(seq.access(11) == 2);
    REQUIRE_THROWS_AS(seq.access(0), out_of_range_error);
    REQUIRE_THROWS_AS(seq.access(12), out_of_range_error);

    std::mt19937_64 rng(23);
    for (int round = 0; round < 40; ++round) {
        auto [t, o, ix] = test::make_pipeline(test::random_text(rng, 2 + rng() % 200, 1 + rng() % 5));
        (void)o;
        const auto& s = ix.rlbwt();
        auto decoded = s.decode();
        REQUIRE(decoded.size() == s.n());
        for (pos_t i = 1; i <= s.n(); ++i) REQUIRE(s.access(i) == decoded[i - 1]);
        REQUIRE(rlbwt_sequence::encode(decoded, {t.byte_of}).r() == s.r());
    }
}

TEST_CASE("serialization is bit-exact") {
    rlbwt_sequence seq = running_example_rlbwt();
    std::string bytes = serialized(seq);

    std::string expect = "RLBWT1\n";
    auto push_u64 = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) expect.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    push_u64(11);
    push_u64(5);
    expect.push_back(3);
    const std::pair<char, std::uint64_t> records[]{{'a', 1}, {'b', 2}, {'$', 5}, {'b', 6}, {'a', 7}};
    for (auto [head, start] : records) {
        expect.push_back(head);
        push_u64(start);
    }
    REQUIRE(bytes == expect);

    std::istringstream in(bytes, std::ios::binary);
    rlbwt_sequence back = rlbwt_sequence::deserialize(in);
    REQUIRE(serialized(back) == bytes);
    REQUIRE(back.decode() == seq.decode());
}

TEST_CASE("deserialize rejects corrupted files") {
    std::string bytes = serialized(running_example_rlbwt());

    std::string wrong_magic = bytes;
    wrong_magic[0] = 'X';
    std::istringstream m(wrong_magic, std::ios::binary);
    REQUIRE_THROWS_AS(rlbwt_sequence::deserialize(m), bad_magic);

    std::string cut = bytes.substr(0, bytes.size() - 3);
    std::istringstream c(cut, std::ios::binary);
    REQUIRE_THROWS_AS(rlbwt_sequence::deserialize(c), truncated_file);

    // starts 1,2,2: duplicate start position
    std::string bad = bytes;
    bad[7 + 8 + 8 + 1 + 9 + 9 + 1] = 2;  // third record's start low byte
    std::istringstream s(bad, std::ios::binary);
    REQUIRE_THROWS_AS(rlbwt_sequence::deserialize(s), non_monotone_starts);
}

TEST_CASE("adjacent equal heads are malformed") {
    REQUIRE_THROWS_AS(rlbwt_sequence({1, 1}, {1, 3}, 4, {0, '$', 'a'}), malformed_rlbwt);
    REQUIRE_THROWS_AS(rlbwt_sequence({1, 2}, {2, 3}, 4, {0, '$', 'a'}), non_monotone_starts);
}

TEST_CASE("raw BWT import derives the same sequence") {
    rlbwt_sequence seq = running_example_rlbwt();
    rlbwt_sequence imported = rlbwt_from_bwt_bytes("abbb$baaaaa", '$');
    REQUIRE(serialized(imported) == serialized(seq));
    REQUIRE_THROWS_AS(rlbwt_from_bwt_bytes("abba", '$'), sentinel_violation);
    REQUIRE_THROWS_AS(rlbwt_from_bwt_bytes("ab$b$a", '$'), sentinel_violation);
}

TEST_CASE("round trips hold on random inputs") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 60; ++round) {
        auto [t, o, ix] = test::make_pipeline(test::random_text(rng, 2 + rng() % 400, 1 + rng() % 6));
        (void)t;
        (void)o;
        std::string bytes = serialized(ix.rlbwt());
        std::istringstream in(bytes, std::ios::binary);
        REQUIRE(serialized(rlbwt_sequence::deserialize(in)) == bytes);
    }
}
