/*
 * Shared test machinery: deterministic input generators and the
 * text -> oracle -> rlbwt -> support_index pipeline used all over.
 */

#ifndef RENUM_TESTS_HELPERS_HPP
#define RENUM_TESTS_HELPERS_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include <renum/enumerate.hpp>
#include <renum/oracle.hpp>
#include <renum/recover.hpp>
#include <renum/rlbwt.hpp>
#include <renum/support_index.hpp>
#include <renum/text.hpp>

namespace test {

inline std::string random_text(std::mt19937_64& rng, std::size_t n, unsigned sigma) {
    std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
    std::string out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<char>('a' + pick(rng)));
    return out;
}

struct pipeline {
    renum::text t;
    renum::oracle_bundle o;
    renum::support_index ix;
};

// raw bytes (no sentinel) -> every structure, BWT taken from the oracle
inline pipeline make_pipeline(std::string_view raw) {
    renum::text t = renum::normalize(raw, renum::sentinel_policy::append_if_missing, 0);
    renum::oracle_bundle o = renum::build_oracle(t);
    std::vector<renum::sym_t> bwt(o.bwt.begin() + 1, o.bwt.end());
    auto seq = renum::rlbwt_sequence::encode(bwt, t.byte_of);
    auto ix = renum::support_index::build(std::move(seq));
    return pipeline{std::move(t), std::move(o), std::move(ix)};
}

inline std::string recover_bytes(const renum::support_index& ix, renum::interval iv,
                                 std::uint64_t len) {
    std::string out;
    for (renum::sym_t c : renum::extract(ix, iv, len))
        out.push_back(static_cast<char>(ix.byte_of(c)));
    return out;
}

inline std::set<std::string> main_mr_set(const renum::support_index& ix, unsigned threads = 1) {
    std::set<std::string> out;
    renum::maximal_repeats(ix, {false, threads}, [&](const auto& rec) {
        out.insert(recover_bytes(ix, rec.repr.iv, rec.repr.depth));
    });
    return out;
}

inline std::set<std::string> main_mus_set(const renum::support_index& ix, unsigned threads = 1) {
    std::set<std::string> out;
    renum::minimal_unique_substrings(ix, {false, threads}, [&](const renum::mus_record& rec) {
        out.insert(recover_bytes(ix, rec.iv, rec.length));
    });
    return out;
}

inline std::set<std::string> main_maw_set(const renum::support_index& ix, unsigned threads = 1) {
    std::set<std::string> out;
    renum::minimal_absent_words(ix, {false, threads}, [&](const renum::maw_record& rec) {
        out.insert(recover_bytes(ix, rec.iv, rec.length) +
                   static_cast<char>(ix.byte_of(rec.absent_next)));
    });
    return out;
}

// binary string of length 2^k + k - 1 over {a, b} containing every k-mer
// exactly once (Martin's prefer-one greedy)
inline std::string de_bruijn_ab(unsigned k) {
    unsigned total = 1u << k, mask = total - 1;
    std::vector<bool> seen(total, false);
    unsigned cur = 0;
    seen[0] = true;
    std::string out(k, 'a');
    for (;;) {
        unsigned cand1 = ((cur << 1) | 1) & mask;
        unsigned cand0 = (cur << 1) & mask;
        if (!seen[cand1]) {
            cur = cand1;
            out.push_back('b');
        } else if (!seen[cand0]) {
            cur = cand0;
            out.push_back('a');
        } else {
            break;
        }
        seen[cur] = true;
    }
    return out;
}

// base random string, `copies` copies, each position mutated with
// probability permille/1000 to a different symbol
inline std::string repetitive_corpus(std::size_t base_len, unsigned copies, unsigned permille,
                                     unsigned sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::string base = random_text(rng, base_len, sigma);
    std::uniform_int_distribution<unsigned> coin(0, 999);
    std::uniform_int_distribution<unsigned> pick(0, sigma - 2);
    std::string out;
    out.reserve(base_len * copies);
    for (unsigned c = 0; c < copies; ++c) {
        std::string copy = base;
        for (char& ch : copy) {
            if (coin(rng) < permille) {
                unsigned other = pick(rng);
                char cand = static_cast<char>('a' + other);
                if (cand >= ch) cand += 1;
                ch = cand;
            }
        }
        out += copy;
    }
    return out;
}

}  // namespace test

#endif
