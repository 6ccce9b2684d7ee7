/*
 * Prefix-doubling suffix array (radix passes, O(n log n)) for the build
 * pipeline. The test oracle keeps its own naive comparison sort; this
 * builder exists so text inputs of realistic size can be converted to a
 * BWT quickly, and it is cross-checked against the oracle.
 */

#ifndef INCLUDED_RENUM_SUFFIX_SORT_HPP
#define INCLUDED_RENUM_SUFFIX_SORT_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "text.hpp"
#include "types.hpp"

namespace renum {

// 1-based suffix array of a symbol sequence with a unique smallest last symbol
inline std::vector<pos_t> suffix_array_doubling(std::span<const sym_t> s) {
    const std::size_t n = s.size();
    if (n == 0) throw empty_input("empty sequence");
    if (n >= std::numeric_limits<std::uint32_t>::max())
        throw input_too_large("doubling builder limited to 32-bit lengths");

    std::vector<std::uint32_t> sa(n), rank(n), tmp(n), cnt;
    std::uint32_t max_rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        rank[i] = s[i];
        max_rank = std::max(max_rank, rank[i]);
    }

    // stable sort of `sa` by key(i), key values in [0, key_bound]
    auto counting_sort = [&](std::uint32_t key_bound, auto key) {
        cnt.assign(static_cast<std::size_t>(key_bound) + 2, 0);
        for (std::size_t i = 0; i < n; ++i) cnt[key(sa[i]) + 1] += 1;
        for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
        for (std::size_t i = 0; i < n; ++i) tmp[cnt[key(sa[i])]++] = sa[i];
        sa.swap(tmp);
    };

    for (std::size_t i = 0; i < n; ++i) sa[i] = static_cast<std::uint32_t>(i);
    counting_sort(max_rank, [&](std::uint32_t i) { return rank[i]; });

    for (std::uint32_t k = 1;; k <<= 1) {
        auto rank_at = [&](std::uint32_t i) -> std::uint32_t {
            return i + k < n ? rank[i + k] + 1 : 0;
        };
        counting_sort(max_rank + 1, rank_at);
        counting_sort(max_rank, [&](std::uint32_t i) { return rank[i]; });

        tmp[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            bool same = rank[sa[i]] == rank[sa[i - 1]] && rank_at(sa[i]) == rank_at(sa[i - 1]);
            tmp[sa[i]] = tmp[sa[i - 1]] + (same ? 0 : 1);
        }
        rank.swap(tmp);
        max_rank = rank[sa[n - 1]];
        if (max_rank == n - 1) break;
    }

    std::vector<pos_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = sa[i] + 1;
    return out;
}

inline std::vector<sym_t> bwt_from_text(const text& t) {
    auto sa = suffix_array_doubling(t.symbols);
    const pos_t n = t.n();
    std::vector<sym_t> bwt(n);
    for (pos_t i = 0; i < n; ++i) bwt[i] = sa[i] == 1 ? t.sym(n) : t.sym(sa[i] - 1);
    return bwt;
}

}  // namespace renum

#endif
