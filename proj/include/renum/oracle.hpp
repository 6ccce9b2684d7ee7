/*
 * Brute-force reference implementations: naive suffix array, LCP, BWT,
 * LF, range distinct, the three characteristic-substring enumerators and
 * the delta measure. Everything here is the ground truth the fast path
 * is tested against, so it favours directness over speed. Enumerators
 * and delta are capped at oracle_enum_cap symbols (cubic scans).
 */

#ifndef INCLUDED_RENUM_ORACLE_HPP
#define INCLUDED_RENUM_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "text.hpp"
#include "types.hpp"

namespace renum {

inline constexpr pos_t oracle_enum_cap = 1024;

struct rd_triple {
    sym_t symbol;
    pos_t first;
    pos_t last;
    friend bool operator==(const rd_triple&, const rd_triple&) = default;
};

struct oracle_bundle {
    pos_t n = 0;
    std::vector<pos_t> sa;        // sa[1..n]
    std::vector<pos_t> isa;       // isa[sa[i]] = i
    std::vector<std::uint64_t> lcp;  // lcp[1] = 0
    std::vector<sym_t> bwt;       // bwt[1..n]
    std::vector<pos_t> c_table;   // c_table[c] = count of symbols < c
};

inline oracle_bundle build_oracle(const text& t) {
    const pos_t n = t.n();
    oracle_bundle o;
    o.n = n;
    o.sa.resize(n + 1);
    for (pos_t i = 1; i <= n; ++i) o.sa[i] = i;
    // full suffix comparison, no induced sorting
    std::sort(o.sa.begin() + 1, o.sa.end(), [&](pos_t a, pos_t b) {
        return std::lexicographical_compare(t.symbols.begin() + (a - 1), t.symbols.end(),
                                            t.symbols.begin() + (b - 1), t.symbols.end());
    });

    o.isa.resize(n + 1);
    for (pos_t i = 1; i <= n; ++i) o.isa[o.sa[i]] = i;

    o.lcp.assign(n + 1, 0);
    for (pos_t i = 2; i <= n; ++i) {
        pos_t a = o.sa[i - 1], b = o.sa[i];
        std::uint64_t l = 0;
        while (a + l <= n && b + l <= n && t.sym(a + l) == t.sym(b + l)) ++l;
        o.lcp[i] = l;
    }

    o.bwt.resize(n + 1);
    for (pos_t i = 1; i <= n; ++i) o.bwt[i] = o.sa[i] == 1 ? t.sym(n) : t.sym(o.sa[i] - 1);

    o.c_table.assign(t.sigma + 2, 0);
    for (pos_t i = 1; i <= n; ++i) o.c_table[t.sym(i) + 1] += 1;
    for (sym_t c = 1; c <= t.sigma + 1; ++c) o.c_table[c] += o.c_table[c - 1];
    return o;
}

inline pos_t lf_naive(const oracle_bundle& o, pos_t i) {
    if (i < 1 || i > o.n) throw out_of_range_error("lf_naive: position outside [1, n]");
    sym_t c = o.bwt[i];
    pos_t occ = 0;
    for (pos_t j = 1; j <= i; ++j)
        if (o.bwt[j] == c) ++occ;
    return o.c_table[c] + occ;
}

// seq is read 1-based: position i means seq[i-1]
inline std::vector<rd_triple> rd_naive(std::span<const sym_t> seq, pos_t b, pos_t e) {
    if (b < 1 || b > e || e > seq.size()) throw out_of_range_error("rd_naive: bad interval");
    std::vector<rd_triple> out;
    for (pos_t i = b; i <= e; ++i) {
        sym_t c = seq[i - 1];
        auto it = std::find_if(out.begin(), out.end(), [&](const rd_triple& x) { return x.symbol == c; });
        if (it == out.end())
            out.push_back({c, i, i});
        else
            it->last = i;
    }
    std::sort(out.begin(), out.end(), [](const rd_triple& x, const rd_triple& y) { return x.symbol < y.symbol; });
    return out;
}

namespace detail {

inline void check_enum_cap(const text& t) {
    if (t.n() > oracle_enum_cap) throw input_too_large("oracle enumerator cap exceeded");
}

// occurrence counts of every distinct substring, keyed by its byte rendering
inline std::unordered_map<std::string, std::uint32_t> substring_counts(const text& t) {
    std::unordered_map<std::string, std::uint32_t> counts;
    const pos_t n = t.n();
    std::string bytes = denormalize(t, t.symbols);
    for (pos_t i = 0; i < n; ++i)
        for (pos_t len = 1; i + len <= n; ++len)
            counts[bytes.substr(i, len)] += 1;
    return counts;
}

}  // namespace detail

inline std::set<std::string> enumerate_mr_naive(const text& t) {
    detail::check_enum_cap(t);
    auto counts = detail::substring_counts(t);
    std::set<std::string> out;
    for (const auto& [p, cnt] : counts) {
        if (cnt < 2) continue;
        bool maximal = true;
        for (sym_t c = 1; c <= t.sigma && maximal; ++c) {
            char ch = static_cast<char>(t.byte_of[c]);
            auto l = counts.find(ch + p);
            auto r = counts.find(p + ch);
            if ((l != counts.end() && l->second == cnt) || (r != counts.end() && r->second == cnt))
                maximal = false;
        }
        if (maximal) out.insert(p);
    }
    return out;
}

inline std::set<std::string> enumerate_mus_naive(const text& t) {
    detail::check_enum_cap(t);
    auto counts = detail::substring_counts(t);
    std::set<std::string> out;
    for (const auto& [p, cnt] : counts) {
        if (cnt != 1) continue;
        if (p.size() == 1) {  // condition (ii) is vacuous for length 1
            out.insert(p);
            continue;
        }
        if (counts.at(p.substr(1)) >= 2 && counts.at(p.substr(0, p.size() - 1)) >= 2)
            out.insert(p);
    }
    return out;
}

inline std::set<std::string> enumerate_maw_naive(const text& t) {
    detail::check_enum_cap(t);
    auto counts = detail::substring_counts(t);
    const char sentinel_ch = static_cast<char>(t.sentinel_byte);
    std::set<std::string> out;
    // candidates c+U where U occurs; sentinel-containing words are artifacts, not data
    for (const auto& [u, cnt] : counts) {
        (void)cnt;
        if (u.find(sentinel_ch) != std::string::npos) continue;
        for (sym_t c = 2; c <= t.sigma; ++c) {  // c = 1 is the sentinel
            char ch = static_cast<char>(t.byte_of[c]);
            if (counts.count(ch + u)) continue;
            if (counts.count(ch + u.substr(0, u.size() - 1)))
                out.insert(ch + u);
        }
    }
    return out;
}

inline rational delta_naive(const text& t) {
    detail::check_enum_cap(t);
    const pos_t n = t.n();
    std::string bytes = denormalize(t, t.symbols);
    rational best{0, 1};
    for (pos_t len = 1; len <= n; ++len) {
        std::set<std::string_view> distinct;
        for (pos_t i = 0; i + len <= n; ++i)
            distinct.insert(std::string_view(bytes).substr(i, len));
        std::uint64_t cnt = distinct.size();
        if (cnt * best.den > best.num * len) best = {cnt, len};
    }
    return best;
}

}  // namespace renum

#endif
