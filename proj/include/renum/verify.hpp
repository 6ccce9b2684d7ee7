/*
 * Oracle-vs-main cross-check: builds the naive oracle and the RLBWT path
 * for one text and compares every query and every enumerator, reporting
 * the first divergence. Backs the `verify` CLI subcommand and the
 * randomized/exhaustive acceptance runs.
 */

#ifndef INCLUDED_RENUM_VERIFY_HPP
#define INCLUDED_RENUM_VERIFY_HPP

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "driver.hpp"
#include "enumerate.hpp"
#include "measures.hpp"
#include "oracle.hpp"
#include "recover.hpp"
#include "suffix_sort.hpp"
#include "support_index.hpp"
#include "traversal.hpp"

namespace renum {

struct st_node {
    interval iv;
    std::uint64_t depth;
    friend bool operator==(const st_node&, const st_node&) = default;
    friend bool operator<(const st_node& a, const st_node& b) {
        return a.iv.b != b.iv.b ? a.iv.b < b.iv.b
               : a.iv.e != b.iv.e ? a.iv.e < b.iv.e
                                  : a.depth < b.depth;
    }
};

// explicit suffix-tree nodes (root included) as lcp-intervals of the
// oracle LCP array, via the classic stack sweep
inline std::vector<st_node> oracle_explicit_nodes(const oracle_bundle& o) {
    struct open_iv {
        std::uint64_t lcp;
        pos_t lb;
    };
    std::vector<st_node> out;
    std::vector<open_iv> stack{{0, 1}};
    for (pos_t i = 2; i <= o.n + 1; ++i) {
        std::int64_t lval = i <= o.n ? static_cast<std::int64_t>(o.lcp[i]) : -1;
        pos_t lb = i - 1;
        while (!stack.empty() && lval < static_cast<std::int64_t>(stack.back().lcp)) {
            open_iv top = stack.back();
            stack.pop_back();
            out.push_back({{top.lb, i - 1}, top.lcp});
            lb = top.lb;
        }
        if (stack.empty() || lval > static_cast<std::int64_t>(stack.back().lcp))
            stack.push_back({static_cast<std::uint64_t>(std::max<std::int64_t>(lval, 0)), lb});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct verify_options {
    std::uint64_t max_n = 512;
    unsigned threads = 1;
    std::uint64_t rd_samples = 64;  // sampled RD intervals once exhaustive gets too big
};

struct verify_report {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

namespace detail {

inline std::string set_diff_summary(const std::set<std::string>& expected,
                                    const std::set<std::string>& got) {
    for (const auto& s : expected)
        if (!got.count(s)) return "missing \"" + driver::escape_bytes(s) + "\"";
    for (const auto& s : got)
        if (!expected.count(s)) return "spurious \"" + driver::escape_bytes(s) + "\"";
    return "sets equal";
}

}  // namespace detail

inline verify_report verify_text_bytes(std::string_view raw, const verify_options& opt = {}) {
    verify_report rep;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        rep.detail = what + "  [input: \"" + driver::escape_bytes(raw) + "\"]";
        return rep;
    };

    text t = normalize(raw, sentinel_policy::append_if_missing, 0);
    if (t.n() > opt.max_n) throw input_too_large("verify input longer than the cap");
    const pos_t n = t.n();
    std::string bytes = denormalize(t, t.symbols);

    oracle_bundle o = build_oracle(t);

    // production suffix sort against the naive one
    auto fast_sa = suffix_array_doubling(t.symbols);
    for (pos_t i = 1; i <= n; ++i)
        if (fast_sa[i - 1] != o.sa[i])
            return fail("doubling SA diverges at rank " + std::to_string(i));

    std::vector<sym_t> bwt(o.bwt.begin() + 1, o.bwt.end());
    rlbwt_sequence seq = rlbwt_sequence::encode(bwt, t.byte_of);
    if (seq.decode() != bwt) return fail("rlbwt decode mismatch");
    support_index ix = support_index::build(std::move(seq));

    if (ix.stored_entries() > 12 * (ix.r() + ix.sigma()))
        return fail("support index stores more than 12(r+sigma) words");

    // LF family and phi, exhaustively
    for (pos_t i = 1; i <= n; ++i) {
        if (ix.lf(i) != lf_naive(o, i)) return fail("lf(" + std::to_string(i) + ") wrong");
        if (ix.lf_inverse(ix.lf(i)) != i) return fail("lf_inverse(lf(i)) != i at " + std::to_string(i));
        if (ix.bwt_at(i) != o.bwt[i]) return fail("bwt access wrong at " + std::to_string(i));
    }
    {
        pos_t cur = o.sa[1];
        for (pos_t i = 2; i <= n; ++i) {
            cur = ix.phi(cur);
            if (cur != o.sa[i]) return fail("phi chain diverges at rank " + std::to_string(i));
        }
        bool threw = false;
        try {
            ix.phi(o.sa[n]);
        } catch (const last_suffix&) {
            threw = true;
        }
        if (!threw) return fail("phi accepted the last sa-value");
    }

    // range distinct, plain and extended
    auto check_rd = [&](pos_t b, pos_t e) -> bool {
        auto expect = rd_naive(std::span<const sym_t>(o.bwt).subspan(1), b, e);
        auto got = ix.range_distinct(b, e);
        if (got.size() != expect.size()) return false;
        for (std::size_t k = 0; k < got.size(); ++k)
            if (got[k].symbol != expect[k].symbol || got[k].first != expect[k].first ||
                got[k].last != expect[k].last)
                return false;
        auto ext = ix.extended_range_distinct(b, e, o.sa[b]);
        for (std::size_t k = 0; k < ext.size(); ++k)
            if (ext[k].sa_first != o.sa[ext[k].first]) return false;
        return true;
    };
    if (n <= 64) {
        for (pos_t b = 1; b <= n; ++b)
            for (pos_t e = b; e <= n; ++e)
                if (!check_rd(b, e))
                    return fail("range distinct wrong on [" + std::to_string(b) + "," +
                                std::to_string(e) + "]");
    } else {
        std::seed_seq seed(raw.begin(), raw.end());
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<pos_t> dist(1, n);
        for (std::uint64_t s = 0; s < opt.rd_samples; ++s) {
            pos_t b = dist(rng), e = dist(rng);
            if (b > e) std::swap(b, e);
            if (!check_rd(b, e))
                return fail("range distinct wrong on [" + std::to_string(b) + "," +
                            std::to_string(e) + "]");
        }
        if (!check_rd(1, n)) return fail("range distinct wrong on [1, n]");
    }

    // traversal nodes against the oracle suffix tree, depth by depth
    auto nodes_expect = oracle_explicit_nodes(o);
    std::vector<st_node> nodes_got;
    traversal_options topt{opt.threads};
    traversal_stats stats = traverse_bfs(
        ix,
        [&](std::uint64_t t_, const std::vector<rich_repr>& level) {
            for (const auto& nd : level) {
                nodes_got.push_back({nd.iv, t_});
                pos_t cover = nd.children.front().b;
                if (cover != nd.iv.b) nodes_got.back().depth = ~0ull;  // marks a bad repr
                for (const auto& ch : nd.children) {
                    if (ch.b != cover) nodes_got.back().depth = ~0ull;
                    cover = ch.e + 1;
                }
                if (cover != nd.iv.e + 1) nodes_got.back().depth = ~0ull;
            }
        },
        topt);
    std::sort(nodes_got.begin(), nodes_got.end());
    if (nodes_got != nodes_expect) return fail("explicit node set differs from the oracle suffix tree");

    if (stats.max_level_children > 2 * ix.r()) return fail("max |K_t| exceeds 2r");
    if (stats.peak_frontier_children > 2 * stats.max_level_children)
        return fail("frontier held more than two levels");
    if (stats.total_wlinks > 4 * n) return fail("total Weiner links above the 4n guardrail");
    {
        std::vector<std::uint64_t> lcp_hist;
        for (pos_t i = 2; i <= n; ++i) {
            if (o.lcp[i] >= lcp_hist.size()) lcp_hist.resize(o.lcp[i] + 1, 0);
            lcp_hist[o.lcp[i]] += 1;
        }
        for (std::uint64_t t_ = 0; t_ < stats.levels(); ++t_) {
            std::uint64_t kprime = stats.level_children[t_] - stats.level_nodes[t_];
            std::uint64_t expect = t_ < lcp_hist.size() ? lcp_hist[t_] : 0;
            if (kprime != expect)
                return fail("|K'_t| does not match the LCP histogram at depth " + std::to_string(t_));
        }
    }

    // extract / extract-sa over every explicit node
    for (const auto& nd : nodes_expect) {
        auto syms = extract(ix, nd.iv, nd.depth);
        std::string got;
        for (sym_t c : syms) got.push_back(static_cast<char>(ix.byte_of(c)));
        std::string expect = bytes.substr(o.sa[nd.iv.b] - 1, nd.depth);
        if (got != expect) return fail("extract wrong for node at [" + std::to_string(nd.iv.b) + "," +
                                       std::to_string(nd.iv.e) + "]");
        auto occ = extract_sa(ix, nd.iv, o.sa[nd.iv.b]);
        for (pos_t i = nd.iv.b; i <= nd.iv.e; ++i)
            if (occ[i - nd.iv.b] != o.sa[i])
                return fail("extract_sa wrong for node at [" + std::to_string(nd.iv.b) + "," +
                            std::to_string(nd.iv.e) + "]");
    }

    // the three enumerators, plain sets and extended sa-values
    enum_options plain{false, opt.threads};
    enum_options ext{true, opt.threads};
    auto recover = [&](interval iv, std::uint64_t len) {
        std::string s;
        for (sym_t c : extract(ix, iv, len)) s.push_back(static_cast<char>(ix.byte_of(c)));
        return s;
    };

    {
        std::set<std::string> got;
        maximal_repeats(ix, plain, [&](const auto& rec) {
            got.insert(recover(rec.repr.iv, rec.repr.depth));
        });
        auto expect = enumerate_mr_naive(t);
        if (got != expect)
            return fail("maximal repeats: " + detail::set_diff_summary(expect, got));
        bool sa_ok = true;
        maximal_repeats(ix, ext, [&](const auto& rec) {
            if constexpr (std::is_same_v<std::decay_t<decltype(rec.repr)>, ext_rich_repr>) {
                if (rec.repr.sa_first != o.sa[rec.repr.iv.b]) sa_ok = false;
            }
        });
        if (!sa_ok) return fail("maximal repeats: extended sa_first wrong");
    }
    {
        std::set<std::string> got;
        minimal_unique_substrings(ix, plain, [&](const mus_record& rec) {
            got.insert(recover(rec.iv, rec.length));
        });
        auto expect = enumerate_mus_naive(t);
        if (got != expect)
            return fail("minimal unique substrings: " + detail::set_diff_summary(expect, got));
        bool sa_ok = true;
        minimal_unique_substrings(ix, ext, [&](const mus_record& rec) {
            if (!rec.sa_first || *rec.sa_first != o.sa[rec.iv.b]) sa_ok = false;
        });
        if (!sa_ok) return fail("minimal unique substrings: extended sa_first wrong");
    }
    {
        std::set<std::string> got;
        std::uint64_t count = 0;
        minimal_absent_words(ix, plain, [&](const maw_record& rec) {
            got.insert(recover(rec.iv, rec.length) + static_cast<char>(ix.byte_of(rec.absent_next)));
            ++count;
        });
        auto expect = enumerate_maw_naive(t);
        if (got != expect)
            return fail("minimal absent words: " + detail::set_diff_summary(expect, got));
        if (count != got.size()) return fail("minimal absent words emitted with duplicates");
        if (count > static_cast<std::uint64_t>(ix.sigma()) * n)
            return fail("minimal absent word count above sigma*n");
        bool sa_ok = true;
        minimal_absent_words(ix, ext, [&](const maw_record& rec) {
            if (!rec.sa_first || *rec.sa_first != o.sa[rec.iv.b]) sa_ok = false;
        });
        if (!sa_ok) return fail("minimal absent words: extended sa_first wrong");
    }

    // measures
    if (!(delta(ix, topt) == delta_naive(t))) return fail("delta differs from the naive value");
    {
        std::vector<std::uint64_t> lcp_got(n + 1, ~0ull);
        std::uint64_t total = 0;
        lcp_value_sets(
            ix,
            [&](std::uint64_t t_, const std::vector<pos_t>& positions) {
                for (pos_t p : positions) {
                    if (p < 1 || p > n || lcp_got[p] != ~0ull) {
                        lcp_got[0] = 0;  // mark duplicate/out-of-range
                        return;
                    }
                    lcp_got[p] = t_;
                    ++total;
                }
            },
            topt);
        if (lcp_got[0] == 0) return fail("lcp position sets overlap");
        if (total != n) return fail("lcp position sets do not partition [1, n]");
        if (lcp_got[1] != 0) return fail("position 1 must carry lcp 0");
        for (pos_t i = 2; i <= n; ++i)
            if (lcp_got[i] != o.lcp[i])
                return fail("lcp value wrong at position " + std::to_string(i));
    }

    return rep;
}

namespace driver {

inline bool run_verify(const std::string& text_path, std::uint64_t max_n, unsigned threads,
                       std::ostream& log) {
    std::string raw = read_file(text_path);
    verify_report rep = verify_text_bytes(raw, verify_options{max_n, threads});
    if (rep.ok)
        log << "verify: ok (" << raw.size() << " input bytes, all paths agree with the oracle)\n";
    else
        log << "verify: FAILED: " << rep.detail << "\n";
    return rep.ok;
}

}  // namespace driver

}  // namespace renum

#endif
