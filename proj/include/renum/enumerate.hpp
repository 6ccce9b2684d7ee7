/*
 * Detectors for the three characteristic-substring families, layered on
 * the breadth-first traversal.
 *
 *   maximal repeat     P: node u_P explicit, depth >= 1, and its BWT
 *                      interval crosses a run boundary.
 *   minimal unique     cPc': |interval(cPc')| = 1, |interval(cP)| >= 2 and
 *                      Right_P[c'] >= 2; length-1 substrings occurring once
 *                      are read off the root representation.
 *   minimal absent     cPc': cP occurs, Pc' occurs, cPc' does not; words
 *                      containing the sentinel are suppressed.
 *
 * Right_P lives in the right-symbol bank of the pooled workspace and is
 * restored to empty after every node. Records are buffered per level and
 * flushed sorted by (interval.b, symbol), so output order is (depth,
 * interval.b, symbol) regardless of thread count.
 */

#ifndef INCLUDED_RENUM_ENUMERATE_HPP
#define INCLUDED_RENUM_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "traversal.hpp"

namespace renum {

struct enum_options {
    bool extended = false;
    unsigned threads = 1;
};

template <class Repr>
struct max_repeat_record {
    const Repr& repr;
    std::uint64_t occurrences;  // |interval(P)|
};

struct mus_record {
    interval iv;  // interval(cPc'), size 1
    std::uint64_t length;
    std::optional<pos_t> sa_first;
    friend bool operator==(const mus_record&, const mus_record&) = default;
};

struct maw_record {
    interval iv;  // interval(cP)
    std::uint64_t length;  // |cP|
    sym_t absent_next;     // c'
    std::optional<pos_t> sa_first;
    friend bool operator==(const maw_record&, const maw_record&) = default;
};

struct enum_summary {
    std::uint64_t records = 0;
    traversal_stats stats;
};

namespace detail {

template <class Repr>
constexpr std::optional<pos_t> node_sa(const Repr& node) {
    if constexpr (std::is_same_v<Repr, ext_rich_repr>)
        return node.sa_first;
    else
        return std::nullopt;
}

template <class Repr, class Sink>
enum_summary maximal_repeats_impl(const support_index& ix, const traversal_options& opt, Sink&& sink) {
    enum_summary sum;
    sum.stats = bfs_run<Repr>(
        ix, opt,
        [&](std::uint64_t t, const std::vector<Repr>& nodes) {
            if (t == 0) return;  // the empty string is not a repeat
            for (const auto& node : nodes) {
                if (ix.rank_start(node.iv.b) == ix.rank_start(node.iv.e)) continue;
                ++sum.records;
                sink(max_repeat_record<Repr>{node, node.iv.size()});
            }
        },
        [](const Repr&, weiner_result<Repr>&) {});
    return sum;
}

template <class Repr>
constexpr std::optional<pos_t> child_sa(const std::conditional_t<std::is_same_v<Repr, ext_rich_repr>,
                                                                 ext_repr_child, repr_child>& ch) {
    if constexpr (std::is_same_v<Repr, ext_rich_repr>)
        return ch.sa_first;
    else
        return std::nullopt;
}

template <class Repr, class Sink>
enum_summary minimal_unique_impl(const support_index& ix, const traversal_options& opt, Sink&& sink) {
    enum_summary sum;
    std::vector<mus_record> pending;
    auto flush = [&] {
        std::sort(pending.begin(), pending.end(),
                  [](const mus_record& a, const mus_record& b) { return a.iv.b < b.iv.b; });
        for (const auto& rec : pending) {
            ++sum.records;
            sink(rec);
        }
        pending.clear();
    };

    // symbols occurring exactly once: singleton children of the root
    for (const auto& ch : ix.root_repr().children) {
        if (ch.b == ch.e)
            pending.push_back({{ch.b, ch.e}, 1,
                               std::is_same_v<Repr, ext_rich_repr>
                                   ? std::optional<pos_t>(ch.sa_first)
                                   : std::nullopt});
    }

    workspace right_bank(ix.sigma());
    sum.stats = bfs_run<Repr>(
        ix, opt,
        [&](std::uint64_t, const std::vector<Repr>&) { flush(); },
        [&](const Repr& parent, weiner_result<Repr>& images) {
            for (const auto& ch : parent.children) right_bank.right_add(ch.symbol, ch.e - ch.b + 1);
            auto scan = [&](const std::vector<Repr>& list) {
                for (const auto& img : list) {
                    if (img.iv.size() < 2) continue;  // |Occ(cP)| >= 2
                    for (const auto& ch : img.children)
                        if (ch.b == ch.e && right_bank.right_get(ch.symbol) >= 2)
                            pending.push_back({{ch.b, ch.e}, parent.depth + 2, child_sa<Repr>(ch)});
                }
            };
            scan(images.explicit_nodes);
            scan(images.implicit_nodes);
            right_bank.right_clear();
        });
    flush();
    return sum;
}

template <class Repr, class Sink>
enum_summary minimal_absent_impl(const support_index& ix, const traversal_options& opt, Sink&& sink) {
    enum_summary sum;
    std::vector<maw_record> pending;
    auto flush = [&] {
        std::sort(pending.begin(), pending.end(), [](const maw_record& a, const maw_record& b) {
            return a.iv.b != b.iv.b ? a.iv.b < b.iv.b : a.absent_next < b.absent_next;
        });
        for (const auto& rec : pending) {
            ++sum.records;
            sink(rec);
        }
        pending.clear();
    };

    workspace right_bank(ix.sigma());
    sum.stats = bfs_run<Repr>(
        ix, opt,
        [&](std::uint64_t, const std::vector<Repr>&) { flush(); },
        [&](const Repr& parent, weiner_result<Repr>& images) {
            for (const auto& ch : parent.children) right_bank.right_add(ch.symbol, ch.e - ch.b + 1);
            const auto& present = right_bank.right_touched();  // sorted: parent children are
            auto scan = [&](const std::vector<Repr>& list) {
                for (const auto& img : list) {
                    std::size_t k = 0;  // walk img children (sorted by symbol) against `present`
                    for (sym_t c : present) {
                        while (k < img.children.size() && img.children[k].symbol < c) ++k;
                        bool occurs = k < img.children.size() && img.children[k].symbol == c;
                        if (!occurs && c != ix.sentinel())
                            pending.push_back({img.iv, parent.depth + 1, c, node_sa(img)});
                    }
                }
            };
            scan(images.explicit_nodes);
            scan(images.implicit_nodes);
            right_bank.right_clear();
        });
    flush();
    return sum;
}

}  // namespace detail

template <class Sink>
enum_summary maximal_repeats(const support_index& ix, const enum_options& opt, Sink&& sink) {
    traversal_options topt{opt.threads};
    if (opt.extended)
        return detail::maximal_repeats_impl<ext_rich_repr>(ix, topt, std::forward<Sink>(sink));
    return detail::maximal_repeats_impl<rich_repr>(ix, topt, std::forward<Sink>(sink));
}

template <class Sink>
enum_summary minimal_unique_substrings(const support_index& ix, const enum_options& opt, Sink&& sink) {
    traversal_options topt{opt.threads};
    if (opt.extended)
        return detail::minimal_unique_impl<ext_rich_repr>(ix, topt, std::forward<Sink>(sink));
    return detail::minimal_unique_impl<rich_repr>(ix, topt, std::forward<Sink>(sink));
}

template <class Sink>
enum_summary minimal_absent_words(const support_index& ix, const enum_options& opt, Sink&& sink) {
    traversal_options topt{opt.threads};
    if (opt.extended)
        return detail::minimal_absent_impl<ext_rich_repr>(ix, topt, std::forward<Sink>(sink));
    return detail::minimal_absent_impl<rich_repr>(ix, topt, std::forward<Sink>(sink));
}

}  // namespace renum

#endif
