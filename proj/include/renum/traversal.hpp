/*
 * Breadth-first traversal of the Weiner-link tree directly on the RLBWT.
 *
 * weiner_children applies one range distinct query per child of an
 * explicit node and LF-maps the results into the per-symbol buckets of a
 * reusable workspace (the sigma-slot "empty array" trick: buckets are
 * cleared through a touched list, so each expansion costs output size,
 * not sigma). The image interval of each left extension is the span of
 * its bucket, the bucket itself is its child list, and an image is
 * explicit iff its bucket holds at least two entries.
 *
 * The engine keeps only the current and the next level resident. Levels
 * are emitted sorted by interval left boundary; with threads > 1 the
 * nodes of a level are expanded by workers with private workspaces and
 * the results are consumed in node order on the coordinator, so output
 * is identical to the sequential run.
 */

#ifndef INCLUDED_RENUM_TRAVERSAL_HPP
#define INCLUDED_RENUM_TRAVERSAL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "repr.hpp"
#include "support_index.hpp"
#include "types.hpp"

namespace renum {

class workspace {
public:
    struct q_entry {
        sym_t right_symbol;
        pos_t b;
        pos_t e;
        pos_t sa_first;  // meaningful only on the extended path
    };

    explicit workspace(sym_t sigma)
        : q_(sigma + 1), right_(sigma + 1, 0) {}

    sym_t sigma() const { return static_cast<sym_t>(right_.size() - 1); }
    bool q_clean() const { return q_touched_.empty(); }
    bool right_clean() const { return right_touched_.empty(); }
    bool clean() const { return q_clean() && right_clean(); }

    void q_push(sym_t c, const q_entry& e) {
        if (q_[c].empty()) q_touched_.push_back(c);
        q_[c].push_back(e);
    }
    std::vector<sym_t>& q_touched() { return q_touched_; }
    const std::vector<q_entry>& q_bucket(sym_t c) const { return q_[c]; }
    void q_clear() {
        for (sym_t c : q_touched_) q_[c].clear();
        q_touched_.clear();
    }

    void right_add(sym_t c, std::uint64_t occ) {
        if (right_[c] == 0) right_touched_.push_back(c);
        right_[c] += occ;
    }
    std::uint64_t right_get(sym_t c) const { return right_[c]; }
    const std::vector<sym_t>& right_touched() const { return right_touched_; }
    void right_clear() {
        for (sym_t c : right_touched_) right_[c] = 0;
        right_touched_.clear();
    }

private:
    std::vector<std::vector<q_entry>> q_;
    std::vector<sym_t> q_touched_;
    std::vector<std::uint64_t> right_;
    std::vector<sym_t> right_touched_;
};

template <class Repr>
struct weiner_result {
    std::vector<Repr> explicit_nodes;
    std::vector<Repr> implicit_nodes;
    std::uint64_t wlink_count = 0;  // Weiner links computed from the node's children
};

// {repr(cP) | cP in WLink(P), c != sentinel} for an explicit node P
template <class Repr>
weiner_result<Repr> weiner_children(const support_index& ix, const Repr& node, workspace& ws) {
    constexpr bool extended = std::is_same_v<Repr, ext_rich_repr>;
    if (!ws.q_clean()) throw workspace_dirty("weiner_children: workspace buckets not empty");

    weiner_result<Repr> out;
    for (const auto& ch : node.children) {
        if constexpr (extended) {
            for (const erd_entry& hit : ix.extended_range_distinct(ch.b, ch.e, ch.sa_first)) {
                if (hit.symbol == ix.sentinel()) continue;
                ws.q_push(hit.symbol,
                          {ch.symbol, ix.lf(hit.first), ix.lf(hit.last), hit.sa_first - 1});
                ++out.wlink_count;
            }
        } else {
            for (const rd_entry& hit : ix.range_distinct(ch.b, ch.e)) {
                if (hit.symbol == ix.sentinel()) continue;
                ws.q_push(hit.symbol, {ch.symbol, ix.lf(hit.first), ix.lf(hit.last), 0});
                ++out.wlink_count;
            }
        }
    }

    auto& touched = ws.q_touched();
    std::sort(touched.begin(), touched.end());
    for (sym_t c : touched) {
        const auto& bucket = ws.q_bucket(c);
        Repr img;
        img.iv = {bucket.front().b, bucket.back().e};
        img.depth = node.depth + 1;
        img.children.reserve(bucket.size());
        if constexpr (extended) {
            img.sa_first = bucket.front().sa_first;
            for (const auto& q : bucket) img.children.push_back({q.right_symbol, q.b, q.e, q.sa_first});
        } else {
            for (const auto& q : bucket) img.children.push_back({q.right_symbol, q.b, q.e});
        }
        (bucket.size() >= 2 ? out.explicit_nodes : out.implicit_nodes).push_back(std::move(img));
    }
    ws.q_clear();
    return out;
}

struct traversal_stats {
    std::vector<std::uint64_t> level_nodes;     // |L_t|
    std::vector<std::uint64_t> level_children;  // |K_t|
    std::vector<std::uint64_t> level_wlinks;    // H_t
    std::uint64_t total_nodes = 0;
    std::uint64_t total_wlinks = 0;
    std::uint64_t max_level_children = 0;       // max_t |K_t|
    std::uint64_t peak_frontier_children = 0;   // resident child triples, two levels
    std::uint64_t levels() const { return level_nodes.size(); }
};

struct traversal_options {
    unsigned threads = 1;
};

enum class visit_action { continue_traversal, stop_traversal };

namespace detail {

template <class Fn, class Repr>
visit_action call_level_visitor(Fn&& fn, std::uint64_t t, const std::vector<Repr>& nodes) {
    if constexpr (std::is_void_v<std::invoke_result_t<Fn&, std::uint64_t, const std::vector<Repr>&>>) {
        fn(t, nodes);
        return visit_action::continue_traversal;
    } else {
        return fn(t, nodes);
    }
}

}  // namespace detail

// Engine shared by the plain/extended traversals and the detectors.
// on_level(t, nodes) runs before the level is expanded; on_expand(parent,
// result) runs on the coordinator for every node, in node order.
template <class Repr, class OnLevel, class OnExpand>
traversal_stats bfs_run(const support_index& ix, const traversal_options& opt, OnLevel&& on_level,
                        OnExpand&& on_expand) {
    traversal_stats stats;
    std::vector<Repr> frontier;
    if constexpr (std::is_same_v<Repr, ext_rich_repr>)
        frontier.push_back(ix.root_repr());
    else
        frontier.push_back(to_plain(ix.root_repr()));

    unsigned max_workers = std::max(1u, opt.threads);
    std::vector<workspace> pool;
    pool.reserve(max_workers);
    for (unsigned w = 0; w < max_workers; ++w) pool.emplace_back(ix.sigma());

    std::uint64_t t = 0;
    while (!frontier.empty()) {
        std::uint64_t children_here = 0;
        for (const auto& node : frontier) children_here += node.children.size();
        stats.level_nodes.push_back(frontier.size());
        stats.level_children.push_back(children_here);
        stats.total_nodes += frontier.size();
        stats.max_level_children = std::max(stats.max_level_children, children_here);
        if (children_here > 2 * ix.r())
            throw error("traversal: frontier exceeded the 2r bound");

        if (detail::call_level_visitor(on_level, t, frontier) == visit_action::stop_traversal)
            return stats;

        std::vector<weiner_result<Repr>> expanded(frontier.size());
        unsigned workers = frontier.size() >= 4 * max_workers ? max_workers : 1;
        if (workers <= 1) {
            for (std::size_t i = 0; i < frontier.size(); ++i)
                expanded[i] = weiner_children(ix, frontier[i], pool[0]);
        } else {
            std::vector<std::exception_ptr> errors(workers);
            auto chunk = [&](unsigned w) {
                std::size_t lo = frontier.size() * w / workers;
                std::size_t hi = frontier.size() * (w + 1) / workers;
                try {
                    for (std::size_t i = lo; i < hi; ++i)
                        expanded[i] = weiner_children(ix, frontier[i], pool[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            };
            std::vector<std::thread> threads;
            for (unsigned w = 1; w < workers; ++w) threads.emplace_back(chunk, w);
            chunk(0);
            for (auto& th : threads) th.join();
            for (auto& err : errors)
                if (err) std::rethrow_exception(err);
        }

        std::vector<Repr> next;
        std::uint64_t wlinks_here = 0, next_children = 0;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            on_expand(frontier[i], expanded[i]);
            wlinks_here += expanded[i].wlink_count;
            for (auto& img : expanded[i].explicit_nodes) {
                next_children += img.children.size();
                next.push_back(std::move(img));
            }
        }
        stats.level_wlinks.push_back(wlinks_here);
        stats.total_wlinks += wlinks_here;
        std::sort(next.begin(), next.end(),
                  [](const Repr& a, const Repr& b) { return a.iv.b < b.iv.b; });
        stats.peak_frontier_children =
            std::max(stats.peak_frontier_children, children_here + next_children);

        frontier = std::move(next);
        ++t;
    }
    return stats;
}

template <class Visitor>
traversal_stats traverse_bfs(const support_index& ix, Visitor&& visitor,
                             const traversal_options& opt = {}) {
    return bfs_run<rich_repr>(ix, opt, std::forward<Visitor>(visitor),
                              [](const rich_repr&, weiner_result<rich_repr>&) {});
}

template <class Visitor>
traversal_stats traverse_bfs_extended(const support_index& ix, Visitor&& visitor,
                                      const traversal_options& opt = {}) {
    return bfs_run<ext_rich_repr>(ix, opt, std::forward<Visitor>(visitor),
                                  [](const ext_rich_repr&, weiner_result<ext_rich_repr>&) {});
}

}  // namespace renum

#endif
