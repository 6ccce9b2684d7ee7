/*
 * Traversal-driven measures.
 *
 * delta: max_t |T_t| / t over the distinct-substring counts |T_t|,
 * maintained through the per-level recurrence
 *     |T_1| = sigma,
 *     |T_t| = |T_{t-1}| - |L_{t-1}| + sum over L_{t-1} of |children| - 1.
 * The trailing -1 accounts for the length-(t-1) terminal suffix, which
 * ends with the sentinel and has no right extension; once the frontier is
 * empty the ratio is strictly decreasing, so only the first post-frontier
 * length needs to be considered.
 *
 * lcp_value_sets: P_t = { i in [2, n] : LCP[i] = t }, obtained as the
 * positions e+1 over the non-last children of the depth-t explicit nodes;
 * position 1 (LCP[1] = 0 by convention) is reported in P_0 so the sets
 * partition [1, n].
 */

#ifndef INCLUDED_RENUM_MEASURES_HPP
#define INCLUDED_RENUM_MEASURES_HPP

#include <cstdint>
#include <vector>

#include "traversal.hpp"
#include "types.hpp"

namespace renum {

inline rational delta(const support_index& ix, const traversal_options& opt = {}) {
    rational best{0, 1};
    auto consider = [&](std::uint64_t num, std::uint64_t den) {
        if (num * best.den > best.num * den) best = {num, den};
    };

    std::uint64_t distinct = 0;  // |T_t| while level t is being processed
    traverse_bfs(
        ix,
        [&](std::uint64_t t, const std::vector<rich_repr>& nodes) {
            if (t == 0) {
                distinct = ix.sigma();
                consider(distinct, 1);
                return;
            }
            std::uint64_t children = 0;
            for (const auto& node : nodes) children += node.children.size();
            distinct = distinct - nodes.size() + children - 1;
            consider(distinct, t + 1);
        },
        opt);
    return best;
}

template <class Sink>
void lcp_value_sets(const support_index& ix, Sink&& sink, const traversal_options& opt = {}) {
    traverse_bfs(
        ix,
        [&](std::uint64_t t, const std::vector<rich_repr>& nodes) {
            std::vector<pos_t> positions;
            if (t == 0) positions.push_back(1);
            for (const auto& node : nodes)
                for (std::size_t k = 0; k + 1 < node.children.size(); ++k)
                    positions.push_back(node.children[k].e + 1);
            sink(t, positions);
        },
        opt);
}

}  // namespace renum

#endif
