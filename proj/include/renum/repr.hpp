/*
 * Rich representations of Weiner-link-tree nodes: the node interval, the
 * child triples (branching symbol + child interval), and the depth. The
 * extended form carries the sa-value at every interval left boundary.
 */

#ifndef INCLUDED_RENUM_REPR_HPP
#define INCLUDED_RENUM_REPR_HPP

#include <cstdint>
#include <vector>

#include "types.hpp"

namespace renum {

struct repr_child {
    sym_t symbol;
    pos_t b;
    pos_t e;
    friend bool operator==(const repr_child&, const repr_child&) = default;
};

struct ext_repr_child {
    sym_t symbol;
    pos_t b;
    pos_t e;
    pos_t sa_first;  // SA[b]
    friend bool operator==(const ext_repr_child&, const ext_repr_child&) = default;
};

struct rich_repr {
    interval iv;
    std::uint64_t depth = 0;
    std::vector<repr_child> children;  // sorted by b, disjoint, cover iv exactly
    friend bool operator==(const rich_repr&, const rich_repr&) = default;
};

struct ext_rich_repr {
    interval iv;
    std::uint64_t depth = 0;
    pos_t sa_first = 0;  // SA[iv.b]
    std::vector<ext_repr_child> children;
    friend bool operator==(const ext_rich_repr&, const ext_rich_repr&) = default;
};

inline rich_repr to_plain(const ext_rich_repr& x) {
    rich_repr out;
    out.iv = x.iv;
    out.depth = x.depth;
    out.children.reserve(x.children.size());
    for (const auto& c : x.children) out.children.push_back({c.symbol, c.b, c.e});
    return out;
}

}  // namespace renum

#endif
