/*
 * Output materialization: extract the literal substring behind an
 * (interval, length) pair by walking LF^-1 and reading the BWT, and
 * recover SA[b..e] from SA[b] by iterating phi.
 */

#ifndef INCLUDED_RENUM_RECOVER_HPP
#define INCLUDED_RENUM_RECOVER_HPP

#include <cstdint>
#include <vector>

#include "support_index.hpp"
#include "types.hpp"

namespace renum {

// T[SA[b] .. SA[b]+len-1] for iv = interval(P), |P| = len
inline std::vector<sym_t> extract(const support_index& ix, interval iv, std::uint64_t len) {
    if (iv.b < 1 || iv.b > iv.e || iv.e > ix.n())
        throw out_of_range_error("extract: bad interval");
    std::vector<sym_t> out;
    out.reserve(len);
    pos_t pos = iv.b;
    for (std::uint64_t k = 1; k <= len; ++k) {
        pos = ix.lf_inverse(pos);
        sym_t c = ix.bwt_at(pos);
        out.push_back(c);
        if (c == ix.sentinel() && k < len)
            throw out_of_range_error("extract: walk ran past the end of the text");
    }
    return out;
}

// SA[b..e] in index order, given sa_b = SA[b]
inline std::vector<pos_t> extract_sa(const support_index& ix, interval iv, pos_t sa_b) {
    if (iv.b < 1 || iv.b > iv.e || iv.e > ix.n())
        throw out_of_range_error("extract_sa: bad interval");
    std::vector<pos_t> out;
    out.reserve(iv.size());
    out.push_back(sa_b);
    pos_t cur = sa_b;
    for (pos_t i = iv.b; i < iv.e; ++i) {
        cur = ix.phi(cur);
        out.push_back(cur);
    }
    return out;
}

}  // namespace renum

#endif
