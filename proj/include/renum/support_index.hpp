/*
 * O(r + sigma)-word support structures over the RLBWT:
 *
 *   d_lf[x]  = LF(ell(x)), built from the runs sorted stably by head symbol;
 *              LF(i) = d_lf[x] + (i - ell(x)) for x = rank(S_start, i).
 *   pi       = permutation ordering runs by d_lf; with s_start_prime =
 *              { d_lf[pi[y]] } it inverts LF: LF^-1(i) = ell(pi[y]) + (i - d_lf[pi[y]]).
 *   head_occ = per-symbol run-index lists over the head string L', answering
 *              range distinct on L and the extended (toehold) variant.
 *   d_sa[x]  = SA[ell(x)], plus run-end samples keyed by sa-value for phi.
 *
 * rank/predecessor structures are sorted arrays + binary search (the
 * documented desk-scale relaxation of the cited O(log log) structures).
 * Construction performs one LF walk over the whole text; that walk is the
 * dominant build cost and doubles as validation that the input really is
 * the BWT of a sentinel-terminated string (the LF cycle must have length n).
 *
 * Size guardrail: stored_entries() counts every stored word and tests assert
 * stored_entries() <= 12 * (r + sigma).
 */

#ifndef INCLUDED_RENUM_SUPPORT_INDEX_HPP
#define INCLUDED_RENUM_SUPPORT_INDEX_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "repr.hpp"
#include "rlbwt.hpp"
#include "types.hpp"

namespace renum {

struct rd_entry {
    sym_t symbol;
    pos_t first;
    pos_t last;
    friend bool operator==(const rd_entry&, const rd_entry&) = default;
};

struct erd_entry {
    sym_t symbol;
    pos_t first;
    pos_t last;
    pos_t sa_first;  // SA[first]
    friend bool operator==(const erd_entry&, const erd_entry&) = default;
};

class support_index {
public:
    static support_index build(rlbwt_sequence seq) {
        support_index ix;
        ix.bwt_ = std::move(seq);
        ix.construct();
        return ix;
    }

    pos_t n() const { return bwt_.n(); }
    std::uint64_t r() const { return bwt_.r(); }
    sym_t sigma() const { return bwt_.sigma(); }
    sym_t sentinel() const { return text::sentinel; }
    const rlbwt_sequence& rlbwt() const { return bwt_; }
    std::uint8_t byte_of(sym_t c) const { return bwt_.byte_of(c); }
    const ext_rich_repr& root_repr() const { return root_; }
    pos_t sa_last() const { return sa_last_; }

    std::uint64_t rank_start(pos_t i) const {
        check_pos(i, "rank_start");
        return bwt_.run_rank(i);
    }

    sym_t bwt_at(pos_t i) const { return bwt_.access(i); }

    pos_t lf(pos_t i) const {
        check_pos(i, "lf");
        std::uint64_t x = bwt_.run_rank(i);
        return d_lf_[x] + (i - bwt_.run_start(x));
    }

    pos_t lf_inverse(pos_t i) const {
        check_pos(i, "lf_inverse");
        std::uint64_t y = std::upper_bound(s_start_prime_.begin(), s_start_prime_.end(), i) -
                          s_start_prime_.begin();
        std::uint64_t x = pi_[y - 1];
        return bwt_.run_start(x) + (i - d_lf_[x]);
    }

    std::vector<rd_entry> range_distinct(pos_t b, pos_t e) const {
        if (b < 1 || b > e || e > n()) throw out_of_range_error("range_distinct: bad interval");
        std::uint64_t br = bwt_.run_rank(b), er = bwt_.run_rank(e);
        std::vector<rd_entry> out;
        run_space_distinct(br, er, [&](sym_t c, std::uint64_t p_run, std::uint64_t q_run) {
            pos_t p = std::max(bwt_.run_start(p_run), b);
            pos_t q = std::min(bwt_.run_start(q_run + 1) - 1, e);
            out.push_back({c, p, q});
        });
        return out;
    }

    std::vector<erd_entry> extended_range_distinct(pos_t b, pos_t e, pos_t sa_b) const {
        if (b < 1 || b > e || e > n()) throw out_of_range_error("extended_range_distinct: bad interval");
        std::uint64_t br = bwt_.run_rank(b), er = bwt_.run_rank(e);
        std::vector<erd_entry> out;
        run_space_distinct(br, er, [&](sym_t c, std::uint64_t p_run, std::uint64_t q_run) {
            pos_t p = std::max(bwt_.run_start(p_run), b);
            pos_t q = std::min(bwt_.run_start(q_run + 1) - 1, e);
            // toehold: first occurrences are run starts except possibly at b itself
            pos_t sa = p == bwt_.run_start(p_run) ? d_sa_[p_run] : sa_b;
            out.push_back({c, p, q, sa});
        });
        return out;
    }

    pos_t phi(pos_t sa_value) const {
        check_pos(sa_value, "phi");
        if (sa_value == sa_last_) throw last_suffix("phi: sa-value of the last suffix-array entry");
        auto it = std::upper_bound(phi_key_.begin(), phi_key_.end(), sa_value);
        if (it == phi_key_.begin()) throw out_of_range_error("phi: no run-end sample precedes value");
        std::size_t idx = (it - phi_key_.begin()) - 1;
        return phi_val_[idx] + (sa_value - phi_key_[idx]);
    }

    std::uint64_t stored_entries() const {
        std::uint64_t total = 2 * r();  // run heads + starts
        total += d_lf_.size() - 1;
        total += pi_.size();
        total += s_start_prime_.size();
        total += d_sa_.size() - 1;
        total += phi_key_.size() + phi_val_.size();
        total += sigma();  // head_occ list headers
        for (const auto& v : head_occ_) total += v.size();
        total += sigma();  // byte map
        total += 4 * root_.children.size() + 4;
        return total;
    }

private:
    void check_pos(pos_t i, const char* who) const {
        if (i < 1 || i > n())
            throw out_of_range_error(std::string(who) + ": position outside [1, n]");
    }

    // distinct symbols of L'[br..er] with first/last run index, emitted in
    // symbol order; short ranges are scanned, long ones probed per symbol
    template <class Emit>
    void run_space_distinct(std::uint64_t br, std::uint64_t er, Emit&& emit) const {
        std::uint64_t m = er - br + 1;
        if (m <= 2 * static_cast<std::uint64_t>(sigma())) {
            std::array<std::uint32_t, 257> first{}, last{};
            for (std::uint64_t x = br; x <= er; ++x) {
                sym_t c = bwt_.run_head(x);
                if (first[c] == 0) first[c] = static_cast<std::uint32_t>(x);
                last[c] = static_cast<std::uint32_t>(x);
            }
            for (sym_t c = 1; c <= sigma(); ++c)
                if (first[c] != 0) emit(c, first[c], last[c]);
        } else {
            for (sym_t c = 1; c <= sigma(); ++c) {
                const auto& occ = head_occ_[c];
                auto lo = std::lower_bound(occ.begin(), occ.end(), br);
                if (lo == occ.end() || *lo > er) continue;
                auto hi = std::upper_bound(lo, occ.end(), er);
                emit(c, *lo, *(hi - 1));
            }
        }
    }

    void construct() {
        const std::uint64_t nr = bwt_.r();
        const pos_t nn = bwt_.n();
        if (sigma() < 2) throw malformed_rlbwt("alphabet must hold the sentinel and one more symbol");
        if (sigma() > 256) throw malformed_rlbwt("alphabet wider than a byte");

        head_occ_.assign(sigma() + 1, {});
        for (std::uint64_t x = 1; x <= nr; ++x)
            head_occ_[bwt_.run_head(x)].push_back(static_cast<std::uint32_t>(x));

        pos_t sentinel_len = 0;
        for (std::uint32_t x : head_occ_[text::sentinel]) sentinel_len += bwt_.run_length(x);
        if (sentinel_len != 1) throw malformed_rlbwt("sentinel must occur exactly once in the BWT");

        // pi = runs sorted stably by head symbol = the radix order defining d_lf
        pi_.clear();
        pi_.reserve(nr);
        for (sym_t c = 1; c <= sigma(); ++c)
            pi_.insert(pi_.end(), head_occ_[c].begin(), head_occ_[c].end());

        d_lf_.assign(nr + 1, 0);
        pos_t cur = 1;
        for (std::uint64_t j = 0; j < nr; ++j) {
            d_lf_[pi_[j]] = cur;
            cur += bwt_.run_length(pi_[j]);
        }
        if (cur != nn + 1) throw malformed_rlbwt("run lengths do not sum to n");

        s_start_prime_.resize(nr);
        for (std::uint64_t j = 0; j < nr; ++j) s_start_prime_[j] = d_lf_[pi_[j]];

        // LF walk over the whole text: fills D_SA, run-end sa samples and
        // SA[n], and proves the LF cycle has length n (i.e. the input is a
        // real BWT). Dominant build cost: n rank queries.
        d_sa_.assign(nr + 1, 0);
        std::vector<pos_t> end_sample(nr, 0);  // sa-value at ell(x+1)-1, x in [1, r-1]
        pos_t pos = 1, sa = nn;
        std::uint64_t filled = 0;
        for (pos_t step = 1; step <= nn; ++step) {
            std::uint64_t x = bwt_.run_rank(pos);
            if (pos == bwt_.run_start(x)) {
                d_sa_[x] = sa;
                ++filled;
            }
            if (x < nr && pos == bwt_.run_start(x + 1) - 1) end_sample[x - 1] = sa;
            if (pos == nn) sa_last_ = sa;
            pos = d_lf_[x] + (pos - bwt_.run_start(x));
            if (step < nn && pos == 1)
                throw malformed_rlbwt("LF cycle shorter than n: not the BWT of a text");
            sa -= 1;
        }
        if (pos != 1 || filled != nr) throw malformed_rlbwt("LF walk did not close after n steps");

        std::vector<std::uint64_t> order(nr - 1);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::uint64_t a, std::uint64_t b) { return end_sample[a] < end_sample[b]; });
        phi_key_.resize(nr - 1);
        phi_val_.resize(nr - 1);
        for (std::uint64_t j = 0; j < nr - 1; ++j) {
            phi_key_[j] = end_sample[order[j]];
            phi_val_[j] = d_sa_[order[j] + 2];  // SA at the start of run x+1
        }

        build_root();
    }

    void build_root() {
        root_.iv = {1, n()};
        root_.depth = 0;
        root_.sa_first = n();  // SA[1] = n: the sentinel suffix sorts first
        root_.children.clear();
        for (sym_t c = 1; c <= sigma(); ++c) {
            std::uint64_t p_run = head_occ_[c].front();
            std::uint64_t q_run = head_occ_[c].back();
            pos_t p = bwt_.run_start(p_run);
            pos_t q = bwt_.run_start(q_run + 1) - 1;
            pos_t cb = lf(p), ce = lf(q);
            pos_t sa = c == text::sentinel ? n() : d_sa_[p_run] - 1;
            root_.children.push_back({c, cb, ce, sa});
        }
    }

    rlbwt_sequence bwt_;
    std::vector<pos_t> d_lf_;                        // [x] = LF(ell(x)), 1-based
    std::vector<std::uint32_t> pi_;                  // run ids in d_lf order
    std::vector<pos_t> s_start_prime_;               // sorted { d_lf[pi[y]] }
    std::vector<std::vector<std::uint32_t>> head_occ_;  // per head symbol, ascending run ids
    std::vector<pos_t> d_sa_;                        // [x] = SA[ell(x)]
    std::vector<pos_t> phi_key_, phi_val_;           // run-end sa samples -> following sa-value
    pos_t sa_last_ = 0;                              // SA[n]
    ext_rich_repr root_;
};

}  // namespace renum

#endif
