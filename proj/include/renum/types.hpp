/*
 * Shared vocabulary: 1-based positions, dense symbol ids, intervals,
 * exact rationals, and the error types thrown across the library.
 */

#ifndef INCLUDED_RENUM_TYPES_HPP
#define INCLUDED_RENUM_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace renum {

using pos_t = std::uint64_t;  // 1-based text/BWT/SA positions
using sym_t = std::uint32_t;  // dense symbol ids in [1, sigma]; the sentinel is always 1

// inclusive interval [b, e], 1-based on the suffix array or the BWT
struct interval {
    pos_t b = 0;
    pos_t e = 0;

    pos_t size() const { return e - b + 1; }
    friend bool operator==(const interval&, const interval&) = default;
};

// exact ratio num/den; den > 0
struct rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const rational& x, const rational& y) {
        return x.num * y.den == y.num * x.den;
    }
};

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_input : error { using error::error; };
struct sentinel_violation : error { using error::error; };
struct unknown_symbol : error { using error::error; };
struct out_of_range_error : error { using error::error; };
struct bad_magic : error { using error::error; };
struct truncated_file : error { using error::error; };
struct non_monotone_starts : error { using error::error; };
struct malformed_rlbwt : error { using error::error; };
struct input_too_large : error { using error::error; };
struct workspace_dirty : error { using error::error; };
struct last_suffix : error { using error::error; };
struct flag_conflict : error { using error::error; };
struct io_error : error { using error::error; };

}  // namespace renum

#endif
