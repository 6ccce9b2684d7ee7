/*
 * Byte input -> string model used everywhere else: a dense alphabet
 * 1..sigma with a unique terminal sentinel that is symbol 1 and maps to
 * the strictly smallest occurring byte. All public positions are 1-based.
 */

#ifndef INCLUDED_RENUM_TEXT_HPP
#define INCLUDED_RENUM_TEXT_HPP

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "types.hpp"

namespace renum {

struct text {
    static constexpr sym_t sentinel = 1;

    std::vector<sym_t> symbols;            // symbols[0..n-1]; sym(i) gives the 1-based view
    sym_t sigma = 0;                       // distinct symbols, sentinel included
    std::array<sym_t, 256> byte_map{};     // byte -> id, 0 = byte does not occur
    std::vector<std::uint8_t> byte_of;     // id -> original byte; index 0 unused
    std::uint8_t sentinel_byte = 0;

    pos_t n() const { return symbols.size(); }
    sym_t sym(pos_t i) const { return symbols[i - 1]; }
};

enum class sentinel_policy { append_if_missing, require_present };

namespace detail {

// Dense remap of the occurring bytes: sentinel -> 1, the rest keep byte order.
// Requires the sentinel byte to be strictly smaller than every other occurring
// byte, so that symbol order equals byte order and serialized head bytes can be
// decoded without a separate sentinel field.
inline void build_alphabet(std::span<const std::uint8_t> bytes, std::uint8_t sentinel_byte,
                           std::array<sym_t, 256>& byte_map, std::vector<std::uint8_t>& byte_of,
                           sym_t& sigma) {
    std::array<bool, 256> seen{};
    for (std::uint8_t b : bytes) seen[b] = true;
    if (!seen[sentinel_byte])
        throw sentinel_violation("sentinel byte does not occur");
    for (unsigned b = 0; b < sentinel_byte; ++b)
        if (seen[b])
            throw sentinel_violation("sentinel byte is not the minimum occurring byte");

    byte_map.fill(0);
    byte_of.assign(1, 0);
    byte_map[sentinel_byte] = text::sentinel;
    byte_of.push_back(sentinel_byte);
    for (unsigned b = 0; b < 256; ++b) {
        if (!seen[b] || b == sentinel_byte) continue;
        byte_map[b] = static_cast<sym_t>(byte_of.size());
        byte_of.push_back(static_cast<std::uint8_t>(b));
    }
    sigma = static_cast<sym_t>(byte_of.size() - 1);
}

}  // namespace detail

inline text normalize(std::string_view raw, sentinel_policy policy,
                      std::uint8_t sentinel_byte = 0) {
    if (raw.empty()) throw empty_input("empty input");

    std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
    std::size_t sentinel_count = 0;
    for (std::uint8_t b : bytes)
        if (b == sentinel_byte) ++sentinel_count;

    if (policy == sentinel_policy::require_present) {
        if (bytes.back() != sentinel_byte)
            throw sentinel_violation("input does not end with the sentinel byte");
        if (sentinel_count != 1)
            throw sentinel_violation("sentinel byte occurs more than once");
    } else {
        if (sentinel_count == 0) {
            bytes.push_back(sentinel_byte);
        } else if (sentinel_count != 1 || bytes.back() != sentinel_byte) {
            throw sentinel_violation("sentinel byte occurs inside the input");
        }
    }
    if (bytes.size() < 2) throw empty_input("input holds no content besides the sentinel");

    text t;
    t.sentinel_byte = sentinel_byte;
    detail::build_alphabet(bytes, sentinel_byte, t.byte_map, t.byte_of, t.sigma);
    t.symbols.reserve(bytes.size());
    for (std::uint8_t b : bytes) t.symbols.push_back(t.byte_map[b]);
    return t;
}

inline std::string denormalize(const text& t, std::span<const sym_t> ids) {
    std::string out;
    out.reserve(ids.size());
    for (sym_t c : ids) {
        if (c == 0 || c > t.sigma) throw unknown_symbol("symbol id outside the alphabet");
        out.push_back(static_cast<char>(t.byte_of[c]));
    }
    return out;
}

}  // namespace renum

#endif
