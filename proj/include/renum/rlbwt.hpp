/*
 * Run-length encoded BWT: the r (head, start) pairs, random access via
 * run rank, and the bit-exact .rlbwt serialization.
 *
 * On-disk format, little-endian throughout:
 *   magic "RLBWT1\n" | u64 n | u64 r | u8 sigma | r x (u8 head byte, u64 start)
 * Head bytes are original input bytes; the sentinel is recovered on load
 * as the smallest occurring head byte.
 */

#ifndef INCLUDED_RENUM_RLBWT_HPP
#define INCLUDED_RENUM_RLBWT_HPP

#include <algorithm>
#include <array>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "text.hpp"
#include "types.hpp"

namespace renum {

struct run {
    sym_t head;
    pos_t start;  // ell(i)
    friend bool operator==(const run&, const run&) = default;
};

class rlbwt_sequence {
public:
    rlbwt_sequence() = default;

    rlbwt_sequence(std::vector<sym_t> heads, std::vector<pos_t> starts, pos_t n,
                   std::vector<std::uint8_t> byte_of)
        : heads_(std::move(heads)), starts_(std::move(starts)), n_(n), byte_of_(std::move(byte_of)) {
        validate();
    }

    static rlbwt_sequence encode(std::span<const sym_t> bwt, std::vector<std::uint8_t> byte_of) {
        std::vector<sym_t> heads;
        std::vector<pos_t> starts;
        for (pos_t i = 0; i < bwt.size(); ++i) {
            if (i == 0 || bwt[i] != bwt[i - 1]) {
                heads.push_back(bwt[i]);
                starts.push_back(i + 1);
            }
        }
        return rlbwt_sequence(std::move(heads), std::move(starts), bwt.size(), std::move(byte_of));
    }

    std::vector<sym_t> decode() const {
        std::vector<sym_t> out;
        out.reserve(n_);
        for (std::uint64_t x = 1; x <= r(); ++x)
            out.insert(out.end(), run_length(x), heads_[x - 1]);
        return out;
    }

    std::uint64_t r() const { return heads_.size(); }
    pos_t n() const { return n_; }
    sym_t sigma() const { return static_cast<sym_t>(byte_of_.size() - 1); }

    run run_at(std::uint64_t x) const { return {heads_[x - 1], starts_[x - 1]}; }
    sym_t run_head(std::uint64_t x) const { return heads_[x - 1]; }
    pos_t run_start(std::uint64_t x) const { return x == r() + 1 ? n_ + 1 : starts_[x - 1]; }
    pos_t run_length(std::uint64_t x) const { return run_start(x + 1) - run_start(x); }

    // index of the run containing position i, i.e. rank(S_start, i)
    std::uint64_t run_rank(pos_t i) const {
        return std::upper_bound(starts_.begin(), starts_.end(), i) - starts_.begin();
    }

    sym_t access(pos_t i) const {
        if (i < 1 || i > n_) throw out_of_range_error("rlbwt access: position outside [1, n]");
        return heads_[run_rank(i) - 1];
    }

    std::uint8_t byte_of(sym_t c) const {
        if (c == 0 || c > sigma()) throw unknown_symbol("symbol id outside the alphabet");
        return byte_of_[c];
    }

    void serialize(std::ostream& out) const {
        if (sigma() > 255) throw input_too_large("alphabet does not fit the 8-bit sigma field");
        out.write(magic, 7);
        write_u64(out, n_);
        write_u64(out, r());
        std::uint8_t s8 = static_cast<std::uint8_t>(sigma());
        out.write(reinterpret_cast<const char*>(&s8), 1);
        for (std::uint64_t x = 1; x <= r(); ++x) {
            std::uint8_t head = byte_of_[heads_[x - 1]];
            out.write(reinterpret_cast<const char*>(&head), 1);
            write_u64(out, starts_[x - 1]);
        }
        if (!out) throw io_error("write failed");
    }

    static rlbwt_sequence deserialize(std::istream& in) {
        char got[7];
        in.read(got, 7);
        if (in.gcount() != 7 || std::memcmp(got, magic, 7) != 0)
            throw bad_magic("not a RLBWT1 file");
        pos_t n = read_u64(in);
        std::uint64_t r = read_u64(in);
        std::uint8_t sigma8 = 0;
        in.read(reinterpret_cast<char*>(&sigma8), 1);
        if (!in) throw truncated_file("header cut short");

        std::vector<std::uint8_t> head_bytes(r);
        std::vector<pos_t> starts(r);
        for (std::uint64_t x = 0; x < r; ++x) {
            in.read(reinterpret_cast<char*>(&head_bytes[x]), 1);
            starts[x] = read_u64(in);
        }
        if (!in) throw truncated_file("record list cut short");

        std::array<sym_t, 256> byte_map{};
        std::vector<std::uint8_t> byte_of;
        sym_t sigma = 0;
        if (r == 0) throw malformed_rlbwt("zero runs");
        {
            std::uint8_t min_byte = *std::min_element(head_bytes.begin(), head_bytes.end());
            detail::build_alphabet(head_bytes, min_byte, byte_map, byte_of, sigma);
        }
        if (sigma != sigma8) throw malformed_rlbwt("sigma field disagrees with head bytes");

        std::vector<sym_t> heads(r);
        for (std::uint64_t x = 0; x < r; ++x) heads[x] = byte_map[head_bytes[x]];
        return rlbwt_sequence(std::move(heads), std::move(starts), n, std::move(byte_of));
    }

private:
    static constexpr const char* magic = "RLBWT1\n";

    void validate() const {
        if (heads_.empty() || n_ == 0) throw malformed_rlbwt("empty run list");
        if (heads_.size() != starts_.size()) throw malformed_rlbwt("heads/starts length mismatch");
        if (starts_.front() != 1) throw non_monotone_starts("first run must start at 1");
        for (std::size_t x = 1; x < starts_.size(); ++x) {
            if (starts_[x] <= starts_[x - 1]) throw non_monotone_starts("run starts must strictly increase");
            if (heads_[x] == heads_[x - 1]) throw malformed_rlbwt("adjacent runs share a head symbol");
        }
        if (starts_.back() > n_) throw non_monotone_starts("run start beyond n");
        for (sym_t h : heads_)
            if (h == 0 || h > sigma()) throw malformed_rlbwt("head symbol outside the alphabet");
    }

    static void write_u64(std::ostream& out, std::uint64_t v) {
        std::uint8_t buf[8];
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<std::uint8_t>(v >> (8 * i));
        out.write(reinterpret_cast<const char*>(buf), 8);
    }

    static std::uint64_t read_u64(std::istream& in) {
        std::uint8_t buf[8];
        in.read(reinterpret_cast<char*>(buf), 8);
        if (in.gcount() != 8) throw truncated_file("u64 cut short");
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
        return v;
    }

    std::vector<sym_t> heads_;
    std::vector<pos_t> starts_;
    pos_t n_ = 0;
    std::vector<std::uint8_t> byte_of_;  // index 0 unused
};

// Import of a raw BWT byte stream (sentinel included somewhere inside).
inline rlbwt_sequence rlbwt_from_bwt_bytes(std::string_view bwt, std::uint8_t sentinel_byte) {
    if (bwt.empty()) throw empty_input("empty BWT");
    std::vector<std::uint8_t> bytes(bwt.begin(), bwt.end());
    std::size_t sentinels = 0;
    for (std::uint8_t b : bytes)
        if (b == sentinel_byte) ++sentinels;
    if (sentinels != 1) throw sentinel_violation("BWT must contain the sentinel byte exactly once");

    std::array<sym_t, 256> byte_map{};
    std::vector<std::uint8_t> byte_of;
    sym_t sigma = 0;
    detail::build_alphabet(bytes, sentinel_byte, byte_map, byte_of, sigma);

    std::vector<sym_t> symbols(bytes.size());
    for (std::size_t i = 0; i < bytes.size(); ++i) symbols[i] = byte_map[bytes[i]];
    return rlbwt_sequence::encode(symbols, std::move(byte_of));
}

}  // namespace renum

#endif
