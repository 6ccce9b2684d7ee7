/*
 * Batch front-end logic behind the renum CLI: index building and
 * conversion, TSV enumeration output, measures, stats, and the
 * oracle-vs-main verification pipeline. Kept out of tools/ so tests can
 * drive the exact byte output in-process.
 *
 * TSV schemas (tab separated, Lines starting with '#' are header/summary):
 *   mr  : depth b e occ_count [sa_first] [string] [occ_positions]
 *   mus : length b            [sa_first] [string] [occ_positions]
 *   maw : length b e absent   [sa_first] [string]
 * `absent` is the decimal value of the absent byte. Strings are escaped:
 * backslash, tab, newline, carriage return as \\ \t \n \r, other bytes
 * outside [0x20, 0x7e] as \xHH.
 */

#ifndef INCLUDED_RENUM_DRIVER_HPP
#define INCLUDED_RENUM_DRIVER_HPP

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "measures.hpp"
#include "oracle.hpp"
#include "recover.hpp"
#include "suffix_sort.hpp"
#include "support_index.hpp"

namespace renum::driver {

inline std::string escape_bytes(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (unsigned char b : raw) {
        switch (b) {
            case '\\': out += "\\\\"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            default:
                if (b < 0x20 || b > 0x7e) {
                    char buf[5];
                    std::snprintf(buf, sizeof buf, "\\x%02x", b);
                    out += buf;
                } else {
                    out.push_back(static_cast<char>(b));
                }
        }
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw io_error("read failed on " + path);
    return std::move(buf).str();
}

inline rlbwt_sequence load_rlbwt(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    return rlbwt_sequence::deserialize(in);
}

enum class input_format { text, bwt, rlbwt };

struct build_options {
    std::string input_path;
    std::string output_path;
    input_format format = input_format::text;
    std::uint8_t sentinel_byte = 0;
    std::uint64_t max_n = 1ull << 24;  // text-mode guard; bypass with force
    bool force = false;
};

inline rlbwt_sequence build_rlbwt(const build_options& opt) {
    switch (opt.format) {
        case input_format::rlbwt:
            return load_rlbwt(opt.input_path);
        case input_format::bwt:
            return rlbwt_from_bwt_bytes(read_file(opt.input_path), opt.sentinel_byte);
        case input_format::text: {
            std::string raw = read_file(opt.input_path);
            if (raw.size() > opt.max_n && !opt.force)
                throw input_too_large("text of " + std::to_string(raw.size()) +
                                      " bytes exceeds the build cap; pass --force to override");
            text t = normalize(raw, sentinel_policy::append_if_missing, opt.sentinel_byte);
            auto bwt = bwt_from_text(t);
            return rlbwt_sequence::encode(bwt, t.byte_of);
        }
    }
    throw error("unreachable");
}

inline void run_build(const build_options& opt, std::ostream& log) {
    rlbwt_sequence seq = build_rlbwt(opt);
    std::ofstream out(opt.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + opt.output_path + " for writing");
    seq.serialize(out);
    out.flush();
    if (!out) throw io_error("write failed on " + opt.output_path);
    log << "n = " << seq.n() << "\nr = " << seq.r() << "\nsigma = " << seq.sigma() << "\n";
}

enum class enum_kind { mr, mus, maw };

struct enumerate_options {
    enum_kind kind = enum_kind::mr;
    std::string index_path;
    bool extended = false;
    bool with_strings = false;
    bool with_occ = false;
    bool sort_occ = false;
    unsigned threads = 1;
};

namespace detail {

inline std::string recover_string(const support_index& ix, interval iv, std::uint64_t len) {
    std::string bytes;
    for (sym_t c : extract(ix, iv, len)) bytes.push_back(static_cast<char>(ix.byte_of(c)));
    return escape_bytes(bytes);
}

inline void append_occ(const support_index& ix, interval iv, pos_t sa_b, bool sorted,
                       std::string& line) {
    auto occ = extract_sa(ix, iv, sa_b);
    if (sorted) std::sort(occ.begin(), occ.end());
    line.push_back('\t');
    for (std::size_t i = 0; i < occ.size(); ++i) {
        if (i) line.push_back(',');
        line += std::to_string(occ[i]);
    }
}

}  // namespace detail

inline std::uint64_t run_enumerate(const enumerate_options& opt, std::ostream& out) {
    if (opt.with_occ && !opt.extended)
        throw flag_conflict("--with-occ needs --extended (occurrence recovery starts from SA[b])");
    if (opt.with_occ && opt.kind == enum_kind::maw)
        throw flag_conflict("minimal absent words have no occurrences to recover");

    support_index ix = support_index::build(load_rlbwt(opt.index_path));
    enum_options eopt{opt.extended, opt.threads};

    std::string header;
    switch (opt.kind) {
        case enum_kind::mr: header = "#depth\tb\te\tocc_count"; break;
        case enum_kind::mus: header = "#length\tb"; break;
        case enum_kind::maw: header = "#length\tb\te\tabsent"; break;
    }
    if (opt.extended) header += "\tsa_first";
    if (opt.with_strings) header += "\tstring";
    if (opt.with_occ) header += "\tocc_positions";
    out << header << '\n';

    enum_summary sum;
    switch (opt.kind) {
        case enum_kind::mr:
            sum = maximal_repeats(ix, eopt, [&](const auto& rec) {
                std::string line = std::to_string(rec.repr.depth) + '\t' +
                                   std::to_string(rec.repr.iv.b) + '\t' +
                                   std::to_string(rec.repr.iv.e) + '\t' +
                                   std::to_string(rec.occurrences);
                auto sa = renum::detail::node_sa(rec.repr);
                if (opt.extended) line += '\t' + std::to_string(*sa);
                if (opt.with_strings)
                    line += '\t' + detail::recover_string(ix, rec.repr.iv, rec.repr.depth);
                if (opt.with_occ) detail::append_occ(ix, rec.repr.iv, *sa, opt.sort_occ, line);
                out << line << '\n';
            });
            break;
        case enum_kind::mus:
            sum = minimal_unique_substrings(ix, eopt, [&](const mus_record& rec) {
                std::string line = std::to_string(rec.length) + '\t' + std::to_string(rec.iv.b);
                if (opt.extended) line += '\t' + std::to_string(*rec.sa_first);
                if (opt.with_strings) line += '\t' + detail::recover_string(ix, rec.iv, rec.length);
                if (opt.with_occ) detail::append_occ(ix, rec.iv, *rec.sa_first, opt.sort_occ, line);
                out << line << '\n';
            });
            break;
        case enum_kind::maw:
            sum = minimal_absent_words(ix, eopt, [&](const maw_record& rec) {
                std::string line = std::to_string(rec.length) + '\t' + std::to_string(rec.iv.b) +
                                   '\t' + std::to_string(rec.iv.e) + '\t' +
                                   std::to_string(+ix.byte_of(rec.absent_next));
                if (opt.extended) line += '\t' + std::to_string(*rec.sa_first);
                if (opt.with_strings) {
                    std::string bytes;
                    for (sym_t c : extract(ix, rec.iv, rec.length))
                        bytes.push_back(static_cast<char>(ix.byte_of(c)));
                    bytes.push_back(static_cast<char>(ix.byte_of(rec.absent_next)));
                    line += '\t' + escape_bytes(bytes);
                }
                out << line << '\n';
            });
            break;
    }
    out << "#summary\trecords=" << sum.records << '\n';
    if (!out) throw io_error("write failed");
    return sum.records;
}

inline void run_stats(const std::string& index_path, std::ostream& out) {
    rlbwt_sequence seq = load_rlbwt(index_path);
    char ratio[64];
    std::snprintf(ratio, sizeof ratio, "%.6g",
                  static_cast<double>(seq.n()) / static_cast<double>(seq.r()));
    out << "n = " << seq.n() << "\nr = " << seq.r() << "\nsigma = " << seq.sigma()
        << "\nn/r = " << ratio << "\n";
}

inline void run_measure_delta(const std::string& index_path, unsigned threads, std::ostream& out) {
    support_index ix = support_index::build(load_rlbwt(index_path));
    rational d = delta(ix, traversal_options{threads});
    char val[64];
    std::snprintf(val, sizeof val, "%.10g", d.value());
    out << "delta = " << d.num << "/" << d.den << " = " << val << "\n";
}

inline void run_measure_lcp(const std::string& index_path, unsigned threads, std::ostream& out) {
    support_index ix = support_index::build(load_rlbwt(index_path));
    std::uint64_t reported = 0;
    lcp_value_sets(
        ix,
        [&](std::uint64_t t, const std::vector<pos_t>& positions) {
            if (positions.empty()) return;
            out << t << '\t';
            for (std::size_t i = 0; i < positions.size(); ++i) {
                if (i) out << ',';
                out << positions[i];
            }
            out << '\n';
            reported += positions.size();
        },
        traversal_options{threads});
    out << "#summary\tpositions=" << reported << "\tn=" << ix.n() << '\n';
}

}  // namespace renum::driver

#endif
