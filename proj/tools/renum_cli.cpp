/*
 * renum: enumerate characteristic substrings of a text from its
 * run-length encoded BWT.
 *
 * Exit codes: 0 ok, 1 usage, 2 input/format error, 3 verification failure.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <renum/driver.hpp>
#include <renum/verify.hpp>

namespace {

unsigned threads_from_env() {
    const char* env = std::getenv("RENUM_THREADS");
    if (!env) return 1;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0 || v > 1024) return 1;
    return static_cast<unsigned>(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"characteristic-substring toolkit over run-length BWTs"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "build a .rlbwt index from text/BWT/rlbwt input");
    renum::driver::build_options bopt;
    std::string bformat = "text";
    build->add_option("input", bopt.input_path, "input file")->required();
    build->add_option("--format", bformat, "input format (text|bwt|rlbwt)")
        ->check(CLI::IsMember({"text", "bwt", "rlbwt"}));
    build->add_option("--output", bopt.output_path, "output .rlbwt path")->required();
    unsigned sentinel_val = 0;
    build->add_option("--sentinel", sentinel_val, "sentinel byte value (default 0)")
        ->check(CLI::Range(0u, 255u));
    build->add_option("--max-n", bopt.max_n, "text-mode size cap");
    build->add_flag("--force", bopt.force, "build past the size cap");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "enumerate mr|mus|maw records as TSV");
    renum::driver::enumerate_options eopt;
    eopt.threads = threads_from_env();
    std::string ekind, eout;
    enumerate->add_option("kind", ekind, "mr, mus or maw")
        ->required()
        ->check(CLI::IsMember({"mr", "mus", "maw"}));
    enumerate->add_option("index", eopt.index_path, ".rlbwt index file")->required();
    enumerate->add_flag("--extended", eopt.extended, "attach SA samples (toehold values)");
    enumerate->add_flag("--with-strings", eopt.with_strings, "recover the literal substrings");
    enumerate->add_flag("--with-occ", eopt.with_occ, "recover occurrence positions (needs --extended)");
    enumerate->add_flag("--sort-occ", eopt.sort_occ, "sort occurrences in text order");
    enumerate->add_option("--threads", eopt.threads, "level-parallel workers");
    enumerate->add_option("--output", eout, "write TSV here instead of stdout");

    // measure
    auto* measure = app.add_subcommand("measure", "compute delta or the LCP position sets");
    std::string mkind, mindex;
    unsigned mthreads = threads_from_env();
    measure->add_option("kind", mkind, "delta or lcp")
        ->required()
        ->check(CLI::IsMember({"delta", "lcp"}));
    measure->add_option("index", mindex, ".rlbwt index file")->required();
    measure->add_option("--threads", mthreads, "level-parallel workers");

    // stats
    auto* stats = app.add_subcommand("stats", "print n, r, sigma, n/r of an index");
    std::string sindex;
    stats->add_option("index", sindex, ".rlbwt index file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check the full pipeline against the oracle");
    std::string vtext;
    std::uint64_t vmax = 512;
    verify->add_option("text", vtext, "raw text file")->required();
    verify->add_option("--max-n", vmax, "largest admissible text length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*build) {
            bopt.format = bformat == "text"  ? renum::driver::input_format::text
                          : bformat == "bwt" ? renum::driver::input_format::bwt
                                             : renum::driver::input_format::rlbwt;
            bopt.sentinel_byte = static_cast<std::uint8_t>(sentinel_val);
            renum::driver::run_build(bopt, std::cout);
        } else if (*enumerate) {
            eopt.kind = ekind == "mr"    ? renum::driver::enum_kind::mr
                        : ekind == "mus" ? renum::driver::enum_kind::mus
                                         : renum::driver::enum_kind::maw;
            if (!eout.empty()) {
                std::ofstream out(eout, std::ios::binary | std::ios::trunc);
                if (!out) throw renum::io_error("cannot open " + eout + " for writing");
                renum::driver::run_enumerate(eopt, out);
            } else {
                renum::driver::run_enumerate(eopt, std::cout);
            }
        } else if (*measure) {
            if (mkind == "delta")
                renum::driver::run_measure_delta(mindex, mthreads, std::cout);
            else
                renum::driver::run_measure_lcp(mindex, mthreads, std::cout);
        } else if (*stats) {
            renum::driver::run_stats(sindex, std::cout);
        } else if (*verify) {
            if (!renum::driver::run_verify(vtext, vmax, 1, std::cout)) return 3;
        }
    } catch (const renum::flag_conflict& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const renum::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
