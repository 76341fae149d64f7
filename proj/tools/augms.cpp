// Command line front end: build an index from FASTA or raw bytes, run
// MS/MEM queries against it, and benchmark the encoding variants.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "augms/bench.hpp"
#include "augms/fasta.hpp"
#include "augms/index.hpp"
#include "augms/io.hpp"
#include "augms/textgen.hpp"

namespace {

using namespace augms;

thr_encoding parse_encoding(const std::string& s) {
    auto e = encoding_from_string(s);
    if (!e) throw std::runtime_error("unknown encoding: " + s);
    return *e;
}

lce_kind parse_lce(const std::string& s) {
    if (s == "naive") return lce_kind::naive;
    if (s == "lcp-rmq") return lce_kind::lcp_rmq;
    throw std::runtime_error("unknown lce backend: " + s);
}

thr_storage parse_storage(const std::string& s) {
    if (s == "array") return thr_storage::array;
    if (s == "sigma-bv") return thr_storage::sigma_bv;
    throw std::runtime_error("unknown threshold storage: " + s);
}

void print_sections(const index_sections& sz) {
    std::cout << "bytes total " << sz.total() << " (header " << sz.header << ", rlbwt "
              << sz.rlbwt << ", thresholds " << sz.thresholds << ", thr-lce " << sz.thr_lce
              << ", lce " << sz.lce << ")\n";
}

int cmd_build(const std::string& in_path, const std::string& out_path, const std::string& enc,
              const std::string& lce, const std::string& storage, bool fasta, bool raw) {
    build_options opt;
    opt.encoding = parse_encoding(enc);
    opt.lce = parse_lce(lce);
    opt.storage = parse_storage(storage);

    auto bytes = read_build_input(in_path, fasta, raw);
    auto ix = build_index(text::build(bytes), opt);

    index_sections sz;
    save_index(ix, out_path, &sz);

    std::cout << "n " << ix.n() << "\n";
    std::cout << "r " << ix.r() << "\n";
    std::cout << "n/r " << std::fixed << std::setprecision(2)
              << static_cast<double>(ix.n()) / static_cast<double>(ix.r()) << "\n";
    print_sections(sz);
    return 0;
}

std::string format_ms(const matching_statistics& ms) {
    std::string line;
    for (u64 i = 1; i < ms.size(); ++i) {
        if (i > 1) line += ' ';
        if (ms[i].len == 0)
            line += "-:0";
        else
            line += std::to_string(ms[i].pos) + ":" + std::to_string(ms[i].len);
    }
    return line;
}

int cmd_query(const std::string& index_path, const std::string& patterns_path, bool want_ms,
              bool want_mems, u64 min_len, unsigned threads) {
    auto ix = load_index(index_path);
    auto patterns = read_patterns(patterns_path);
    if (patterns.empty()) throw std::runtime_error("no patterns in " + patterns_path);

    std::vector<std::string> out(patterns.size());
    auto work = [&](size_t from, size_t to) {
        for (size_t p = from; p < to; ++p) {
            query_stats st;
            auto ms = ix.query(patterns[p].data(), patterns[p].size(), ms_mode::augmented, st);
            if (want_ms) {
                out[p] = format_ms(ms);
            } else {
                std::string lines;
                for (const auto& m : extract_mems(ms, min_len))
                    lines += std::to_string(p + 1) + " " + std::to_string(m.i) + " " +
                             std::to_string(m.pos) + " " + std::to_string(m.len) + "\n";
                out[p] = lines;
            }
        }
    };

    if (threads <= 1) {
        work(0, patterns.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (patterns.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            size_t from = t * chunk;
            size_t to = std::min(patterns.size(), from + chunk);
            if (from >= to) break;
            pool.emplace_back(work, from, to);
        }
        for (auto& th : pool) th.join();
    }

    for (size_t p = 0; p < patterns.size(); ++p) {
        if (want_ms)
            std::cout << out[p] << "\n";
        else
            std::cout << out[p];
    }
    (void)want_mems;
    return 0;
}

int cmd_bench(const std::string& text_path, const std::string& patterns_path,
              const std::string& variants_arg, const std::string& lce_arg,
              const std::string& storage, const std::string& csv_path, u32 repeats,
              double mutate_rate, u64 seed, bool fasta, bool raw) {
    auto bytes = read_build_input(text_path, fasta, raw);
    auto patterns = read_patterns(patterns_path);
    if (patterns.empty()) throw std::runtime_error("no patterns in " + patterns_path);

    std::vector<thr_encoding> encs;
    if (variants_arg == "all") {
        encs = {thr_encoding::phoni,   thr_encoding::full,    thr_encoding::byte,
                thr_encoding::bv_full, thr_encoding::bv_byte, thr_encoding::dac,
                thr_encoding::bv_dac};
    } else {
        std::istringstream vs(variants_arg);
        std::string one;
        while (std::getline(vs, one, ',')) encs.push_back(parse_encoding(one));
        if (encs.empty()) throw std::runtime_error("empty variant list");
    }
    std::vector<lce_kind> backends;
    {
        std::istringstream ls(lce_arg);
        std::string one;
        while (std::getline(ls, one, ',')) backends.push_back(parse_lce(one));
        if (backends.empty()) throw std::runtime_error("empty lce backend list");
    }

    auto txt = text::build(std::move(bytes));
    if (mutate_rate > 0.0) {
        // Synthetic divergence: point-mutate patterns over the text alphabet.
        std::vector<u8> alpha;
        for (u8 c : txt.alphabet())
            if (c != SENTINEL && c != RECORD_SEP) alpha.push_back(c);
        std::mt19937_64 rng(seed);
        for (auto& p : patterns) p = mutate(std::move(p), mutate_rate, alpha, rng);
    }

    std::ofstream csv_file;
    std::ostream* csv = &std::cout;
    if (!csv_path.empty()) {
        csv_file.open(csv_path, std::ios::binary);
        if (!csv_file) throw std::runtime_error("cannot write " + csv_path);
        csv = &csv_file;
    }
    *csv << bench_csv_header() << "\n";

    for (auto lk : backends) {
        for (auto enc : encs) {
            build_options opt;
            opt.encoding = enc;
            opt.lce = lk;
            opt.storage = parse_storage(storage);
            auto ix = build_index(txt, opt);
            auto rec = run_bench(ix, patterns, repeats, ms_mode::augmented);
            write_bench_csv_row(*csv, rec);
        }
    }
    return 0;
}

int cmd_inspect(const std::string& index_path) {
    index_sections sz;
    auto ix = load_index(index_path, &sz);
    std::cout << "n " << ix.n() << "\n";
    std::cout << "r " << ix.r() << "\n";
    std::cout << "n/r " << std::fixed << std::setprecision(2)
              << static_cast<double>(ix.n()) / static_cast<double>(ix.r()) << "\n";
    std::cout << "encoding " << to_string(ix.encoding()) << "\n";
    std::cout << "lce " << (ix.lce.kind() == lce_kind::naive ? "naive" : "lcp-rmq") << "\n";
    std::cout << "thresholds "
              << (ix.thr.storage() == thr_storage::array ? "array" : "sigma-bv") << "\n";
    std::cout << "alphabet " << ix.rb.alphabet().size() << "\n";
    print_sections(sz);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "augms: run-length BWT index with matching statistics queries.\n"
        "FASTA input is folded to uppercase and records are joined with a\n"
        "reserved separator byte so matches never span records; raw input\n"
        "and plain-text patterns are taken verbatim."};
    app.require_subcommand(1);

    std::string in_path, out_path, index_path, patterns_path;
    std::string encoding = "full", lce = "naive", storage = "array";
    bool fasta = false, raw = false;

    auto* build = app.add_subcommand("build", "Build an index from FASTA or raw bytes");
    build->add_option("input", in_path, "FASTA or raw input file")->required();
    build->add_option("output", out_path, "Index file to write")->required();
    build->add_option("--encoding", encoding,
                      "Flank encoding: phoni|full|byte|bv-full|bv-byte|dac|bv-dac");
    build->add_option("--lce", lce, "LCE backend: naive|lcp-rmq");
    build->add_option("--thresholds", storage, "Threshold storage: array|sigma-bv");
    auto* bf = build->add_flag("--fasta", fasta, "Force FASTA parsing");
    auto* br = build->add_flag("--raw", raw, "Force raw-bytes parsing");
    bf->excludes(br);
    br->excludes(bf);

    bool want_ms = false, want_mems = false;
    u64 min_len = 1;
    unsigned threads = 1;
    auto* query = app.add_subcommand("query", "Run matching-statistics or MEM queries");
    query->add_option("index", index_path, "Index file")->required();
    query->add_option("patterns", patterns_path, "Patterns: FASTA or one per line")->required();
    auto* fm = query->add_flag("--ms", want_ms, "Print pos:len per pattern position");
    auto* fe = query->add_flag("--mems", want_mems, "Print maximal exact matches");
    fm->excludes(fe);
    fe->excludes(fm);
    query->add_option("--min-len", min_len, "Minimum MEM length (with --mems)");
    query->add_option("--threads", threads, "Worker threads for the query loop");

    std::string variants = "all", bench_lce = "naive", csv_path;
    u32 repeats = 1;
    double mutate_rate = 0.0;
    u64 seed = 1;
    auto* bench = app.add_subcommand("bench", "Build variants and benchmark the query loop");
    bench->add_option("text", in_path, "Text: FASTA or raw input file")->required();
    bench->add_option("patterns", patterns_path, "Patterns: FASTA or one per line")->required();
    bench->add_option("--variants", variants, "all or comma list of encodings");
    bench->add_option("--lce", bench_lce, "Comma list of backends: naive,lcp-rmq");
    bench->add_option("--thresholds", storage, "Threshold storage: array|sigma-bv");
    bench->add_option("--csv", csv_path, "Write CSV here instead of stdout");
    bench->add_option("--repeats", repeats, "Query-loop repetitions");
    bench->add_option("--mutate", mutate_rate, "Point-mutation rate applied to patterns");
    bench->add_option("--seed", seed, "Mutation RNG seed");
    auto* xf = bench->add_flag("--fasta", fasta, "Force FASTA parsing");
    auto* xr = bench->add_flag("--raw", raw, "Force raw-bytes parsing");
    xf->excludes(xr);
    xr->excludes(xf);

    auto* inspect = app.add_subcommand("inspect", "Print header and section sizes of an index");
    inspect->add_option("index", index_path, "Index file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(build))
            return cmd_build(in_path, out_path, encoding, lce, storage, fasta, raw);
        if (app.got_subcommand(query)) {
            if (!want_ms && !want_mems)
                throw CLI::ValidationError("query", "one of --ms or --mems is required");
            return cmd_query(index_path, patterns_path, want_ms, want_mems, min_len, threads);
        }
        if (app.got_subcommand(bench))
            return cmd_bench(in_path, patterns_path, variants, bench_lce, storage, csv_path,
                             repeats, mutate_rate, seed, fasta, raw);
        if (app.got_subcommand(inspect)) return cmd_inspect(index_path);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
