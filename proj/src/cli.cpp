#include "loopnerve/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "loopnerve/chain_complex.hpp"
#include "loopnerve/homology.hpp"
#include "loopnerve/sampler.hpp"
#include "loopnerve/spectrum.hpp"
#include "loopnerve/verify.hpp"

#ifndef LOOPNERVE_CORPUS_DIR
#define LOOPNERVE_CORPUS_DIR "corpus"
#endif

namespace loopnerve::cli {

namespace fs = std::filesystem;

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const StructureError& e) {
        err << "parse error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kExitParse;
    } catch (const TheoremViolation& e) {
        err << "theorem violation in dimension " << e.dimension() << ": " << e.what() << '\n';
        return kExitTheorem;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    }
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& content) {
    if (cfg.output) {
        write_file(*cfg.output, content);
    } else {
        out << content;
    }
}

BiSecondaryStructure require_input(const RunConfig& cfg) {
    if (!cfg.input) throw InputError(0, 0, "--input is required");
    return load_pair(*cfg.input);
}

struct Analysis {
    NerveComplex nerve;
    HomologyResult homology;
    FilteredHomology spectrum;
};

Analysis analyze(const BiSecondaryStructure& r) {
    Analysis a{build_nerve(r), {}, {}};
    a.homology = homology(boundary_matrices(a.nerve, simplicial_order(a.nerve)));
    a.spectrum = persistence_spectrum(a.nerve);
    return a;
}

std::vector<fs::path> corpus_files(const fs::path& input) {
    if (!fs::is_directory(input)) return {input};
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(input, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".bis") files.push_back(entry.path());
    }
    if (ec) throw IoError("cannot list " + input.string() + ": " + ec.message());
    std::sort(files.begin(), files.end());
    return files;
}

std::string certificate_text(const std::vector<Edge>& tree) {
    if (tree.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < tree.size(); ++i) {
        os << (i ? "," : "") << tree[i].first.value << '-' << tree[i].second.value;
    }
    return os.str();
}

}  // namespace

RankHistogram rank_histogram(int n, std::size_t count, std::uint64_t seed, int min_gap) {
    RankHistogram hist;
    hist.n = n;
    hist.min_gap = min_gap;
    hist.seed = seed;
    const UniformSampler sampler(n, min_gap);
    for (std::size_t i = 0; i < count; ++i) {
        const NerveComplex nerve = build_nerve(sample_pair(sampler, seed, i));
        const HomologyResult h = homology(boundary_matrices(nerve, simplicial_order(nerve)));
        ++hist.bins[h.h2_rank()];
        ++hist.total;
    }
    return hist;
}

Json histogram_json(const RankHistogram& h) {
    Json bins = Json::object();
    for (const auto& [rank, count] : h.bins) bins[std::to_string(rank)] = count;
    return Json{{"n", h.n}, {"min_gap", h.min_gap}, {"seed", h.seed}, {"total", h.total}, {"bins", bins}};
}

std::string histogram_text(const RankHistogram& h) {
    std::ostringstream os;
    os << "# n=" << h.n << " min_gap=" << h.min_gap << " seed=" << h.seed << " count=" << h.total << '\n';
    os << "rank count frequency\n";
    for (const auto& [rank, count] : h.bins) {
        const double freq = h.total ? static_cast<double>(count) / static_cast<double>(h.total) : 0.0;
        os << rank << ' ' << count << ' ' << std::fixed << std::setprecision(4) << freq << '\n';
    }
    return os.str();
}

std::string summary_line(const NerveComplex& nerve, const HomologyResult& h) {
    std::ostringstream os;
    os << "n=" << nerve.length() << " betti=(" << h.betti[0] << ',' << h.betti[1] << ',' << h.betti[2] << ','
       << h.betti[3] << ") h2_rank=" << h.h2_rank();
    return os.str();
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Analysis a = analyze(require_input(cfg));
        const std::string summary = summary_line(a.nerve, a.homology);
        if (cfg.format == "text") {
            emit(cfg, out, summary + "\n");
            return kExitOk;
        }
        emit(cfg, out, homology_json(a.nerve, a.homology, a.spectrum).dump(2) + "\n");
        (cfg.output ? out : err) << summary << '\n';
        return kExitOk;
    });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const VerifyOptions options{cfg.oracle, cfg.swapped_delta};
        VerifySummary summary;
        std::optional<BiSecondaryStructure> counterexample;
        std::string failure;

        auto consume = [&](const std::string& label, const BiSecondaryStructure& r, bool print_certificates) {
            const InstanceReport report = verify_instance(r, options);
            summary.add(report);
            if (print_certificates) {
                for (const auto& [center, tree] : report.delta_certificates) {
                    out << "delta " << label << " center=" << center.value << " tree=" << certificate_text(tree)
                        << '\n';
                }
            }
            if (!report.passed() && !counterexample) {
                counterexample = r;
                failure = label + ": " + report.first_failure;
            }
        };

        std::optional<std::size_t> random = cfg.random;
        std::optional<std::string> input = cfg.input;
        if (!input && !random) {
            input = LOOPNERVE_CORPUS_DIR;
            random = 100;
        }
        if (input) {
            for (const fs::path& file : corpus_files(*input)) {
                consume(file.filename().string(), load_pair(file), true);
            }
        }
        if (random) {
            const UniformSampler sampler(cfg.n, cfg.min_gap);
            for (std::size_t i = 0; i < *random; ++i) {
                consume("random[" + std::to_string(i) + "]", sample_pair(sampler, cfg.seed, i), false);
            }
        }

        for (const auto& [name, tally] : summary.checks) {
            out << std::left << std::setw(38) << name << ' ' << tally.passed << '/' << tally.total
                << (tally.gating ? "" : " (reported)") << '\n';
        }
        out << "instances=" << summary.instances << " failed=" << summary.failed_instances << '\n';

        if (counterexample) {
            const std::string path = cfg.output.value_or("counterexample.bis");
            write_file(path, format_bis(*counterexample));
            err << "check failed on " << failure << "\ncounterexample written to " << path << '\n';
            return kExitTheorem;
        }
        return kExitOk;
    });
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (cfg.count < 1) throw InputError(0, 0, "--count must be at least 1");
        if (cfg.n < 0 || cfg.min_gap < 0) throw InputError(0, 0, "--n and --min-gap must be nonnegative");
        const RankHistogram hist = rank_histogram(cfg.n, cfg.count, cfg.seed, cfg.min_gap);
        const std::string json = histogram_json(hist).dump(2) + "\n";
        if (cfg.output) {
            write_file(*cfg.output, json);
            out << histogram_text(hist);
        } else {
            out << (cfg.format == "json" ? json : histogram_text(hist));
        }
        return kExitOk;
    });
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Analysis a = analyze(require_input(cfg));
        if (cfg.format == "json") {
            const Json full = homology_json(a.nerve, a.homology, a.spectrum);
            emit(cfg, out, Json{{"levels", full["levels"]}, {"bars", full["bars"]}}.dump(2) + "\n");
            return kExitOk;
        }
        const std::string levels = "# t b0 b1 b2 b3\n" + levels_text(a.spectrum);
        const std::string bars = "# dim t_birth t_death\n" + bars_text(a.spectrum.bars);
        if (cfg.output) {
            write_file(*cfg.output, levels);
            write_file(*cfg.output + ".bars", bars);
        } else {
            out << levels << bars;
        }
        return kExitOk;
    });
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const NerveComplex nerve = build_nerve(require_input(cfg));
        if (cfg.format == "loops") {
            emit(cfg, out, loop_table_json(nerve).dump(2) + "\n");
        } else {
            emit(cfg, out, export_complex(nerve, simplicial_order(nerve)));
        }
        return kExitOk;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Loop nerve homology of bi-secondary RNA structures", "loopnerve"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::size_t random = 0;

    app.add_option("--input", cfg.input, ".bis or arc-list JSON file; a directory for verify");
    auto* random_opt = app.add_option("--random", random, "number of sampled instances (verify)");
    app.add_option("--n", cfg.n, "sequence length for sampling")->check(CLI::NonNegativeNumber);
    app.add_option("--count", cfg.count, "number of sampled pairs")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "master seed");
    app.add_option("--min-gap", cfg.min_gap, "minimum unpaired positions under an arc")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--oracle", cfg.oracle, "cross-check against brute-force oracles");
    app.add_flag("--swapped-delta", cfg.swapped_delta, "also check neighbor graphs around S-loops");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text", "complex", "loops"}));
    app.add_option("--output", cfg.output, "output path");

    const std::pair<const char*, Command> commands[] = {
        {"analyze", Command::Analyze}, {"verify", Command::Verify},   {"sample", Command::Sample},
        {"spectrum", Command::Spectrum}, {"export", Command::Export},
    };
    const char* help[] = {
        "homology of one structure pair",
        "run the structural and homological checks",
        "h2 rank histogram of uniform random pairs",
        "weight-filtered homology levels and bars",
        "write the nerve or the loop table",
    };
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        auto* sub = app.add_subcommand(commands[i].first, help[i]);
        sub->fallthrough();
        const Command c = commands[i].second;
        sub->callback([&cfg, c] { cfg.command = c; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    if (random_opt->count() > 0) cfg.random = random;

    switch (cfg.command) {
        case Command::Analyze: return cmd_analyze(cfg, out, err);
        case Command::Verify: return cmd_verify(cfg, out, err);
        case Command::Sample: return cmd_sample(cfg, out, err);
        case Command::Spectrum: return cmd_spectrum(cfg, out, err);
        case Command::Export: return cmd_export(cfg, out, err);
    }
    return kExitOk;
}

}  // namespace loopnerve::cli
