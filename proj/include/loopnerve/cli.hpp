#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "loopnerve/io.hpp"

namespace loopnerve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitTheorem = 2;
inline constexpr int kExitIo = 3;

inline constexpr std::uint64_t kDefaultSeed = 42;

enum class Command { Analyze, Verify, Sample, Spectrum, Export };

struct RunConfig {
    Command command = Command::Analyze;
    std::optional<std::string> input;
    /// Number of sampled instances for verify.
    std::optional<std::size_t> random;
    int n = 40;
    std::size_t count = 1000;
    std::uint64_t seed = kDefaultSeed;
    int min_gap = 0;
    bool oracle = false;
    bool swapped_delta = false;
    /// Empty selects the command's default format.
    std::string format;
    std::optional<std::string> output;
};

struct RankHistogram {
    std::map<std::size_t, std::size_t> bins;
    std::size_t total = 0;
    int n = 0;
    int min_gap = 0;
    std::uint64_t seed = 0;
};

/// h2_rank of `count` independent uniform pairs; pair i uses
/// derive_seed(seed, i).
RankHistogram rank_histogram(int n, std::size_t count, std::uint64_t seed, int min_gap);
Json histogram_json(const RankHistogram& h);
/// Relative frequencies with four decimals.
std::string histogram_text(const RankHistogram& h);

std::string summary_line(const NerveComplex& nerve, const HomologyResult& h);

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses the command line and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace loopnerve::cli
