#pragma once

#include <map>
#include <string>
#include <vector>

#include "loopnerve/lemmas.hpp"
#include "loopnerve/structures.hpp"

namespace loopnerve {

struct VerifyOptions {
    /// Brute-force nerve, rational-rank Betti numbers and alternative
    /// linear extensions.
    bool oracle = false;
    /// Also run the neighbor-graph check around S-loops. Reported, never gating.
    bool swapped_delta = false;
};

struct CheckTally {
    std::size_t passed = 0;
    std::size_t total = 0;
    bool gating = true;

    std::size_t failed() const { return total - passed; }
};

struct InstanceReport {
    /// Check name -> (passed, total) within this instance.
    std::map<std::string, CheckTally> checks;
    /// Delta-graph certificates for T-loops: (center, spanning tree).
    std::vector<std::pair<LoopId, std::vector<Edge>>> delta_certificates;
    std::string first_failure;

    bool passed() const;
};

/// Runs every instance-level check on one bi-secondary structure.
InstanceReport verify_instance(const BiSecondaryStructure& r, const VerifyOptions& options);

/// Order-independent aggregate over instances.
struct VerifySummary {
    std::map<std::string, CheckTally> checks;
    std::size_t instances = 0;
    std::size_t failed_instances = 0;

    void add(const InstanceReport& report);
    bool passed() const;
};

namespace check {
inline constexpr const char* kDeltaT = "delta_graph_T";
inline constexpr const char* kDeltaSwapped = "delta_graph_S_swapped";
inline constexpr const char* kHomology = "homology_theorems";
inline constexpr const char* kBoundary = "boundary_squared_zero";
inline constexpr const char* kEuler = "euler_h2";
inline constexpr const char* kGenerators = "h2_generator_cycles";
inline constexpr const char* kSpectrum = "spectrum_filtration";
inline constexpr const char* kOracleNerve = "oracle_nerve";
inline constexpr const char* kOracleBetti = "oracle_betti";
inline constexpr const char* kOrderInvariance = "order_invariance";
}  // namespace check

}  // namespace loopnerve
