#include "loopnerve/verify.hpp"

#include <algorithm>

#include "loopnerve/chain_complex.hpp"
#include "loopnerve/homology.hpp"
#include "loopnerve/oracle.hpp"
#include "loopnerve/spectrum.hpp"

namespace loopnerve {

bool InstanceReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const auto& kv) { return !kv.second.gating || kv.second.failed() == 0; });
}

namespace {

class Recorder {
public:
    explicit Recorder(InstanceReport& report) : report_(report) {}

    void record(const std::string& name, bool ok, const std::string& detail = {}, bool gating = true) {
        CheckTally& t = report_.checks[name];
        t.gating = gating;
        ++t.total;
        if (ok) {
            ++t.passed;
        } else if (gating && report_.first_failure.empty()) {
            report_.first_failure = name + (detail.empty() ? "" : ": " + detail);
        }
    }

private:
    InstanceReport& report_;
};

bool spectrum_consistent(const NerveComplex& nerve, const FilteredHomology& spectrum,
                         const std::vector<std::size_t>& betti, std::string& detail) {
    if (spectrum.levels.empty() || spectrum.levels.begin()->first != 1) {
        detail = "no level t=1";
        return false;
    }
    std::vector<std::size_t> full(betti.begin(), betti.begin() + 4);
    if (spectrum.levels.at(1) != full) {
        detail = "level t=1 differs from unfiltered homology";
        return false;
    }
    for (const auto& [t, b] : spectrum.levels) {
        if (t >= 3 && (b[2] != 0 || b[3] != 0)) {
            detail = "b2 or b3 nonzero at t=" + std::to_string(t);
            return false;
        }
    }
    for (int t = 1; t < spectrum.max_weight; ++t) {
        const NerveComplex lower = nerve.filtered(t);
        const NerveComplex upper = nerve.filtered(t + 1);
        for (int d = 0; d <= upper.max_dimension(); ++d) {
            for (const Simplex& s : upper.simplices(d)) {
                if (!lower.contains(s.vertices)) {
                    detail = "K^" + std::to_string(t + 1) + " not contained in K^" + std::to_string(t);
                    return false;
                }
            }
        }
    }
    if (!spectrum.disagreeing_levels.empty()) {
        detail = "integer and field-of-two Betti numbers differ at t=" +
                 std::to_string(spectrum.disagreeing_levels.front());
        return false;
    }
    return true;
}

}  // namespace

InstanceReport verify_instance(const BiSecondaryStructure& r, const VerifyOptions& options) {
    InstanceReport report;
    Recorder rec(report);
    const NerveComplex nerve = build_nerve(r);

    const LemmaReport lemmas = verify_structure_lemmas(nerve);
    for (const LemmaCheck& c : lemmas.checks) rec.record(c.name, c.passed(), c.witness);

    for (std::size_t i = 0; i < nerve.loop_count(); ++i) {
        const LoopId id{static_cast<std::uint32_t>(i)};
        const bool is_t = nerve.owner(id) == Owner::T;
        if (!is_t && !options.swapped_delta) continue;
        const DeltaCertificate cert = delta_graph_exists(id, nerve);
        if (is_t) {
            rec.record(check::kDeltaT, cert.exists, "no delta graph around " + format_simplex(std::vector{id}, nerve));
            if (cert.exists) report.delta_certificates.emplace_back(id, cert.spanning_tree);
        } else {
            rec.record(check::kDeltaSwapped, cert.exists, {}, false);
        }
    }

    const ChainComplex cc = boundary_matrices(nerve, simplicial_order(nerve));
    rec.record(check::kBoundary, boundaries_compose_to_zero(cc));

    HomologyResult h;
    try {
        h = homology(cc);
        rec.record(check::kHomology, true);
    } catch (const TheoremViolation& e) {
        rec.record(check::kHomology, false, e.what());
        h = compute_homology(cc, true);
    }
    const long chi = euler_characteristic(nerve);
    rec.record(check::kEuler, static_cast<long>(h.betti[2]) == chi - 1,
               "b2=" + std::to_string(h.betti[2]) + " chi=" + std::to_string(chi));

    bool cycles = h.h2_generators.size() == h.betti[2];
    const SparseMatrix d2 = cc.boundary(2);
    for (const Chain& g : h.h2_generators) {
        const auto image = apply_boundary(d2, g);
        cycles = cycles && std::all_of(image.begin(), image.end(), [](const BigInt& x) { return x.is_zero(); });
    }
    rec.record(check::kGenerators, cycles);

    const FilteredHomology spectrum = persistence_spectrum(nerve);
    std::string detail;
    rec.record(check::kSpectrum, spectrum_consistent(nerve, spectrum, h.betti, detail), detail);

    if (options.oracle) {
        const std::string diff = oracle::compare_with_brute_force(nerve);
        rec.record(check::kOracleNerve, diff.empty(), diff);
        const auto rational = oracle::rational_betti(cc);
        rec.record(check::kOracleBetti, std::equal(rational.begin(), rational.end(), h.betti.begin()));

        bool invariant = true;
        const SimplicialOrder alternatives[] = {
            SimplicialOrder::post_order(nerve, SiblingOrder::RightToLeft),
            SimplicialOrder::random_extension(nerve, 1),
            SimplicialOrder::random_extension(nerve, 2),
        };
        for (const SimplicialOrder& order : alternatives) {
            const HomologyResult alt = compute_homology(boundary_matrices(nerve, order));
            invariant = invariant && order.is_compliant(nerve) && alt.betti == h.betti && alt.torsion == h.torsion;
        }
        rec.record(check::kOrderInvariance, invariant);
    }
    return report;
}

void VerifySummary::add(const InstanceReport& report) {
    ++instances;
    if (!report.passed()) ++failed_instances;
    for (const auto& [name, tally] : report.checks) {
        CheckTally& t = checks[name];
        t.gating = tally.gating;
        t.passed += tally.passed;
        t.total += tally.total;
    }
}

bool VerifySummary::passed() const { return failed_instances == 0; }

}  // namespace loopnerve
