#pragma once

#include <map>
#include <vector>

#include "loopnerve/nerve.hpp"

namespace loopnerve {

/// A homology class of K^t present for death < t <= birth. Classes that
/// survive to t = 1 have death 0.
struct Bar {
    int dim = 0;
    int birth = 0;
    int death = 0;

    bool essential() const { return death == 0; }
    auto operator<=>(const Bar&) const = default;
};

struct FilteredHomology {
    int max_weight = 0;
    /// t -> (b0, b1, b2, b3) of K^t over the integers, for t = 1..max_weight.
    std::map<int, std::vector<std::size_t>> levels;
    /// Field-of-two persistence bars of the decreasing-weight filtration.
    std::vector<Bar> bars;
    /// Levels where integer and field-of-two Betti numbers differ.
    std::vector<int> disagreeing_levels;
};

/// Betti numbers of K^t over the integers.
std::vector<std::size_t> level_betti(const NerveComplex& nerve, int t);

/// Standard column reduction over GF(2), simplices ordered by decreasing
/// weight, then dimension, then position in K_d. Zero-length bars are dropped.
std::vector<Bar> persistence_bars(const NerveComplex& nerve);

/// Betti numbers at level t implied by a bar list.
std::vector<std::size_t> betti_from_bars(const std::vector<Bar>& bars, int t);

FilteredHomology persistence_spectrum(const NerveComplex& nerve);

}  // namespace loopnerve
