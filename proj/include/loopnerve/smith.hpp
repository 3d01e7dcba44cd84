#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "loopnerve/bigint.hpp"

namespace loopnerve {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    IntMatrix transposed() const;
    /// Columns [first, last) as a new matrix.
    IntMatrix column_range(std::size_t first, std::size_t last) const;
    /// Rows [first, last) as a new matrix.
    IntMatrix row_range(std::size_t first, std::size_t last) const;
    /// [this | rhs]; row counts must agree.
    IntMatrix hconcat(const IntMatrix& rhs) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// U * M * V = D with D diagonal, d_1 | d_2 | ... | d_rank, all positive.
/// U_inv and V_inv are the exact inverses, so U and V are unimodular.
struct SmithForm {
    /// Nonzero invariant factors.
    std::vector<BigInt> diag;
    std::size_t rank = 0;
    bool has_transforms = false;
    IntMatrix U;
    IntMatrix V;
    IntMatrix U_inv;
    IntMatrix V_inv;

    /// The diagonal matrix with the shape of the input.
    IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

/// Exact Smith normal form over the integers. Pivots on an entry of least
/// absolute value to limit coefficient growth.
SmithForm smith_normal_form(IntMatrix m, bool with_transforms = true);

/// Checks every defining property of a Smith form with transforms.
bool verify_smith(const IntMatrix& m, const SmithForm& snf);

}  // namespace loopnerve
