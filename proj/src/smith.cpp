#include "loopnerve/smith.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace loopnerve {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const BigInt& b = rhs(k, j);
                if (!b.is_zero()) out(i, j) += a * b;
            }
        }
    }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const BigInt& v : data_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
}

IntMatrix IntMatrix::column_range(std::size_t first, std::size_t last) const {
    IntMatrix out(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = first; j < last; ++j) out(i, j - first) = (*this)(i, j);
    }
    return out;
}

IntMatrix IntMatrix::row_range(std::size_t first, std::size_t last) const {
    IntMatrix out(last - first, cols_);
    for (std::size_t i = first; i < last; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i - first, j) = (*this)(i, j);
    }
    return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("row count mismatch in hconcat");
    IntMatrix out(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
    }
    return out;
}

IntMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
}

namespace {

// Elementary operations on A, mirrored on U, U^-1 (rows) and V, V^-1 (columns)
// so that U * M * V == A holds throughout.
class Reducer {
public:
    Reducer(IntMatrix a, bool transforms)
        : a_(std::move(a)), transforms_(transforms), m_(a_.rows()), n_(a_.cols()) {
        if (transforms_) {
            u_ = IntMatrix::identity(m_);
            u_inv_ = IntMatrix::identity(m_);
            v_ = IntMatrix::identity(n_);
            v_inv_ = IntMatrix::identity(n_);
        }
    }

    SmithForm run() {
        const std::size_t limit = std::min(m_, n_);
        std::size_t k = 0;
        for (; k < limit; ++k) {
            if (!place_pivot(k)) break;
            reduce_at(k);
        }
        SmithForm out;
        out.rank = k;
        for (std::size_t i = 0; i < k; ++i) out.diag.push_back(a_(i, i));
        out.has_transforms = transforms_;
        if (transforms_) {
            out.U = std::move(u_);
            out.V = std::move(v_);
            out.U_inv = std::move(u_inv_);
            out.V_inv = std::move(v_inv_);
        }
        return out;
    }

private:
    // Moves a least-magnitude nonzero entry of the trailing block to (k, k).
    bool place_pivot(std::size_t k) {
        std::size_t best_r = m_, best_c = n_;
        BigInt best;
        for (std::size_t j = k; j < n_; ++j) {
            for (std::size_t i = k; i < m_; ++i) {
                const BigInt& v = a_(i, j);
                if (v.is_zero()) continue;
                if (best_r == m_ || abs(v) < best) {
                    best = abs(v);
                    best_r = i;
                    best_c = j;
                    if (best == 1) goto found;
                }
            }
        }
        if (best_r == m_) return false;
    found:
        swap_rows(k, best_r);
        swap_cols(k, best_c);
        return true;
    }

    void reduce_at(std::size_t k) {
        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < m_; ++i) {
                if (a_(i, k).is_zero()) continue;
                const BigInt q = a_(i, k) / a_(k, k);
                if (!q.is_zero()) add_row(i, k, -q);
                if (!a_(i, k).is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < n_; ++j) {
                if (a_(k, j).is_zero()) continue;
                const BigInt q = a_(k, j) / a_(k, k);
                if (!q.is_zero()) add_col(j, k, -q);
                if (!a_(k, j).is_zero()) clean = false;
            }
            if (!clean) {
                move_smallest_line_entry(k);
                continue;
            }
            if (a_(k, k) < 0) negate_row(k);
            if (a_(k, k) == 1) return;
            if (auto row = non_divisible_row(k)) {
                add_row(k, *row, 1);
                continue;
            }
            return;
        }
    }

    // Swaps the least-magnitude nonzero entry of row k / column k into (k, k).
    void move_smallest_line_entry(std::size_t k) {
        std::size_t r = k, c = k;
        BigInt best = abs(a_(k, k));
        for (std::size_t i = k + 1; i < m_; ++i) {
            if (!a_(i, k).is_zero() && abs(a_(i, k)) < best) {
                best = abs(a_(i, k));
                r = i;
                c = k;
            }
        }
        for (std::size_t j = k + 1; j < n_; ++j) {
            if (!a_(k, j).is_zero() && abs(a_(k, j)) < best) {
                best = abs(a_(k, j));
                r = k;
                c = j;
            }
        }
        swap_rows(k, r);
        swap_cols(k, c);
    }

    std::optional<std::size_t> non_divisible_row(std::size_t k) const {
        const BigInt& p = a_(k, k);
        for (std::size_t i = k + 1; i < m_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j) {
                const BigInt& v = a_(i, j);
                if (!v.is_zero() && BigInt(v % p) != 0) return i;
            }
        }
        return std::nullopt;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n_; ++c) std::swap(a_(i, c), a_(j, c));
        if (!transforms_) return;
        for (std::size_t c = 0; c < m_; ++c) std::swap(u_(i, c), u_(j, c));
        for (std::size_t r = 0; r < m_; ++r) std::swap(u_inv_(r, i), u_inv_(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m_; ++r) std::swap(a_(r, i), a_(r, j));
        if (!transforms_) return;
        for (std::size_t r = 0; r < n_; ++r) std::swap(v_(r, i), v_(r, j));
        for (std::size_t c = 0; c < n_; ++c) std::swap(v_inv_(i, c), v_inv_(j, c));
    }

    // row_target += q * row_source
    void add_row(std::size_t target, std::size_t source, const BigInt& q) {
        for (std::size_t c = 0; c < n_; ++c) {
            const BigInt& s = a_(source, c);
            if (!s.is_zero()) a_(target, c) += q * s;
        }
        if (!transforms_) return;
        for (std::size_t c = 0; c < m_; ++c) {
            const BigInt& s = u_(source, c);
            if (!s.is_zero()) u_(target, c) += q * s;
        }
        for (std::size_t r = 0; r < m_; ++r) {
            const BigInt& t = u_inv_(r, target);
            if (!t.is_zero()) u_inv_(r, source) -= q * t;
        }
    }

    // col_target += q * col_source
    void add_col(std::size_t target, std::size_t source, const BigInt& q) {
        for (std::size_t r = 0; r < m_; ++r) {
            const BigInt& s = a_(r, source);
            if (!s.is_zero()) a_(r, target) += q * s;
        }
        if (!transforms_) return;
        for (std::size_t r = 0; r < n_; ++r) {
            const BigInt& s = v_(r, source);
            if (!s.is_zero()) v_(r, target) += q * s;
        }
        for (std::size_t c = 0; c < n_; ++c) {
            const BigInt& t = v_inv_(target, c);
            if (!t.is_zero()) v_inv_(source, c) -= q * t;
        }
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < n_; ++c) a_(i, c) = -a_(i, c);
        if (!transforms_) return;
        for (std::size_t c = 0; c < m_; ++c) u_(i, c) = -u_(i, c);
        for (std::size_t r = 0; r < m_; ++r) u_inv_(r, i) = -u_inv_(r, i);
    }

    IntMatrix a_;
    bool transforms_;
    std::size_t m_;
    std::size_t n_;
    IntMatrix u_, u_inv_, v_, v_inv_;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix m, bool with_transforms) {
    return Reducer(std::move(m), with_transforms).run();
}

bool verify_smith(const IntMatrix& m, const SmithForm& snf) {
    if (!snf.has_transforms) return false;
    if (snf.diag.size() != snf.rank) return false;
    for (std::size_t i = 0; i < snf.diag.size(); ++i) {
        if (snf.diag[i] <= 0) return false;
        if (i + 1 < snf.diag.size() && BigInt(snf.diag[i + 1] % snf.diag[i]) != 0) return false;
    }
    if (!(snf.U * m * snf.V == snf.diagonal_matrix(m.rows(), m.cols()))) return false;
    if (!(snf.U * snf.U_inv == IntMatrix::identity(m.rows()))) return false;
    if (!(snf.V * snf.V_inv == IntMatrix::identity(m.cols()))) return false;
    return true;
}

}  // namespace loopnerve
