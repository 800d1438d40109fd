/*
   Copyright 2026 The oddball authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ODDBALL_EXACTALG_POLY_MATRIX_HPP
#define ODDBALL_EXACTALG_POLY_MATRIX_HPP

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "oddball/exactalg/laurent_poly.hpp"

namespace oddball {

/// Row-major matrix of Laurent polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;

    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {
        if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
    }

    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
        if (e_.size() != rows * cols) throw InvalidArgument("entry count does not match rows*cols");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<LaurentPoly>& entries() const { return e_; }

    /// Copy with column `j` replaced.
    PolyMatrix with_column(std::size_t j, const std::vector<LaurentPoly>& col) const {
        if (col.size() != rows_) throw InvalidArgument("column length mismatch");
        PolyMatrix m = *this;
        for (std::size_t i = 0; i < rows_; ++i) m(i, j) = col[i];
        return m;
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<LaurentPoly> e_;
};

/// Fraction-free (Bareiss) determinant of a square matrix over Z[R].
/// Every division in the elimination is exact; a failure raises NotDivisible.
inline IntPoly bareiss_det(std::vector<IntPoly> m, std::size_t n) {
    if (m.size() != n * n) throw InvalidArgument("entry count does not match n*n");
    if (n == 0) return IntPoly{1};
    auto at = [&](std::size_t i, std::size_t j) -> IntPoly& { return m[i * n + j]; };
    bool negate = false;
    IntPoly prev{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && at(r, k).is_zero()) ++r;
            if (r == n) return {};
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
            negate = !negate;
        }
        const IntPoly& pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                IntPoly t = IntPoly::mul_sub(pivot, at(i, j), at(i, k), at(k, j));
                at(i, j) = prev.size() == 1 && prev.coeffs()[0] == 1 ? std::move(t) : exact_div(t, prev);
            }
            at(i, k) = IntPoly{};
        }
        prev = pivot;
    }
    IntPoly d = std::move(at(n - 1, n - 1));
    return negate ? -d : d;
}

/// Determinant of a square Laurent-polynomial matrix. The lowest power of R
/// across all entries is factored out first so elimination runs in Z[R];
/// it is restored (times the dimension) at the end.
inline LaurentPoly bareiss_det(const PolyMatrix& m) {
    if (!m.is_square()) throw NonSquare("determinant of a " + std::to_string(m.rows()) + "x" +
                                        std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(IntPoly{1});
    long lowest = std::numeric_limits<long>::max();
    for (const auto& e : m.entries())
        if (!e.is_zero()) lowest = std::min(lowest, e.min_exponent());
    if (lowest == std::numeric_limits<long>::max()) return {};

    std::vector<IntPoly> cleared;
    cleared.reserve(n * n);
    for (const auto& e : m.entries()) cleared.push_back(e.shifted(-lowest).to_int_poly());
    IntPoly d = bareiss_det(std::move(cleared), n);
    return LaurentPoly(lowest * static_cast<long>(n), std::move(d));
}

} // namespace oddball

#endif // ODDBALL_EXACTALG_POLY_MATRIX_HPP
