#pragma once

#include "qhc/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qhc {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over a Field. Entries default to zero.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector operator*(const Vector& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

struct LinearSolution {
    /// A particular solution, or nullopt when the system is inconsistent.
    std::optional<Vector> solution;
    /// Basis of the kernel of the coefficient matrix (filled on request).
    std::vector<Vector> nullspace;

    bool consistent() const noexcept { return solution.has_value(); }
};

/// Exact Gaussian elimination for A x = rhs. Free variables are set to zero
/// in the particular solution. Throws InputError on dimension mismatch.
LinearSolution linear_solve(const Matrix& A, const Vector& rhs, bool with_nullspace = false);

std::vector<Vector> nullspace(const Matrix& A);
std::size_t rank(const Matrix& A);

/// Nonzero rows of the reduced row echelon form of A.
std::vector<Vector> row_space_basis(const Matrix& A);

} // namespace qhc
