#include "qhc/linear.hpp"

#include "qhc/error.hpp"

#include <utility>

namespace qhc {

Vector Matrix::operator*(const Vector& v) const
{
    if (v.size() != cols_)
        throw InputError("matrix-vector dimension mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero())
                out[r] += (*this)(r, c) * v[c];
    return out;
}

namespace {

struct Echelon {
    Matrix m;                      // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

// Reduces the first `ncols` columns of m to RREF (further columns ride along).
Echelon rref(Matrix m, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(sel, c), m(row, c));
        const FieldElement inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero())
                m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero())
                continue;
            const FieldElement factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero())
                    m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::vector<Vector> kernel_from(const Echelon& e, std::size_t ncols)
{
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free])
            continue;
        Vector v(ncols);
        v[free] = FieldElement(1L);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

LinearSolution linear_solve(const Matrix& A, const Vector& rhs, bool with_nullspace)
{
    if (rhs.size() != A.rows())
        throw InputError("right-hand side has " + std::to_string(rhs.size()) + " entries, matrix has " +
                         std::to_string(A.rows()) + " rows");
    Matrix aug(A.rows(), A.cols() + 1);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c)
            aug(r, c) = A(r, c);
        aug(r, A.cols()) = rhs[r];
    }
    const Echelon e = rref(std::move(aug), A.cols());

    LinearSolution out;
    bool consistent = true;
    for (std::size_t r = e.pivots.size(); r < A.rows(); ++r)
        if (!e.m(r, A.cols()).is_zero()) {
            consistent = false;
            break;
        }
    if (consistent) {
        Vector x(A.cols());
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            x[e.pivots[r]] = e.m(r, A.cols());
        out.solution = std::move(x);
    }
    if (with_nullspace)
        out.nullspace = kernel_from(e, A.cols());
    return out;
}

std::vector<Vector> nullspace(const Matrix& A)
{
    const Echelon e = rref(A, A.cols());
    return kernel_from(e, A.cols());
}

std::size_t rank(const Matrix& A) { return rref(A, A.cols()).pivots.size(); }

std::vector<Vector> row_space_basis(const Matrix& A)
{
    const Echelon e = rref(A, A.cols());
    std::vector<Vector> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        Vector row(A.cols());
        for (std::size_t c = 0; c < A.cols(); ++c)
            row[c] = e.m(r, c);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace qhc
