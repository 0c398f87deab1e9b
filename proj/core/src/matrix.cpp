#include "wdlab/matrix.hpp"

namespace wdlab {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(ScalarMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(row, p);
        m.scale_row(row, m(row, col).inverse());
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != row && !m(i, col).is_zero())
                m.add_row_multiple(i, row, -m(i, col));
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(ScalarMatrix m)
{
    return rref(m).size();
}

ScalarMatrix kernel_basis(const ScalarMatrix& m)
{
    ScalarMatrix r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j])
            free_cols.push_back(j);
    ScalarMatrix basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis(pivots[i], k) = -r(i, free_cols[k]);
    }
    return basis;
}

ScalarMatrix inverse(const ScalarMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    ScalarMatrix aug = ScalarMatrix::hstack(m, ScalarMatrix::identity(n));
    auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw std::domain_error("singular matrix");
    ScalarMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

ScalarMatrix left_inverse(const ScalarMatrix& b)
{
    // Rows of rref([B | I]) restricted to the pivot rows give L with L*B = I.
    const std::size_t n = b.rows(), k = b.cols();
    ScalarMatrix aug = ScalarMatrix::hstack(b, ScalarMatrix::identity(n));
    auto pivots = rref(aug);
    if (pivots.size() < k || (k > 0 && pivots[k - 1] != k - 1))
        throw std::domain_error("columns are not independent");
    ScalarMatrix l(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            l(i, j) = aug(i, k + j);
    return l;
}

PolyMatrix inverse(const PolyMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    LaurentPoly det = determinant(m);
    if (!det.is_unit())
        throw std::domain_error("matrix is not invertible over K[T^-1, T]: det = " + det.to_string());
    LaurentPoly det_inv = det.unit_inverse();
    PolyMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // inv(i, j) = (-1)^{i+j} minor(j, i) / det
            PolyMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j)
                    continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c)
                    if (c != i)
                        minor(rr, cc++) = m(r, c);
                ++rr;
            }
            LaurentPoly cof = determinant(minor) * det_inv;
            inv(i, j) = (i + j) % 2 == 0 ? cof : -cof;
        }
    return inv;
}

PolyMatrix to_poly(const ScalarMatrix& m)
{
    PolyMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = LaurentPoly(m(i, j));
    return r;
}

ScalarMatrix to_scalar(const PolyMatrix& m)
{
    ScalarMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).constant_value();
    return r;
}

bool is_constant(const PolyMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_constant())
                return false;
    return true;
}

}  // namespace wdlab
