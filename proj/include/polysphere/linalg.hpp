#ifndef POLYSPHERE_LINALG_HPP
#define POLYSPHERE_LINALG_HPP

// Exact Gauss-Jordan elimination over any field scalar (no pivot thresholds,
// so only meaningful for exact types such as Rational).

#include <optional>
#include <vector>

#include "polysphere/rational.hpp"

namespace polysphere {

template <typename Scalar>
struct RowEchelon {
    MatrixX<Scalar> reduced;            // reduced row echelon form
    std::vector<Eigen::Index> pivots;   // pivot column of each nonzero row
    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    RowEchelon<Scalar> out{a.eval(), {}};
    MatrixX<Scalar>& m = out.reduced;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r) {
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        m.row(pivot).swap(m.row(row));
        const Scalar inv = Scalar(1) / m(row, col);
        m.row(row) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r != row && m(r, col) != 0) {
                const Scalar factor = m(r, col);
                m.row(r) -= factor * m.row(row);
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
    return row_reduce(a).rank();
}

/// Columns form a basis of {x : a x = 0}.
template <typename Derived>
MatrixX<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    const auto rr = row_reduce(a);
    const Eigen::Index n = a.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto p : rr.pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    MatrixX<Scalar> basis(n, n - rr.rank());
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        VectorX<Scalar> v = VectorX<Scalar>::Zero(n);
        v(free) = Scalar(1);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            v(rr.pivots[r]) = -rr.reduced(static_cast<Eigen::Index>(r), free);
        basis.col(k++) = v;
    }
    return basis;
}

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                        const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
    aug << a, b;
    const auto rr = row_reduce(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols())
        return std::nullopt;
    VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        x(rr.pivots[r]) = rr.reduced(static_cast<Eigen::Index>(r), a.cols());
    return x;
}

/// Inverse of a square matrix, or nullopt when singular.
template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = a.rows();
    if (a.cols() != n)
        return std::nullopt;
    MatrixX<Scalar> aug(n, 2 * n);
    aug << a, MatrixX<Scalar>::Identity(n, n);
    const auto rr = row_reduce(aug);
    if (rr.rank() < n || rr.pivots[static_cast<std::size_t>(n - 1)] >= n)
        return std::nullopt;
    return MatrixX<Scalar>(rr.reduced.rightCols(n));
}

/// Greedy maximal linearly independent subset of the rows, in row order.
template <typename Derived>
std::vector<Eigen::Index> independent_rows(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    std::vector<Eigen::Index> picked;
    // Incremental echelon basis: each stored row has a leading 1 at `lead`.
    std::vector<VectorX<Scalar>> basis;
    std::vector<Eigen::Index> lead;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        VectorX<Scalar> v = a.row(i).transpose();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (v(lead[k]) != 0) {
                const Scalar f = v(lead[k]);
                v -= f * basis[k];
            }
        }
        Eigen::Index l = -1;
        for (Eigen::Index j = 0; j < v.size(); ++j) {
            if (v(j) != 0) {
                l = j;
                break;
            }
        }
        if (l < 0)
            continue;
        v /= Scalar(v(l));
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k](l) != 0) {
                const Scalar f = basis[k](l);
                basis[k] -= f * v;
            }
        }
        basis.push_back(v);
        lead.push_back(l);
        picked.push_back(i);
        if (static_cast<Eigen::Index>(picked.size()) == a.cols())
            break;
    }
    return picked;
}

}  // namespace polysphere

#endif  // POLYSPHERE_LINALG_HPP
