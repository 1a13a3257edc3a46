#ifndef POLYSPHERE_LP_HPP
#define POLYSPHERE_LP_HPP

// Dense two-phase primal simplex with Bland's rule. Exact when Scalar is an
// exact field type; Bland's rule guarantees termination without perturbation.

#include <stdexcept>
#include <string>
#include <vector>

#include "polysphere/rational.hpp"

namespace polysphere {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Maximize, Minimize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

template <typename Scalar>
struct LpConstraint {
    VectorX<Scalar> coeffs;
    Relation relation;
    Scalar bound;
};

/// Variables are free unless marked nonnegative.
template <typename Scalar>
class LpProblem {
  public:
    explicit LpProblem(Eigen::Index num_vars)
        : num_vars_(num_vars), objective_(VectorX<Scalar>::Zero(num_vars)), nonneg_(static_cast<std::size_t>(num_vars), false) {}

    Eigen::Index num_vars() const { return num_vars_; }

    LpProblem& maximize(VectorX<Scalar> c) { return set_objective(std::move(c), Sense::Maximize); }
    LpProblem& minimize(VectorX<Scalar> c) { return set_objective(std::move(c), Sense::Minimize); }

    LpProblem& set_objective(VectorX<Scalar> c, Sense sense) {
        check_size(c);
        objective_ = std::move(c);
        sense_ = sense;
        return *this;
    }

    LpProblem& add_constraint(VectorX<Scalar> coeffs, Relation rel, Scalar bound) {
        check_size(coeffs);
        constraints_.push_back({std::move(coeffs), rel, std::move(bound)});
        return *this;
    }

    LpProblem& set_nonnegative(Eigen::Index var, bool nonneg = true) {
        nonneg_.at(static_cast<std::size_t>(var)) = nonneg;
        return *this;
    }

    LpProblem& set_all_nonnegative() {
        std::fill(nonneg_.begin(), nonneg_.end(), true);
        return *this;
    }

    const VectorX<Scalar>& objective() const { return objective_; }
    Sense sense() const { return sense_; }
    const std::vector<LpConstraint<Scalar>>& constraints() const { return constraints_; }
    bool nonnegative(Eigen::Index var) const { return nonneg_[static_cast<std::size_t>(var)]; }

  private:
    void check_size(const VectorX<Scalar>& v) const {
        if (v.size() != num_vars_)
            throw std::invalid_argument("LP row has " + std::to_string(v.size()) + " coefficients, expected " +
                                        std::to_string(num_vars_));
    }

    Eigen::Index num_vars_;
    VectorX<Scalar> objective_;
    Sense sense_ = Sense::Maximize;
    std::vector<LpConstraint<Scalar>> constraints_;
    std::vector<bool> nonneg_;
};

template <typename Scalar>
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    VectorX<Scalar> point;  // empty unless optimal
    Scalar value{};

    bool optimal() const { return status == LpStatus::Optimal; }
};

namespace detail {

template <typename Scalar>
class SimplexTableau {
  public:
    // Rows 0..m-1: [A | b]; row m: reduced costs | -objective value.
    MatrixX<Scalar> t;
    std::vector<Eigen::Index> basis;

    Eigen::Index rows() const { return t.rows() - 1; }
    Eigen::Index cols() const { return t.cols() - 1; }

    void pivot(Eigen::Index r, Eigen::Index c) {
        const Scalar inv = Scalar(1) / t(r, c);
        t.row(r) *= inv;
        for (Eigen::Index i = 0; i < t.rows(); ++i) {
            if (i != r && t(i, c) != 0) {
                const Scalar f = t(i, c);
                t.row(i) -= f * t.row(r);
            }
        }
        basis[static_cast<std::size_t>(r)] = c;
    }

    // Minimizes; columns >= col_limit never enter. Returns false if unbounded.
    bool run(Eigen::Index col_limit) {
        const Eigen::Index m = rows();
        const Eigen::Index rhs = cols();
        for (;;) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < col_limit; ++j) {
                if (t(m, j) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                return true;
            Eigen::Index leave = -1;
            Scalar best;
            for (Eigen::Index i = 0; i < m; ++i) {
                if (t(i, enter) <= 0)
                    continue;
                Scalar ratio = t(i, rhs) / t(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace detail

template <typename Scalar>
LpSolution<Scalar> solve_lp(const LpProblem<Scalar>& p) {
    const Eigen::Index n = p.num_vars();
    const auto& cons = p.constraints();
    const Eigen::Index m = static_cast<Eigen::Index>(cons.size());

    // Column layout: structural columns (free variables split into +/- parts),
    // then one slack/surplus per inequality, then one artificial per row
    // that has no slack usable as an initial basic variable.
    std::vector<Eigen::Index> pos_col(static_cast<std::size_t>(n)), neg_col(static_cast<std::size_t>(n), -1);
    Eigen::Index ncols = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        pos_col[static_cast<std::size_t>(j)] = ncols++;
        if (!p.nonnegative(j))
            neg_col[static_cast<std::size_t>(j)] = ncols++;
    }
    const Eigen::Index structural = ncols;

    std::vector<Scalar> sign(static_cast<std::size_t>(m), Scalar(1));
    std::vector<Relation> rel(static_cast<std::size_t>(m));
    Eigen::Index slack_count = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto& c = cons[static_cast<std::size_t>(i)];
        Relation r = c.relation;
        if (c.bound < 0) {
            sign[static_cast<std::size_t>(i)] = Scalar(-1);
            if (r == Relation::LessEqual)
                r = Relation::GreaterEqual;
            else if (r == Relation::GreaterEqual)
                r = Relation::LessEqual;
        }
        rel[static_cast<std::size_t>(i)] = r;
        if (r != Relation::Equal)
            ++slack_count;
    }
    Eigen::Index art_count = 0;
    for (Eigen::Index i = 0; i < m; ++i)
        if (rel[static_cast<std::size_t>(i)] != Relation::LessEqual)
            ++art_count;

    const Eigen::Index art_begin = structural + slack_count;
    const Eigen::Index total = art_begin + art_count;

    detail::SimplexTableau<Scalar> tab;
    tab.t = MatrixX<Scalar>::Zero(m + 1, total + 1);
    tab.basis.assign(static_cast<std::size_t>(m), -1);

    Eigen::Index slack = structural;
    Eigen::Index art = art_begin;
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto& c = cons[static_cast<std::size_t>(i)];
        const Scalar s = sign[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < n; ++j) {
            const Scalar a = s * c.coeffs(j);
            tab.t(i, pos_col[static_cast<std::size_t>(j)]) = a;
            if (neg_col[static_cast<std::size_t>(j)] >= 0)
                tab.t(i, neg_col[static_cast<std::size_t>(j)]) = -a;
        }
        tab.t(i, total) = s * c.bound;
        switch (rel[static_cast<std::size_t>(i)]) {
            case Relation::LessEqual:
                tab.t(i, slack) = Scalar(1);
                tab.basis[static_cast<std::size_t>(i)] = slack++;
                break;
            case Relation::GreaterEqual:
                tab.t(i, slack++) = Scalar(-1);
                tab.t(i, art) = Scalar(1);
                tab.basis[static_cast<std::size_t>(i)] = art++;
                break;
            case Relation::Equal:
                tab.t(i, art) = Scalar(1);
                tab.basis[static_cast<std::size_t>(i)] = art++;
                break;
        }
    }

    LpSolution<Scalar> sol;

    // Phase 1: minimize the sum of artificials.
    if (art_count > 0) {
        for (Eigen::Index i = 0; i < m; ++i)
            if (tab.basis[static_cast<std::size_t>(i)] >= art_begin)
                tab.t.row(m) -= tab.t.row(i);
        for (Eigen::Index j = art_begin; j < total; ++j)
            tab.t(m, j) = Scalar(0);
        tab.run(total);
        if (tab.t(m, total) != 0) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Drive zero-valued artificials out of the basis; drop redundant rows.
        std::vector<Eigen::Index> keep;
        for (Eigen::Index i = 0; i < tab.rows(); ++i) {
            if (tab.basis[static_cast<std::size_t>(i)] < art_begin) {
                keep.push_back(i);
                continue;
            }
            Eigen::Index col = -1;
            for (Eigen::Index j = 0; j < art_begin; ++j) {
                if (tab.t(i, j) != 0) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) {
                tab.pivot(i, col);
                keep.push_back(i);
            }
        }
        if (static_cast<Eigen::Index>(keep.size()) < tab.rows()) {
            detail::SimplexTableau<Scalar> reduced;
            reduced.t.resize(static_cast<Eigen::Index>(keep.size()) + 1, total + 1);
            for (std::size_t k = 0; k < keep.size(); ++k) {
                reduced.t.row(static_cast<Eigen::Index>(k)) = tab.t.row(keep[k]);
                reduced.basis.push_back(tab.basis[static_cast<std::size_t>(keep[k])]);
            }
            reduced.t.row(static_cast<Eigen::Index>(keep.size())).setZero();
            tab = std::move(reduced);
        }
    }

    // Phase 2 on the original objective, as a minimization.
    const Scalar osign = p.sense() == Sense::Maximize ? Scalar(-1) : Scalar(1);
    VectorX<Scalar> cost = VectorX<Scalar>::Zero(total);
    for (Eigen::Index j = 0; j < n; ++j) {
        cost(pos_col[static_cast<std::size_t>(j)]) = osign * p.objective()(j);
        if (neg_col[static_cast<std::size_t>(j)] >= 0)
            cost(neg_col[static_cast<std::size_t>(j)]) = -osign * p.objective()(j);
    }
    const Eigen::Index mr = tab.rows();
    tab.t.row(mr).setZero();
    tab.t.row(mr).head(total) = cost.transpose();
    for (Eigen::Index i = 0; i < mr; ++i) {
        const Scalar cb = cost(tab.basis[static_cast<std::size_t>(i)]);
        if (cb != 0)
            tab.t.row(mr) -= cb * tab.t.row(i);
    }
    if (!tab.run(art_begin)) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    VectorX<Scalar> y = VectorX<Scalar>::Zero(total);
    for (Eigen::Index i = 0; i < mr; ++i)
        y(tab.basis[static_cast<std::size_t>(i)]) = tab.t(i, total);
    sol.status = LpStatus::Optimal;
    sol.point = VectorX<Scalar>::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        sol.point(j) = y(pos_col[static_cast<std::size_t>(j)]);
        if (neg_col[static_cast<std::size_t>(j)] >= 0)
            sol.point(j) -= y(neg_col[static_cast<std::size_t>(j)]);
    }
    sol.value = p.objective().dot(sol.point);
    return sol;
}

}  // namespace polysphere

#endif  // POLYSPHERE_LP_HPP
