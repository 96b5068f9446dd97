#include "schurcone/simplex.hpp"

#include <stdexcept>

namespace schurcone {

namespace {

// Dense phase-1 tableau: minimize the sum of artificial variables for
// A x + a = b, x >= 0, a >= 0. Columns 0..n-1 are the cone generators,
// n..n+m-1 the artificials, followed by the right-hand side.
class PhaseOneTableau {
public:
    PhaseOneTableau(const std::vector<std::vector<Rational>>& columns,
                    const std::vector<Rational>& target)
        : m_(target.size()), n_(columns.size()) {
        rows_.assign(m_, std::vector<Rational>(n_ + m_ + 1, Rational(0)));
        row_sign_.assign(m_, 1);
        for (size_t i = 0; i < m_; ++i) {
            const int sign = target[i] < 0 ? -1 : 1;
            row_sign_[i] = sign;
            for (size_t j = 0; j < n_; ++j) {
                if (columns[j].size() != m_)
                    throw std::invalid_argument("column size does not match target");
                rows_[i][j] = sign * columns[j][i];
            }
            rows_[i][n_ + i] = 1;
            rows_[i][n_ + m_] = sign * target[i];
        }
        // Reduced costs for cost 0 on real columns, 1 on artificials,
        // with the artificial basis: rc_j = -sum_i T[i][j].
        cost_.assign(n_ + m_ + 1, Rational(0));
        for (size_t j = 0; j < n_; ++j)
            for (size_t i = 0; i < m_; ++i) cost_[j] -= rows_[i][j];
        for (size_t i = 0; i < m_; ++i) cost_[n_ + m_] -= rows_[i][n_ + m_];
        basis_.resize(m_);
        for (size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    }

    void solve() {
        while (true) {
            // Bland: smallest improving column enters.
            size_t enter = n_ + m_;
            for (size_t j = 0; j < n_ + m_; ++j)
                if (cost_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == n_ + m_) return;  // optimal

            size_t leave = m_;
            for (size_t i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                if (leave == m_) {
                    leave = i;
                    continue;
                }
                const Rational lhs = rows_[i][n_ + m_] * rows_[leave][enter];
                const Rational rhs = rows_[leave][n_ + m_] * rows_[i][enter];
                if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == m_)
                throw std::logic_error("phase-1 objective unbounded");
            pivot(leave, enter);
        }
    }

    // Objective value at optimality: sum of artificial values.
    Rational objective() const {
        Rational obj(0);
        for (size_t i = 0; i < m_; ++i)
            if (basis_[i] >= n_) obj += rows_[i][n_ + m_];
        return obj;
    }

    std::vector<Rational> primal_solution() const {
        std::vector<Rational> x(n_, Rational(0));
        for (size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rows_[i][n_ + m_];
        return x;
    }

    // Farkas functional from the final artificial reduced costs:
    // y_i = 1 - rc(artificial i), undoing the row sign normalization.
    std::vector<Rational> dual_functional() const {
        std::vector<Rational> y(m_, Rational(0));
        for (size_t i = 0; i < m_; ++i)
            y[i] = row_sign_[i] * (Rational(1) - cost_[n_ + i]);
        return y;
    }

private:
    void pivot(size_t r, size_t c) {
        const Rational inv = Rational(1) / rows_[r][c];
        for (auto& v : rows_[r]) v *= inv;
        for (size_t i = 0; i < m_; ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            const Rational factor = rows_[i][c];
            for (size_t j = 0; j <= n_ + m_; ++j) rows_[i][j] -= factor * rows_[r][j];
        }
        if (cost_[c] != 0) {
            const Rational factor = cost_[c];
            for (size_t j = 0; j <= n_ + m_; ++j) cost_[j] -= factor * rows_[r][j];
        }
        basis_[r] = c;
    }

    size_t m_, n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> cost_;
    std::vector<size_t> basis_;
    std::vector<int> row_sign_;
};

}  // namespace

ConicResult conic_membership(const std::vector<std::vector<Rational>>& columns,
                             const std::vector<Rational>& target) {
    ConicResult result;
    PhaseOneTableau tableau(columns, target);
    tableau.solve();

    if (tableau.objective() == 0) {
        result.in_cone = true;
        result.coefficients = tableau.primal_solution();
        std::vector<Rational> check(target.size(), Rational(0));
        for (size_t j = 0; j < columns.size(); ++j) {
            if (result.coefficients[j] < 0)
                throw std::logic_error("simplex produced a negative coefficient");
            if (result.coefficients[j] == 0) continue;
            for (size_t i = 0; i < target.size(); ++i)
                check[i] += result.coefficients[j] * columns[j][i];
        }
        for (size_t i = 0; i < target.size(); ++i)
            if (check[i] != target[i])
                throw std::logic_error("simplex solution fails exact verification");
        return result;
    }

    result.in_cone = false;
    result.functional = tableau.dual_functional();
    Rational on_target(0);
    for (size_t i = 0; i < target.size(); ++i) on_target += result.functional[i] * target[i];
    if (on_target <= 0)
        throw std::logic_error("Farkas functional fails exact verification on target");
    for (size_t j = 0; j < columns.size(); ++j) {
        Rational on_col(0);
        for (size_t i = 0; i < target.size(); ++i) on_col += result.functional[i] * columns[j][i];
        if (on_col > 0)
            throw std::logic_error("Farkas functional fails exact verification on a column");
    }
    return result;
}

}  // namespace schurcone
