#include "cliquepack/simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace cliquepack {

namespace {

// Full-tableau simplex for  min c.x  s.t.  T.x = rhs, x >= 0,  starting from
// the given basic feasible basis. Bland's rule: entering = lowest-index
// negative reduced cost, leaving = lowest basis index among minimum ratios.
struct Tableau {
    Matrix rows;                 // m x n
    std::vector<Rational> rhs;   // m, kept >= 0
    std::vector<Rational> red;   // n reduced costs
    Rational objective = 0;      // current c_B . x_B
    std::vector<int> basis;      // m, variable index basic in each row

    size_t nrows() const { return rows.size(); }
    size_t ncols() const { return red.size(); }

    void pivot(size_t pr, size_t pc) {
        Rational inv = 1 / rows[pr][pc];
        for (auto& v : rows[pr]) v *= inv;
        rhs[pr] *= inv;
        for (size_t i = 0; i < nrows(); ++i) {
            if (i == pr || rows[i][pc] == 0) continue;
            Rational f = rows[i][pc];
            for (size_t j = 0; j < ncols(); ++j) rows[i][j] -= f * rows[pr][j];
            rhs[i] -= f * rhs[pr];
        }
        if (red[pc] != 0) {
            Rational f = red[pc];
            for (size_t j = 0; j < ncols(); ++j) red[j] -= f * rows[pr][j];
            objective += f * rhs[pr];
        }
        basis[pr] = static_cast<int>(pc);
    }

    // Returns false when the entering column is unbounded below.
    bool run() {
        for (;;) {
            size_t enter = ncols();
            for (size_t j = 0; j < ncols(); ++j)
                if (red[j] < 0) { enter = j; break; }
            if (enter == ncols()) return true;  // optimal

            size_t leave = nrows();
            Rational best;
            for (size_t i = 0; i < nrows(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rational ratio = rhs[i] / rows[i][enter];
                if (leave == nrows() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == nrows()) return false;  // unbounded
            pivot(leave, enter);
        }
    }
};

}  // namespace

FeasibilityOutcome solve_feasibility(const Matrix& A, const std::vector<Rational>& b) {
    const size_t m = b.size();
    const size_t n = m == 0 ? 0 : A.empty() ? 0 : A[0].size();
    if (A.size() != m) throw std::invalid_argument("solve_feasibility: shape mismatch");

    // Flip rows so the right-hand side is nonnegative.
    std::vector<int> flip(m, 1);
    Tableau t;
    t.rows.assign(m, std::vector<Rational>(n + m, Rational(0)));
    t.rhs.resize(m);
    t.basis.resize(m);
    for (size_t i = 0; i < m; ++i) {
        if (A[i].size() != n) throw std::invalid_argument("solve_feasibility: ragged matrix");
        flip[i] = b[i] < 0 ? -1 : 1;
        for (size_t j = 0; j < n; ++j) t.rows[i][j] = flip[i] * A[i][j];
        t.rows[i][n + i] = 1;  // artificial
        t.rhs[i] = flip[i] * b[i];
        t.basis[i] = static_cast<int>(n + i);
    }
    // Phase-one costs: artificials cost 1, so reduced cost of column j is
    // -sum of its entries; the objective starts at sum(rhs).
    t.red.assign(n + m, Rational(0));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < m; ++i) t.red[j] -= t.rows[i][j];
    for (size_t i = 0; i < m; ++i) t.objective += t.rhs[i];

    if (!t.run()) throw std::logic_error("phase-one unbounded");  // cannot happen: cost >= 0

    FeasibilityOutcome out;
    if (t.objective > 0) {
        out.feasible = false;
        // Simplex multipliers: y_i = cost(artificial i) - reduced cost(artificial i).
        // At optimality y^T (DA) <= 0 and y^T (Db) > 0, so -D.y is the certificate.
        out.certificate.resize(m);
        for (size_t i = 0; i < m; ++i) out.certificate[i] = -flip[i] * (1 - t.red[n + i]);
    } else {
        out.feasible = true;
        out.solution.assign(n, Rational(0));
        for (size_t i = 0; i < m; ++i)
            if (t.basis[i] < static_cast<int>(n)) out.solution[t.basis[i]] = t.rhs[i];
    }
    return out;
}

bool verify_outcome(const Matrix& A, const std::vector<Rational>& b,
                    const FeasibilityOutcome& outcome) {
    const size_t m = b.size();
    if (A.size() != m) return false;
    const size_t n = m == 0 ? 0 : A[0].size();
    if (outcome.feasible) {
        if (outcome.solution.size() != n) return false;
        for (const auto& v : outcome.solution)
            if (v < 0) return false;
        for (size_t i = 0; i < m; ++i) {
            Rational acc = 0;
            for (size_t j = 0; j < n; ++j) acc += A[i][j] * outcome.solution[j];
            if (acc != b[i]) return false;
        }
        return true;
    }
    if (outcome.certificate.size() != m) return false;
    Rational yb = 0;
    for (size_t i = 0; i < m; ++i) yb += outcome.certificate[i] * b[i];
    if (yb >= 0) return false;
    for (size_t j = 0; j < n; ++j) {
        Rational ya = 0;
        for (size_t i = 0; i < m; ++i) ya += outcome.certificate[i] * A[i][j];
        if (ya < 0) return false;
    }
    return true;
}

LpResult lp_maximize(const std::vector<Rational>& c, const Matrix& A_ub,
                     const std::vector<Rational>& b_ub, bool unit_upper_bounds) {
    const size_t n = c.size();
    const size_t p = A_ub.size();
    if (b_ub.size() != p) throw std::invalid_argument("lp_maximize: shape mismatch");
    for (const auto& v : b_ub)
        if (v < 0) throw std::invalid_argument("lp_maximize: negative right-hand side");

    const size_t m = p + (unit_upper_bounds ? n : 0);
    Tableau t;
    t.rows.assign(m, std::vector<Rational>(n + m, Rational(0)));
    t.rhs.assign(m, Rational(0));
    t.basis.resize(m);
    for (size_t i = 0; i < p; ++i) {
        if (A_ub[i].size() != n) throw std::invalid_argument("lp_maximize: ragged matrix");
        for (size_t j = 0; j < n; ++j) t.rows[i][j] = A_ub[i][j];
        t.rhs[i] = b_ub[i];
    }
    if (unit_upper_bounds)
        for (size_t j = 0; j < n; ++j) {
            t.rows[p + j][j] = 1;
            t.rhs[p + j] = 1;
        }
    for (size_t i = 0; i < m; ++i) {
        t.rows[i][n + i] = 1;  // slack
        t.basis[i] = static_cast<int>(n + i);
    }
    t.red.assign(n + m, Rational(0));
    for (size_t j = 0; j < n; ++j) t.red[j] = -c[j];  // maximize c.x == minimize -c.x

    if (!t.run()) throw std::logic_error("lp_maximize: unbounded objective");

    LpResult r;
    r.optimum = -t.objective;
    r.solution.assign(n, Rational(0));
    for (size_t i = 0; i < m; ++i)
        if (t.basis[i] < static_cast<int>(n)) r.solution[t.basis[i]] = t.rhs[i];
    return r;
}

}  // namespace cliquepack
