#include "toric/simplex.hpp"

#include <algorithm>

namespace toric {

namespace {

struct Tableau {
    std::size_t rows, cols;  // cols counts structural + artificial columns
    std::vector<std::vector<Rat>> t;  // rows x (cols + 1), last entry = rhs
    std::vector<std::size_t> basis;

    void pivot(std::size_t r, std::size_t c) {
        Rat inv = Rat(1) / t[r][c];
        for (auto& v : t[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rat f = t[i][c];
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }
};

// Returns false on unboundedness. Columns >= enter_limit never enter.
bool run_simplex(Tableau& tb, const std::vector<Rat>& cost, std::size_t enter_limit) {
    while (true) {
        // Reduced costs r_j = c_j - c_B . column_j; Bland: first negative.
        std::vector<Rat> y(tb.rows);
        for (std::size_t i = 0; i < tb.rows; ++i) y[i] = cost[tb.basis[i]];
        std::size_t enter = tb.cols;
        for (std::size_t j = 0; j < enter_limit; ++j) {
            bool is_basic = false;
            for (std::size_t i = 0; i < tb.rows; ++i)
                if (tb.basis[i] == j) { is_basic = true; break; }
            if (is_basic) continue;
            Rat rj = cost[j];
            for (std::size_t i = 0; i < tb.rows; ++i)
                if (tb.t[i][j] != 0) rj -= y[i] * tb.t[i][j];
            if (rj < 0) {
                enter = j;
                break;
            }
        }
        if (enter == tb.cols) return true;  // optimal
        std::size_t leave = tb.rows;
        Rat best;
        for (std::size_t i = 0; i < tb.rows; ++i) {
            if (tb.t[i][enter] <= 0) continue;
            Rat ratio = tb.t[i][tb.cols] / tb.t[i][enter];
            if (leave == tb.rows || ratio < best ||
                (ratio == best && tb.basis[i] < tb.basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == tb.rows) return false;  // unbounded
        tb.pivot(leave, enter);
    }
}

}  // namespace

SimplexResult simplex_min(const std::vector<std::vector<Rat>>& a,
                          const std::vector<Rat>& b,
                          const std::vector<Rat>& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    SimplexResult res;
    Tableau tb;
    tb.rows = m;
    tb.cols = n + m;  // structural + one artificial per row
    tb.t.assign(m, std::vector<Rat>(tb.cols + 1, Rat(0)));
    tb.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        int sgn = (b[i] < 0) ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) tb.t[i][j] = Rat(sgn) * a[i][j];
        tb.t[i][n + i] = 1;
        tb.t[i][tb.cols] = Rat(sgn) * b[i];
        tb.basis[i] = n + i;
    }
    // Phase 1: minimize the sum of artificials.
    std::vector<Rat> cost1(tb.cols, Rat(0));
    for (std::size_t j = n; j < tb.cols; ++j) cost1[j] = 1;
    run_simplex(tb, cost1, tb.cols);  // phase 1 is always bounded
    Rat phase1 = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (tb.basis[i] >= n) phase1 += tb.t[i][tb.cols];
    if (phase1 != 0) {
        res.status = SimplexResult::Status::Infeasible;
        return res;
    }
    // Drive leftover artificials out of the basis (or drop redundant rows).
    std::vector<bool> live(m, true);
    for (std::size_t i = 0; i < m; ++i) {
        if (tb.basis[i] < n) continue;
        std::size_t piv = n;
        for (std::size_t j = 0; j < n; ++j)
            if (tb.t[i][j] != 0) { piv = j; break; }
        if (piv == n) {
            live[i] = false;  // redundant constraint
            continue;
        }
        tb.pivot(i, piv);
    }
    if (std::count(live.begin(), live.end(), false) > 0) {
        // Rebuild tableau without dead rows.
        Tableau nb;
        nb.cols = tb.cols;
        for (std::size_t i = 0; i < m; ++i) {
            if (!live[i]) continue;
            nb.t.push_back(tb.t[i]);
            nb.basis.push_back(tb.basis[i]);
        }
        nb.rows = nb.t.size();
        tb = std::move(nb);
    }
    // Phase 2: artificials pinned out by a prohibitive cost on re-entry.
    std::vector<Rat> cost2(tb.cols, Rat(0));
    for (std::size_t j = 0; j < n; ++j) cost2[j] = c[j];
    if (!run_simplex(tb, cost2, n)) {
        res.status = SimplexResult::Status::Unbounded;
        return res;
    }
    res.status = SimplexResult::Status::Optimal;
    res.x.assign(n, Rat(0));
    res.degenerate_basis = false;
    for (std::size_t i = 0; i < tb.rows; ++i) {
        if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.t[i][tb.cols];
        if (tb.t[i][tb.cols] == 0) res.degenerate_basis = true;
    }
    res.objective = 0;
    for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
    // Alternative optima: a nonbasic structural column with zero reduced cost.
    std::vector<Rat> y(tb.rows);
    for (std::size_t i = 0; i < tb.rows; ++i) y[i] = cost2[tb.basis[i]];
    res.alternative_optima = false;
    for (std::size_t j = 0; j < n; ++j) {
        bool is_basic = false;
        for (std::size_t i = 0; i < tb.rows; ++i)
            if (tb.basis[i] == j) { is_basic = true; break; }
        if (is_basic) continue;
        Rat rj = cost2[j];
        for (std::size_t i = 0; i < tb.rows; ++i)
            if (tb.t[i][j] != 0) rj -= y[i] * tb.t[i][j];
        if (rj == 0) {
            res.alternative_optima = true;
            break;
        }
    }
    return res;
}

}  // namespace toric
