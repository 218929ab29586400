#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "toric/geometry.hpp"
#include "toric/poly.hpp"
#include "toric/unipoly.hpp"
#include "toric/util.hpp"

namespace toric {

// The adjoined linear form f_{m+1} = u0 + sum_i u_i x_i with integer u_i.
// The reported reduction variable is t = ell(x) = (1/den) sum u_i x_i,
// realized by the substitution u0 = -den * t.
struct LinearForm {
    std::vector<Int> u;
    Int den = 1;

    static LinearForm from_rational(const std::vector<Rat>& lambda);
    bool all_zero() const {
        for (const auto& x : u)
            if (x != 0) return false;
        return true;
    }
};

// Deterministic enumeration of candidate forms: integer vectors without
// zero entries ordered by max-norm then digit order 1 < -1 < 2 < -2 < ...;
// falls over to a seeded pseudo-random choice past the magnitude bound
// 2^n n^|2n| max(M,1)^{2n}.
LinearForm pick_deterministic_u(int n, const Int& m_of_e, long attempt);

enum class ReductionForm { Full, Coordinate };

// Canny-Emiris style matrix for the supports Ebar: rows and columns are
// indexed by the lattice points of (sum of hulls) + delta; the row content
// comes from the lifted mixed subdivision. Exactly M(E) rows carry the
// linear form and the remaining S - M(E) rows carry the perturbation s.
struct ResultantMatrix {
    int m = 0;       // ambient dimension = number of system polynomials
    long size = 0;   // S
    Int u_rows = 0;  // M(E) by construction (verified against mixed_volume)
    std::vector<LPoint> cols;
    struct Row {
        int poly;     // 1..m, or m+1 for the linear form
        LPoint shift; // p - a
    };
    std::vector<Row> rows;
    std::vector<std::vector<long>> lifting;  // per support set, per point
    std::vector<Rat> delta;
    std::uint64_t seed = 0;

    // Entry patterns, fixed at build time: for f_i rows the (column,
    // coefficient) pairs where the entry is coeff + s; for u rows the
    // (column, u-index) pairs.
    struct CoeffEntry {
        long col;
        LPoint point;  // support point; the entry is coeff_i(point) + s
    };
    struct UEntry {
        long col;
        int u_index;  // 0 for u0
    };
    std::vector<std::vector<CoeffEntry>> coeff_entries;  // per row (empty for u rows)
    std::vector<std::vector<UEntry>> u_entries;          // per row (empty for f rows)

    // Resolve the coefficient entries against a system once; the result is
    // (column, base) pairs per row with entry = base + s.
    std::vector<std::vector<std::pair<long, Int>>> bind(const EngineSupports& sup) const;

    IntMatrix evaluate(const std::vector<std::vector<std::pair<long, Int>>>& bound,
                       const Int& s_val, const Int& u0_val, const std::vector<Int>& u_vals,
                       int pert_coord = -1, const Int& eps_val = Int(0)) const;
};

// Supports for the engine: the m system supports embedded into Z^m and
// augmented with {O, e_i}, plus E_{m+1} for the chosen form.
struct EngineSupports {
    SupportTuple ebar;
    std::vector<std::map<LPoint, Int>> coeffs;  // per poly, embedded support -> coefficient
    Int m_of_e;  // mixed volume of the augmented (E_1..E_m)
};
EngineSupports engine_supports(const PolySystem& f, ReductionForm kind, int coord);

ResultantMatrix build_matrix(const SupportTuple& ebar, std::uint64_t seed, int max_attempts = 12);

// Exact H(s, u0) = det M as a bivariate integer polynomial, stored as
// coefficients of s^k (each a polynomial in u0).
struct BivarPoly {
    std::vector<UniPoly> coeff_s;
    void normalize() {
        while (!coeff_s.empty() && coeff_s.back().is_zero()) coeff_s.pop_back();
    }
    bool is_zero() const {
        for (const auto& p : coeff_s)
            if (!p.is_zero()) return false;
        return true;
    }
    int lowest_s() const {
        for (std::size_t i = 0; i < coeff_s.size(); ++i)
            if (!coeff_s[i].is_zero()) return static_cast<int>(i);
        return -1;
    }
};

BivarPoly symbolic_determinant(const ResultantMatrix& mx, const EngineSupports& sup, const LinearForm& u);

// Lowest-s coefficient, primitive with positive leading coefficient.
UniPoly extract_h(const BivarPoly& h);

struct UnivariateReduction {
    UniPoly h;             // in t
    UniPoly square_free;   // square-free part of h
    std::vector<UniPolyQ> h_aux;  // h_1..h_n (Full form with recovery only)
    LinearForm form;
    ReductionForm kind = ReductionForm::Full;
    int coord = -1;
    long s_dim = 0;        // S
    Int m_of_e = 0;        // M(E) used by the matrix
    int lowest_s_order = 0;
    bool gamma_verified = false;  // F(gamma(theta)) = 0 for every rational root theta of h
    bool auto_form = false;
    int u_attempts = 0;
    std::uint64_t seed = 0;
};

struct ReductionOptions {
    std::uint64_t seed = 1;
    bool want_gamma = true;       // recover h_1..h_n (Full form)
    int max_u_attempts = 10;      // only when the form is auto-picked
    int max_build_attempts = 12;
};

UnivariateReduction univariate_reduction(const PolySystem& f, std::optional<LinearForm> u,
                                         const ReductionOptions& opt,
                                         ReductionForm kind = ReductionForm::Full, int coord = -1);

// Matrix dimensions only (no determinants): S and M(E) for the variant.
struct MatrixStats {
    long s_dim;
    Int m_of_e;
};
MatrixStats matrix_stats(const PolySystem& f, ReductionForm kind, int coord, std::uint64_t seed);

}  // namespace toric
