#include "toric/resultant.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "toric/detmat.hpp"
#include "toric/simplex.hpp"

namespace toric {

LinearForm LinearForm::from_rational(const std::vector<Rat>& lambda) {
    LinearForm f;
    Int den(1);
    for (const auto& x : lambda) den = lcm(den, Int(x.get_den()));
    for (const auto& x : lambda) {
        Rat v = x * Rat(den);
        f.u.emplace_back(v.get_num());
    }
    f.den = den;
    if (f.all_zero()) throw input_error("linear form must be nonzero");
    return f;
}

LinearForm pick_deterministic_u(int n, const Int& m_of_e, long attempt) {
    // Digit order 1, -1, 2, -2, ...; vectors ordered by max-norm, then
    // digit-lexicographically, zero entries skipped by construction.
    Int mm = m_of_e < 1 ? Int(1) : m_of_e;
    Int bound = 1;
    for (int i = 0; i < n; ++i) bound *= 2;
    Int nn(n);
    Int npow = 1, mpow = 1;
    for (int i = 0; i < 2 * n; ++i) {
        npow *= nn;
        mpow *= mm;
    }
    bound *= npow * mpow;
    auto digit_value = [](long k) -> long {  // 0 -> 1, 1 -> -1, 2 -> 2, 3 -> -2, ...
        long mag = k / 2 + 1;
        return (k % 2 == 0) ? mag : -mag;
    };
    long count = 0;
    for (long r = 1; r <= 64; ++r) {
        if (Int(r) > bound) break;
        // Odometer over digits 0 .. 2r-1, keep vectors of exact max-norm r.
        std::vector<long> dig(static_cast<std::size_t>(n), 0);
        while (true) {
            bool has_r = false;
            for (long d : dig)
                if (d / 2 + 1 == r) has_r = true;
            if (has_r) {
                if (count == attempt) {
                    LinearForm f;
                    for (long d : dig) f.u.emplace_back(digit_value(d));
                    return f;
                }
                ++count;
            }
            int j = n - 1;
            while (j >= 0 && dig[static_cast<std::size_t>(j)] == 2 * r - 1) {
                dig[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
            dig[static_cast<std::size_t>(j)]++;
        }
        if (count > 2000000) break;
    }
    // Randomized fall-over, still a fixed function of the attempt index.
    Rng rng(0x7f4a7c15u ^ static_cast<std::uint64_t>(attempt));
    LinearForm f;
    long cap = 1000000;
    for (int i = 0; i < n; ++i) {
        long v = rng.int_in(1, cap);
        if (rng.below(2)) v = -v;
        f.u.emplace_back(v);
    }
    return f;
}

EngineSupports engine_supports(const PolySystem& f, ReductionForm kind, int coord) {
    const int m = f.m();
    const int n = f.n();
    if (m < n)
        throw degeneracy_error(
            "m < n: a nonempty zero set would have dimension >= 1, the reduction requires m >= n");
    std::vector<std::vector<LPoint>> sets;
    std::vector<std::map<LPoint, Int>> coeffs;
    for (int i = 0; i < m; ++i) {
        const SparsePoly& p = f.polys[static_cast<std::size_t>(i)];
        if (p.is_zero()) throw input_error("system contains the zero polynomial");
        std::vector<LPoint> s;
        std::map<LPoint, Int> cf;
        for (const auto& [ev, c] : p.terms()) {
            LPoint q(static_cast<std::size_t>(m), 0);
            for (int j = 0; j < n; ++j) q[static_cast<std::size_t>(j)] = ev[j];
            s.push_back(q);
            cf.emplace(q, c);
        }
        LPoint origin(static_cast<std::size_t>(m), 0);
        LPoint ei(static_cast<std::size_t>(m), 0);
        ei[static_cast<std::size_t>(i)] = 1;
        s.push_back(origin);
        s.push_back(ei);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        sets.push_back(std::move(s));
        coeffs.push_back(std::move(cf));
    }
    Int m_of_e = mixed_volume(SupportTuple(m, sets));
    std::vector<LPoint> elast;
    if (kind == ReductionForm::Full) {
        elast = simplex_support(m);
    } else {
        if (coord < 0 || coord >= m) throw input_error("coordinate form needs a coordinate index");
        elast.push_back(LPoint(static_cast<std::size_t>(m), 0));
        LPoint ej(static_cast<std::size_t>(m), 0);
        ej[static_cast<std::size_t>(coord)] = 1;
        elast.push_back(std::move(ej));
    }
    sets.push_back(std::move(elast));
    return EngineSupports{SupportTuple(m, std::move(sets)), std::move(coeffs), m_of_e};
}

namespace {

struct CellContent {
    int poly;     // 1-based, m+1 for the linear form
    LPoint point; // the vertex summand
};

// Locate the subdivision cell containing q and read off the row content.
// Returns nullopt when q is outside the Minkowski sum, throws FailedCell
// on a degeneracy that warrants a lifting retry.
struct FailedCell {};

std::optional<CellContent> row_content_at(const std::vector<std::vector<LPoint>>& sets,
                                          const std::vector<std::vector<long>>& lifting,
                                          const std::vector<Rat>& q) {
    const int m = static_cast<int>(q.size());
    const int k = static_cast<int>(sets.size());  // m + 1
    std::size_t nvar = 0;
    for (const auto& s : sets) nvar += s.size();
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(k + m), std::vector<Rat>(nvar, Rat(0)));
    std::vector<Rat> b(static_cast<std::size_t>(k + m));
    std::vector<Rat> cost(nvar);
    std::size_t col = 0;
    for (int i = 0; i < k; ++i) {
        for (std::size_t t = 0; t < sets[static_cast<std::size_t>(i)].size(); ++t, ++col) {
            a[static_cast<std::size_t>(i)][col] = 1;
            for (int j = 0; j < m; ++j)
                a[static_cast<std::size_t>(k + j)][col] = Rat(sets[static_cast<std::size_t>(i)][t][static_cast<std::size_t>(j)]);
            cost[col] = Rat(lifting[static_cast<std::size_t>(i)][t]);
        }
        b[static_cast<std::size_t>(i)] = 1;
    }
    for (int j = 0; j < m; ++j) b[static_cast<std::size_t>(k + j)] = q[static_cast<std::size_t>(j)];
    SimplexResult res = simplex_min(a, b, cost);
    if (res.status != SimplexResult::Status::Optimal) return std::nullopt;
    if (res.degenerate_basis || res.alternative_optima) throw FailedCell{};
    // Support sizes per set; the tight-cell identity sum(|C_i| - 1) = m
    // must hold for a generic lifting and shift.
    std::vector<std::vector<std::size_t>> supp(static_cast<std::size_t>(k));
    col = 0;
    for (int i = 0; i < k; ++i)
        for (std::size_t t = 0; t < sets[static_cast<std::size_t>(i)].size(); ++t, ++col)
            if (res.x[col] > 0) supp[static_cast<std::size_t>(i)].push_back(t);
    long dimsum = 0;
    for (int i = 0; i < k; ++i) dimsum += static_cast<long>(supp[static_cast<std::size_t>(i)].size()) - 1;
    if (dimsum != m) throw FailedCell{};
    for (int i = 0; i < k - 1; ++i)
        if (supp[static_cast<std::size_t>(i)].size() == 1)
            return CellContent{i + 1, sets[static_cast<std::size_t>(i)][supp[static_cast<std::size_t>(i)][0]]};
    if (supp[static_cast<std::size_t>(k - 1)].size() != 1) throw FailedCell{};
    return CellContent{k, sets[static_cast<std::size_t>(k - 1)][supp[static_cast<std::size_t>(k - 1)][0]]};
}

}  // namespace

ResultantMatrix build_matrix(const SupportTuple& ebar, std::uint64_t seed, int max_attempts) {
    const int m = ebar.dim;
    if (ebar.count() != m + 1) throw input_error("build_matrix needs m+1 supports in dimension m");
    std::vector<std::vector<LPoint>> msets(ebar.sets.begin(), ebar.sets.end() - 1);
    Int m_of_e = mixed_volume(SupportTuple(m, msets));
    if (m_of_e == 0)
        throw input_error("mixed volume of the system supports is zero; no linear-form rows exist");

    // Bounding box of the Minkowski sum.
    std::vector<long> lo(static_cast<std::size_t>(m), 0), hi(static_cast<std::size_t>(m), 0);
    for (const auto& s : ebar.sets) {
        std::vector<long> slo = s[0], shi = s[0];
        for (const auto& p : s)
            for (int j = 0; j < m; ++j) {
                slo[static_cast<std::size_t>(j)] = std::min(slo[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j)]);
                shi[static_cast<std::size_t>(j)] = std::max(shi[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j)]);
            }
        for (int j = 0; j < m; ++j) {
            lo[static_cast<std::size_t>(j)] += slo[static_cast<std::size_t>(j)];
            hi[static_cast<std::size_t>(j)] += shi[static_cast<std::size_t>(j)] + 1;  // +1 admits the delta shift
        }
    }

    static const long small_primes[] = {3, 5, 7, 11, 13, 17, 19};
    Rng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rng lift_rng = rng.derive(static_cast<std::uint64_t>(attempt));
        std::vector<std::vector<long>> lifting;
        for (const auto& s : ebar.sets) {
            std::vector<long> lv;
            lv.reserve(s.size());
            for (std::size_t t = 0; t < s.size(); ++t) lv.push_back(lift_rng.int_in(0, (1L << 20) - 1));
            lifting.push_back(std::move(lv));
        }
        std::vector<Rat> delta(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j)
            delta[static_cast<std::size_t>(j)] = make_rat(small_primes[j % 7] + 26 * attempt, 8209L);

        std::vector<LPoint> pts;
        std::vector<CellContent> contents;
        bool failed = false;
        LPoint cur(static_cast<std::size_t>(m));
        std::function<bool(int)> scan = [&](int j) -> bool {
            if (j == m) {
                std::vector<Rat> q(static_cast<std::size_t>(m));
                for (int i = 0; i < m; ++i) q[static_cast<std::size_t>(i)] = Rat(cur[static_cast<std::size_t>(i)]) - delta[static_cast<std::size_t>(i)];
                try {
                    auto rc = row_content_at(ebar.sets, lifting, q);
                    if (rc) {
                        pts.push_back(cur);
                        contents.push_back(*rc);
                    }
                } catch (const FailedCell&) {
                    return false;
                }
                return true;
            }
            for (long x = lo[static_cast<std::size_t>(j)]; x <= hi[static_cast<std::size_t>(j)]; ++x) {
                cur[static_cast<std::size_t>(j)] = x;
                if (!scan(j + 1)) return false;
            }
            return true;
        };
        if (!scan(0)) continue;

        Int u_rows = 0;
        for (const auto& c : contents)
            if (c.poly == m + 1) u_rows += 1;
        if (u_rows != m_of_e) continue;  // non-generic lifting; retry

        ResultantMatrix mx;
        mx.m = m;
        mx.size = static_cast<long>(pts.size());
        mx.u_rows = u_rows;
        mx.cols = pts;
        mx.lifting = lifting;
        mx.delta = delta;
        mx.seed = seed;
        std::map<LPoint, long> colindex;
        for (long i = 0; i < mx.size; ++i) colindex[pts[static_cast<std::size_t>(i)]] = i;
        for (std::size_t r = 0; r < pts.size(); ++r) {
            ResultantMatrix::Row row;
            row.poly = contents[r].poly;
            row.shift.resize(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j)
                row.shift[static_cast<std::size_t>(j)] = pts[r][static_cast<std::size_t>(j)] - contents[r].point[static_cast<std::size_t>(j)];
            mx.rows.push_back(row);
        }
        // Entry patterns; every monomial of x^shift * f_i must land on a column.
        mx.coeff_entries.resize(pts.size());
        mx.u_entries.resize(pts.size());
        bool pattern_ok = true;
        for (std::size_t r = 0; r < pts.size() && pattern_ok; ++r) {
            const auto& row = mx.rows[r];
            const auto& support = ebar.sets[static_cast<std::size_t>(row.poly - 1)];
            for (const auto& b : support) {
                LPoint target(static_cast<std::size_t>(m));
                for (int j = 0; j < m; ++j) target[static_cast<std::size_t>(j)] = row.shift[static_cast<std::size_t>(j)] + b[static_cast<std::size_t>(j)];
                auto it = colindex.find(target);
                if (it == colindex.end()) {
                    pattern_ok = false;
                    break;
                }
                if (row.poly == m + 1) {
                    int uidx = 0;
                    for (int j = 0; j < m; ++j)
                        if (b[static_cast<std::size_t>(j)] != 0) uidx = j + 1;
                    mx.u_entries[r].push_back({it->second, uidx});
                } else {
                    mx.coeff_entries[r].push_back({it->second, b});
                }
            }
        }
        if (!pattern_ok) continue;
        return mx;
    }
    throw degeneracy_error("degenerate lifting: no valid mixed subdivision found after retries");
}

std::vector<std::vector<std::pair<long, Int>>> ResultantMatrix::bind(const EngineSupports& sup) const {
    std::vector<std::vector<std::pair<long, Int>>> bound(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].poly > m) continue;
        const auto& cmap = sup.coeffs[static_cast<std::size_t>(rows[r].poly - 1)];
        for (const auto& e : coeff_entries[r]) {
            auto it = cmap.find(e.point);
            bound[r].emplace_back(e.col, it == cmap.end() ? Int(0) : it->second);
        }
    }
    return bound;
}

IntMatrix ResultantMatrix::evaluate(const std::vector<std::vector<std::pair<long, Int>>>& bound,
                                    const Int& s_val, const Int& u0_val, const std::vector<Int>& u_vals,
                                    int pert_coord, const Int& eps_val) const {
    IntMatrix a(static_cast<std::size_t>(size), std::vector<Int>(static_cast<std::size_t>(size), Int(0)));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].poly <= m) {
            for (const auto& e : bound[r]) a[r][static_cast<std::size_t>(e.first)] += e.second + s_val;
        } else {
            for (const auto& e : u_entries[r]) {
                Int v = (e.u_index == 0) ? u0_val : u_vals[static_cast<std::size_t>(e.u_index - 1)];
                if (e.u_index == pert_coord) v += eps_val;
                a[r][static_cast<std::size_t>(e.col)] += v;
            }
        }
    }
    return a;
}

}  // namespace toric

namespace {

UniPolyQ interpolate_nodes(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rat> coef = ys;  // Newton divided differences
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UniPolyQ p = UniPolyQ::constant(coef[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        // p = p*(x - xs[i]) + coef[i]
        std::vector<Rat> shifted(p.c.size() + 1, Rat(0));
        for (std::size_t k = 0; k < p.c.size(); ++k) {
            shifted[k + 1] += p.c[k];
            shifted[k] -= xs[i] * p.c[k];
        }
        UniPolyQ q(std::move(shifted));
        q = q + UniPolyQ::constant(coef[i]);
        p = std::move(q);
    }
    return p;
}

UniPoly to_int_poly(const UniPolyQ& p) {
    std::vector<Int> c;
    c.reserve(p.c.size());
    for (const auto& x : p.c) {
        if (x.get_den() != 1)
            throw degeneracy_error("interpolation produced non-integer coefficients");
        c.emplace_back(x.get_num());
    }
    return UniPoly(std::move(c));
}

using Bound = std::vector<std::vector<std::pair<long, Int>>>;

// det(M) at s fixed, interpolated over u0 nodes 0..du.
UniPoly u0_slice(const ResultantMatrix& mx, const Bound& bound, const std::vector<Int>& uvals,
                 const Int& s_val, long du, int pert = -1, const Int& eps = Int(0)) {
    std::vector<Rat> xs, ys;
    for (long b = 0; b <= du; ++b) {
        xs.emplace_back(b);
        ys.emplace_back(det_exact(mx.evaluate(bound, s_val, Int(b), uvals, pert, eps)));
    }
    return to_int_poly(interpolate_nodes(xs, ys));
}

BivarPoly bivar_det(const ResultantMatrix& mx, const Bound& bound, const std::vector<Int>& uvals,
                    int pert = -1, const Int& eps = Int(0)) {
    const long du = mx.u_rows.get_si();
    const long ds = mx.size - du;
    std::vector<UniPoly> per_s;  // u0-polynomials at s = 0..ds
    for (long a = 0; a <= ds; ++a) per_s.push_back(u0_slice(mx, bound, uvals, Int(a), du, pert, eps));
    BivarPoly out;
    long maxdeg = -1;
    for (const auto& p : per_s) maxdeg = std::max<long>(maxdeg, p.deg());
    std::vector<UniPolyQ> s_polys(static_cast<std::size_t>(maxdeg + 1));
    std::vector<Rat> xs;
    for (long a = 0; a <= ds; ++a) xs.emplace_back(a);
    for (long k = 0; k <= maxdeg; ++k) {
        std::vector<Rat> ys;
        for (long a = 0; a <= ds; ++a) ys.emplace_back(per_s[static_cast<std::size_t>(a)].coeff(static_cast<int>(k)));
        s_polys[static_cast<std::size_t>(k)] = interpolate_nodes(xs, ys);
    }
    long sdeg = -1;
    for (const auto& q : s_polys) sdeg = std::max<long>(sdeg, q.deg());
    out.coeff_s.assign(static_cast<std::size_t>(sdeg + 1), UniPoly());
    for (long j = 0; j <= sdeg; ++j) {
        std::vector<Int> c(static_cast<std::size_t>(maxdeg + 1), Int(0));
        for (long k = 0; k <= maxdeg; ++k) {
            Rat v = s_polys[static_cast<std::size_t>(k)].coeff(static_cast<int>(j));
            if (v.get_den() != 1) throw degeneracy_error("interpolation produced non-integer coefficients");
            c[static_cast<std::size_t>(k)] = Int(v.get_num());
        }
        out.coeff_s[static_cast<std::size_t>(j)] = UniPoly(std::move(c));
    }
    out.normalize();
    return out;
}

}  // namespace

BivarPoly symbolic_determinant(const ResultantMatrix& mx, const EngineSupports& sup, const LinearForm& u) {
    std::vector<Int> uvals = u.u;
    uvals.resize(static_cast<std::size_t>(mx.m), u.den);
    Bound bound = mx.bind(sup);
    BivarPoly h = bivar_det(mx, bound, uvals);
    if (h.is_zero())
        throw degeneracy_error(
            "determinant vanishes identically after perturbation; irrecoverable degeneracy");
    return h;
}

UniPoly extract_h(const BivarPoly& h) {
    int a0 = h.lowest_s();
    if (a0 < 0) throw input_error("extract_h of the zero polynomial");
    return h.coeff_s[static_cast<std::size_t>(a0)].primitive_part();
}

UnivariateReduction univariate_reduction(const PolySystem& f, std::optional<LinearForm> u_opt,
                                         const ReductionOptions& opt, ReductionForm kind, int coord) {
    const int m = f.m();
    const int n = f.n();
    EngineSupports sup = engine_supports(f, kind, coord);
    ResultantMatrix mx = build_matrix(sup.ebar, opt.seed, opt.max_build_attempts);
    Bound bound = mx.bind(sup);
    const long du = mx.u_rows.get_si();

    const bool auto_form = !u_opt.has_value() && kind == ReductionForm::Full;
    const int tries = auto_form ? opt.max_u_attempts : 1;
    std::string last_failure = "linear form rejected";
    for (int ua = 0; ua < tries; ++ua) {
        LinearForm u;
        if (kind == ReductionForm::Coordinate) {
            u.u.assign(static_cast<std::size_t>(m), Int(0));
            u.u[static_cast<std::size_t>(coord)] = 1;
            u.den = 1;
        } else if (u_opt) {
            u = *u_opt;
        } else {
            u = pick_deterministic_u(m, sup.m_of_e, ua);
        }
        std::vector<Int> uvals = u.u;
        uvals.resize(static_cast<std::size_t>(m), u.den);  // embedding coordinates for m > n

        // Generic fast path: the unperturbed determinant is already nonzero.
        UniPoly h_raw;
        int a0 = 0;
        bool fast = false;
        {
            UniPoly p0 = u0_slice(mx, bound, uvals, Int(0), du);
            if (!p0.is_zero()) {
                h_raw = p0;
                fast = true;
            }
        }
        std::vector<BivarPoly> slow_eps;  // per epsilon node (gamma, slow path)
        if (!fast) {
            BivarPoly b0 = bivar_det(mx, bound, uvals);
            if (b0.is_zero())
                throw degeneracy_error(
                    "determinant vanishes identically after perturbation; irrecoverable degeneracy");
            a0 = b0.lowest_s();
            h_raw = b0.coeff_s[static_cast<std::size_t>(a0)];
            slow_eps.push_back(std::move(b0));
        }

        UnivariateReduction red;
        red.form = u;
        red.kind = kind;
        red.coord = coord;
        red.s_dim = mx.size;
        red.m_of_e = mx.u_rows;
        red.lowest_s_order = a0;
        red.auto_form = auto_form;
        red.u_attempts = ua + 1;
        red.seed = opt.seed;
        red.h = h_raw.scale_arg(-u.den).primitive_part();
        red.square_free = square_free_part(red.h);
        red.gamma_verified = true;

        bool want_gamma = opt.want_gamma && kind == ReductionForm::Full;
        bool ok = true;
        if (want_gamma && red.square_free.deg() >= 1) {
            // Coordinate recovery: differentiate the determinant with respect
            // to u_i by interpolating an eps perturbation, then reduce the
            // quotient identities modulo the square-free part.
            UniPolyQ hq = UniPolyQ::from(h_raw);
            UniPolyQ hbq = UniPolyQ::from(square_free_part(h_raw));
            UniPolyQ w, vinv;
            try {
                w = divexact_q(hq.derivative() * hbq, hq);
                vinv = invert_mod(mod_q(w, hbq), hbq);
            } catch (const degeneracy_error&) {
                ok = false;
            }
            if (ok) {
                for (int i = 1; i <= n && ok; ++i) {
                    // epsilon-linear coefficient of the determinant at the
                    // same lowest s order.
                    UniPoly hi_raw;
                    if (fast) {
                        std::vector<UniPoly> slices;
                        for (long e = 0; e <= du; ++e)
                            slices.push_back(u0_slice(mx, bound, uvals, Int(0), du, i, Int(e)));
                        long maxd = -1;
                        for (const auto& s : slices) maxd = std::max<long>(maxd, s.deg());
                        std::vector<Rat> exs;
                        for (long e = 0; e <= du; ++e) exs.emplace_back(e);
                        std::vector<Int> c(static_cast<std::size_t>(std::max<long>(maxd + 1, 1)), Int(0));
                        for (long k = 0; k <= maxd; ++k) {
                            std::vector<Rat> ys;
                            for (long e = 0; e <= du; ++e) ys.emplace_back(slices[static_cast<std::size_t>(e)].coeff(static_cast<int>(k)));
                            UniPolyQ epoly = interpolate_nodes(exs, ys);
                            Rat v = epoly.coeff(1);
                            if (v.get_den() != 1) throw degeneracy_error("interpolation produced non-integer coefficients");
                            c[static_cast<std::size_t>(k)] = Int(v.get_num());
                        }
                        hi_raw = UniPoly(std::move(c));
                    } else {
                        std::vector<BivarPoly> per_eps;
                        per_eps.push_back(slow_eps[0]);
                        for (long e = 1; e <= du; ++e) per_eps.push_back(bivar_det(mx, bound, uvals, i, Int(e)));
                        int a_tri = per_eps[0].lowest_s();
                        for (const auto& bp : per_eps)
                            if (!bp.is_zero()) a_tri = std::min(a_tri, bp.lowest_s());
                        if (a_tri != a0) {
                            // the eps=0 slice vanishes at the trivariate
                            // valuation; this linear form is non-generic
                            ok = false;
                            break;
                        }
                        std::vector<UniPoly> slices;
                        for (const auto& bp : per_eps)
                            slices.push_back(a_tri < static_cast<int>(bp.coeff_s.size())
                                                 ? bp.coeff_s[static_cast<std::size_t>(a_tri)]
                                                 : UniPoly());
                        long maxd = -1;
                        for (const auto& s : slices) maxd = std::max<long>(maxd, s.deg());
                        std::vector<Rat> exs;
                        for (long e = 0; e <= du; ++e) exs.emplace_back(e);
                        std::vector<Int> c(static_cast<std::size_t>(std::max<long>(maxd + 1, 1)), Int(0));
                        for (long k = 0; k <= maxd; ++k) {
                            std::vector<Rat> ys;
                            for (long e = 0; e <= du; ++e) ys.emplace_back(slices[static_cast<std::size_t>(e)].coeff(static_cast<int>(k)));
                            UniPolyQ epoly = interpolate_nodes(exs, ys);
                            Rat v = epoly.coeff(1);
                            if (v.get_den() != 1) throw degeneracy_error("interpolation produced non-integer coefficients");
                            c[static_cast<std::size_t>(k)] = Int(v.get_num());
                        }
                        hi_raw = UniPoly(std::move(c));
                    }
                    try {
                        UniPolyQ pi = divexact_q(UniPolyQ::from(hi_raw) * hbq, hq);
                        UniPolyQ hi_u0 = mod_q(pi * vinv, hbq);
                        red.h_aux.push_back(hi_u0.scale_arg(Rat(-u.den)));
                    } catch (const degeneracy_error&) {
                        ok = false;
                    }
                }
            }
            if (ok) {
                // Exact spot-check: every rational root of h must map to a
                // point of the zero set when dim Z <= 0 holds.
                for (const auto& [theta, mult] : rational_roots(red.h)) {
                    (void)mult;
                    std::vector<Rat> pt;
                    for (int i = 0; i < n; ++i) pt.push_back(red.h_aux[static_cast<std::size_t>(i)].eval(theta));
                    for (const auto& poly : f.polys)
                        if (poly.evaluate(pt) != 0) {
                            red.gamma_verified = false;
                            break;
                        }
                    if (!red.gamma_verified) break;
                }
                if (!red.gamma_verified && f.zero_dim_assumed && auto_form && ua + 1 < tries) {
                    last_failure = "gamma check failed; linear form likely non-separating";
                    continue;
                }
            } else {
                if (auto_form && ua + 1 < tries) {
                    last_failure = "coordinate recovery degenerate for this linear form";
                    continue;
                }
                red.gamma_verified = false;
                red.h_aux.clear();
            }
        } else if (want_gamma) {
            red.h_aux.assign(static_cast<std::size_t>(n), UniPolyQ());
        }
        return red;
    }
    throw degeneracy_error("no usable linear form found: " + last_failure);
}

MatrixStats matrix_stats(const PolySystem& f, ReductionForm kind, int coord, std::uint64_t seed) {
    EngineSupports sup = engine_supports(f, kind, coord);
    ResultantMatrix mx = build_matrix(sup.ebar, seed);
    return MatrixStats{mx.size, mx.u_rows};
}

}  // namespace toric
