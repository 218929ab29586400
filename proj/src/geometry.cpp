#include "toric/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "toric/simplex.hpp"

namespace toric {

namespace {

bool qless(const QPoint& a, const QPoint& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

std::vector<QPoint> dedupe(std::vector<QPoint> pts) {
    std::sort(pts.begin(), pts.end(), qless);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Is q in the convex hull of pts? Exact LP feasibility.
bool in_hull_lp(const std::vector<QPoint>& pts, const QPoint& q) {
    if (pts.empty()) return false;
    const std::size_t n = pts.size();
    const std::size_t d = q.size();
    std::vector<std::vector<Rat>> a(d + 1, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = pts[j][i];
        b[i] = q[i];
    }
    for (std::size_t j = 0; j < n; ++j) a[d][j] = 1;
    b[d] = 1;
    std::vector<Rat> c(n, Rat(0));
    return simplex_min(a, b, c).status == SimplexResult::Status::Optimal;
}

std::vector<QPoint> extreme_filter_lp(const std::vector<QPoint>& pts) {
    std::vector<QPoint> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<QPoint> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_hull_lp(others, pts[i])) out.push_back(pts[i]);
    }
    return out;
}

Rat cross2(const QPoint& o, const QPoint& a, const QPoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone chain; returns hull vertices in counterclockwise order,
// collinear points dropped. Input must be deduped/sorted.
std::vector<QPoint> hull_2d_ccw(std::vector<QPoint> pts) {
    std::sort(pts.begin(), pts.end(), qless);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<QPoint> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

int affine_rank_of(const std::vector<QPoint>& pts, int dim) {
    if (pts.size() <= 1) return 0;
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rat> r(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) r[static_cast<std::size_t>(j)] = pts[i][static_cast<std::size_t>(j)] - pts[0][static_cast<std::size_t>(j)];
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[piv]);
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
            if (rows[i][static_cast<std::size_t>(col)] == 0) continue;
            Rat f = rows[i][static_cast<std::size_t>(col)] / rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            for (int j = col; j < dim; ++j) rows[i][static_cast<std::size_t>(j)] -= f * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

struct Tri {
    std::size_t a, b, c;
    QPoint n;   // outward normal (rational, unnormalized)
    Rat off;    // n.x = off on the plane
    bool alive = true;
};

QPoint cross3(const QPoint& u, const QPoint& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

QPoint sub3(const QPoint& a, const QPoint& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Rat dot3(const QPoint& a, const QPoint& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Exact incremental 3-D hull. Returns outward-oriented triangles
// (possibly splitting facets into coplanar triangles).
struct Hull3 {
    std::vector<QPoint> pts;
    std::vector<Tri> tris;
    bool degenerate = false;  // affine rank < 3
};

Hull3 hull_3d(std::vector<QPoint> pts) {
    Hull3 h;
    pts = dedupe(std::move(pts));
    h.pts = pts;
    const std::size_t n = pts.size();
    if (n < 4) {
        h.degenerate = true;
        return h;
    }
    // Initial affinely independent quadruple (points are deduped).
    std::size_t i1 = 1, i2 = 0, i3 = 0;
    QPoint u = sub3(pts[i1], pts[0]);
    for (std::size_t i = 1; i < n && i2 == 0; ++i) {
        if (i == i1) continue;
        QPoint w = cross3(u, sub3(pts[i], pts[0]));
        if (w[0] != 0 || w[1] != 0 || w[2] != 0) i2 = i;
    }
    if (i2 == 0) {
        h.degenerate = true;
        return h;
    }
    QPoint nrm = cross3(u, sub3(pts[i2], pts[0]));
    for (std::size_t i = 1; i < n && i3 == 0; ++i) {
        if (i == i1 || i == i2) continue;
        if (dot3(nrm, sub3(pts[i], pts[0])) != 0) i3 = i;
    }
    if (i3 == 0) {
        h.degenerate = true;
        return h;
    }
    QPoint ref(3, Rat(0));
    for (std::size_t k : {std::size_t(0), i1, i2, i3})
        for (int j = 0; j < 3; ++j) ref[static_cast<std::size_t>(j)] += pts[k][static_cast<std::size_t>(j)] / Rat(4);
    auto make_tri = [&](std::size_t a, std::size_t b, std::size_t c) {
        Tri t;
        t.a = a;
        t.b = b;
        t.c = c;
        t.n = cross3(sub3(pts[b], pts[a]), sub3(pts[c], pts[a]));
        t.off = dot3(t.n, pts[a]);
        if (dot3(t.n, ref) > t.off) {
            std::swap(t.b, t.c);
            for (auto& x : t.n) x = -x;
            t.off = -t.off;
        }
        return t;
    };
    h.tris.push_back(make_tri(0, i1, i2));
    h.tris.push_back(make_tri(0, i1, i3));
    h.tris.push_back(make_tri(0, i2, i3));
    h.tris.push_back(make_tri(i1, i2, i3));
    std::set<std::size_t> used{0, i1, i2, i3};
    for (std::size_t p = 0; p < n; ++p) {
        if (used.count(p)) continue;
        std::vector<std::size_t> visible;
        for (std::size_t t = 0; t < h.tris.size(); ++t)
            if (h.tris[t].alive && dot3(h.tris[t].n, pts[p]) > h.tris[t].off) visible.push_back(t);
        if (visible.empty()) continue;
        // Horizon: directed edges of visible faces whose reverse is not visible.
        std::map<std::pair<std::size_t, std::size_t>, int> edge_count;
        for (std::size_t t : visible) {
            const Tri& tr = h.tris[t];
            for (auto [x, y] : {std::pair{tr.a, tr.b}, std::pair{tr.b, tr.c}, std::pair{tr.c, tr.a}}) {
                auto key = std::minmax(x, y);
                edge_count[{key.first, key.second}]++;
            }
        }
        for (std::size_t t : visible) h.tris[t].alive = false;
        for (std::size_t t : visible) {
            const Tri& tr = h.tris[t];
            for (auto [x, y] : {std::pair{tr.a, tr.b}, std::pair{tr.b, tr.c}, std::pair{tr.c, tr.a}}) {
                auto key = std::minmax(x, y);
                if (edge_count[{key.first, key.second}] == 1) h.tris.push_back(make_tri(x, y, p));
            }
        }
    }
    h.tris.erase(std::remove_if(h.tris.begin(), h.tris.end(), [](const Tri& t) { return !t.alive; }), h.tris.end());
    return h;
}

Rat volume_from_hull3(const Hull3& h) {
    Rat six_v(0);
    for (const auto& t : h.tris) {
        const QPoint &a = h.pts[t.a], &b = h.pts[t.b], &c = h.pts[t.c];
        six_v += dot3(a, cross3(b, c));
    }
    Rat v = six_v / Rat(6);
    return v < 0 ? Rat(-v) : v;
}

std::vector<Int> primitive_normal(const std::vector<Rat>& n) {
    Int den(1);
    for (const auto& x : n) den = lcm(den, Int(x.get_den()));
    std::vector<Int> v;
    Int g(0);
    for (const auto& x : n) {
        Rat s = x * Rat(den);
        v.emplace_back(s.get_num());
        g = gcd(g, v.back());
    }
    if (g != 0)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), Int(x).get_mpz_t(), g.get_mpz_t());
    for (const auto& x : v) {
        if (x > 0) break;
        if (x < 0) {
            for (auto& y : v) y = -y;
            break;
        }
    }
    return v;
}

// Facet enumeration by hyperplane scanning over d-subsets; exact and
// simple, for the generic (d >= 4) path and small inputs.
std::vector<Facet> facets_by_scan(const std::vector<QPoint>& verts, int dim) {
    std::vector<Facet> out;
    std::set<std::pair<std::vector<std::string>, std::string>> seen;
    const std::size_t n = verts.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(dim));
    // Iterate over all d-subsets.
    std::vector<std::size_t> comb(static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = i;
    if (n < static_cast<std::size_t>(dim)) return out;
    while (true) {
        // Hyperplane through the subset, if affinely (d-1)-spanning.
        std::vector<std::vector<Rat>> rows;
        for (int i = 1; i < dim; ++i) {
            std::vector<Rat> r(static_cast<std::size_t>(dim));
            for (int j = 0; j < dim; ++j)
                r[static_cast<std::size_t>(j)] = verts[comb[static_cast<std::size_t>(i)]][static_cast<std::size_t>(j)] - verts[comb[0]][static_cast<std::size_t>(j)];
            rows.push_back(std::move(r));
        }
        // Nullspace of rows (want rank d-1, unique normal direction).
        std::vector<std::vector<Rat>> m = rows;
        std::vector<int> pivot_col;
        std::size_t rr = 0;
        for (int col = 0; col < dim && rr < m.size(); ++col) {
            std::size_t piv = rr;
            while (piv < m.size() && m[piv][static_cast<std::size_t>(col)] == 0) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[rr], m[piv]);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i == rr || m[i][static_cast<std::size_t>(col)] == 0) continue;
                Rat f = m[i][static_cast<std::size_t>(col)] / m[rr][static_cast<std::size_t>(col)];
                for (int j = 0; j < dim; ++j) m[i][static_cast<std::size_t>(j)] -= f * m[rr][static_cast<std::size_t>(j)];
            }
            pivot_col.push_back(col);
            ++rr;
        }
        if (static_cast<int>(rr) == dim - 1) {
            int free_col = 0;
            std::set<int> pivots(pivot_col.begin(), pivot_col.end());
            while (pivots.count(free_col)) ++free_col;
            std::vector<Rat> nrm(static_cast<std::size_t>(dim), Rat(0));
            nrm[static_cast<std::size_t>(free_col)] = 1;
            for (std::size_t i = 0; i < rr; ++i) {
                // row i: pivot at pivot_col[i]
                Rat rhs = -m[i][static_cast<std::size_t>(free_col)];
                nrm[static_cast<std::size_t>(pivot_col[i])] = rhs / m[i][static_cast<std::size_t>(pivot_col[i])];
            }
            std::vector<Int> prim = primitive_normal(nrm);
            Rat off(0);
            for (int j = 0; j < dim; ++j) off += Rat(prim[static_cast<std::size_t>(j)]) * verts[comb[0]][static_cast<std::size_t>(j)];
            int pos = 0, neg = 0;
            for (const auto& v : verts) {
                Rat s(0);
                for (int j = 0; j < dim; ++j) s += Rat(prim[static_cast<std::size_t>(j)]) * v[static_cast<std::size_t>(j)];
                if (s > off) ++pos;
                if (s < off) ++neg;
            }
            if (pos == 0 || neg == 0) {
                std::vector<Int> nn = prim;
                Rat oo = off;
                if (neg == 0 && pos > 0) {
                    for (auto& x : nn) x = -x;
                    oo = -oo;
                }
                std::vector<std::string> key;
                for (const auto& x : nn) key.push_back(x.get_str());
                if (!seen.count({key, oo.get_str()})) {
                    seen.insert({key, oo.get_str()});
                    out.push_back(Facet{nn, oo});
                }
            }
        }
        // next combination
        int i = dim - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - static_cast<std::size_t>(dim - i)) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < dim; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Rat volume_rec(std::vector<QPoint> pts, int dim);

Rat volume_generic(const std::vector<QPoint>& verts, int dim) {
    std::vector<Facet> fs = facets_by_scan(verts, dim);
    const QPoint& v0 = verts[0];
    Rat vol(0);
    for (const auto& f : fs) {
        Rat sv0(0);
        for (int j = 0; j < dim; ++j) sv0 += Rat(f.normal[static_cast<std::size_t>(j)]) * v0[static_cast<std::size_t>(j)];
        if (sv0 == f.offset) continue;
        std::vector<QPoint> on;
        for (const auto& p : verts) {
            Rat s(0);
            for (int j = 0; j < dim; ++j) s += Rat(f.normal[static_cast<std::size_t>(j)]) * p[static_cast<std::size_t>(j)];
            if (s == f.offset) on.push_back(p);
        }
        int jdrop = 0;
        while (f.normal[static_cast<std::size_t>(jdrop)] == 0) ++jdrop;
        std::vector<QPoint> proj;
        for (const auto& p : on) {
            QPoint q;
            for (int j = 0; j < dim; ++j)
                if (j != jdrop) q.push_back(p[static_cast<std::size_t>(j)]);
            proj.push_back(std::move(q));
        }
        Rat h = sv0 - f.offset;
        if (h < 0) h = -h;
        Rat nj(f.normal[static_cast<std::size_t>(jdrop)]);
        if (nj < 0) nj = -nj;
        vol += h * volume_rec(std::move(proj), dim - 1) / nj;
    }
    return vol / Rat(dim);
}

Rat volume_rec(std::vector<QPoint> pts, int dim) {
    pts = dedupe(std::move(pts));
    if (pts.empty()) return Rat(0);
    if (affine_rank_of(pts, dim) < dim) return Rat(0);
    if (dim == 1) {
        Rat lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            if (p[0] < lo) lo = p[0];
            if (p[0] > hi) hi = p[0];
        }
        return hi - lo;
    }
    if (dim == 2) {
        auto h = hull_2d_ccw(pts);
        Rat two_a(0);
        for (std::size_t i = 0; i < h.size(); ++i) {
            const QPoint &a = h[i], &b = h[(i + 1) % h.size()];
            two_a += a[0] * b[1] - b[0] * a[1];
        }
        Rat a = two_a / 2;
        return a < 0 ? Rat(-a) : a;
    }
    if (dim == 3) {
        Hull3 h = hull_3d(pts);
        if (h.degenerate) return Rat(0);
        return volume_from_hull3(h);
    }
    return volume_generic(extreme_filter_lp(pts), dim);
}

}  // namespace

QPoint to_qpoint(const LPoint& p) {
    QPoint q;
    q.reserve(p.size());
    for (long x : p) q.emplace_back(x);
    return q;
}

Polytope Polytope::from_points(int dim, std::vector<QPoint> pts) {
    if (pts.empty()) throw input_error("convex hull of an empty point set");
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != dim) throw input_error("point dimension mismatch");
    pts = dedupe(std::move(pts));
    std::vector<QPoint> verts;
    int rank = affine_rank_of(pts, dim);
    if (pts.size() == 1) {
        verts = pts;
    } else if (rank <= 1) {
        // Points on a line: endpoints by lexicographic order.
        verts.push_back(pts.front());
        if (pts.back() != pts.front()) verts.push_back(pts.back());
    } else if (dim == 2) {
        verts = hull_2d_ccw(pts);
    } else if (dim == 3 && rank == 3) {
        Hull3 h = hull_3d(pts);
        std::set<std::size_t> cand;
        for (const auto& t : h.tris) {
            cand.insert(t.a);
            cand.insert(t.b);
            cand.insert(t.c);
        }
        std::vector<QPoint> cpts;
        for (std::size_t i : cand) cpts.push_back(h.pts[i]);
        verts = extreme_filter_lp(cpts);
    } else {
        verts = extreme_filter_lp(pts);
    }
    std::sort(verts.begin(), verts.end(), qless);
    return Polytope(dim, std::move(verts));
}

Polytope Polytope::from_lattice(int dim, const std::vector<LPoint>& pts) {
    std::vector<QPoint> q;
    q.reserve(pts.size());
    for (const auto& p : pts) q.push_back(to_qpoint(p));
    return from_points(dim, std::move(q));
}

int Polytope::affine_rank() const { return affine_rank_of(verts_, dim_); }

const std::vector<Facet>& Polytope::facets() const {
    if (!facets_) {
        if (affine_rank() < dim_) throw degeneracy_error("facets of a lower-dimensional polytope");
        facets_ = facets_by_scan(verts_, dim_);
    }
    return *facets_;
}

bool Polytope::contains(const QPoint& q) const {
    if (static_cast<int>(q.size()) != dim_) throw input_error("contains: dimension mismatch");
    if (affine_rank() < dim_) return in_hull_lp(verts_, q);
    for (const auto& f : facets()) {
        Rat s(0);
        for (int j = 0; j < dim_; ++j) s += Rat(f.normal[static_cast<std::size_t>(j)]) * q[static_cast<std::size_t>(j)];
        if (s > f.offset) return false;
    }
    return true;
}

bool Polytope::contains_strict(const QPoint& q) const {
    if (static_cast<int>(q.size()) != dim_) throw input_error("contains: dimension mismatch");
    if (affine_rank() < dim_) return false;
    for (const auto& f : facets()) {
        Rat s(0);
        for (int j = 0; j < dim_; ++j) s += Rat(f.normal[static_cast<std::size_t>(j)]) * q[static_cast<std::size_t>(j)];
        if (s >= f.offset) return false;
    }
    return true;
}

Rat Polytope::volume() const { return volume_rec(verts_, dim_); }

Polytope convex_hull(int dim, const std::vector<QPoint>& points) { return Polytope::from_points(dim, points); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) throw input_error("minkowski_sum: dimension mismatch");
    std::vector<QPoint> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) {
            QPoint s(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            sums.push_back(std::move(s));
        }
    return Polytope::from_points(p.dim(), std::move(sums));
}

Polytope project_drop_first(const Polytope& p) {
    if (p.dim() != 3) throw input_error("project_drop_first expects ambient dimension 3");
    std::vector<QPoint> pts;
    for (const auto& v : p.vertices()) pts.push_back({v[1], v[2]});
    return Polytope::from_points(2, std::move(pts));
}

bool interior_lattice_point_exists(const Polytope& p) {
    if (p.dim() != 2) throw input_error("interior_lattice_point_exists expects dimension 2");
    if (p.affine_rank() < 2) return false;
    Int lo0, hi0, lo1, hi1;
    bool first = true;
    for (const auto& v : p.vertices()) {
        Int f0, c0, f1, c1;
        mpz_fdiv_q(f0.get_mpz_t(), v[0].get_num_mpz_t(), v[0].get_den_mpz_t());
        mpz_cdiv_q(c0.get_mpz_t(), v[0].get_num_mpz_t(), v[0].get_den_mpz_t());
        mpz_fdiv_q(f1.get_mpz_t(), v[1].get_num_mpz_t(), v[1].get_den_mpz_t());
        mpz_cdiv_q(c1.get_mpz_t(), v[1].get_num_mpz_t(), v[1].get_den_mpz_t());
        if (first) {
            lo0 = f0; hi0 = c0; lo1 = f1; hi1 = c1;
            first = false;
        } else {
            lo0 = std::min(lo0, f0); hi0 = std::max(hi0, c0);
            lo1 = std::min(lo1, f1); hi1 = std::max(hi1, c1);
        }
    }
    for (Int x = lo0; x <= hi0; ++x)
        for (Int y = lo1; y <= hi1; ++y)
            if (p.contains_strict({Rat(x), Rat(y)})) return true;
    return false;
}

std::vector<LPoint> lattice_points(const Polytope& p) {
    const int d = p.dim();
    if (d > 5) throw cap_error("lattice_points supports dimension <= 5");
    std::vector<Int> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    bool first = true;
    for (const auto& v : p.vertices()) {
        for (int j = 0; j < d; ++j) {
            Int f, c;
            mpz_fdiv_q(f.get_mpz_t(), v[static_cast<std::size_t>(j)].get_num_mpz_t(), v[static_cast<std::size_t>(j)].get_den_mpz_t());
            mpz_cdiv_q(c.get_mpz_t(), v[static_cast<std::size_t>(j)].get_num_mpz_t(), v[static_cast<std::size_t>(j)].get_den_mpz_t());
            if (first) {
                lo[static_cast<std::size_t>(j)] = f;
                hi[static_cast<std::size_t>(j)] = c;
            } else {
                lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], f);
                hi[static_cast<std::size_t>(j)] = std::max(hi[static_cast<std::size_t>(j)], c);
            }
        }
        first = false;
    }
    std::vector<LPoint> out;
    LPoint cur(static_cast<std::size_t>(d));
    std::vector<long> lol(static_cast<std::size_t>(d)), hil(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        lol[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)].get_si();
        hil[static_cast<std::size_t>(j)] = hi[static_cast<std::size_t>(j)].get_si();
    }
    std::function<void(int)> rec = [&](int j) {
        if (j == d) {
            QPoint q;
            for (long x : cur) q.emplace_back(x);
            if (p.contains(q)) out.push_back(cur);
            return;
        }
        for (long x = lol[static_cast<std::size_t>(j)]; x <= hil[static_cast<std::size_t>(j)]; ++x) {
            cur[static_cast<std::size_t>(j)] = x;
            rec(j + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

SupportTuple::SupportTuple(int d, std::vector<std::vector<LPoint>> s) : dim(d), sets(std::move(s)) {
    if (dim < 1) throw input_error("SupportTuple needs positive dimension");
    for (const auto& set : sets) {
        if (set.empty()) throw input_error("SupportTuple sets must be nonempty");
        for (const auto& p : set)
            if (static_cast<int>(p.size()) != dim) throw input_error("SupportTuple point dimension mismatch");
    }
}

Int mixed_volume(const SupportTuple& e) {
    const int d = e.dim;
    if (e.count() != d) throw input_error("mixed_volume needs as many sets as the dimension");
    if (d > 5) throw cap_error("mixed_volume supports dimension <= 5");
    // Hull every set first so Minkowski sums stay small.
    std::vector<std::vector<QPoint>> vsets;
    for (const auto& s : e.sets) vsets.push_back(Polytope::from_lattice(d, s).vertices());
    Rat acc(0);
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<QPoint> sum{QPoint(static_cast<std::size_t>(d), Rat(0))};
        int bits = 0;
        for (int i = 0; i < d; ++i) {
            if (!(mask & (1u << i))) continue;
            ++bits;
            std::vector<QPoint> next;
            next.reserve(sum.size() * vsets[static_cast<std::size_t>(i)].size());
            for (const auto& a : sum)
                for (const auto& b : vsets[static_cast<std::size_t>(i)]) {
                    QPoint s(a.size());
                    for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
                    next.push_back(std::move(s));
                }
            sum = dedupe(std::move(next));
        }
        Rat vol = volume_rec(sum, d);
        acc += ((d - bits) % 2 == 0) ? vol : -vol;
    }
    if (acc < 0 || Int(acc.get_den()) != 1)
        throw degeneracy_error("mixed volume came out non-integral; non-lattice input?");
    return Int(acc.get_num());
}

Int r_bar(const SupportTuple& ebar) {
    const int m = ebar.dim;
    if (ebar.count() != m + 1) throw input_error("r_bar needs m+1 sets in dimension m");
    Int total = 0;
    for (int skip = 0; skip <= m; ++skip) {
        std::vector<std::vector<LPoint>> sub;
        for (int i = 0; i <= m; ++i)
            if (i != skip) sub.push_back(ebar.sets[static_cast<std::size_t>(i)]);
        total += mixed_volume(SupportTuple(m, std::move(sub)));
    }
    return total;
}

Rat m_average(const SupportTuple& ebar) {
    const int m = ebar.dim;
    const int k = ebar.count();
    long total_tuples = 1;
    for (int i = 0; i < m; ++i) total_tuples *= k;
    if (total_tuples > 4096) throw cap_error("m_average tuple count too large");
    std::vector<int> pick(static_cast<std::size_t>(m), 0);
    Int sum = 0;
    while (true) {
        std::vector<std::vector<LPoint>> sets;
        for (int i = 0; i < m; ++i) sets.push_back(ebar.sets[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
        sum += mixed_volume(SupportTuple(m, std::move(sets)));
        int j = m - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] == k - 1) {
            pick[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        pick[static_cast<std::size_t>(j)]++;
    }
    return make_rat(sum, Int(total_tuples));
}

std::vector<std::vector<LPoint>> system_supports(const PolySystem& f) {
    std::vector<std::vector<LPoint>> out;
    for (const auto& p : f.polys) {
        std::vector<LPoint> s;
        for (const auto& ev : p.support()) {
            LPoint q;
            for (int x : ev) q.push_back(x);
            s.push_back(std::move(q));
        }
        if (s.empty()) throw input_error("zero polynomial has empty support");
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<LPoint> simplex_support(int m) {
    std::vector<LPoint> pts{LPoint(static_cast<std::size_t>(m), 0)};
    for (int i = 0; i < m; ++i) {
        LPoint e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(i)] = 1;
        pts.push_back(std::move(e));
    }
    return pts;
}

}  // namespace toric
