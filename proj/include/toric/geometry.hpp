#pragma once

#include <optional>
#include <vector>

#include "toric/poly.hpp"
#include "toric/util.hpp"

namespace toric {

using LPoint = std::vector<long>;  // lattice point
using QPoint = std::vector<Rat>;

QPoint to_qpoint(const LPoint& p);

// Supporting hyperplane n.x <= offset with primitive integer normal.
struct Facet {
    std::vector<Int> normal;
    Rat offset;
};

// Convex polytope given by its extreme points (canonicalized on
// construction: the stored vertex set equals the extreme points of its own
// hull, sorted lexicographically). Values are immutable once built.
class Polytope {
public:
    static Polytope from_points(int dim, std::vector<QPoint> pts);
    static Polytope from_lattice(int dim, const std::vector<LPoint>& pts);

    int dim() const { return dim_; }
    const std::vector<QPoint>& vertices() const { return verts_; }
    int affine_rank() const;  // dimension of the affine hull

    bool contains(const QPoint& q) const;
    bool contains_strict(const QPoint& q) const;  // interior test; false for lower-dim polytopes

    // Facet inequalities; only meaningful when affine_rank() == dim().
    const std::vector<Facet>& facets() const;

    Rat volume() const;

private:
    Polytope(int dim, std::vector<QPoint> verts) : dim_(dim), verts_(std::move(verts)) {}
    int dim_;
    std::vector<QPoint> verts_;
    mutable std::optional<std::vector<Facet>> facets_;
};

Polytope convex_hull(int dim, const std::vector<QPoint>& points);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
// Hull of vertex images under (a1,...,ad) -> (a2,...,ad).
Polytope project_drop_first(const Polytope& p);
bool interior_lattice_point_exists(const Polytope& p);  // 2-D only
std::vector<LPoint> lattice_points(const Polytope& p);

// Ordered tuple of finite lattice-point sets in a common dimension.
struct SupportTuple {
    int dim;
    std::vector<std::vector<LPoint>> sets;

    SupportTuple(int d, std::vector<std::vector<LPoint>> s);
    int count() const { return static_cast<int>(sets.size()); }
};

// Normalized mixed volume by inclusion-exclusion over exact volumes of
// Minkowski sums: the d-fold repetition of one body gives d! * volume.
// Requires count() == dim.
Int mixed_volume(const SupportTuple& e);

// Sum of the m+1 leave-one-out mixed volumes of an (m+1)-tuple in Z^m.
Int r_bar(const SupportTuple& ebar);

// Average mixed volume over all dim^count... tuples drawn from ebar's sets.
Rat m_average(const SupportTuple& ebar);

struct GeometricInvariants {
    Int mixed_volume;   // M(E)
    Int r_bar;          // R(Ebar)
    Int s_bar;          // S(Ebar): constructed resultant-matrix dimension
    Rat m_ave;          // average mixed volume over tuples from Ebar
    double s_asymptotic_ref;  // sqrt(m) * e^m * m_ave, reporting only
    Int d_pi;           // product of total degrees
    Int d_sigma;        // sum of total degrees
};

// Supports of F as lattice sets (one per polynomial).
std::vector<std::vector<LPoint>> system_supports(const PolySystem& f);
// E_{m+1} = Delta cap Z^m: origin plus the unit vectors.
std::vector<LPoint> simplex_support(int m);

}  // namespace toric
