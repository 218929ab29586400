#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/util.hpp"

namespace toric {

// Univariate integer polynomial, coefficients ascending by degree.
// Invariant: leading coefficient nonzero unless the polynomial is zero
// (empty coefficient vector).
struct UniPoly {
    std::vector<Int> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
    static UniPoly from_longs(std::initializer_list<long> v) {
        std::vector<Int> c;
        for (long x : v) c.emplace_back(x);
        return UniPoly(std::move(c));
    }
    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Int& v) { return UniPoly({v}); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const Int& lc() const {
        static const Int z(0);
        return c.empty() ? z : c.back();
    }
    Int coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c.size())) ? Int(0) : c[static_cast<std::size_t>(i)];
    }

    Int eval_int(const Int& x) const;
    Rat eval(const Rat& x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Int& k) const;

    UniPoly derivative() const;
    Int content() const;           // gcd of coefficients, >= 0
    UniPoly primitive_part() const;  // content removed, leading coefficient > 0
    // Substitute t -> a*t.
    UniPoly scale_arg(const Int& a) const;

    std::string to_string(const std::string& var = "t") const;
};

// Exact division; throws degeneracy_error when the division is not exact.
UniPoly divexact(const UniPoly& a, const UniPoly& b);
// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b);
// Subresultant-PRS gcd, primitive with positive leading coefficient
// (constant gcd is returned as the content gcd).
UniPoly gcd_poly(const UniPoly& a, const UniPoly& b);

Int resultant(const UniPoly& a, const UniPoly& b);
// (-1)^(d(d-1)/2) * Res(p, p') / lc(p); error on constants.
Int discriminant(const UniPoly& p);
// p / gcd(p, p'), primitive, same roots without multiplicity.
UniPoly square_free_part(const UniPoly& p);
// Yun decomposition: list of (factor, multiplicity), factors primitive,
// square-free, pairwise coprime; product of factor^mult = primitive(p).
std::vector<std::pair<UniPoly, int>> square_free_decomposition(const UniPoly& p);

// All rational roots with multiplicities, sorted.
std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& p);
std::vector<std::pair<Int, int>> integer_roots(const UniPoly& p);

struct ApproxRoot {
    Rat re, im;
    double re_d() const { return re.get_d(); }
    double im_d() const { return im.get_d(); }
};
// deg(p) approximations, each certified within eps of a true root.
std::vector<ApproxRoot> complex_roots_approx(const UniPoly& p, const Rat& eps);

// Univariate polynomial over Q, ascending coefficients.
struct UniPolyQ {
    std::vector<Rat> c;

    UniPolyQ() = default;
    explicit UniPolyQ(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
    static UniPolyQ from(const UniPoly& p) {
        std::vector<Rat> v;
        for (const auto& x : p.c) v.emplace_back(x);
        return UniPolyQ(std::move(v));
    }
    static UniPolyQ constant(const Rat& v) { return UniPolyQ({v}); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lc() const {
        static const Rat z(0);
        return c.empty() ? z : c.back();
    }
    Rat coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c.size())) ? Rat(0) : c[static_cast<std::size_t>(i)];
    }

    Rat eval(const Rat& x) const;
    UniPolyQ operator+(const UniPolyQ& o) const;
    UniPolyQ operator-(const UniPolyQ& o) const;
    UniPolyQ operator*(const UniPolyQ& o) const;
    UniPolyQ operator*(const Rat& k) const;
    UniPolyQ derivative() const;
    UniPolyQ monic() const;
    UniPolyQ scale_arg(const Rat& a) const;
    // Clear denominators: returns (integer polynomial, positive denominator)
    // with this = poly / den.
    std::pair<UniPoly, Int> clear_denominators() const;

    std::string to_string(const std::string& var = "t") const;
};

// Division with remainder over Q; b nonzero.
std::pair<UniPolyQ, UniPolyQ> divmod_q(const UniPolyQ& a, const UniPolyQ& b);
UniPolyQ divexact_q(const UniPolyQ& a, const UniPolyQ& b);
UniPolyQ gcd_q(const UniPolyQ& a, const UniPolyQ& b);  // monic
// Inverse of a modulo m (gcd(a, m) = 1), deg < deg m.
UniPolyQ invert_mod(const UniPolyQ& a, const UniPolyQ& m);
UniPolyQ mod_q(const UniPolyQ& a, const UniPolyQ& m);

}  // namespace toric
