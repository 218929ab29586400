#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "toric/util.hpp"

namespace toric {

// Exponent vector of a monomial. Length equals the ambient variable count,
// entries are nonnegative (polynomial, not Laurent, supports).
struct ExponentVector {
    std::vector<int> e;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> v) : e(std::move(v)) {}

    int size() const { return static_cast<int>(e.size()); }
    int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
    long total_degree() const {
        long d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool operator==(const ExponentVector& o) const { return e == o.e; }
};

// Graded-lexicographic order; fixes the serialization order of terms.
struct GradedLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

// Sparse multivariate polynomial over Z. No stored coefficient is zero;
// the zero polynomial is the empty term map. Immutable in practice: all
// operations return fresh values, so sharing across threads is safe.
class SparsePoly {
public:
    using TermMap = std::map<ExponentVector, Int, GradedLexLess>;

    explicit SparsePoly(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw input_error("SparsePoly needs at least one variable");
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ExponentVector& ev, const Int& c) {
        if (ev.size() != nvars_) throw input_error("exponent vector length mismatch");
        for (int x : ev.e)
            if (x < 0) throw input_error("negative exponent");
        if (c == 0) return;
        auto it = terms_.find(ev);
        if (it == terms_.end()) {
            terms_.emplace(ev, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add_term(std::vector<int> ev, long c) { add_term(ExponentVector(std::move(ev)), Int(c)); }

    Int coeff(const ExponentVector& ev) const {
        auto it = terms_.find(ev);
        return it == terms_.end() ? Int(0) : it->second;
    }

    std::set<std::vector<int>> support() const {
        std::set<std::vector<int>> s;
        for (const auto& [ev, c] : terms_) s.insert(ev.e);
        return s;
    }

    long total_degree() const {
        long d = 0;
        for (const auto& [ev, c] : terms_) d = std::max(d, ev.total_degree());
        return d;
    }

    Int max_abs_coeff() const {
        Int m = 0;
        for (const auto& [ev, c] : terms_) {
            Int a = abs(c);
            if (a > m) m = a;
        }
        return m;
    }

    SparsePoly operator+(const SparsePoly& o) const {
        check_same(o);
        SparsePoly r = *this;
        for (const auto& [ev, c] : o.terms_) r.add_term(ev, c);
        return r;
    }

    SparsePoly operator-() const {
        SparsePoly r(nvars_);
        for (const auto& [ev, c] : terms_) r.terms_.emplace(ev, -c);
        return r;
    }

    SparsePoly operator-(const SparsePoly& o) const { return *this + (-o); }

    SparsePoly operator*(const SparsePoly& o) const {
        check_same(o);
        SparsePoly r(nvars_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) {
                ExponentVector ev = a;
                for (int i = 0; i < nvars_; ++i) ev[i] += b[i];
                r.add_term(ev, ca * cb);
            }
        return r;
    }

    Rat evaluate(const std::vector<Rat>& point) const;
    Int evaluate_int(const std::vector<Int>& point) const;
    SparsePoly partial_derivative(int var_index) const;
    // Substitute x_{var} := value and drop that variable (nvars shrinks by 1).
    SparsePoly substitute_drop(int var, const Int& value) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void check_same(const SparsePoly& o) const {
        if (o.nvars_ != nvars_) throw input_error("variable count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

// F = (f_1,...,f_m) in Z[x_1..x_n]. The dim Z <= 0 hypothesis is a declared
// input assumption, recorded but never verified here.
struct PolySystem {
    std::vector<SparsePoly> polys;
    bool zero_dim_assumed = true;

    explicit PolySystem(std::vector<SparsePoly> ps, bool zero_dim = true)
        : polys(std::move(ps)), zero_dim_assumed(zero_dim) {
        if (polys.empty()) throw input_error("empty polynomial system");
        for (const auto& p : polys)
            if (p.nvars() != polys.front().nvars()) throw input_error("system variable counts differ");
    }

    int m() const { return static_cast<int>(polys.size()); }
    int n() const { return polys.front().nvars(); }

    Int max_abs_coeff() const {
        Int c = 0;
        for (const auto& p : polys) {
            Int a = p.max_abs_coeff();
            if (a > c) c = a;
        }
        return c;
    }
    long max_term_count() const {
        std::size_t k = 0;
        for (const auto& p : polys) k = std::max(k, p.term_count());
        return static_cast<long>(k);
    }
};

// Size of the sparse encoding: per term, the coefficient size plus the size
// of every exponent entry, with size(c) = 1 + ceil(log2(|c|+1)).
long bit_size(const PolySystem& F);
long bit_size(const SparsePoly& f);

// Canonical textual format {"n": int, "polys": [[[coeff_string,[e...]],...],...]}.
PolySystem parse_system_json(const std::string& text);
std::string system_to_json(const PolySystem& F);

}  // namespace toric
