#include "toric/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "toric/detmat.hpp"

namespace toric {

Int UniPoly::eval_int(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
    std::vector<Int> r;
    r.reserve(c.size());
    for (const auto& x : c) r.push_back(-x);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Int> r(c.size() + o.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Int& k) const {
    if (k == 0) return UniPoly();
    std::vector<Int> r;
    r.reserve(c.size());
    for (const auto& x : c) r.push_back(x * k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (c.size() <= 1) return UniPoly();
    std::vector<Int> r;
    r.reserve(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) r.push_back(c[i] * Int(static_cast<long>(i)));
    return UniPoly(std::move(r));
}

Int UniPoly::content() const {
    Int g = 0;
    for (const auto& x : c) g = gcd(g, x);
    return g;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return UniPoly();
    Int g = content();
    if (lc() < 0) g = -g;
    std::vector<Int> r;
    r.reserve(c.size());
    for (const auto& x : c) {
        Int q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        r.push_back(q);
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scale_arg(const Int& a) const {
    std::vector<Int> r = c;
    Int pw = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] *= pw;
        pw *= a;
    }
    return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        const Int& a = c[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        Int aa = abs(a);
        if (aa != 1 || i == 0) os << aa.get_str();
        if (i > 0) {
            if (aa != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly divexact(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw input_error("division by zero polynomial");
    if (a.is_zero()) return UniPoly();
    if (a.deg() < b.deg()) throw degeneracy_error("inexact polynomial division");
    std::vector<Int> rem = a.c;
    std::vector<Int> q(static_cast<std::size_t>(a.deg() - b.deg() + 1), Int(0));
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        Int num = rem[static_cast<std::size_t>(k + b.deg())];
        if (num == 0) continue;
        Int qk;
        if (!mpz_divisible_p(num.get_mpz_t(), b.lc().get_mpz_t()))
            throw degeneracy_error("inexact polynomial division");
        mpz_divexact(qk.get_mpz_t(), num.get_mpz_t(), b.lc().get_mpz_t());
        q[static_cast<std::size_t>(k)] = qk;
        for (int j = 0; j <= b.deg(); ++j) rem[static_cast<std::size_t>(k + j)] -= qk * b.c[static_cast<std::size_t>(j)];
    }
    for (const auto& x : rem)
        if (x != 0) throw degeneracy_error("inexact polynomial division");
    return UniPoly(std::move(q));
}

UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw input_error("pseudo_rem by zero");
    UniPoly r = a;
    const int db = b.deg();
    const Int& lb = b.lc();
    while (!r.is_zero() && r.deg() >= db) {
        int k = r.deg() - db;
        Int lr = r.lc();
        std::vector<Int> nr(r.c.size(), Int(0));
        for (std::size_t i = 0; i < r.c.size(); ++i) nr[i] = r.c[i] * lb;
        for (int j = 0; j <= db; ++j) nr[static_cast<std::size_t>(k + j)] -= lr * b.c[static_cast<std::size_t>(j)];
        r = UniPoly(std::move(nr));
    }
    return r;
}

UniPoly gcd_poly(const UniPoly& a0, const UniPoly& b0) {
    if (a0.is_zero()) return b0.is_zero() ? UniPoly() : b0.primitive_part() * b0.content();
    if (b0.is_zero()) return a0.primitive_part() * a0.content();
    Int ca = a0.content(), cb = b0.content();
    Int cc = gcd(ca, cb);
    UniPoly a = a0.primitive_part(), b = b0.primitive_part();
    if (a.deg() < b.deg()) std::swap(a, b);
    // Subresultant PRS keeps coefficient growth linear.
    Int g(1), h(1);
    while (true) {
        int delta = a.deg() - b.deg();
        UniPoly r = pseudo_rem(a, b);
        if (r.is_zero()) return b.primitive_part() * cc;
        if (b.deg() == 0 || r.deg() == 0) return UniPoly::constant(cc);
        Int divisor = g;
        for (int i = 0; i < delta; ++i) divisor *= h;
        std::vector<Int> rc = r.c;
        for (auto& x : rc) mpz_divexact(x.get_mpz_t(), Int(x).get_mpz_t(), divisor.get_mpz_t());
        a = b;
        b = UniPoly(std::move(rc));
        g = a.lc();
        if (delta > 0) {
            Int gp = g;
            for (int i = 1; i < delta; ++i) gp *= g;
            Int hp = 1;
            for (int i = 1; i < delta; ++i) hp *= h;
            mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
        }
    }
}

Int resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    int da = a.deg(), db = b.deg();
    if (da == 0 && db == 0) return 1;
    if (da == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), a.c[0].get_mpz_t(), static_cast<unsigned long>(db));
        return r;
    }
    if (db == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), b.c[0].get_mpz_t(), static_cast<unsigned long>(da));
        return r;
    }
    // Sylvester matrix: db rows of a's coefficients, da rows of b's.
    const std::size_t n = static_cast<std::size_t>(da + db);
    IntMatrix s(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a.c[static_cast<std::size_t>(da - j)];
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) s[static_cast<std::size_t>(db + i)][static_cast<std::size_t>(i + j)] = b.c[static_cast<std::size_t>(db - j)];
    return det_exact(s);
}

Int discriminant(const UniPoly& p) {
    int d = p.deg();
    if (d < 1) throw input_error("discriminant of a constant");
    if (d == 1) return 1;
    Int res = resultant(p, p.derivative());
    Int q;
    mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), p.lc().get_mpz_t());
    long sw = static_cast<long>(d) * (d - 1) / 2;
    return (sw % 2 == 0) ? q : Int(-q);
}

UniPoly square_free_part(const UniPoly& p) {
    if (p.is_zero()) throw input_error("square_free_part of zero");
    UniPoly pp = p.primitive_part();
    if (pp.deg() <= 0) return UniPoly::constant(Int(1));
    UniPoly g = gcd_poly(pp, pp.derivative());
    if (g.deg() == 0) return pp;
    return divexact(pp, g).primitive_part();
}

std::vector<std::pair<UniPoly, int>> square_free_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw input_error("square-free decomposition of zero");
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = p.primitive_part();
    if (f.deg() <= 0) return out;
    // Yun's algorithm.
    UniPoly g = gcd_poly(f, f.derivative());
    if (g.deg() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    UniPoly b = divexact(f, g);
    UniPoly d = divexact(f.derivative(), g) - b.derivative();
    int i = 1;
    while (b.deg() > 0) {
        UniPoly a = gcd_poly(b, d);
        if (a.deg() > 0) out.emplace_back(a.primitive_part(), i);
        UniPoly adj = a.deg() > 0 ? a : UniPoly::constant(a.is_zero() ? Int(1) : a.c[0]);
        b = divexact(b, adj);
        d = divexact(d, adj) - b.derivative();
        ++i;
    }
    return out;
}

Rat UniPolyQ::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPolyQ UniPolyQ::operator+(const UniPolyQ& o) const {
    std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return UniPolyQ(std::move(r));
}

UniPolyQ UniPolyQ::operator-(const UniPolyQ& o) const { return *this + o * Rat(-1); }

UniPolyQ UniPolyQ::operator*(const UniPolyQ& o) const {
    if (is_zero() || o.is_zero()) return UniPolyQ();
    std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return UniPolyQ(std::move(r));
}

UniPolyQ UniPolyQ::operator*(const Rat& k) const {
    if (k == 0) return UniPolyQ();
    std::vector<Rat> r;
    r.reserve(c.size());
    for (const auto& x : c) r.push_back(x * k);
    return UniPolyQ(std::move(r));
}

UniPolyQ UniPolyQ::derivative() const {
    if (c.size() <= 1) return UniPolyQ();
    std::vector<Rat> r;
    r.reserve(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) r.push_back(c[i] * Rat(static_cast<long>(i)));
    return UniPolyQ(std::move(r));
}

UniPolyQ UniPolyQ::monic() const {
    if (is_zero()) return UniPolyQ();
    return *this * (Rat(1) / lc());
}

UniPolyQ UniPolyQ::scale_arg(const Rat& a) const {
    std::vector<Rat> r = c;
    Rat pw(1);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] *= pw;
        pw *= a;
    }
    return UniPolyQ(std::move(r));
}

std::pair<UniPoly, Int> UniPolyQ::clear_denominators() const {
    Int den = 1;
    for (const auto& x : c) den = lcm(den, Int(x.get_den()));
    std::vector<Int> r;
    r.reserve(c.size());
    for (const auto& x : c) {
        Rat v = x * Rat(den);
        r.emplace_back(v.get_num());
    }
    return {UniPoly(std::move(r)), den};
}

std::string UniPolyQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        Rat a = c[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        Rat aa = abs(a);
        if (aa != 1 || i == 0) os << aa.get_str();
        if (i > 0) {
            if (aa != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPolyQ, UniPolyQ> divmod_q(const UniPolyQ& a, const UniPolyQ& b) {
    if (b.is_zero()) throw input_error("division by zero polynomial");
    UniPolyQ r = a;
    if (a.deg() < b.deg()) return {UniPolyQ(), r};
    std::vector<Rat> q(static_cast<std::size_t>(a.deg() - b.deg() + 1), Rat(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        Rat f = r.lc() / b.lc();
        q[static_cast<std::size_t>(k)] = f;
        std::vector<Rat> nr = r.c;
        for (int j = 0; j <= b.deg(); ++j) nr[static_cast<std::size_t>(k + j)] -= f * b.c[static_cast<std::size_t>(j)];
        r = UniPolyQ(std::move(nr));
    }
    return {UniPolyQ(std::move(q)), r};
}

UniPolyQ divexact_q(const UniPolyQ& a, const UniPolyQ& b) {
    auto [q, r] = divmod_q(a, b);
    if (!r.is_zero()) throw degeneracy_error("inexact rational polynomial division");
    return q;
}

UniPolyQ gcd_q(const UniPolyQ& a, const UniPolyQ& b) {
    UniPolyQ x = a, y = b;
    while (!y.is_zero()) {
        UniPolyQ r = divmod_q(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

UniPolyQ mod_q(const UniPolyQ& a, const UniPolyQ& m) { return divmod_q(a, m).second; }

UniPolyQ invert_mod(const UniPolyQ& a, const UniPolyQ& m) {
    // Extended Euclid: s*a + t*m = g.
    UniPolyQ r0 = m, r1 = mod_q(a, m);
    UniPolyQ s0, s1{UniPolyQ::constant(Rat(1))};
    s0 = UniPolyQ();
    while (!r1.is_zero()) {
        auto [q, r2] = divmod_q(r0, r1);
        UniPolyQ s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0.deg() != 0) throw degeneracy_error("invert_mod: arguments not coprime");
    return mod_q(s0 * (Rat(1) / r0.c[0]), m);
}

}  // namespace toric
