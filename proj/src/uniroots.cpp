#include <algorithm>
#include <complex>
#include <map>
#include <sstream>

#include "toric/unipoly.hpp"

namespace toric {

namespace {

struct FactorStall {};

bool rho_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

// Pollard-Brent rho; returns a nontrivial factor or throws FactorStall.
Int pollard_rho(const Int& n, unsigned long seed_c, long budget) {
    Int x(2 + static_cast<long>(seed_c)), y = x, d(1);
    Int c(1 + static_cast<long>(seed_c));
    long steps = 0;
    while (d == 1) {
        if (++steps > budget) throw FactorStall{};
        x = (x * x + c) % n;
        y = (y * y + c) % n;
        y = (y * y + c) % n;
        Int diff = abs(x - y);
        if (diff == 0) return pollard_rho(n, seed_c + 1, budget - steps);
        d = gcd(diff, n);
    }
    if (d == n) return pollard_rho(n, seed_c + 1, budget - steps);
    return d;
}

void factor_into(const Int& n0, std::map<Int, int>& out, long rho_budget) {
    Int n = n0;
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            out[Int(p)]++;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        }
    }
    for (long p = 17; p < 100000 && n > 1; p += 2) {
        if (Int(p) * Int(p) > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            out[Int(p)]++;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        }
    }
    if (n == 1) return;
    if (rho_probable_prime(n)) {
        out[n]++;
        return;
    }
    Int f = pollard_rho(n, 0, rho_budget);
    factor_into(f, out, rho_budget);
    Int rest;
    mpz_divexact(rest.get_mpz_t(), n.get_mpz_t(), f.get_mpz_t());
    factor_into(rest, out, rho_budget);
}

std::vector<Int> divisors_capped(const std::map<Int, int>& factorization, std::size_t cap) {
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factorization) {
        std::size_t base = divs.size();
        if (base * static_cast<std::size_t>(e + 1) > cap) throw FactorStall{};
        Int pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

// Dense polynomial over F_p for small p (p < 2^31), used by the
// linear-factor lifting fallback.
using FpPoly = std::vector<std::uint64_t>;

FpPoly fp_from(const UniPoly& f, std::uint64_t p) {
    FpPoly r(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i)
        r[i] = mpz_fdiv_ui(f.c[i].get_mpz_t(), static_cast<unsigned long>(p));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::uint64_t fp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& b, std::uint64_t p) {
    const std::uint64_t inv = fp_pow(b.back(), p - 2, p);
    while (a.size() >= b.size() && !a.empty()) {
        std::uint64_t f = a.back() * inv % p;
        std::size_t k = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t sub = f * b[j] % p;
            a[k + j] = (a[k + j] + p - sub) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint64_t fp_eval(const FpPoly& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
    return acc;
}

bool is_prime_small_u(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Integer roots of a monic square-free integer polynomial via root lifting:
// roots mod a good small prime, Newton-lifted past the root bound.
std::vector<Int> lifted_integer_roots(const UniPoly& m) {
    const int d = m.deg();
    if (d <= 0) return {};
    Int bound = 1;
    for (const auto& x : m.c) {
        Int a = abs(x);
        if (a > bound) bound = a;
    }
    bound += 1;  // monic Cauchy bound
    UniPoly md = m.derivative();
    std::uint64_t p = 0;
    for (std::uint64_t q = 3; q < 200000; q += 2) {
        if (!is_prime_small_u(q)) continue;
        FpPoly fq = fp_from(m, q);
        if (static_cast<int>(fq.size()) - 1 != d) continue;
        FpPoly g = fp_gcd(fq, fp_from(md, q), q);
        if (g.size() <= 1) {
            p = q;
            break;
        }
    }
    if (p == 0) throw degeneracy_error("no good prime for root lifting");
    FpPoly fq = fp_from(m, p);
    std::vector<std::uint64_t> base_roots;
    for (std::uint64_t r = 0; r < p; ++r)
        if (fp_eval(fq, r, p) == 0) base_roots.push_back(r);
    std::vector<Int> out;
    const Int two_bound = 2 * bound;
    for (std::uint64_t r0 : base_roots) {
        Int r(static_cast<unsigned long>(r0));
        Int modulus(static_cast<unsigned long>(p));
        while (modulus <= two_bound) {
            modulus *= modulus;
            Int fr = m.eval_int(r) % modulus;
            Int fpr = md.eval_int(r) % modulus;
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), fpr.get_mpz_t(), modulus.get_mpz_t()) == 0)
                throw degeneracy_error("lifting derivative not invertible");
            r = (r - fr * inv) % modulus;
            if (r < 0) r += modulus;
        }
        Int sym = r;
        if (2 * sym > modulus) sym -= modulus;
        if (abs(sym) <= bound && m.eval_int(sym) == 0) out.push_back(sym);
    }
    return out;
}

// Candidate rational roots of a primitive square-free polynomial with
// nonzero constant term. Divisor enumeration when the leading/trailing
// coefficients factor within budget, otherwise monicize and lift.
std::vector<Rat> root_candidates(const UniPoly& sf) {
    const Int trail = abs(sf.c.front());
    const Int lead = abs(sf.lc());
    try {
        std::map<Int, int> ft, fl;
        factor_into(trail, ft, 1L << 22);
        factor_into(lead, fl, 1L << 22);
        std::vector<Int> dn = divisors_capped(ft, 4096);
        std::vector<Int> dd = divisors_capped(fl, 4096);
        if (dn.size() * dd.size() > 200000) throw FactorStall{};
        std::vector<Rat> cands;
        for (const auto& num : dn)
            for (const auto& den : dd) {
                if (gcd(num, den) != 1) continue;
                cands.push_back(make_rat(num, den));
                cands.push_back(make_rat(-num, den));
            }
        return cands;
    } catch (const FactorStall&) {
        // Fall through to the lifting route; soundness is unaffected since
        // all candidates are verified exactly.
    }
    // y = lead*t transforms sf into a monic polynomial of the same degree.
    const int d = sf.deg();
    std::vector<Int> mc(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), sf.lc().get_mpz_t(), static_cast<unsigned long>(d - 1 - i >= 0 ? d - 1 - i : 0));
        mc[static_cast<std::size_t>(i)] = (i == d) ? Int(1) : sf.c[static_cast<std::size_t>(i)] * pw;
    }
    UniPoly monic{std::move(mc)};
    std::vector<Rat> cands;
    for (const auto& y : lifted_integer_roots(monic)) cands.push_back(make_rat(y, sf.lc()));
    return cands;
}

std::optional<UniPoly> divide_linear(const UniPoly& p, const Rat& root) {
    // Divide by (den*t - num); exact over Z for primitive p when root is a root.
    UniPoly lin({Int(-root.get_num()), Int(root.get_den())});
    try {
        return divexact(p, lin);
    } catch (const degeneracy_error&) {
        return std::nullopt;
    }
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw input_error("rational_roots of the zero polynomial");
    std::vector<std::pair<Rat, int>> out;
    // Roots at t = 0.
    std::size_t v = 0;
    while (v < p.c.size() && p.c[v] == 0) ++v;
    if (v > 0) out.emplace_back(Rat(0), static_cast<int>(v));
    std::vector<Int> shifted(p.c.begin() + static_cast<long>(v), p.c.end());
    UniPoly q = UniPoly(std::move(shifted)).primitive_part();
    if (q.deg() >= 1) {
        UniPoly sf = square_free_part(q);
        for (const Rat& cand : root_candidates(sf)) {
            if (sf.eval(cand) != 0) continue;
            int mult = 0;
            UniPoly rest = q;
            while (rest.deg() >= 1 && rest.eval(cand) == 0) {
                auto next = divide_linear(rest, cand);
                if (!next) break;
                rest = *next;
                ++mult;
            }
            if (mult > 0) out.emplace_back(cand, mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<std::pair<Int, int>> integer_roots(const UniPoly& p) {
    std::vector<std::pair<Int, int>> out;
    for (const auto& [r, m] : rational_roots(p))
        if (r.get_den() == 1) out.emplace_back(Int(r.get_num()), m);
    return out;
}

namespace {

struct QC {
    Rat re, im;
};
QC qc_sub(const QC& a, const QC& b) { return {a.re - b.re, a.im - b.im}; }
QC qc_mul(const QC& a, const QC& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
QC qc_div(const QC& a, const QC& b) {
    Rat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
QC qc_eval(const UniPoly& g, const QC& z) {
    QC acc{Rat(0), Rat(0)};
    for (auto it = g.c.rbegin(); it != g.c.rend(); ++it) {
        acc = qc_mul(acc, z);
        acc.re += Rat(*it);
    }
    return acc;
}

Rat round_dyadic(const Rat& x, unsigned bits) {
    Int scale = Int(1) << bits;
    Rat scaled = x * Rat(scale);
    Int num = scaled.get_num(), den = scaled.get_den();
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;
    return make_rat(q, scale);
}

std::vector<std::complex<double>> durand_kerner(const UniPoly& g, int rotate_seed) {
    const int d = g.deg();
    double maxc = 0;
    for (const auto& x : g.c) maxc = std::max(maxc, std::abs(log2_of(x == 0 ? Int(1) : x)));
    std::vector<double> cd(g.c.size());
    // Scale coefficients by a common power of two so doubles stay finite.
    long shift = 0;
    if (maxc > 900) shift = static_cast<long>(maxc) - 900;
    for (std::size_t i = 0; i < g.c.size(); ++i) {
        long e = 0;
        double m = mpz_get_d_2exp(&e, g.c[i].get_mpz_t());
        cd[i] = m * std::pow(2.0, std::min<double>(static_cast<double>(e - shift), 1000.0));
    }
    double radius = 1.0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, 2.0 * std::pow(std::abs(cd[static_cast<std::size_t>(i)] / cd[static_cast<std::size_t>(d)]), 1.0 / (d - i)));
    std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        double ang = 2.0 * 3.14159265358979323846 * (k + 0.25 + 0.13 * rotate_seed) / d + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius, ang);
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int i = d; i >= 0; --i) acc = acc * x + cd[static_cast<std::size_t>(i)];
        return acc;
    };
    for (int iter = 0; iter < 600; ++iter) {
        double worst = 0;
        for (int k = 0; k < d; ++k) {
            std::complex<double> num = eval(z[static_cast<std::size_t>(k)]);
            std::complex<double> denom = cd[static_cast<std::size_t>(d)];
            for (int j = 0; j < d; ++j)
                if (j != k) denom *= (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            if (std::abs(denom) == 0.0) continue;
            std::complex<double> delta = num / denom;
            z[static_cast<std::size_t>(k)] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[static_cast<std::size_t>(k)])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

}  // namespace

std::vector<ApproxRoot> complex_roots_approx(const UniPoly& p, const Rat& eps) {
    if (p.is_zero()) throw input_error("complex_roots_approx of the zero polynomial");
    if (eps <= 0) throw input_error("eps must be positive");
    std::vector<ApproxRoot> out;
    std::size_t v = 0;
    while (v < p.c.size() && p.c[v] == 0) ++v;
    for (std::size_t i = 0; i < v; ++i) out.push_back({Rat(0), Rat(0)});
    std::vector<Int> shifted(p.c.begin() + static_cast<long>(v), p.c.end());
    UniPoly q = UniPoly(std::move(shifted)).primitive_part();
    if (q.deg() >= 1) {
        for (const auto& [g, mult] : square_free_decomposition(q)) {
            const int d = g.deg();
            if (d == 1) {
                Rat root = -Rat(g.c[0]) / Rat(g.c[1]);
                for (int r = 0; r < mult; ++r) out.push_back({root, root * 0});
                continue;
            }
            // eps certificate: min-distance <= (|g(z)|/|lc|)^(1/d) <= eps.
            Rat eps_pow(1);
            for (int i = 0; i < d; ++i) eps_pow *= eps;
            Rat target_sq = eps_pow * eps_pow * Rat(g.lc() * g.lc());
            for (int attempt = 0; attempt < 4; ++attempt) {
                std::vector<ApproxRoot> roots_g;
                bool ok = true;
                auto starts = durand_kerner(g, attempt);
                for (const auto& z0 : starts) {
                    QC z{Rat(0), Rat(0)};
                    mpq_set_d(z.re.get_mpq_t(), std::real(z0));
                    mpq_set_d(z.im.get_mpq_t(), std::imag(z0));
                    UniPoly gd = g.derivative();
                    bool certified = false;
                    unsigned bits = 80;
                    for (int it = 0; it < 80 && !certified; ++it) {
                        QC val = qc_eval(g, z);
                        Rat val_sq = val.re * val.re + val.im * val.im;
                        if (val_sq <= target_sq) {
                            certified = true;
                            break;
                        }
                        QC der = qc_eval(gd, z);
                        if (der.re == 0 && der.im == 0) break;
                        QC step = qc_div(val, der);
                        z = qc_sub(z, step);
                        bits += 32;
                        z.re = round_dyadic(z.re, bits);
                        z.im = round_dyadic(z.im, bits);
                    }
                    if (!certified) {
                        ok = false;
                        break;
                    }
                    roots_g.push_back({z.re, z.im});
                }
                if (ok) {
                    for (const auto& r : roots_g)
                        for (int k = 0; k < mult; ++k) out.push_back(r);
                    goto factor_done;
                }
            }
            {
                std::ostringstream os;
                os << "root approximation did not converge for " << g.to_string();
                throw degeneracy_error(os.str());
            }
        factor_done:;
        }
    }
    std::sort(out.begin(), out.end(), [](const ApproxRoot& a, const ApproxRoot& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return out;
}

}  // namespace toric
