#include "toric/detmat.hpp"

#include <cstdint>

namespace toric {

namespace {

std::uint64_t mulmod31(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // p < 2^31, operands reduced, so the product fits
}

std::uint64_t powmod31(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mulmod31(r, base, p);
        base = mulmod31(base, base, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_small(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

const std::vector<std::uint32_t>& crt_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<std::uint32_t> v;
        std::uint32_t p = 0x7fffffffu;  // 2^31 - 1
        while (v.size() < 512) {
            if (is_prime_small(p)) v.push_back(p);
            p -= 2;
        }
        return v;
    }();
    return primes;
}

// Determinant over F_p by Gaussian elimination.
std::uint64_t det_mod_p(const IntMatrix& a, std::uint64_t p) {
    const std::size_t n = a.size();
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = mpz_fdiv_ui(a[i][j].get_mpz_t(), static_cast<unsigned long>(p));
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = p - det;
            if (det == p) det = 0;
        }
        const std::uint64_t pivot = m[col][col];
        det = mulmod31(det, pivot, p);
        const std::uint64_t inv = powmod31(pivot, p - 2, p);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            const std::uint64_t f = mulmod31(m[i][col], inv, p);
            for (std::size_t j = col; j < n; ++j) {
                std::uint64_t sub = mulmod31(f, m[col][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
    }
    return det;
}

}  // namespace

Int hadamard_bound_sq(const IntMatrix& a) {
    Int prod = 1;
    for (const auto& row : a) {
        Int s = 0;
        for (const auto& x : row) s += x * x;
        if (s == 0) return 0;
        prod *= s;
    }
    return prod;
}

Int det_bareiss(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

Int det_modular(const IntMatrix& a) {
    Int bound_sq = hadamard_bound_sq(a);
    if (bound_sq == 0) return 0;
    Int bound = sqrt(bound_sq) + 1;
    // CRT modulus must exceed 2*|det|.
    Int target = 2 * bound + 1;
    Int modulus = 1;
    Int value = 0;
    for (std::uint32_t p32 : crt_primes()) {
        const std::uint64_t p = p32;
        std::uint64_t r = det_mod_p(a, p);
        // value += modulus * ((r - value) * inv(modulus) mod p)
        std::uint64_t vmod = mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(p));
        std::uint64_t mmod = mpz_fdiv_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p));
        std::uint64_t diff = (r + p - vmod) % p;
        std::uint64_t t = mulmod31(diff, powmod31(mmod, p - 2, p), p);
        value += modulus * Int(static_cast<unsigned long>(t));
        modulus *= Int(static_cast<unsigned long>(p));
        if (modulus > target) break;
    }
    if (modulus <= target) throw degeneracy_error("determinant exceeds CRT prime pool");
    if (value * 2 > modulus) value -= modulus;
    return value;
}

Int det_exact(const IntMatrix& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw input_error("determinant of non-square matrix");
    if (a.size() <= 12) return det_bareiss(a);
    return det_modular(a);
}

}  // namespace toric
