#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

// Input/validation problems (CLI exit code 1).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Algorithmic degeneracy: a violated genericity or dimension assumption
// (CLI exit code 2). The message names the violated assumption.
struct degeneracy_error : std::runtime_error {
    explicit degeneracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Configured resource cap exceeded (CLI exit code 1).
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// Seeded deterministic generator (splitmix64). We avoid std distributions:
// their streams are implementation-defined, and this program promises
// byte-identical output for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw input_error("Rng::below(0)");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    long long int_in(long long lo, long long hi) {
        if (lo > hi) throw input_error("Rng::int_in empty range");
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Independent stream for a sub-task; stable under unrelated draws.
    Rng derive(std::uint64_t tag) const {
        Rng child(state_ ^ (0xa0761d6478bd642fULL * (tag + 1)));
        child.next_u64();
        return child;
    }

private:
    std::uint64_t state_;
};

// Size of an integer: 1 + ceil(log2(|c|+1)).
inline long int_bit_size(const Int& c) {
    Int a = abs(c) + 1;
    if (a == 1) return 1;
    std::size_t s = mpz_sizeinbase(a.get_mpz_t(), 2);  // floor(log2 a)+1
    // ceil(log2 a) = s-1 when a is a power of two, else s.
    bool pow2 = mpz_scan1(a.get_mpz_t(), 0) == s - 1;
    return 1 + static_cast<long>(pow2 ? s - 1 : s);
}

inline double log2_of(const Int& v) {
    if (v == 0) throw input_error("log2 of zero");
    long exp = 0;
    double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::abs(m) == 0.0 ? 0.0 : (std::log2(std::abs(m)) + static_cast<double>(exp));
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace toric
