#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "dt4/errors.hpp"

namespace dt4 {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline int rat_sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return abs(r); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) throw Error("rat_pow: 0 raised to nonpositive power");
    Rat b = base;
    long n = e;
    if (n < 0) {
        b = Rat(1) / b;
        n = -n;
    }
    Rat out(1);
    while (n > 0) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

// Positive g such that dividing each value by g yields coprime integers.
// Empty or all-zero input gives 0.
inline Rat rat_content(std::span<const Rat> vals) {
    Int g(0), l(1);
    for (const Rat& v : vals) {
        if (v == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    }
    if (g == 0) return Rat(0);
    Rat out(g, l);
    out.canonicalize();
    return out;
}

inline long int_to_long(const Int& v) {
    if (!v.fits_slong_p()) throw Error("integer out of machine range");
    return v.get_si();
}

// Small random rationals for Schwartz-Zippel style identity testing.
// All draws flow from the single seed so runs are reproducible.
class RatSampler {
public:
    explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

    // Nonzero p/q with small |p| and q.
    Rat next() {
        std::uniform_int_distribution<int> num(-12, 12);
        std::uniform_int_distribution<int> den(1, 8);
        int p = 0;
        while (p == 0) p = num(rng_);
        return rat(p, den(rng_));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace dt4
