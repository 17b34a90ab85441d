#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "dt4/kchar.hpp"
#include "dt4/partition.hpp"
#include "dt4/poly.hpp"

namespace dt4 {

// c1*l1 + c2*l2 + c3*l3 over a coefficient ring R (lambda4 eliminated via
// lambda4 = -(l1+l2+l3)). Stored primitive with positive leading
// coefficient once normalized; the extracted unit lives in the owning
// scalar.
template <typename R>
struct LinearForm {
    std::array<R, 3> c;

    bool is_zero() const {
        return ring_is_zero(c[0]) && ring_is_zero(c[1]) && ring_is_zero(c[2]);
    }

    // Divide out content and make the leading nonzero coefficient
    // positive; returns the extracted rational unit.
    Rat normalize() {
        std::array<Rat, 3> contents{ring_rational_content(c[0]),
                                    ring_rational_content(c[1]),
                                    ring_rational_content(c[2])};
        std::vector<Rat> nz;
        for (const Rat& g : contents)
            if (g != 0) nz.push_back(g);
        if (nz.empty()) return Rat(1);
        Rat g = rat_content(nz);
        int sign = 0;
        for (const R& x : c)
            if (!ring_is_zero(x)) {
                sign = ring_leading_sign(x);
                break;
            }
        Rat unit = sign < 0 ? -g : g;
        for (R& x : c) x = ring_scale(x, Rat(1) / unit);
        return unit;
    }

    Rat eval(std::span<const Rat> lambda, std::span<const Rat> params) const {
        Rat out(0);
        for (int i = 0; i < 3; ++i) out += ring_eval(c[i], params) * lambda[i];
        return out;
    }

    bool operator==(const LinearForm& o) const { return c == o.c; }
    bool operator<(const LinearForm& o) const {
        for (int i = 0; i < 3; ++i) {
            int v = ring_cmp(c[i], o.c[i]);
            if (v != 0) return v < 0;
        }
        return false;
    }
};

// Rational function kept as a multiset of primitive linear forms with
// integer exponents plus a scalar. The canonical zero has scalar 0 and no
// factors; otherwise the scalar is nonzero.
template <typename R>
struct FactoredValue {
    Rat scalar{1};
    std::map<LinearForm<R>, int> factors;

    static FactoredValue one() { return FactoredValue{}; }
    static FactoredValue zero() { return FactoredValue{Rat(0), {}}; }

    bool is_zero() const { return scalar == 0; }

    // Multiply in form^e. A zero form with e > 0 collapses the value to
    // the canonical zero; with e < 0 it is a division by zero.
    void mul_form(LinearForm<R> f, int e) {
        if (e == 0 || is_zero()) return;
        if (f.is_zero()) {
            if (e < 0) throw ZeroWeightError("division by identically zero form");
            *this = zero();
            return;
        }
        Rat unit = f.normalize();
        scalar *= rat_pow(unit, e);
        auto it = factors.find(f);
        if (it == factors.end()) {
            factors.emplace(std::move(f), e);
        } else {
            it->second += e;
            if (it->second == 0) factors.erase(it);
        }
    }

    FactoredValue& operator*=(const FactoredValue& o) {
        if (is_zero()) return *this;
        if (o.is_zero()) {
            *this = zero();
            return *this;
        }
        scalar *= o.scalar;
        for (const auto& [f, e] : o.factors) mul_form(f, e);
        return *this;
    }
    friend FactoredValue operator*(FactoredValue a, const FactoredValue& b) {
        return a *= b;
    }

    // Sum of exponents; every stored form is homogeneous of degree 1.
    int total_degree() const {
        int d = 0;
        for (const auto& [f, e] : factors) d += e;
        return d;
    }
};

// Exact value at a lambda-point with an assignment for the R-generators.
// Throws PoleHitError when a denominator factor vanishes at the point.
template <typename R>
Rat evaluate(const FactoredValue<R>& f, std::span<const Rat> lambda,
             std::span<const Rat> params = {}) {
    if (f.is_zero()) return Rat(0);
    for (const auto& [form, e] : f.factors)
        if (e < 0 && form.eval(lambda, params) == 0)
            throw PoleHitError("denominator factor vanishes at sample point");
    Rat out = f.scalar;
    for (const auto& [form, e] : f.factors) {
        Rat v = form.eval(lambda, params);
        if (v == 0) return Rat(0);
        out *= rat_pow(v, e);
    }
    return out;
}

template <typename R>
FactoredValue<R> lift_factored(const FactoredValue<Rat>& f) {
    FactoredValue<R> out;
    out.scalar = f.scalar;
    for (const auto& [form, e] : f.factors) {
        LinearForm<R> g{{ring_from_rat<R>(form.c[0]), ring_from_rat<R>(form.c[1]),
                         ring_from_rat<R>(form.c[2])}};
        out.mul_form(g, e);
    }
    return out;
}

// e_T of a rank-3 character: product over terms of (a*l1+b*l2+c*l3)^mult.
// A term at the zero exponent means a torus-fixed part, which the
// framework forbids; surfaced as ZeroWeightError.
FactoredValue<Rat> euler_class(const LaurentChar& chi);

enum class PairRule { LexPositive, LexNegative };

// The square-root weight w_pi: vertex terms come in {w, -w} pairs after
// the CY specialization; the canonical representative is the
// lexicographically positive one. w^2 = (-1)^{|pi|} e_T(-V_pi).
FactoredValue<Rat> vertex_weight(const DPartition& pi,
                                 PairRule rule = PairRule::LexPositive);

// L_pi(d1,d2,d3,d4): product over cells (i,j,k,l) of the form whose
// lambda_m coefficient is (d_m + c_m - 1) - (d4 + l - 1), m = 1,2,3.
// Zero factors are legal here; they collapse the value to zero.
template <typename R>
FactoredValue<R> tautological_factor(const DPartition& pi,
                                     const std::array<R, 4>& d) {
    if (pi.dim() != 3) throw ParseError("tautological_factor expects dim 3");
    auto out = FactoredValue<R>::one();
    for (const auto& cell : pi.cells()) {
        LinearForm<R> f;
        for (int m = 0; m < 3; ++m)
            f.c[m] = d[m] - d[3] + ring_from_rat<R>(Rat(cell[m] - cell[3]));
        out.mul_form(std::move(f), 1);
        if (out.is_zero()) break;
    }
    return out;
}

inline std::array<Poly4, 4> symbolic_d4() {
    return {Poly4::var(0), Poly4::var(1), Poly4::var(2), Poly4::var(3)};
}
// The specialization (d1,d2,d3,d4) = (0,0,0,-d).
inline std::array<Poly1, 4> symbolic_d_axis4() {
    return {Poly1(0L), Poly1(0L), Poly1(0L), -Poly1::var(0)};
}

// Result of the s -> 0 limit: a scalar times a factored polynomial in d.
// Factors are primitive with positive leading coefficient.
struct SpecializedLimit {
    Rat scalar;
    std::map<Poly1, int> factors;

    Poly1 expanded() const {
        Poly1 out(scalar);
        for (const auto& [p, e] : factors) {
            if (e < 0) throw Error("cannot expand a factored value with poles");
            for (int i = 0; i < e; ++i) out = out * p;
        }
        return out;
    }
};

// Rewrites every form in the basis (l1, l2, s), s = l1+l2+l3, and takes
// the s -> 0 limit. Property (a): net s-exponent of the degenerate
// factors is 0. Property (b): the non-degenerate factors at s = 0 cancel
// to a scalar. Returns the scalar times the degenerate coefficients.
SpecializedLimit specialize_limit(const FactoredValue<Poly1>& f);

}  // namespace dt4
