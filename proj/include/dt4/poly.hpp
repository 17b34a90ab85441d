#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dt4/rational.hpp"

namespace dt4 {

// Sparse polynomial in N variables over Q. Exponents are non-negative;
// terms are kept in lexicographic order with no zero coefficients, so
// equal polynomials have identical term maps.
template <int N>
class Poly {
public:
    using Exp = std::array<int, N>;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) terms_[Exp{}] = c;
    }
    explicit Poly(long c) : Poly(Rat(c)) {}

    static Poly var(int i, int power = 1) {
        Poly p;
        Exp e{};
        e[i] = power;
        p.terms_[e] = Rat(1);
        return p;
    }

    static Poly from_terms(std::map<Exp, Rat> t) {
        Poly p;
        for (auto& [e, c] : t)
            if (c != 0) p.terms_.emplace(e, c);
        return p;
    }

    const std::map<Exp, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{});
    }
    Rat constant_value() const {
        auto it = terms_.find(Exp{});
        return it == terms_.end() ? Rat(0) : it->second;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    // Coefficient of the monomial with exponent vector e.
    Rat coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly out;
        for (const auto& [e, c] : a.terms_) out.terms_[e] = -c;
        return out;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e;
                for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    Poly scaled(const Rat& s) const {
        Poly out;
        if (s == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_[e] = c * s;
        return out;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Total order used for canonical container keys.
    int cmp(const Poly& o) const {
        auto a = terms_.begin(), b = o.terms_.begin();
        for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
            if (a->first != b->first) return a->first < b->first ? -1 : 1;
            int c = ::cmp(a->second, b->second);
            if (c != 0) return c;
        }
        if (a != terms_.end()) return 1;
        if (b != o.terms_.end()) return -1;
        return 0;
    }
    bool operator<(const Poly& o) const { return cmp(o) < 0; }

    Rat eval(std::span<const Rat> point) const {
        Rat out(0);
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < e[i]; ++k) term *= point[i];
            out += term;
        }
        return out;
    }

    // Positive content; dividing by it leaves coprime integer coefficients.
    Rat rational_content() const {
        std::vector<Rat> vals;
        vals.reserve(terms_.size());
        for (const auto& [e, c] : terms_) vals.push_back(c);
        return rat_content(vals);
    }

    // Coefficient of the lex-largest monomial (0 for the zero polynomial).
    Rat leading_coeff() const {
        if (terms_.empty()) return Rat(0);
        return terms_.rbegin()->second;
    }

private:
    void add_term(const Exp& e, const Rat& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Exp, Rat> terms_;
};

using Poly1 = Poly<1>;
using Poly4 = Poly<4>;

// Ring glue shared by the series and factored-form templates. Every
// coefficient ring is a Q-algebra with exact equality.
inline bool ring_is_zero(const Rat& v) { return v == 0; }
template <int N>
bool ring_is_zero(const Poly<N>& v) {
    return v.is_zero();
}

inline int ring_cmp(const Rat& a, const Rat& b) { return cmp(a, b); }
template <int N>
int ring_cmp(const Poly<N>& a, const Poly<N>& b) {
    return a.cmp(b);
}

inline Rat ring_scale(const Rat& v, const Rat& s) { return v * s; }
template <int N>
Poly<N> ring_scale(const Poly<N>& v, const Rat& s) {
    return v.scaled(s);
}

// Evaluation at an assignment for the ring generators (ignored for Q).
inline Rat ring_eval(const Rat& v, std::span<const Rat>) { return v; }
template <int N>
Rat ring_eval(const Poly<N>& v, std::span<const Rat> point) {
    return v.eval(point);
}

inline Rat ring_rational_content(const Rat& v) { return rat_abs(v); }
template <int N>
Rat ring_rational_content(const Poly<N>& v) {
    return v.rational_content();
}

inline int ring_leading_sign(const Rat& v) { return rat_sign(v); }
template <int N>
int ring_leading_sign(const Poly<N>& v) {
    return rat_sign(v.leading_coeff());
}

template <typename R>
R ring_from_rat(const Rat& v) {
    return R(v);
}
template <>
inline Rat ring_from_rat<Rat>(const Rat& v) {
    return v;
}

}  // namespace dt4
