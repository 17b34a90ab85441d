#pragma once

#include <algorithm>
#include <vector>

#include "dt4/poly.hpp"

namespace dt4 {

// Formal power series truncated at an inclusive order, over an exact
// coefficient ring. Mixed-order arithmetic truncates to the minimum, so
// precision is never silently overstated.
template <typename R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(order + 1) {}
    TruncatedSeries(int order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const R& operator[](int n) const { return coeffs_[n]; }
    R& operator[](int n) { return coeffs_[n]; }
    const std::vector<R>& coeffs() const { return coeffs_; }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s[0] = ring_from_rat<R>(Rat(1));
        return s;
    }

    TruncatedSeries truncated(int order) const {
        TruncatedSeries out(order);
        for (int n = 0; n <= std::min(order, this->order()); ++n)
            out[n] = coeffs_[n];
        return out;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int ord = std::min(a.order(), b.order());
        TruncatedSeries out(ord);
        for (int n = 0; n <= ord; ++n) out[n] = a[n] + b[n];
        return out;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int ord = std::min(a.order(), b.order());
        TruncatedSeries out(ord);
        for (int n = 0; n <= ord; ++n) out[n] = a[n] - b[n];
        return out;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int ord = std::min(a.order(), b.order());
        TruncatedSeries out(ord);
        for (int i = 0; i <= ord; ++i) {
            if (ring_is_zero(a[i])) continue;
            for (int j = 0; i + j <= ord; ++j) {
                if (ring_is_zero(b[j])) continue;
                out[i + j] = out[i + j] + a[i] * b[j];
            }
        }
        return out;
    }

    bool operator==(const TruncatedSeries& o) const {
        if (order() != o.order()) return false;
        for (int n = 0; n <= order(); ++n)
            if (!(coeffs_[n] == o.coeffs_[n])) return false;
        return true;
    }

private:
    std::vector<R> coeffs_;
};

template <typename R>
TruncatedSeries<R> lift_series(const TruncatedSeries<Rat>& s) {
    TruncatedSeries<R> out(s.order());
    for (int n = 0; n <= s.order(); ++n) out[n] = ring_from_rat<R>(s[n]);
    return out;
}

// MacMahon function prod_{n>=1} (1 - (sign*q)^n)^{-n} to the given order.
inline TruncatedSeries<Rat> macmahon(int order, int sign = 1) {
    if (order < 0) throw ParseError("series order must be >= 0");
    if (sign != 1 && sign != -1) throw ParseError("macmahon sign must be +-1");
    auto out = TruncatedSeries<Rat>::one(order);
    for (int n = 1; n <= order; ++n) {
        // (1-x)^{-n} = sum_k binom(n+k-1, k) x^k with x = (sign*q)^n.
        TruncatedSeries<Rat> factor(order);
        Int binom(1);
        for (int k = 0; n * k <= order; ++k) {
            if (k > 0) {
                binom *= n + k - 1;
                binom /= k;
            }
            Rat c(binom);
            if (sign == -1 && (n * k) % 2 == 1) c = -c;
            factor[n * k] = c;
        }
        out = out * factor;
    }
    return out;
}

// log f for f with constant term 1, by the standard derivative recursion:
// n*l_n = n*a_n - sum_{k=1}^{n-1} k*l_k*a_{n-k}.
template <typename R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& f) {
    if (!(f[0] == ring_from_rat<R>(Rat(1))))
        throw BadConstantTermError("series_log needs constant term 1");
    int ord = f.order();
    TruncatedSeries<R> l(ord);
    for (int n = 1; n <= ord; ++n) {
        R acc = ring_scale(f[n], Rat(n));
        for (int k = 1; k < n; ++k) acc = acc - ring_scale(l[k] * f[n - k], Rat(k));
        l[n] = ring_scale(acc, rat(1, n));
    }
    return l;
}

// exp f for f with constant term 0: n*e_n = sum_{k=1}^{n} k*f_k*e_{n-k}.
template <typename R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& f) {
    if (!ring_is_zero(f[0]))
        throw BadConstantTermError("series_exp needs constant term 0");
    int ord = f.order();
    TruncatedSeries<R> e(ord);
    e[0] = ring_from_rat<R>(Rat(1));
    for (int n = 1; n <= ord; ++n) {
        R acc{};
        for (int k = 1; k <= n; ++k) acc = acc + ring_scale(f[k] * e[n - k], Rat(k));
        e[n] = ring_scale(acc, rat(1, n));
    }
    return e;
}

// f^c = exp(c * log f) for f(0) = 1; c may be any ring element, including
// a formal symbol, in which case coefficients are polynomials in c.
template <typename R>
TruncatedSeries<R> series_pow_scalar(const TruncatedSeries<R>& f, const R& c) {
    TruncatedSeries<R> l = series_log(f);
    for (int n = 1; n <= l.order(); ++n) l[n] = l[n] * c;
    return series_exp(l);
}

}  // namespace dt4
