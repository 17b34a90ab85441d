#include "dt4/localization.hpp"

#include <algorithm>

namespace dt4 {

namespace {

bool lex_positive(const LaurentChar::Exp& e) {
    for (int i = 0; i < 3; ++i) {
        if (e[i] > 0) return true;
        if (e[i] < 0) return false;
    }
    return false;  // zero vector, callers exclude it
}

LinearForm<Rat> form_of_exp(const LaurentChar::Exp& e) {
    return LinearForm<Rat>{{Rat(e[0]), Rat(e[1]), Rat(e[2])}};
}

}  // namespace

FactoredValue<Rat> euler_class(const LaurentChar& chi) {
    if (chi.rank() != 3) throw ParseError("euler_class expects rank 3");
    auto out = FactoredValue<Rat>::one();
    for (const auto& [e, m] : chi.terms()) {
        if (e[0] == 0 && e[1] == 0 && e[2] == 0)
            throw ZeroWeightError("character has a torus-fixed part");
        out.mul_form(form_of_exp(e), static_cast<int>(int_to_long(m)));
    }
    return out;
}

FactoredValue<Rat> vertex_weight(const DPartition& pi, PairRule rule) {
    LaurentChar v = specialize_cy(vertex_character(char_of_partition(pi)));

    if (v.multiplicity({0, 0, 0, 0}) != 0)
        throw ZeroWeightError("vertex of " + pi.canonical_key() +
                              " has a torus-fixed part");

    // Group terms into {w, -w} pairs; bar-symmetry guarantees equal
    // multiplicities, anything else is an upstream bug.
    auto out = FactoredValue<Rat>::one();
    for (const auto& [e, m] : v.terms()) {
        bool take = lex_positive(e);
        if (rule == PairRule::LexNegative) take = !take;
        if (!take) continue;
        LaurentChar::Exp neg{-e[0], -e[1], -e[2], 0};
        if (v.multiplicity(neg) != m)
            throw UnpairableError("vertex of " + pi.canonical_key() +
                                  " is not bar-symmetric");
        // w_pi = prod over pair representatives of (w.lambda)^{-mult}.
        out.mul_form(form_of_exp(e), static_cast<int>(-int_to_long(m)));
    }
    return out;
}

SpecializedLimit specialize_limit(const FactoredValue<Poly1>& f) {
    if (f.is_zero()) return SpecializedLimit{Rat(0), {}};

    long s_order = 0;
    Rat scalar = f.scalar;
    std::map<Poly1, int> degenerate;
    std::map<std::array<Poly1, 2>, int> residual;

    for (const auto& [form, e] : f.factors) {
        Poly1 a = form.c[0] - form.c[2];
        Poly1 b = form.c[1] - form.c[2];
        if (a.is_zero() && b.is_zero()) {
            // Pure s-factor: coefficient c3, s-exponent e.
            s_order += e;
            Poly1 c3 = form.c[2];
            Rat g = c3.rational_content();
            if (rat_sign(c3.leading_coeff()) < 0) g = -g;
            scalar *= rat_pow(g, e);
            c3 = c3.scaled(Rat(1) / g);
            if (!c3.is_constant()) {
                auto it = degenerate.find(c3);
                if (it == degenerate.end())
                    degenerate.emplace(std::move(c3), e);
                else if ((it->second += e) == 0)
                    degenerate.erase(it);
            }
        } else {
            // Survives at s = 0 as a*l1 + b*l2; normalize and collect for
            // multiset cancellation.
            std::vector<Rat> nz;
            for (const Poly1* p : {&a, &b})
                if (!p->is_zero()) nz.push_back(p->rational_content());
            Rat g = rat_content(nz);
            int sign = a.is_zero() ? rat_sign(b.leading_coeff())
                                   : rat_sign(a.leading_coeff());
            Rat unit = sign < 0 ? -g : g;
            scalar *= rat_pow(unit, e);
            std::array<Poly1, 2> key{a.scaled(Rat(1) / unit), b.scaled(Rat(1) / unit)};
            auto it = residual.find(key);
            if (it == residual.end())
                residual.emplace(std::move(key), e);
            else if ((it->second += e) == 0)
                residual.erase(it);
        }
    }

    if (s_order < 0)
        throw PoleAtSpecializationError("net s-exponent " + std::to_string(s_order));
    if (s_order > 0)
        throw ZeroAtSpecializationError("net s-exponent " + std::to_string(s_order));
    if (!residual.empty())
        throw NotConstantError("residual lambda-dependence after s -> 0");

    return SpecializedLimit{scalar, std::move(degenerate)};
}

}  // namespace dt4
