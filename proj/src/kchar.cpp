#include "dt4/kchar.hpp"

namespace dt4 {

LaurentChar LaurentChar::monomial(int rank, Exp e, Int mult) {
    LaurentChar c(rank);
    c.add_term(e, mult);
    return c;
}

Int LaurentChar::multiplicity(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentChar::mass() const {
    Int m(0);
    for (const auto& [e, mult] : terms_) m += mult;
    return m;
}

void LaurentChar::add_term(const Exp& e, const Int& mult) {
    if (mult == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, mult);
    } else {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentChar& LaurentChar::operator+=(const LaurentChar& o) {
    for (const auto& [e, m] : o.terms_) add_term(e, m);
    return *this;
}

LaurentChar& LaurentChar::operator-=(const LaurentChar& o) {
    for (const auto& [e, m] : o.terms_) add_term(e, -m);
    return *this;
}

LaurentChar operator*(const LaurentChar& a, const LaurentChar& b) {
    LaurentChar out(a.rank());
    for (const auto& [ea, ma] : a.terms())
        for (const auto& [eb, mb] : b.terms()) {
            LaurentChar::Exp e;
            for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ma * mb);
        }
    return out;
}

LaurentChar LaurentChar::shifted(const Exp& s) const {
    LaurentChar out(rank_);
    for (const auto& [e, m] : terms_) {
        Exp f;
        for (int i = 0; i < 4; ++i) f[i] = e[i] + s[i];
        out.terms_.emplace(f, m);
    }
    return out;
}

LaurentChar LaurentChar::negated() const {
    LaurentChar out(rank_);
    for (const auto& [e, m] : terms_) out.terms_.emplace(e, -m);
    return out;
}

LaurentChar bar(const LaurentChar& chi) {
    LaurentChar out(chi.rank());
    for (const auto& [e, m] : chi.terms()) {
        LaurentChar::Exp f;
        for (int i = 0; i < 4; ++i) f[i] = -e[i];
        out.add_term(f, m);
    }
    return out;
}

LaurentChar char_of_partition(const DPartition& pi) {
    if (pi.dim() != 3) throw ParseError("char_of_partition expects dim 3");
    LaurentChar z(4);
    for (const auto& c : pi.cells())
        z.add_term({c[0] - 1, c[1] - 1, c[2] - 1, c[3] - 1}, Int(1));
    return z;
}

LaurentChar vertex_character(const LaurentChar& z) {
    if (z.rank() != 4) throw ParseError("vertex_character expects rank 4");
    for (const auto& [e, m] : z.terms())
        if (m < 0) throw ParseError("vertex_character expects an effective character");

    const LaurentChar::Exp inv_cy{-1, -1, -1, -1};
    LaurentChar zbar = bar(z);

    // (1-t1)(1-t2)(1-t3)(1-t4), expanded over subsets.
    LaurentChar box(4);
    for (int s = 0; s < 16; ++s) {
        LaurentChar::Exp e{};
        int bits = 0;
        for (int i = 0; i < 4; ++i)
            if (s & (1 << i)) {
                e[i] = 1;
                ++bits;
            }
        box.add_term(e, (bits % 2 == 0) ? Int(1) : Int(-1));
    }

    LaurentChar v = z;
    v += zbar.shifted(inv_cy);
    v -= (z * zbar * box).shifted(inv_cy);
    return v;
}

LaurentChar specialize_cy(const LaurentChar& chi) {
    if (chi.rank() != 4) throw ParseError("specialize_cy expects rank 4");
    LaurentChar out(3);
    for (const auto& [e, m] : chi.terms())
        out.add_term({e[0] - e[3], e[1] - e[3], e[2] - e[3], 0}, m);
    return out;
}

bool is_bar_symmetric(const LaurentChar& chi) {
    return bar(chi) == chi;
}

}  // namespace dt4
