#pragma once

#include <array>
#include <map>

#include "dt4/partition.hpp"
#include "dt4/rational.hpp"

namespace dt4 {

// Finitely supported integer-multiplicity map on the character lattice of
// the 4-torus (rank 4) or the Calabi-Yau 3-torus (rank 3). Unused trailing
// exponent slots are zero. No stored zero multiplicities.
class LaurentChar {
public:
    using Exp = std::array<int, 4>;

    explicit LaurentChar(int rank) : rank_(rank) {}

    static LaurentChar monomial(int rank, Exp e, Int mult = Int(1));

    int rank() const { return rank_; }
    const std::map<Exp, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int multiplicity(const Exp& e) const;
    // Sum of multiplicities (signed mass).
    Int mass() const;

    void add_term(const Exp& e, const Int& mult);

    LaurentChar& operator+=(const LaurentChar& o);
    LaurentChar& operator-=(const LaurentChar& o);
    friend LaurentChar operator+(LaurentChar a, const LaurentChar& b) { return a += b; }
    friend LaurentChar operator-(LaurentChar a, const LaurentChar& b) { return a -= b; }
    friend LaurentChar operator*(const LaurentChar& a, const LaurentChar& b);
    // Multiplication by the monomial t^e (an exponent shift).
    LaurentChar shifted(const Exp& e) const;
    LaurentChar negated() const;

    bool operator==(const LaurentChar& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }

private:
    int rank_;
    std::map<Exp, Int> terms_;
};

// The bar involution: exponent negation.
LaurentChar bar(const LaurentChar& chi);

// Z_pi = sum over cells (i,j,k,l) of t1^{i-1} t2^{j-1} t3^{k-1} t4^{l-1}.
LaurentChar char_of_partition(const DPartition& pi);

// V = Z + Zbar/(t1t2t3t4) - Z*Zbar*(1-t1)(1-t2)(1-t3)(1-t4)/(t1t2t3t4).
LaurentChar vertex_character(const LaurentChar& z);

// Image under t4 -> (t1t2t3)^{-1}: exponent (a,b,c,e) -> (a-e,b-e,c-e).
LaurentChar specialize_cy(const LaurentChar& chi);

// Fixed by bar, i.e. terms come in Serre dual pairs.
bool is_bar_symmetric(const LaurentChar& chi);

}  // namespace dt4
