#pragma once

#include "d21a/rootsys.hpp"

#include <array>
#include <string>

namespace d21a {

inline constexpr int kAlgDim = 17;

// Fixed basis order.  Odd root vectors are named by their roots: e1,e2,e3
// sit at the simple roots b1,b2,b3, e123 at b1+b2+b3, and f* at the
// negatives.  E_i,F_i,H_i are the sl2 triples at the positive even roots
// a1 = b2+b3, a2 = b1+b3, a3 = b1+b2.
enum BasisIndex : int {
    be1 = 0, be2, be3, be123,
    bf1, bf2, bf3, bf123,
    bE1, bE2, bE3,
    bF1, bF2, bF3,
    bH1, bH2, bH3,
};

// An element as coefficients over the fixed basis.
struct GElem {
    std::array<Scalar, kAlgDim> c{};

    static GElem basis(int i);
    bool is_zero() const;
    GElem operator-() const;
    GElem& operator+=(const GElem& o);
    GElem& operator-=(const GElem& o);
    GElem scaled(const Scalar& s) const;
    friend bool operator==(const GElem& x, const GElem& y) { return x.c == y.c; }
    std::string str() const; // deterministic rendering over basis names
};

/*
 * Structure constants of the 17-dimensional exceptional family at parameter
 * "a", realized on  sl2 x sl2 x sl2  acting on the cube  V1 (x) V2 (x) V3
 * of two-dimensional symplectic spaces.  The odd part has basis
 * v_{e1 e2 e3} with e_k in {+,-}; the bracket of two odd vectors contracts
 * two slots with the symplectic form <+,-> = 1 and symmetrizes the third
 * into its sl2 via s(+,+) = 2E, s(-,-) = -2F, s(+,-) = -H, weighted by
 *   sigma = ( (-1-a)/2 , a/2 , 1/2 ),   sigma1+sigma2+sigma3 = 0.
 *
 * Chevalley normalization table (all coefficients 1):
 *   e1 = v_{-++}   e2 = v_{+-+}   e3 = v_{++-}   e123 = v_{+++}
 *   f1 = v_{+--}   f2 = v_{-+-}   f3 = v_{--+}   f123 = v_{---}
 * With this choice h_i = [e_i, f_i] satisfies b_j(h_i) = A_ij exactly:
 *   h1 = (1+a)/2 H1 + a/2 H2 + 1/2 H3
 *   h2 = -(1+a)/2 H1 - a/2 H2 + 1/2 H3
 *   h3 = -(1+a)/2 H1 + a/2 H2 - 1/2 H3
 */
class AlgebraTable {
public:
    static AlgebraTable build(const Scalar& alpha);

    const Scalar& alpha() const { return alpha_; }

    Parity parity(int i) const { return i < 8 ? Parity::odd : Parity::even; }
    // Root of a basis vector over the distinguished simples ((0,0,0) for
    // Cartan elements).
    std::array<int, 3> root_coords(int i) const { return root_[i]; }
    // Weight of a basis vector under (H1, H2, H3).
    std::array<int, 3> h_weight(int i) const { return hw_[i]; }
    std::string basis_name(int i) const;

    const GElem& bracket(int i, int j) const { return table_[i][j]; }
    GElem bracket(const GElem& x, const GElem& y) const;

    // Chevalley generators, i in {1,2,3}; h(i) = bracket(e(i), f(i)).
    GElem e(int i) const { return GElem::basis(be1 + (i - 1)); }
    GElem f(int i) const { return GElem::basis(bf1 + (i - 1)); }
    GElem h(int i) const { return chevalley_h_[i - 1]; }

    // Transpose antiautomorphism: fixes the Cartan subalgebra pointwise,
    // swaps e_i with f_i (all four odd pairs carry no sign), and sends
    // E_i to -F_i, F_i to -E_i; these even signs are forced by extending
    // the generator assignment without a sign twist.
    GElem omega(const GElem& x) const;

    // Weight of a lattice vector under (H1, H2, H3).
    static std::array<int, 3> h_weight_of(const std::array<int, 3>& q);

    // Full bracket table as text, deterministic row order.
    std::string dump_table() const;

private:
    AlgebraTable() = default;
    Scalar alpha_;
    std::array<std::array<GElem, kAlgDim>, kAlgDim> table_;
    std::array<std::array<int, 3>, kAlgDim> root_;
    std::array<std::array<int, 3>, kAlgDim> hw_;
    std::array<GElem, 3> chevalley_h_;
    std::array<GElem, kAlgDim> omega_;
};

} // namespace d21a
