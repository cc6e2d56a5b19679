#pragma once

#include "d21a/scalar.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace d21a {

enum class Parity { even, odd };

// A root written over the distinguished simple roots b1, b2, b3 (all odd).
// Parity is redundant with the coordinate sum mod 2 but stored for clarity.
struct Root {
    std::array<int, 3> c{};
    Parity parity = Parity::even;

    friend bool operator==(const Root& x, const Root& y) { return x.c == y.c; }
    friend bool operator!=(const Root& x, const Root& y) { return !(x == y); }
    Root operator-() const { return Root{{-c[0], -c[1], -c[2]}, parity}; }
    std::string str() const;
};

// A weight recorded by its values on the distinguished Cartan basis
// h1, h2, h3, i.e. lambda_i = lambda(h_i) = (lambda, b_i).
struct Weight {
    std::array<Scalar, 3> v{};

    friend bool operator==(const Weight& x, const Weight& y) { return x.v == y.v; }
    friend bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }
};

// An ordered set of three simple roots.
struct Base {
    std::array<Root, 3> simple;

    friend bool operator==(const Base& x, const Base& y) { return x.simple == y.simple; }
};

// The root datum of the family, over symbolic "a" by default or with the
// parameter pinned to a rational value (excluded values 0 and -1 rejected).
class RootSystem {
public:
    explicit RootSystem(Scalar alpha = Scalar::alpha());

    const Scalar& alpha() const { return alpha_; }

    // Defining symmetric form: (b_i, b_j) is the Cartan matrix entry A_ij.
    Scalar cartan(int i, int j) const { return A_[i][j]; }
    Scalar form(const Root& x, const Root& y) const;
    Scalar form(const Weight& lam, const Root& y) const;
    Scalar form(const Weight& x, const Weight& y) const;

    // Eigenvalues of the even Cartan triple: c_i = lambda(H_i)
    //   c1 = (l2+l3)/(-a-1),  c2 = (l1+l3)/a,  c3 = l1+l2.
    std::array<Scalar, 3> c_values(const Weight& lam) const;

    // All l_i nonzero and l1+l2+l3 nonzero.
    bool is_typical(const Weight& lam) const;

    Base distinguished() const;

    // Odd reflection at an odd isotropic simple root of the base.
    Base odd_reflect(const Base& base, const Root& beta) const;
    // Highest-weight transport along the same reflection:
    // lambda - beta when (lambda, beta) != 0, else lambda.
    Weight reflect_weight(const Base& base, const Weight& lam, const Root& beta) const;

    // Half sum of positive even roots minus half sum of positive odd roots,
    // as a Weight.
    Weight rho(const Base& base) const;

    // 3 even + 4 odd positive roots of the base, each a nonnegative integer
    // combination of the base's simples.
    std::vector<Root> positive_roots(const Base& base) const;
    // Coordinates of a root over the base's simples, when integral; lattice
    // vectors that are not roots get no coordinates.
    std::optional<std::array<int, 3>> coords_in_base(const Base& base, const Root& r) const;

    // Closure of the distinguished base under odd reflections (breadth
    // first, deterministic order, distinguished base first).
    std::vector<Base> bases() const;

    // Canonical label of the decorated diagram: vertex parities plus the
    // pairwise form values, minimized over vertex relabelings.
    std::string diagram_shape(const Base& base) const;

    // The even root lattice Q0 has index 2 in Q; the class of a lattice
    // point is its coordinate sum mod 2 over the distinguished simples.
    static int coset_class(const std::array<int, 3>& q);

    // All 14 roots (6 even, 8 odd), deterministic order.
    const std::vector<Root>& all_roots() const { return roots_; }

    // The weight q(h_i) = (b_i, q) of a lattice vector, used to move between
    // lattice and weight coordinates.
    Weight weight_of(const Root& q) const;

private:
    Scalar alpha_;
    std::array<std::array<Scalar, 3>, 3> A_;
    std::vector<Root> roots_;
};

Root make_root(int c1, int c2, int c3);

} // namespace d21a
