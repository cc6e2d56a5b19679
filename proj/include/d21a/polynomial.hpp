#pragma once

#include "d21a/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace d21a {

// Dense univariate polynomials over Q in the deformation parameter "a".
//
// Invariant: the coefficient vector carries no trailing zeros, so the zero
// polynomial is the empty vector and degree() is -1 for it.  All operations
// are exact; division is only offered where the remainder can be checked.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat constant);
    explicit Poly(long constant) : Poly(make_rat(constant)) {}

    static Poly variable(); // the bare parameter a
    static Poly monomial(Rat coeff, std::size_t power);

    bool is_zero() const { return coef_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    Rat coeff(std::size_t k) const;
    const Rat& leading() const;
    bool is_constant() const { return coef_.size() <= 1; }
    // Value of a constant polynomial (0 for the zero polynomial).
    Rat constant_value() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(const Poly& x, const Poly& y);
    friend bool operator==(const Poly& x, const Poly& y) { return x.coef_ == y.coef_; }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    Poly scaled(const Rat& c) const;
    Poly monic() const; // leading coefficient 1; zero stays zero

    Rat eval(const Rat& x) const;

    // Quotient and remainder with deg(rem) < deg(divisor); throws on division
    // by the zero polynomial.
    static std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den);
    // Exact quotient; throws std::logic_error when the division leaves a
    // remainder (used by the fraction-free elimination, where exactness is a
    // correctness invariant, not a rounding concern).
    static Poly div_exact(const Poly& num, const Poly& den);
    // Monic gcd via the Euclidean remainder sequence over Q.
    static Poly gcd(Poly x, Poly y);

    // Three-way structural comparison (degree first, then coefficients from
    // the top); gives Scalar a total order for deterministic containers.
    static int compare(const Poly& x, const Poly& y);

private:
    std::vector<Rat> coef_;
    void trim();
};

} // namespace d21a
