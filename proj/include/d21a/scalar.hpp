#pragma once

#include "d21a/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace d21a {

/*
 * Scalar: the field Q(a) of rational functions in the deformation
 * parameter "a", the coefficient field everything downstream computes over.
 *
 * Canonical form, maintained by every constructor and operator:
 *   - numerator and denominator share no common factor (monic gcd divided out),
 *   - the denominator is monic,
 *   - zero is 0/1.
 * Equality is therefore structural, and a total order exists for use as a
 * container key.  Values that happen to be independent of "a" are ordinary
 * rationals; as_integer() decides integrality for them.
 */
class Scalar {
public:
    Scalar() : num_(), den_(Poly(1L)) {}
    Scalar(const Poly& num, const Poly& den);

    static Scalar from_int(long v) { return Scalar(Poly(v), Poly(1L)); }
    static Scalar from_rat(const Rat& v) { return Scalar(Poly(v), Poly(1L)); }
    static Scalar alpha() { return Scalar(Poly::variable(), Poly(1L)); }
    static Scalar zero() { return Scalar(); }
    static Scalar one() { return from_int(1); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // The value as an exact rational, when independent of "a".
    std::optional<Rat> as_rational() const;
    // Present exactly when the value is a constant integer.
    std::optional<std::int64_t> as_integer() const;

    // Evaluation at a = alpha0.  Rejects alpha0 in {0, -1} (excluded from the
    // parameter domain) and denominators vanishing at alpha0.
    Rat specialize(const Rat& alpha0) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y); // throws on zero divisor

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    friend bool operator<(const Scalar& x, const Scalar& y) {
        int c = Poly::compare(x.num_, y.num_);
        if (c != 0) return c < 0;
        return Poly::compare(x.den_, y.den_) < 0;
    }

    // Fully parenthesized rendering in the expression grammar below; parsing
    // the result reproduces the value exactly.
    std::string str() const;

private:
    Poly num_, den_;
    void reduce();
};

// Raised by parse_scalar with the byte offset of the offending token.
struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(std::size_t at, const std::string& what)
        : std::runtime_error(what + " (at offset " + std::to_string(at) + ")"), pos(at) {}
};

// Recursive-descent parser for
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := INT | 'a' | '(' expr ')' | '-' factor
// Whitespace between tokens is ignored.  "p/q" therefore parses as the exact
// rational p/q through ordinary left-associative division.
Scalar parse_scalar(const std::string& text);

} // namespace d21a
