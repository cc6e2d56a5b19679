#pragma once

#include "d21a/scalar.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace d21a {

// Element of the localized sl2 enveloping algebra (f inverted), kept in
// canonical ordered form: a finite sum of monomials e^p h^q f^r with
// p, q >= 0 and r in Z.  Products are rewritten into this order with
//   h e = e (h+2),   e f^r = f^r e + r f^{r-1} (h - r + 1),
//   f^r h = (h + 2r) f^r,
// the middle identity holding for every integer r.
class LocalizedElement {
public:
    using Key = std::tuple<int, int, int>; // (p, q, r)

    LocalizedElement() = default;

    static LocalizedElement zero() { return {}; }
    static LocalizedElement one() { return monomial(0, 0, 0); }
    static LocalizedElement monomial(int p, int q, int r, const Scalar& c = Scalar::one());
    static LocalizedElement gen_e() { return monomial(1, 0, 0); }
    static LocalizedElement gen_h() { return monomial(0, 1, 0); }
    // power may be negative
    static LocalizedElement gen_f(int power = 1) { return monomial(0, 0, power); }

    bool is_zero() const { return t_.empty(); }
    const std::map<Key, Scalar>& terms() const { return t_; }

    LocalizedElement operator-() const;
    LocalizedElement scaled(const Scalar& c) const;
    friend LocalizedElement operator+(const LocalizedElement& x, const LocalizedElement& y);
    friend LocalizedElement operator-(const LocalizedElement& x, const LocalizedElement& y);
    friend LocalizedElement operator*(const LocalizedElement& x, const LocalizedElement& y);
    friend bool operator==(const LocalizedElement& x, const LocalizedElement& y)
    {
        return x.t_ == y.t_;
    }
    friend bool operator!=(const LocalizedElement& x, const LocalizedElement& y)
    {
        return !(x == y);
    }

    static LocalizedElement commutator(const LocalizedElement& x, const LocalizedElement& y);

    std::string str() const;

private:
    std::map<Key, Scalar> t_;
    void add(const Key& k, const Scalar& c);
    friend LocalizedElement mul_mono(const Key& k, const Scalar& c, const Key& m);
};

// ad(f)(u) = f u - u f; nilpotent on every element.
LocalizedElement ad_f(const LocalizedElement& u);

// Generalized binomial mu (mu-1) ... (mu-i+1) / i! .
Scalar binom_scalar(const Scalar& mu, int i);

// Twist conjugation by the formal exponent mu:
//   phi(u, mu) = sum_i binom(mu, i) ad(f)^i(u) f^{-i},
// a finite sum by nilpotency of ad(f).
LocalizedElement phi(const LocalizedElement& u, const Scalar& mu);

// phi(e), phi(h), phi(f) satisfy the sl2 relations in canonical form.
bool check_homomorphism(const Scalar& mu);

// Action table of the mu-twisted module built on the basis w_k = f^k v of
// the localized highest weight module (lambda not a nonnegative integer,
// so f acts injectively and k ranges over Z):
//   f . w_k = w_{k+1}
//   h . w_k = (lambda - 2(k - mu)) w_k
//   e . w_k = (k - mu)(lambda - (k - mu) + 1) w_{k-1}
// computed by evaluating phi(gen, mu) on f^k v, not from the closed forms.
struct TwistedTable {
    Scalar lambda;
    Scalar mu;
    int lo = 0;
    int hi = 0;
    std::vector<Scalar> e_coeff; // e . w_k = e_coeff[k-lo] w_{k-1}
    std::vector<Scalar> h_coeff; // h . w_k = h_coeff[k-lo] w_k
    std::vector<Scalar> f_coeff; // f . w_k = f_coeff[k-lo] w_{k+1}

    // Rows "k,generator,coefficient".
    std::string to_csv() const;
};

TwistedTable twist_highest_weight(const Scalar& lambda, const Scalar& mu, int lo, int hi);

} // namespace d21a
