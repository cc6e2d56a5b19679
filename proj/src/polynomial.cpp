#include "d21a/polynomial.hpp"

namespace d21a {

Poly::Poly(Rat constant) {
    constant.canonicalize();
    if (constant != 0) coef_.push_back(std::move(constant));
}

Poly Poly::variable() {
    return monomial(make_rat(1), 1);
}

Poly Poly::monomial(Rat coeff, std::size_t power) {
    coeff.canonicalize();
    Poly p;
    if (coeff == 0) return p;
    p.coef_.assign(power + 1, make_rat(0));
    p.coef_[power] = std::move(coeff);
    return p;
}

Rat Poly::coeff(std::size_t k) const {
    if (k >= coef_.size()) return make_rat(0);
    return coef_[k];
}

const Rat& Poly::leading() const {
    if (is_zero()) throw std::domain_error("polynomial: leading coefficient of zero");
    return coef_.back();
}

Rat Poly::constant_value() const {
    if (!is_constant()) throw std::domain_error("polynomial: not constant");
    return coef_.empty() ? make_rat(0) : coef_[0];
}

void Poly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coef_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), make_rat(0));
    for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), make_rat(0));
    for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return Poly();
    Poly r;
    r.coef_.assign(x.coef_.size() + y.coef_.size() - 1, make_rat(0));
    for (std::size_t i = 0; i < x.coef_.size(); ++i) {
        if (x.coef_[i] == 0) continue;
        for (std::size_t j = 0; j < y.coef_.size(); ++j)
            r.coef_[i + j] += x.coef_[i] * y.coef_[j];
    }
    r.trim();
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return Poly();
    Poly r(*this);
    for (auto& x : r.coef_) x *= c;
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading());
}

Rat Poly::eval(const Rat& x) const {
    Rat point = x;
    point.canonicalize();
    Rat acc = make_rat(0);
    for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * point + coef_[i];
    return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial: division by zero");
    Poly q;
    Poly r = num;
    if (r.degree() >= den.degree())
        q.coef_.assign(r.coef_.size() - den.coef_.size() + 1, make_rat(0));
    const Rat& lead = den.leading();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        std::size_t shift = r.coef_.size() - den.coef_.size();
        Rat c = r.coef_.back() / lead;
        q.coef_[shift] = c;
        for (std::size_t i = 0; i < den.coef_.size(); ++i)
            r.coef_[shift + i] -= c * den.coef_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::div_exact(const Poly& num, const Poly& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero()) throw std::logic_error("polynomial: inexact division");
    return q;
}

Poly Poly::gcd(Poly x, Poly y) {
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = std::move(y);
        y = r.monic(); // keep the remainder sequence from growing coefficients
    }
    return x.monic();
}

int Poly::compare(const Poly& x, const Poly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree() ? -1 : 1;
    for (std::size_t i = x.coef_.size(); i-- > 0;) {
        int c = cmp(x.coef_[i], y.coef_[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace d21a
