#include "d21a/twistloc.hpp"

#include <stdexcept>

namespace d21a {

namespace {

Rat int_binom(int nn, int kk)
{
    if (kk < 0 || kk > nn) return Rat(0);
    BigInt num = 1, den = 1;
    for (int j = 0; j < kk; ++j) {
        num *= nn - j;
        den *= j + 1;
    }
    return Rat(num) / Rat(den);
}

} // namespace

void LocalizedElement::add(const Key& k, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

LocalizedElement LocalizedElement::monomial(int p, int q, int r, const Scalar& c)
{
    if (p < 0 || q < 0) throw std::invalid_argument("monomial: e/h powers must be nonnegative");
    LocalizedElement out;
    out.add({p, q, r}, c);
    return out;
}

LocalizedElement LocalizedElement::operator-() const
{
    LocalizedElement out;
    for (const auto& [k, c] : t_) out.t_.emplace(k, -c);
    return out;
}

LocalizedElement LocalizedElement::scaled(const Scalar& c) const
{
    LocalizedElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : t_) out.t_.emplace(k, v * c);
    return out;
}

LocalizedElement operator+(const LocalizedElement& x, const LocalizedElement& y)
{
    LocalizedElement out = x;
    for (const auto& [k, c] : y.t_) out.add(k, c);
    return out;
}

LocalizedElement operator-(const LocalizedElement& x, const LocalizedElement& y)
{
    LocalizedElement out = x;
    for (const auto& [k, c] : y.t_) out.add(k, -c);
    return out;
}

namespace {

// x * e, one ordered monomial at a time:
//   e^p h^q f^r e = e^{p+1} (h+2)^q f^r
//                 - r e^p h^{q+1} f^{r-1} - r(r-1) e^p h^q f^{r-1}
// using f^r e = e f^r - r f^{r-1}(h-r+1) (all integer r) and h e = e(h+2).
LocalizedElement mul_e(const LocalizedElement& x)
{
    LocalizedElement out;
    for (const auto& [k, c] : x.terms()) {
        auto [p, q, r] = k;
        for (int i = 0; i <= q; ++i) {
            Rat w = int_binom(q, i);
            for (int j = 0; j < q - i; ++j) w *= 2;
            out = out + LocalizedElement::monomial(p + 1, i, r, c * Scalar::from_rat(w));
        }
        if (r != 0) {
            Scalar cr = c * Scalar::from_int(r);
            out = out + LocalizedElement::monomial(p, q + 1, r - 1, -cr);
            out = out + LocalizedElement::monomial(p, q, r - 1,
                                                   -(cr * Scalar::from_int(r - 1)));
        }
    }
    return out;
}

// x * h:  e^p h^q f^r h = e^p h^{q+1} f^r + 2r e^p h^q f^r.
LocalizedElement mul_h(const LocalizedElement& x)
{
    LocalizedElement out;
    for (const auto& [k, c] : x.terms()) {
        auto [p, q, r] = k;
        out = out + LocalizedElement::monomial(p, q + 1, r, c);
        if (r != 0) out = out + LocalizedElement::monomial(p, q, r, c * Scalar::from_int(2 * r));
    }
    return out;
}

// x * f^t for any integer t: exponents just add.
LocalizedElement mul_f(const LocalizedElement& x, int t)
{
    LocalizedElement out;
    for (const auto& [k, c] : x.terms()) {
        auto [p, q, r] = k;
        out = out + LocalizedElement::monomial(p, q, r + t, c);
    }
    return out;
}

} // namespace

LocalizedElement operator*(const LocalizedElement& x, const LocalizedElement& y)
{
    LocalizedElement out;
    for (const auto& [k, c] : y.t_) {
        auto [p, q, r] = k;
        LocalizedElement acc = x;
        for (int j = 0; j < p; ++j) acc = mul_e(acc);
        for (int j = 0; j < q; ++j) acc = mul_h(acc);
        if (r != 0) acc = mul_f(acc, r);
        out = out + acc.scaled(c);
    }
    return out;
}

LocalizedElement LocalizedElement::commutator(const LocalizedElement& x,
                                              const LocalizedElement& y)
{
    return x * y - y * x;
}

std::string LocalizedElement::str() const
{
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) {
        auto [p, q, r] = k;
        if (!out.empty()) out += " + ";
        std::string mono;
        auto put = [&](const char* name, int exp) {
            if (exp == 0) return;
            if (!mono.empty()) mono += ' ';
            mono += name;
            if (exp != 1) mono += '^' + std::to_string(exp);
        };
        put("e", p);
        put("h", q);
        put("f", r);
        if (mono.empty()) mono = "1";
        out += c.str() + "*" + mono;
    }
    return out;
}

LocalizedElement ad_f(const LocalizedElement& u)
{
    LocalizedElement f = LocalizedElement::gen_f();
    return f * u - u * f;
}

Scalar binom_scalar(const Scalar& mu, int i)
{
    if (i < 0) return Scalar::zero();
    Scalar acc = Scalar::one();
    BigInt fact = 1;
    for (int j = 0; j < i; ++j) {
        acc *= mu - Scalar::from_int(j);
        fact *= j + 1;
    }
    return acc / Scalar::from_rat(Rat(fact));
}

LocalizedElement phi(const LocalizedElement& u, const Scalar& mu)
{
    LocalizedElement out;
    LocalizedElement cur = u;
    int i = 0;
    while (!cur.is_zero()) {
        out = out + mul_f(cur, -i).scaled(binom_scalar(mu, i));
        cur = ad_f(cur);
        if (++i > 64) throw std::logic_error("phi: ad(f) failed to terminate");
    }
    return out;
}

bool check_homomorphism(const Scalar& mu)
{
    LocalizedElement pe = phi(LocalizedElement::gen_e(), mu);
    LocalizedElement pf = phi(LocalizedElement::gen_f(), mu);
    LocalizedElement ph = phi(LocalizedElement::gen_h(), mu);
    return LocalizedElement::commutator(pe, pf) == ph &&
           LocalizedElement::commutator(ph, pe) == pe.scaled(Scalar::from_int(2)) &&
           LocalizedElement::commutator(ph, pf) == pf.scaled(Scalar::from_int(-2));
}

namespace {

// Evaluate a canonical element on the basis vector f^k v of the localized
// highest weight module:  h f^m v = (lambda-2m) f^m v  and
// e f^m v = m(lambda-m+1) f^{m-1} v  for every integer m.
std::map<int, Scalar> act_on_basis(const LocalizedElement& u, const Scalar& lambda, int k)
{
    std::map<int, Scalar> out;
    for (const auto& [key, c] : u.terms()) {
        auto [p, q, r] = key;
        int m = k + r;
        Scalar coef = c;
        Scalar wm = lambda - Scalar::from_int(2 * m);
        for (int j = 0; j < q; ++j) coef *= wm;
        for (int j = 0; j < p; ++j) {
            Scalar mm = Scalar::from_int(m);
            coef *= mm * (lambda - mm + Scalar::one());
            --m;
        }
        if (coef.is_zero()) continue;
        auto [it, fresh] = out.emplace(m, coef);
        if (!fresh) {
            it->second += coef;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

Scalar single_target(const std::map<int, Scalar>& v, int expect)
{
    if (v.empty()) return Scalar::zero();
    if (v.size() != 1 || v.begin()->first != expect) {
        throw std::logic_error("twist_highest_weight: action left the expected weight line");
    }
    return v.begin()->second;
}

} // namespace

TwistedTable twist_highest_weight(const Scalar& lambda, const Scalar& mu, int lo, int hi)
{
    auto li = lambda.as_integer();
    if (li.has_value() && *li >= 0) {
        throw std::invalid_argument(
            "twist_highest_weight: lambda is a nonnegative integer, f is not injective");
    }
    if (lo > hi) throw std::invalid_argument("twist_highest_weight: empty window");

    TwistedTable t;
    t.lambda = lambda;
    t.mu = mu;
    t.lo = lo;
    t.hi = hi;

    LocalizedElement pe = phi(LocalizedElement::gen_e(), mu);
    LocalizedElement ph = phi(LocalizedElement::gen_h(), mu);
    LocalizedElement pf = phi(LocalizedElement::gen_f(), mu);

    for (int k = lo; k <= hi; ++k) {
        t.e_coeff.push_back(single_target(act_on_basis(pe, lambda, k), k - 1));
        t.h_coeff.push_back(single_target(act_on_basis(ph, lambda, k), k));
        t.f_coeff.push_back(single_target(act_on_basis(pf, lambda, k), k + 1));
    }
    return t;
}

std::string TwistedTable::to_csv() const
{
    std::string out = "k,generator,coefficient\n";
    for (int k = lo; k <= hi; ++k) {
        out += std::to_string(k) + ",e," + e_coeff[k - lo].str() + "\n";
        out += std::to_string(k) + ",f," + f_coeff[k - lo].str() + "\n";
        out += std::to_string(k) + ",h," + h_coeff[k - lo].str() + "\n";
    }
    return out;
}

} // namespace d21a
