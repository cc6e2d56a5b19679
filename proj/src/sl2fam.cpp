#include "d21a/sl2fam.hpp"

#include <stdexcept>

namespace d21a {

FamilyStep family_action(const Scalar& a, Sl2Gen gen, const Scalar& s)
{
    switch (gen) {
    case Sl2Gen::e: return {a + s, s + Scalar::one()};
    case Sl2Gen::f: return {a - s, s - Scalar::one()};
    case Sl2Gen::h: return {Scalar::from_int(2) * s, s};
    }
    throw std::logic_error("family_action: bad generator");
}

bool is_simple_cuspidal(const Scalar& a, const Scalar& mu)
{
    return !(mu + a).as_integer().has_value() && !(mu - a).as_integer().has_value();
}

Scalar casimir_scalar(const Scalar& a)
{
    return Scalar::from_int(4) * a * a - Scalar::from_int(4) * a;
}

Scalar casimir_at(const Scalar& a, const Scalar& s)
{
    // h^2 + 2h + 4 f e applied to x^s, reading off the x^s coefficient.
    FamilyStep h = family_action(a, Sl2Gen::h, s);
    FamilyStep e = family_action(a, Sl2Gen::e, s);
    FamilyStep fe = family_action(a, Sl2Gen::f, e.new_s);
    return h.coeff * h.coeff + Scalar::from_int(2) * h.coeff +
           Scalar::from_int(4) * fe.coeff * e.coeff;
}

bool verify_sl2_relations(const FamilyPoint& p)
{
    const Scalar two = Scalar::from_int(2);
    for (int n = p.lo + 1; n <= p.hi - 1; ++n) {
        Scalar s = p.mu + Scalar::from_int(n);

        FamilyStep e = family_action(p.a, Sl2Gen::e, s);
        FamilyStep f = family_action(p.a, Sl2Gen::f, s);
        FamilyStep h = family_action(p.a, Sl2Gen::h, s);

        // [e,f] = h on x^s
        Scalar ef = family_action(p.a, Sl2Gen::e, f.new_s).coeff * f.coeff;
        Scalar fe = family_action(p.a, Sl2Gen::f, e.new_s).coeff * e.coeff;
        if (ef - fe != h.coeff) return false;

        // [h,e] = 2e: compare coefficients on x^{s+1}
        Scalar he = family_action(p.a, Sl2Gen::h, e.new_s).coeff * e.coeff;
        Scalar eh = e.coeff * h.coeff;
        if (he - eh != two * e.coeff) return false;

        // [h,f] = -2f: compare coefficients on x^{s-1}
        Scalar hf = family_action(p.a, Sl2Gen::h, f.new_s).coeff * f.coeff;
        Scalar fh = f.coeff * h.coeff;
        if (hf - fh != -(two * f.coeff)) return false;
    }
    return true;
}

std::vector<Scalar> e_annihilated(const FamilyPoint& p)
{
    std::vector<Scalar> out;
    for (int n = p.lo; n <= p.hi; ++n) {
        Scalar s = p.mu + Scalar::from_int(n);
        if ((p.a + s).is_zero()) out.push_back(s);
    }
    return out;
}

std::vector<Scalar> f_annihilated(const FamilyPoint& p)
{
    std::vector<Scalar> out;
    for (int n = p.lo; n <= p.hi; ++n) {
        Scalar s = p.mu + Scalar::from_int(n);
        if ((p.a - s).is_zero()) out.push_back(s);
    }
    return out;
}

TensorShape tensor_degree_and_support(const TensorFamily& t)
{
    for (int i = 0; i < 3; ++i) {
        if (!is_simple_cuspidal(t.factor[i].a, t.factor[i].mu)) {
            throw std::invalid_argument("tensor_degree_and_support: factor " +
                                        std::to_string(i + 1) +
                                        " is not simple cuspidal (mu+a or mu-a is an integer)");
        }
    }
    TensorShape shape;
    shape.degree = 1;
    shape.support = "{ s1*a1 + s2*a2 + s3*a3 : s1 in (" + t.factor[0].mu.str() +
                    ")+Z, s2 in (" + t.factor[1].mu.str() + ")+Z, s3 in (" +
                    t.factor[2].mu.str() + ")+Z }";
    return shape;
}

std::string family_csv(const FamilyPoint& p)
{
    std::string out = "s,generator,coefficient\n";
    for (int n = p.lo; n <= p.hi; ++n) {
        Scalar s = p.mu + Scalar::from_int(n);
        for (Sl2Gen g : {Sl2Gen::e, Sl2Gen::f, Sl2Gen::h}) {
            const char* name = g == Sl2Gen::e ? "e" : g == Sl2Gen::f ? "f" : "h";
            out += s.str() + "," + name + "," + family_action(p.a, g, s).coeff.str() + "\n";
        }
    }
    return out;
}

} // namespace d21a
