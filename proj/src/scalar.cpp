#include "d21a/scalar.hpp"

#include <cctype>

namespace d21a {

Scalar::Scalar(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("scalar: zero denominator");
    reduce();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1L);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::div_exact(num_, g);
        den_ = Poly::div_exact(den_, g);
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = 1 / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

std::optional<Rat> Scalar::as_rational() const {
    if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
    return num_.constant_value(); // denominator is monic constant, i.e. 1
}

std::optional<std::int64_t> Scalar::as_integer() const {
    auto r = as_rational();
    if (!r) return std::nullopt;
    return rat_as_int64(*r);
}

Rat Scalar::specialize(const Rat& alpha0) const {
    Rat point = alpha0;
    point.canonicalize();
    if (point == 0 || point == -1)
        throw std::domain_error("scalar: parameter value " + rat_str(point) +
                                " is outside the defining family");
    Rat d = den_.eval(point);
    if (d == 0)
        throw std::domain_error("scalar: pole at a = " + rat_str(point));
    return num_.eval(point) / d;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.num_ = -r.num_;
    return r;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    return Scalar(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    return Scalar(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    return Scalar(x.num_ * y.num_, x.den_ * y.den_);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) throw std::domain_error("scalar: division by zero");
    return Scalar(x.num_ * y.den_, x.den_ * y.num_);
}

namespace {

std::string rat_abs_str(const Rat& r) {
    Rat a = abs(r);
    return a.get_str();
}

// One monomial |c|*a*...*a in grammar tokens; sign is handled by the caller.
std::string monomial_str(const Rat& c, std::size_t k) {
    std::string s;
    Rat a = abs(c);
    bool unit = (a == 1);
    if (!unit || k == 0) s += rat_abs_str(c);
    for (std::size_t i = 0; i < k; ++i) {
        if (!s.empty()) s += "*";
        s += "a";
    }
    return s;
}

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        bool neg = c < 0;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? "-" : "+";
        s += monomial_str(c, static_cast<std::size_t>(k));
    }
    return s;
}

} // namespace

std::string Scalar::str() const {
    if (den_ == Poly(1L)) {
        if (num_.is_constant()) return poly_str(num_);
        return "(" + poly_str(num_) + ")";
    }
    return "((" + poly_str(num_) + ")/(" + poly_str(den_) + "))";
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    // Returns '\0' at end of input.
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
};

class Parser {
public:
    explicit Parser(const std::string& t) : lex_(t) {}

    Scalar run() {
        Scalar v = expr();
        if (lex_.peek() != '\0')
            throw ParseError(lex_.pos, "unexpected trailing input");
        return v;
    }

private:
    Lexer lex_;

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            char c = lex_.peek();
            if (c == '+') {
                ++lex_.pos;
                v += term();
            } else if (c == '-') {
                ++lex_.pos;
                v -= term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            char c = lex_.peek();
            if (c == '*') {
                ++lex_.pos;
                v *= factor();
            } else if (c == '/') {
                std::size_t at = lex_.pos;
                ++lex_.pos;
                Scalar d = factor();
                if (d.is_zero()) throw ParseError(at, "division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar factor() {
        char c = lex_.peek();
        if (c == '-') {
            ++lex_.pos;
            return -factor();
        }
        if (c == '(') {
            ++lex_.pos;
            Scalar v = expr();
            if (lex_.peek() != ')')
                throw ParseError(lex_.pos, "expected ')'");
            ++lex_.pos;
            return v;
        }
        if (c == 'a') {
            ++lex_.pos;
            return Scalar::alpha();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return integer();
        throw ParseError(lex_.pos, "expected a factor");
    }

    Scalar integer() {
        std::size_t start = lex_.pos;
        std::string digits;
        while (lex_.pos < lex_.text.size() &&
               std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
            digits += lex_.text[lex_.pos];
            ++lex_.pos;
        }
        if (digits.empty()) throw ParseError(start, "expected digits");
        return Scalar::from_rat(Rat(BigInt(digits, 10)));
    }
};

} // namespace

Scalar parse_scalar(const std::string& text) {
    return Parser(text).run();
}

} // namespace d21a
