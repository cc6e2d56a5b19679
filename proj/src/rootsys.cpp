#include "d21a/rootsys.hpp"

#include <algorithm>
#include <deque>

namespace d21a {

Root make_root(int c1, int c2, int c3) {
    Root r;
    r.c = {c1, c2, c3};
    r.parity = ((c1 + c2 + c3) % 2 + 2) % 2 == 0 ? Parity::even : Parity::odd;
    return r;
}

std::string Root::str() const {
    std::string s = "(";
    for (int i = 0; i < 3; ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

RootSystem::RootSystem(Scalar alpha) : alpha_(std::move(alpha)) {
    if (auto v = alpha_.as_rational(); v && (*v == 0 || *v == -1))
        throw std::domain_error("root system: parameter value outside the defining family");
    Scalar one = Scalar::one();
    Scalar zero = Scalar::zero();
    Scalar ma1 = -(alpha_ + one); // -a-1
    A_ = {{{zero, one, alpha_}, {one, zero, ma1}, {alpha_, ma1, zero}}};

    roots_ = {
        make_root(1, 1, 0),  make_root(1, 0, 1),  make_root(0, 1, 1),
        make_root(-1, -1, 0), make_root(-1, 0, -1), make_root(0, -1, -1),
        make_root(1, 0, 0),  make_root(0, 1, 0),  make_root(0, 0, 1),  make_root(1, 1, 1),
        make_root(-1, 0, 0), make_root(0, -1, 0), make_root(0, 0, -1), make_root(-1, -1, -1),
    };
}

Scalar RootSystem::form(const Root& x, const Root& y) const {
    Scalar s = Scalar::zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (x.c[i] == 0 || y.c[j] == 0) continue;
            s += Scalar::from_int(x.c[i] * y.c[j]) * A_[i][j];
        }
    return s;
}

Scalar RootSystem::form(const Weight& lam, const Root& y) const {
    Scalar s = Scalar::zero();
    for (int i = 0; i < 3; ++i) {
        if (y.c[i] == 0) continue;
        s += Scalar::from_int(y.c[i]) * lam.v[i];
    }
    return s;
}

Scalar RootSystem::form(const Weight& x, const Weight& y) const {
    // Express x over the simple roots by solving A t = x, then pair with y.
    // A has determinant -2a(a+1), nonzero on the whole parameter domain.
    std::array<std::array<Scalar, 4>, 3> m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = A_[i][j];
        m[i][3] = x.v[i];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        while (piv < 3 && m[piv][col].is_zero()) ++piv;
        if (piv == 3) throw std::logic_error("root system: singular form matrix");
        std::swap(m[col], m[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Scalar f = m[r][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
        }
    }
    Scalar s = Scalar::zero();
    for (int i = 0; i < 3; ++i) s += (m[i][3] / m[i][i]) * y.v[i];
    return s;
}

std::array<Scalar, 3> RootSystem::c_values(const Weight& lam) const {
    Scalar one = Scalar::one();
    return {
        (lam.v[1] + lam.v[2]) / (-(alpha_ + one)),
        (lam.v[0] + lam.v[2]) / alpha_,
        lam.v[0] + lam.v[1],
    };
}

bool RootSystem::is_typical(const Weight& lam) const {
    for (const auto& l : lam.v)
        if (l.is_zero()) return false;
    return !(lam.v[0] + lam.v[1] + lam.v[2]).is_zero();
}

Base RootSystem::distinguished() const {
    return Base{{make_root(1, 0, 0), make_root(0, 1, 0), make_root(0, 0, 1)}};
}

Base RootSystem::odd_reflect(const Base& base, const Root& beta) const {
    int at = -1;
    for (int i = 0; i < 3; ++i)
        if (base.simple[i] == beta) at = i;
    if (at < 0) throw std::invalid_argument("odd reflection: not a simple root of the base");
    if (beta.parity != Parity::odd || !form(beta, beta).is_zero())
        throw std::invalid_argument("odd reflection: root is not odd isotropic");
    Base out = base;
    for (int i = 0; i < 3; ++i) {
        if (i == at) {
            out.simple[i] = -beta;
            continue;
        }
        if (!form(base.simple[i], beta).is_zero()) {
            Root g = base.simple[i];
            for (int j = 0; j < 3; ++j) g.c[j] += beta.c[j];
            out.simple[i] = make_root(g.c[0], g.c[1], g.c[2]);
        }
    }
    return out;
}

Weight RootSystem::reflect_weight(const Base& base, const Weight& lam, const Root& beta) const {
    // Validate the reflection data the same way odd_reflect does.
    (void)odd_reflect(base, beta);
    if (form(lam, beta).is_zero()) return lam;
    Weight out = lam;
    for (int i = 0; i < 3; ++i) {
        Root bi = make_root(i == 0, i == 1, i == 2);
        out.v[i] -= form(bi, beta);
    }
    return out;
}

Weight RootSystem::rho(const Base& base) const {
    // 2*rho stays in the lattice, so accumulate integer coordinates doubled.
    std::array<int, 3> twice{};
    for (const Root& r : positive_roots(base)) {
        int sign = r.parity == Parity::even ? 1 : -1;
        for (int i = 0; i < 3; ++i) twice[i] += sign * r.c[i];
    }
    Weight w;
    for (int i = 0; i < 3; ++i) {
        Scalar s = Scalar::zero();
        for (int j = 0; j < 3; ++j) {
            if (twice[j] == 0) continue;
            s += Scalar::from_int(twice[j]) * A_[i][j];
        }
        w.v[i] = s / Scalar::from_int(2);
    }
    return w;
}

std::optional<std::array<int, 3>> RootSystem::coords_in_base(const Base& base, const Root& r) const {
    // Only actual roots have coordinates; other lattice vectors are
    // rejected even when the linear system happens to be solvable.
    bool is_root = false;
    for (const Root& candidate : roots_) {
        if (candidate.c == r.c) {
            is_root = true;
            break;
        }
    }
    if (!is_root) return std::nullopt;

    // Solve m1*s1 + m2*s2 + m3*s3 = r over the integers by Cramer's rule;
    // every base reachable here is unimodular, checked via the determinant.
    const auto& s = base.simple;
    auto det3 = [](const std::array<std::array<int, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    std::array<std::array<int, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = s[j].c[i];
    int d = det3(m);
    if (d == 0) return std::nullopt;
    std::array<int, 3> out{};
    for (int k = 0; k < 3; ++k) {
        auto mk = m;
        for (int i = 0; i < 3; ++i) mk[i][k] = r.c[i];
        int dk = det3(mk);
        if (dk % d != 0) return std::nullopt;
        out[k] = dk / d;
    }
    return out;
}

std::vector<Root> RootSystem::positive_roots(const Base& base) const {
    std::vector<Root> out;
    for (const Root& r : roots_) {
        auto co = coords_in_base(base, r);
        if (!co) continue;
        if ((*co)[0] >= 0 && (*co)[1] >= 0 && (*co)[2] >= 0) out.push_back(r);
    }
    return out;
}

std::vector<Base> RootSystem::bases() const {
    std::vector<Base> seen;
    std::deque<Base> queue;
    queue.push_back(distinguished());
    seen.push_back(distinguished());
    while (!queue.empty()) {
        Base b = queue.front();
        queue.pop_front();
        for (int i = 0; i < 3; ++i) {
            const Root& beta = b.simple[i];
            if (beta.parity != Parity::odd || !form(beta, beta).is_zero()) continue;
            Base nb = odd_reflect(b, beta);
            if (std::find(seen.begin(), seen.end(), nb) == seen.end()) {
                seen.push_back(nb);
                queue.push_back(nb);
            }
        }
    }
    return seen;
}

std::string RootSystem::diagram_shape(const Base& base) const {
    std::array<int, 3> idx = {0, 1, 2};
    std::string best;
    std::sort(idx.begin(), idx.end());
    do {
        std::string enc;
        for (int i : idx) enc += base.simple[i].parity == Parity::odd ? 'o' : 'e';
        enc += "|";
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                enc += form(base.simple[idx[i]], base.simple[idx[j]]).str() + ";";
        if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best;
}

int RootSystem::coset_class(const std::array<int, 3>& q) {
    return ((q[0] + q[1] + q[2]) % 2 + 2) % 2;
}

Weight RootSystem::weight_of(const Root& q) const {
    Weight w;
    for (int i = 0; i < 3; ++i) {
        Root bi = make_root(i == 0, i == 1, i == 2);
        w.v[i] = form(bi, q);
    }
    return w;
}

} // namespace d21a
