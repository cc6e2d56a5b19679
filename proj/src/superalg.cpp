#include "d21a/superalg.hpp"

namespace d21a {

GElem GElem::basis(int i) {
    GElem g;
    g.c[i] = Scalar::one();
    return g;
}

bool GElem::is_zero() const {
    for (const auto& s : c)
        if (!s.is_zero()) return false;
    return true;
}

GElem GElem::operator-() const {
    GElem g;
    for (int i = 0; i < kAlgDim; ++i) g.c[i] = -c[i];
    return g;
}

GElem& GElem::operator+=(const GElem& o) {
    for (int i = 0; i < kAlgDim; ++i) c[i] += o.c[i];
    return *this;
}

GElem& GElem::operator-=(const GElem& o) {
    for (int i = 0; i < kAlgDim; ++i) c[i] -= o.c[i];
    return *this;
}

GElem GElem::scaled(const Scalar& s) const {
    GElem g;
    if (s.is_zero()) return g;
    for (int i = 0; i < kAlgDim; ++i)
        if (!c[i].is_zero()) g.c[i] = c[i] * s;
    return g;
}

namespace {

const char* kNames[kAlgDim] = {
    "e1", "e2", "e3", "e123", "f1", "f2", "f3", "f123",
    "E1", "E2", "E3", "F1", "F2", "F3", "H1", "H2", "H3",
};

// Odd basis vectors are indexed inside the builder by the sign pattern
// b = 4*s1 + 2*s2 + s3 with bit 1 meaning "+".
constexpr int kOddOf[8] = {bf123, bf3, bf2, be1, bf1, be2, be3, be123};

int bit(int pattern, int slot) { return (pattern >> (2 - slot)) & 1; }

// Symplectic pairing <u, w> on one slot: <+,-> = 1, <-,+> = -1.
int pair_slot(int u, int w) {
    if (u == w) return 0;
    return u == 1 ? 1 : -1;
}

} // namespace

std::string GElem::str() const {
    std::string s;
    for (int i = 0; i < kAlgDim; ++i) {
        if (c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c[i].str() + "*" + kNames[i];
    }
    return s.empty() ? "0" : s;
}

std::string AlgebraTable::basis_name(int i) const { return kNames[i]; }

GElem AlgebraTable::bracket(const GElem& x, const GElem& y) const {
    GElem out;
    for (int i = 0; i < kAlgDim; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; j < kAlgDim; ++j) {
            if (y.c[j].is_zero()) continue;
            out += table_[i][j].scaled(x.c[i] * y.c[j]);
        }
    }
    return out;
}

GElem AlgebraTable::omega(const GElem& x) const {
    GElem out;
    for (int i = 0; i < kAlgDim; ++i)
        if (!x.c[i].is_zero()) out += omega_[i].scaled(x.c[i]);
    return out;
}

std::array<int, 3> AlgebraTable::h_weight_of(const std::array<int, 3>& q) {
    return {-q[0] + q[1] + q[2], q[0] - q[1] + q[2], q[0] + q[1] - q[2]};
}

AlgebraTable AlgebraTable::build(const Scalar& alpha) {
    if (auto v = alpha.as_rational(); v && (*v == 0 || *v == -1))
        throw std::domain_error("algebra: parameter value outside the defining family");

    AlgebraTable g;
    g.alpha_ = alpha;
    Scalar half = Scalar::from_rat(make_rat(1, 2));
    std::array<Scalar, 3> sigma = {
        -(alpha + Scalar::one()) * half,
        alpha * half,
        half,
    };

    // Roots and weights of the basis.
    auto set_root = [&](int i, int c1, int c2, int c3) {
        g.root_[i] = {c1, c2, c3};
        g.hw_[i] = h_weight_of(g.root_[i]);
    };
    set_root(be1, 1, 0, 0);
    set_root(be2, 0, 1, 0);
    set_root(be3, 0, 0, 1);
    set_root(be123, 1, 1, 1);
    set_root(bf1, -1, 0, 0);
    set_root(bf2, 0, -1, 0);
    set_root(bf3, 0, 0, -1);
    set_root(bf123, -1, -1, -1);
    set_root(bE1, 0, 1, 1);
    set_root(bE2, 1, 0, 1);
    set_root(bE3, 1, 1, 0);
    set_root(bF1, 0, -1, -1);
    set_root(bF2, -1, 0, -1);
    set_root(bF3, -1, -1, 0);
    set_root(bH1, 0, 0, 0);
    set_root(bH2, 0, 0, 0);
    set_root(bH3, 0, 0, 0);

    auto& t = g.table_;

    // Even part: three commuting sl2 triples.
    for (int k = 0; k < 3; ++k) {
        int E = bE1 + k, F = bF1 + k, H = bH1 + k;
        t[E][F].c[H] = Scalar::one();
        t[F][E].c[H] = Scalar::from_int(-1);
        t[H][E].c[E] = Scalar::from_int(2);
        t[E][H].c[E] = Scalar::from_int(-2);
        t[H][F].c[F] = Scalar::from_int(-2);
        t[F][H].c[F] = Scalar::from_int(2);
    }

    // Even on odd: the sl2 of factor k acts on slot k of the sign pattern.
    for (int k = 0; k < 3; ++k) {
        int E = bE1 + k, F = bF1 + k, H = bH1 + k;
        for (int b = 0; b < 8; ++b) {
            int v = kOddOf[b];
            int s = bit(b, k);
            if (s == 0) {
                int up = kOddOf[b | (1 << (2 - k))];
                t[E][v].c[up] = Scalar::one();
                t[v][E].c[up] = Scalar::from_int(-1);
            } else {
                int dn = kOddOf[b & ~(1 << (2 - k))];
                t[F][v].c[dn] = Scalar::one();
                t[v][F].c[dn] = Scalar::from_int(-1);
            }
            Scalar hv = Scalar::from_int(s == 1 ? 1 : -1);
            t[H][v].c[v] = hv;
            t[v][H].c[v] = -hv;
        }
    }

    // Odd on odd: contract two slots, symmetrize the third.
    for (int b = 0; b < 8; ++b) {
        for (int c = 0; c < 8; ++c) {
            int u = kOddOf[b], w = kOddOf[c];
            GElem val;
            for (int k = 0; k < 3; ++k) {
                int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
                int p1 = pair_slot(bit(b, k1), bit(c, k1));
                int p2 = pair_slot(bit(b, k2), bit(c, k2));
                if (p1 == 0 || p2 == 0) continue;
                Scalar factor = sigma[k] * Scalar::from_int(p1 * p2);
                int ub = bit(b, k), wb = bit(c, k);
                if (ub == 1 && wb == 1)
                    val.c[bE1 + k] += factor * Scalar::from_int(2);
                else if (ub == 0 && wb == 0)
                    val.c[bF1 + k] += factor * Scalar::from_int(-2);
                else
                    val.c[bH1 + k] += -factor;
            }
            t[u][w] = val;
        }
    }

    for (int i = 0; i < 3; ++i)
        g.chevalley_h_[i] = g.table_[be1 + i][bf1 + i];

    for (int i = 0; i < 4; ++i) {
        g.omega_[be1 + i] = GElem::basis(bf1 + i);
        g.omega_[bf1 + i] = GElem::basis(be1 + i);
    }
    for (int i = 0; i < 3; ++i) {
        g.omega_[bE1 + i] = -GElem::basis(bF1 + i);
        g.omega_[bF1 + i] = -GElem::basis(bE1 + i);
        g.omega_[bH1 + i] = GElem::basis(bH1 + i);
    }

    return g;
}

std::string AlgebraTable::dump_table() const {
    std::string out;
    for (int i = 0; i < kAlgDim; ++i)
        for (int j = 0; j < kAlgDim; ++j) {
            out += "[";
            out += kNames[i];
            out += ",";
            out += kNames[j];
            out += "] = ";
            out += table_[i][j].str();
            out += "\n";
        }
    return out;
}

} // namespace d21a
