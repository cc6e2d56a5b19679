#include "d21a/verma.hpp"

#include <algorithm>
#include <stdexcept>

namespace d21a {

namespace {

constexpr std::array<int, kNumLetters> kLetterBasis = {bf1, bf2, bf3, bf123, bF1, bF2, bF3};

constexpr std::array<std::array<int, 3>, kNumLetters> kLetterDepth = {{
    {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1},
    {0, 1, 1}, {1, 0, 1}, {1, 1, 0},
}};

const char* const kLetterNames[kNumLetters] = {"f1", "f2", "f3", "f123", "F1", "F2", "F3"};

int letter_pos(int basisIndex)
{
    for (int p = 0; p < kNumLetters; ++p) {
        if (kLetterBasis[p] == basisIndex) return p;
    }
    return -1;
}

int first_pos(const PbwMono& m)
{
    for (int j = 0; j < 4; ++j) {
        if (m.a[j]) return j;
    }
    for (int t = 0; t < 3; ++t) {
        if (m.n[t]) return 4 + t;
    }
    return -1;
}

} // namespace

std::array<int, 3> PbwMono::depth() const
{
    std::array<int, 3> d{};
    for (int j = 0; j < 4; ++j) {
        if (!a[j]) continue;
        for (int k = 0; k < 3; ++k) d[k] += kLetterDepth[j][k];
    }
    for (int t = 0; t < 3; ++t) {
        for (int k = 0; k < 3; ++k) d[k] += static_cast<int>(n[t]) * kLetterDepth[4 + t][k];
    }
    return d;
}

int PbwMono::letter_count() const
{
    return a[0] + a[1] + a[2] + a[3] + static_cast<int>(n[0] + n[1] + n[2]);
}

std::string PbwMono::str() const
{
    std::string out;
    auto put = [&](int pos, int exp) {
        if (exp == 0) return;
        if (!out.empty()) out += ' ';
        out += kLetterNames[pos];
        if (exp > 1) out += '^' + std::to_string(exp);
    };
    for (int j = 0; j < 4; ++j) put(j, a[j]);
    for (int t = 0; t < 3; ++t) put(4 + t, static_cast<int>(n[t]));
    return out.empty() ? "1" : out;
}

void add_term(VermaVector& v, const PbwMono& m, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = v.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

std::string format_vector(const VermaVector& v)
{
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : v) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*" + m.str();
    }
    return out;
}

VermaModule::VermaModule(const AlgebraTable& alg, const Weight& lambda)
    : alg_(alg), lambda_(lambda)
{
    const Scalar& a = alg_.alpha();
    const Scalar& l1 = lambda_.v[0];
    const Scalar& l2 = lambda_.v[1];
    const Scalar& l3 = lambda_.v[2];
    cval_[0] = (l2 + l3) / (Scalar::from_int(-1) - a);
    cval_[1] = (l1 + l3) / a;
    cval_[2] = l1 + l2;
    for (int p = 0; p < kNumLetters; ++p) {
        omega_letter_[p] = alg_.omega(GElem::basis(kLetterBasis[p]));
    }
}

const VermaVector& VermaModule::act(int basisIndex, const PbwMono& m) const
{
    auto key = std::make_pair(basisIndex, m);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    VermaVector r = act_uncached(basisIndex, m);
    return cache_.emplace(std::move(key), std::move(r)).first->second;
}

VermaVector VermaModule::act_uncached(int k, const PbwMono& m) const
{
    VermaVector out;

    // Cartan elements act by the weight of the vector.
    if (k >= bH1) {
        std::array<int, 3> w = AlgebraTable::h_weight_of(m.depth());
        Scalar eig = cval_[k - bH1] - Scalar::from_int(w[k - bH1]);
        if (!eig.is_zero()) out.emplace(m, eig);
        return out;
    }

    const int pk = letter_pos(k);
    const int pm = first_pos(m);

    // A letter no later than the head of the monomial extends it in order.
    if (pk >= 0 && (pm < 0 || pk <= pm)) {
        if (pk < 4 && m.a[pk]) return out; // odd letters square to zero
        PbwMono grown = m;
        if (pk < 4) grown.a[pk] = 1;
        else ++grown.n[pk - 4];
        out.emplace(grown, Scalar::one());
        return out;
    }

    // Raising vectors kill the highest weight vector.
    if (pm < 0) return out;

    // Straighten past the head letter y:  x (y rest) = +/- y (x rest) + [x,y] rest.
    const int y = kLetterBasis[pm];
    PbwMono rest = m;
    if (pm < 4) rest.a[pm] = 0;
    else --rest.n[pm - 4];

    const bool both_odd = alg_.parity(k) == Parity::odd && alg_.parity(y) == Parity::odd;
    const VermaVector xr = act(k, rest); // copy: recursion may grow the cache
    for (const auto& [mono, c] : xr) {
        const VermaVector yx = act(y, mono);
        for (const auto& [m2, c2] : yx) add_term(out, m2, both_odd ? -(c * c2) : c * c2);
    }
    VermaVector br = act_scaled(alg_.bracket(k, y), rest, Scalar::one());
    for (const auto& [m2, c2] : br) add_term(out, m2, c2);
    return out;
}

VermaVector VermaModule::act_scaled(const GElem& x, const PbwMono& m, const Scalar& c) const
{
    VermaVector out;
    if (c.is_zero()) return out;
    for (int i = 0; i < kAlgDim; ++i) {
        if (x.c[i].is_zero()) continue;
        Scalar f = c * x.c[i];
        const VermaVector& part = act(i, m);
        for (const auto& [m2, c2] : part) add_term(out, m2, f * c2);
    }
    return out;
}

VermaVector VermaModule::act(const GElem& x, const PbwMono& m) const
{
    return act_scaled(x, m, Scalar::one());
}

VermaVector VermaModule::act(const GElem& x, const VermaVector& v) const
{
    VermaVector out;
    for (const auto& [m, c] : v) {
        VermaVector part = act_scaled(x, m, c);
        for (const auto& [m2, c2] : part) add_term(out, m2, c2);
    }
    return out;
}

std::vector<PbwMono> VermaModule::weight_basis(const std::array<int, 3>& nu) const
{
    std::vector<PbwMono> out;
    for (int mask = 0; mask < 16; ++mask) {
        PbwMono m;
        std::array<int, 3> d{};
        for (int j = 0; j < 4; ++j) {
            if (!((mask >> j) & 1)) continue;
            m.a[j] = 1;
            for (int k = 0; k < 3; ++k) d[k] += kLetterDepth[j][k];
        }
        std::array<long, 3> r;
        bool ok = true;
        for (int k = 0; k < 3; ++k) {
            r[k] = nu[k] - d[k];
            if (r[k] < 0) ok = false;
        }
        if (!ok || (r[0] + r[1] + r[2]) % 2 != 0) continue;
        const long n1 = (-r[0] + r[1] + r[2]) / 2;
        const long n2 = (r[0] - r[1] + r[2]) / 2;
        const long n3 = (r[0] + r[1] - r[2]) / 2;
        if (n1 < 0 || n2 < 0 || n3 < 0) continue;
        m.n = {static_cast<std::uint32_t>(n1), static_cast<std::uint32_t>(n2),
               static_cast<std::uint32_t>(n3)};
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int VermaModule::verma_dim(const std::array<int, 3>& nu) const
{
    return static_cast<int>(weight_basis(nu).size());
}

ScalarMatrix VermaModule::gram(const std::array<int, 3>& nu) const
{
    const std::vector<PbwMono> basis = weight_basis(nu);
    const int dim = static_cast<int>(basis.size());
    ScalarMatrix g(dim, dim);
    const PbwMono unit{};
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            // <m_i v, m_j v>: peel the letters of m_i off the left argument
            // front to back, moving each across as its transpose.
            VermaVector u;
            u.emplace(basis[j], Scalar::one());
            for (int p = 0; p < kNumLetters && !u.empty(); ++p) {
                int exp = p < 4 ? basis[i].a[p] : static_cast<int>(basis[i].n[p - 4]);
                for (int rep = 0; rep < exp && !u.empty(); ++rep) {
                    u = act(omega_letter_[p], u);
                }
            }
            auto it = u.find(unit);
            g.at(i, j) = it == u.end() ? Scalar::zero() : it->second;
        }
    }
    return g;
}

const ScalarMatrix& VermaModule::gram_cached(const std::array<int, 3>& nu) const
{
    auto it = gram_cache_.find(nu);
    if (it != gram_cache_.end()) return it->second;
    return gram_cache_.emplace(nu, gram(nu)).first->second;
}

int VermaModule::rank_cached(const std::array<int, 3>& nu) const
{
    auto it = rank_cache_.find(nu);
    if (it != rank_cache_.end()) return it->second;
    int r = rank_fraction_free(gram_cached(nu));
    rank_cache_.emplace(nu, r);
    return r;
}

int VermaModule::simple_mult(const std::array<int, 3>& nu) const
{
    return rank_cached(nu);
}

void VermaModule::require_rational(const char* what) const
{
    bool ok = alg_.alpha().as_rational().has_value();
    for (const Scalar& l : lambda_.v) ok = ok && l.as_rational().has_value();
    if (!ok) {
        throw std::invalid_argument(std::string(what) +
                                    ": requires a rational parameter and a rational weight");
    }
}

bool VermaModule::injective_at(int i, const std::array<int, 3>& nu) const
{
    if (i < 1 || i > 3) throw std::invalid_argument("injective_at: index out of range");
    require_rational("injective_at");

    const std::vector<PbwMono> lo = weight_basis(nu);
    if (lo.empty()) return true;
    std::array<int, 3> up = nu;
    for (int k = 0; k < 3; ++k) up[k] += kLetterDepth[4 + (i - 1)][k];
    const std::vector<PbwMono> hi = weight_basis(up);

    std::map<PbwMono, int> row;
    for (int r = 0; r < static_cast<int>(hi.size()); ++r) row.emplace(hi[r], r);

    // T: matrix of left multiplication by F_i between the Verma weight spaces.
    ScalarMatrix t(static_cast<int>(hi.size()), static_cast<int>(lo.size()));
    const int fi = kLetterBasis[4 + (i - 1)];
    for (int j = 0; j < static_cast<int>(lo.size()); ++j) {
        for (const auto& [m2, c2] : act(fi, lo[j])) {
            auto it = row.find(m2);
            if (it == row.end()) throw std::logic_error("injective_at: weight bookkeeping failed");
            t.at(it->second, j) = c2;
        }
    }

    // In the simple quotient, [x] maps to zero exactly when F_i x pairs to
    // zero with the whole upper weight space, so injectivity says the
    // pairing matrix keeps the full rank of the form downstairs.
    ScalarMatrix k = gram_cached(up) * t;
    return rank_fraction_free(k) == rank_cached(nu);
}

bool VermaModule::injectivity_witness(int i, int cutoff) const
{
    for (int x = 0; x <= cutoff; ++x) {
        for (int y = 0; y <= cutoff; ++y) {
            for (int z = 0; z <= cutoff; ++z) {
                if (!injective_at(i, {x, y, z})) return false;
            }
        }
    }
    return true;
}

} // namespace d21a
