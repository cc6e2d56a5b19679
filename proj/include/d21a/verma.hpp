#pragma once

#include "d21a/matrix.hpp"
#include "d21a/superalg.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace d21a {

// Number of negative-root letters in the fixed PBW order:
// f1, f2, f3, f123, F1, F2, F3.
inline constexpr int kNumLetters = 7;

// Ordered monomial  f1^a0 f2^a1 f3^a2 f123^a3 F1^n0 F2^n1 F3^n2  applied to
// the highest weight vector.  Odd exponents are 0 or 1.
struct PbwMono {
    std::array<std::uint8_t, 4> a{};
    std::array<std::uint32_t, 3> n{};

    // Depth below the highest weight in simple-root coordinates.
    std::array<int, 3> depth() const;
    int letter_count() const;
    // Parity of the vector relative to the highest weight vector
    // (number of odd letters mod 2).
    int parity_class() const { return (a[0] + a[1] + a[2] + a[3]) % 2; }
    std::string str() const;

    friend bool operator==(const PbwMono& x, const PbwMono& y) { return x.a == y.a && x.n == y.n; }
    friend bool operator<(const PbwMono& x, const PbwMono& y)
    {
        if (x.a != y.a) return x.a < y.a;
        return x.n < y.n;
    }
};

// Finite linear combination of PBW monomials (a vector in the Verma module).
using VermaVector = std::map<PbwMono, Scalar>;

void add_term(VermaVector& v, const PbwMono& m, const Scalar& c);
std::string format_vector(const VermaVector& v);

// Verma module with highest weight lambda (values on h1, h2, h3) over the
// algebra at the table's parameter.  All arithmetic is exact.
class VermaModule {
public:
    VermaModule(const AlgebraTable& alg, const Weight& lambda);

    const AlgebraTable& algebra() const { return alg_; }
    const Weight& highest_weight() const { return lambda_; }
    // Values of the highest weight on the even Cartan triple (H1, H2, H3).
    const std::array<Scalar, 3>& cartan_values() const { return cval_; }

    // Action of a basis element / element on a monomial or a vector,
    // straightened back into PBW form.  Memoized on (basis index, monomial).
    const VermaVector& act(int basisIndex, const PbwMono& m) const;
    VermaVector act(const GElem& x, const VermaVector& v) const;
    VermaVector act(const GElem& x, const PbwMono& m) const;

    // All PBW monomials of the given depth, ascending lexicographic order.
    std::vector<PbwMono> weight_basis(const std::array<int, 3>& nu) const;
    int verma_dim(const std::array<int, 3>& nu) const;

    // Contravariant-form matrix on the weight space at depth nu, in the
    // weight_basis order.
    ScalarMatrix gram(const std::array<int, 3>& nu) const;

    // Dimension of the weight space of the simple quotient at depth nu
    // (rank of the form).
    int simple_mult(const std::array<int, 3>& nu) const;

    // True when multiplication by the even lowering element F_i maps the
    // simple quotient's weight space at depth nu injectively into the one
    // at depth nu + (root of F_i).  Requires the table parameter and the
    // highest weight to be rational constants.
    bool injective_at(int i, const std::array<int, 3>& nu) const;
    // Conjunction of injective_at(i, nu) over the box 0 <= nu_k <= cutoff.
    bool injectivity_witness(int i, int cutoff) const;

private:
    VermaVector act_uncached(int basisIndex, const PbwMono& m) const;
    VermaVector act_scaled(const GElem& x, const PbwMono& m, const Scalar& c) const;
    const ScalarMatrix& gram_cached(const std::array<int, 3>& nu) const;
    int rank_cached(const std::array<int, 3>& nu) const;
    void require_rational(const char* what) const;

    const AlgebraTable& alg_;
    Weight lambda_;
    std::array<Scalar, 3> cval_;
    std::array<GElem, kNumLetters> omega_letter_;
    mutable std::map<std::pair<int, PbwMono>, VermaVector> cache_;
    mutable std::map<std::array<int, 3>, ScalarMatrix> gram_cache_;
    mutable std::map<std::array<int, 3>, int> rank_cache_;
};

} // namespace d21a
