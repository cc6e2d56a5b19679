#pragma once

#include "d21a/rootsys.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace d21a {

// One coefficient of a parity-graded series: even and odd dimensions.
struct ParityCoeff {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;

    friend bool operator==(const ParityCoeff& x, const ParityCoeff& y) {
        return x.even == y.even && x.odd == y.odd;
    }
    friend bool operator!=(const ParityCoeff& x, const ParityCoeff& y) { return !(x == y); }
};

// Truncated formal series with parity-split nonnegative integer
// coefficients, exponents over a base's simple roots inside [0, cutoff]^3.
class ParityCharacter {
public:
    ParityCharacter(int cutoff, Base base);

    int cutoff() const { return cutoff_; }
    const Base& base() const { return base_; }
    const ParityCoeff& at(int m1, int m2, int m3) const;
    ParityCoeff& at(int m1, int m2, int m3);

    // CSV rows "m1,m2,m3,d0,d1" in ascending lexicographic order, with
    // header.  Zero rows are kept so the table shape is explicit.
    std::string to_csv() const;

private:
    int cutoff_;
    Base base_;
    std::vector<ParityCoeff> tab_;
};

// Character of the highest weight module with free action of the negative
// roots of the base: product over positive odd roots of (1 + x^root) times
// the geometric series over positive even roots, truncated to the box.
// The coefficient at (m1,m2,m3) is the (even, odd) dimension pair at depth
// m1*s1 + m2*s2 + m3*s3 below the highest weight.
ParityCharacter verma_character(const RootSystem& rs, const Base& base, int cutoff);

// Independent enumeration of a single coefficient for the distinguished
// base: subsets of the four positive odd roots, with the even part solved
// in closed form.  Test oracle for verma_character; shares no series code.
ParityCoeff verma_mult_oracle(const std::array<int, 3>& nu);

struct StabilizedDegree {
    int degree = 0;   // max total coefficient over the box
    int even = 0;     // max even part
    int odd = 0;      // max odd part
    bool bound_ok = true;      // no coefficient exceeded 8
    bool band_parity_ok = true; // every cell lives purely in the parity slot
                                // named by its coset class, the diagonal
                                // (m,m,m) is stabilized at total 8 from m = 3
                                // on, and stabilized band cells of both
                                // classes occur
};

// Degree data of the truncated character of the base at the given cutoff.
// The parity law uses the coset class of m1*s1+m2*s2+m3*s3, which for the
// distinguished base is m1+m2+m3 mod 2.  No base stabilizes the full band
// min(m_i) >= 3: a cell with one coordinate far beyond the other two falls
// outside the support cone of the even positive roots and stays below 8, so
// stabilization is asserted along the diagonal ray, which every base keeps
// inside the cone.
StabilizedDegree stabilized_degree(const RootSystem& rs, const Base& base, int cutoff);

struct InducedDegree {
    std::uint64_t even_class = 0; // coefficient mass on the even coset
    std::uint64_t odd_class = 0;
    std::uint64_t total = 0;
};

// Expands the product over all eight odd roots of (1 + x^root) and sums the
// coefficients inside each coset of the even root lattice.
InducedDegree induced_degree(const RootSystem& rs);

} // namespace d21a
