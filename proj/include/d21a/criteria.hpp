#pragma once

#include "d21a/rootsys.hpp"

#include <array>
#include <string>

namespace d21a {

// Closed-form classification of a highest weight for bounded/cuspidal
// behavior: typicality, the even Cartan values c_i, and the predicted
// degree of the associated cuspidal weight modules.
struct CuspidalReport {
    bool typical = false;
    std::array<Scalar, 3> c{};
    int zero_count = 0;
    bool inj_full = false;
    std::string predicted_degree;
};

// True iff no c_i is a constant integer >= 1 and at most one lambda_i
// vanishes; this is the closed-form test for every even lowering element
// acting injectively on the simple highest weight module.
bool inj_full(const RootSystem& rs, const Weight& lam);

// predicted_degree: "exactly 8" iff typical (and eligible); "range 2..4"
// when eligible with some lambda_i = 0; "range 2..6" for the remaining
// eligible atypical weights; "not cuspidal-eligible" otherwise.
CuspidalReport classify(const RootSystem& rs, const Weight& lam);

// Flat JSON record with fields typical, c, zero_count, inj_full,
// predicted_degree (deterministic field order, scalars as strings).
std::string report_to_json(const CuspidalReport& r);

// Q0-coset label (0 or 1) of a root-lattice point given over the
// distinguished simple roots: coordinate sum mod 2.
int support_coset_class(const std::array<int, 3>& nu);

} // namespace d21a
