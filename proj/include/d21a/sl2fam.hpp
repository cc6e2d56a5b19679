#pragma once

#include "d21a/scalar.hpp"

#include <array>
#include <string>
#include <vector>

namespace d21a {

// A finite exponent window of the weight family with parameter a: basis
// vectors x^s with s = mu + n for integers n in [lo, hi], and action
//   e . x^s = (a+s) x^{s+1},  f . x^s = (a-s) x^{s-1},  h . x^s = 2s x^s.
struct FamilyPoint {
    Scalar a;
    Scalar mu;
    int lo = -4;
    int hi = 4;
};

enum class Sl2Gen { e, f, h };

struct FamilyStep {
    Scalar coeff; // coefficient of the target vector
    Scalar new_s; // exponent of the target vector
};

FamilyStep family_action(const Scalar& a, Sl2Gen gen, const Scalar& s);

// The vector x^mu generates a simple cuspidal submodule exactly when
// neither mu + a nor mu - a is a constant integer.
bool is_simple_cuspidal(const Scalar& a, const Scalar& mu);

// Scalar by which h^2 + 2h + 4 f e acts on the whole family: 4a^2 - 4a.
Scalar casimir_scalar(const Scalar& a);
// The same combination evaluated from the action at one exponent; equals
// casimir_scalar(a) for every s.
Scalar casimir_at(const Scalar& a, const Scalar& s);

// [e,f] = h, [h,e] = 2e, [h,f] = -2f at every interior window exponent.
bool verify_sl2_relations(const FamilyPoint& p);

// Window exponents s whose vector is annihilated by e (a+s = 0) or by
// f (a-s = 0); empty on cuspidal windows.
std::vector<Scalar> e_annihilated(const FamilyPoint& p);
std::vector<Scalar> f_annihilated(const FamilyPoint& p);

// Threefold tensor product of family windows, one per even sl2 factor.
struct TensorFamily {
    std::array<FamilyPoint, 3> factor;
};

struct TensorShape {
    int degree = 1;     // dimension of every weight space in the support
    std::string support; // description of the lattice translate
};

// Requires every factor to pass is_simple_cuspidal (throws otherwise).
// Each weight space of the product is one-dimensional, and the support is
// the translate { s1 a1 + s2 a2 + s3 a3 : s_i in mu_i + Z } of the even
// root lattice.
TensorShape tensor_degree_and_support(const TensorFamily& t);

// Action table rows "s,generator,coefficient" over the window.
std::string family_csv(const FamilyPoint& p);

} // namespace d21a
