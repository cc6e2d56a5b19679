#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace d21a {

// Exact rational numbers. GMP keeps mpq_class canonical (reduced, positive
// denominator) as long as values are produced through its operators; the
// two-argument constructor is the one spot that needs an explicit
// canonicalize() call, hence the helper below.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& r) {
    return r.get_den() == 1;
}

inline std::optional<std::int64_t> rat_as_int64(const Rat& r) {
    if (!rat_is_integer(r)) return std::nullopt;
    const BigInt& n = r.get_num();
    if (!n.fits_slong_p())
        throw std::overflow_error("rational: integer exceeds 64-bit range");
    return static_cast<std::int64_t>(n.get_si());
}

inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

} // namespace d21a
