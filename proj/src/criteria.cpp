#include "d21a/criteria.hpp"

#include <nlohmann/json.hpp>

namespace d21a {

namespace {

bool is_integer_at_least_one(const Scalar& s)
{
    auto v = s.as_integer();
    return v.has_value() && *v >= 1;
}

int count_zero_coords(const Weight& lam)
{
    int z = 0;
    for (const Scalar& l : lam.v) {
        if (l.is_zero()) ++z;
    }
    return z;
}

} // namespace

bool inj_full(const RootSystem& rs, const Weight& lam)
{
    for (const Scalar& ci : rs.c_values(lam)) {
        if (is_integer_at_least_one(ci)) return false;
    }
    return count_zero_coords(lam) <= 1;
}

CuspidalReport classify(const RootSystem& rs, const Weight& lam)
{
    CuspidalReport r;
    r.typical = rs.is_typical(lam);
    r.c = rs.c_values(lam);
    r.zero_count = count_zero_coords(lam);
    r.inj_full = inj_full(rs, lam);
    if (!r.inj_full) r.predicted_degree = "not cuspidal-eligible";
    else if (r.typical) r.predicted_degree = "exactly 8";
    else if (r.zero_count >= 1) r.predicted_degree = "range 2..4";
    else r.predicted_degree = "range 2..6";
    return r;
}

std::string report_to_json(const CuspidalReport& r)
{
    nlohmann::ordered_json j;
    j["typical"] = r.typical;
    j["c"] = {r.c[0].str(), r.c[1].str(), r.c[2].str()};
    j["zero_count"] = r.zero_count;
    j["inj_full"] = r.inj_full;
    j["predicted_degree"] = r.predicted_degree;
    return j.dump();
}

int support_coset_class(const std::array<int, 3>& nu)
{
    return RootSystem::coset_class(nu);
}

} // namespace d21a
