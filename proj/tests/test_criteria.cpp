#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d21a/criteria.hpp"

using namespace d21a;

namespace {

Weight wt(const Scalar& x, const Scalar& y, const Scalar& z) { return Weight{{x, y, z}}; }

Weight wt_rat(const Rat& x, const Rat& y, const Rat& z)
{
    return wt(Scalar::from_rat(x), Scalar::from_rat(y), Scalar::from_rat(z));
}

} // namespace

TEST_CASE("the closed-form injectivity test on landmark weights")
{
    SUBCASE("integral c value blocks a direction") {
        RootSystem rs(Scalar::from_int(2));
        Weight lam = wt_rat(1, 1, 1); // c = (-2/3, 1, 2)
        CHECK(!inj_full(rs, lam));
    }
    SUBCASE("small rational weight passes symbolically") {
        RootSystem rs;
        Weight lam = wt_rat(Rat(1, 3), Rat(1, 3), Rat(1, 3));
        CHECK(inj_full(rs, lam));
    }
    SUBCASE("two vanishing entries are too many") {
        RootSystem rs;
        Weight lam = wt_rat(0, 0, 1);
        CHECK(!inj_full(rs, lam));
    }
    SUBCASE("one vanishing entry can still pass") {
        RootSystem rs(Scalar::from_int(2));
        Weight lam = wt_rat(0, Rat(1, 3), Rat(1, 3)); // c = (-2/9, 1/6, 1/3)
        CHECK(inj_full(rs, lam));
    }
    SUBCASE("negative integral c does not block") {
        // c_3 = l1 + l2 = -1 is integral but < 1
        RootSystem rs;
        Weight lam = wt_rat(Rat(-1, 2), Rat(-1, 2), Rat(1, 5));
        CHECK(inj_full(rs, lam));
    }
    SUBCASE("symbolic c values are never constant integers") {
        RootSystem rs;
        Weight lam = wt(Scalar::alpha(), Scalar::one(), Scalar::one());
        CHECK(inj_full(rs, lam));
    }
}

TEST_CASE("classification hits all four predicted-degree branches")
{
    RootSystem rs(Scalar::from_int(2));

    CuspidalReport blocked = classify(rs, wt_rat(1, 1, 1));
    CHECK(blocked.typical);
    CHECK(!blocked.inj_full);
    CHECK(blocked.predicted_degree == "not cuspidal-eligible");

    RootSystem sym;
    CuspidalReport typ = classify(sym, wt_rat(Rat(1, 3), Rat(1, 3), Rat(1, 3)));
    CHECK(typ.typical);
    CHECK(typ.inj_full);
    CHECK(typ.zero_count == 0);
    CHECK(typ.predicted_degree == "exactly 8");

    CuspidalReport zer = classify(rs, wt_rat(0, Rat(1, 3), Rat(1, 3)));
    CHECK(!zer.typical);
    CHECK(zer.inj_full);
    CHECK(zer.zero_count == 1);
    CHECK(zer.predicted_degree == "range 2..4");

    // sum of entries vanishes, no single entry does
    CuspidalReport mid = classify(sym, wt_rat(Rat(1, 3), Rat(1, 3), Rat(-2, 3)));
    CHECK(!mid.typical);
    CHECK(mid.inj_full);
    CHECK(mid.zero_count == 0);
    CHECK(mid.predicted_degree == "range 2..6");
}

TEST_CASE("report invariants over a sample sweep")
{
    RootSystem rs(Scalar::from_rat(Rat(3, 2)));
    std::vector<Weight> sample;
    for (int x : {-2, 0, 1}) {
        for (int y : {-1, 0, 2}) {
            for (int z : {0, 1, 3}) {
                sample.push_back(wt_rat(Rat(x, 3), Rat(y, 2), Rat(z, 5)));
            }
        }
    }
    for (const Weight& lam : sample) {
        CuspidalReport r = classify(rs, lam);
        CHECK(r.typical == rs.is_typical(lam));
        int zc = 0;
        for (const auto& s : lam.v)
            if (s.is_zero()) ++zc;
        CHECK(r.zero_count == zc);
        CHECK((r.predicted_degree == "exactly 8") == (r.typical && r.inj_full));
        if (r.predicted_degree == "range 2..4") {
            CHECK(r.inj_full);
            CHECK(r.zero_count >= 1);
        }
        if (r.predicted_degree == "range 2..6") {
            CHECK(r.inj_full);
            CHECK(r.zero_count == 0);
            CHECK(!r.typical);
        }
        if (!r.inj_full) CHECK(r.predicted_degree == "not cuspidal-eligible");
    }
}

TEST_CASE("json rendering is exact and field-ordered")
{
    RootSystem rs(Scalar::from_int(2));
    CuspidalReport r = classify(rs, wt_rat(1, 1, 1));
    CHECK(report_to_json(r) ==
          R"({"typical":true,"c":["-2/3","1","2"],"zero_count":0,)"
          R"("inj_full":false,"predicted_degree":"not cuspidal-eligible"})");

    CuspidalReport t = classify(RootSystem(), wt_rat(Rat(1, 3), Rat(1, 3), Rat(1, 3)));
    std::string js = report_to_json(t);
    CHECK(js == report_to_json(t)); // deterministic
    CHECK(js.find("\"predicted_degree\":\"exactly 8\"") != std::string::npos);
}

TEST_CASE("coset labels of lattice points")
{
    CHECK(support_coset_class({1, 0, 0}) == 1);
    CHECK(support_coset_class({1, 1, 0}) == 0);
    CHECK(support_coset_class({1, 1, 1}) == 1);
    CHECK(support_coset_class({0, 0, 0}) == 0);
    CHECK(support_coset_class({-1, 0, 0}) == 1);
    CHECK(support_coset_class({2, 3, 4}) == 1);
}
