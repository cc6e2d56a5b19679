#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d21a/charseries.hpp"
#include "d21a/verma.hpp"

#include <stdexcept>

using namespace d21a;

namespace {

PbwMono mono(std::array<std::uint8_t, 4> a, std::array<std::uint32_t, 3> n)
{
    PbwMono m;
    m.a = a;
    m.n = n;
    return m;
}

VermaVector unit(const PbwMono& m) { return VermaVector{{m, Scalar::one()}}; }

// act(x, act(y, m)) - (-1)^{|x||y|} act(y, act(x, m)) == act([x,y], m)
void check_rep_property(const VermaModule& mod, const std::vector<PbwMono>& monos)
{
    const AlgebraTable& alg = mod.algebra();
    int bad = 0;
    for (int i = 0; i < kAlgDim; ++i) {
        GElem x = GElem::basis(i);
        for (int j = 0; j < kAlgDim; ++j) {
            GElem y = GElem::basis(j);
            bool both_odd = alg.parity(i) == Parity::odd && alg.parity(j) == Parity::odd;
            for (const PbwMono& m : monos) {
                VermaVector lhs = mod.act(x, mod.act(y, m));
                VermaVector yx = mod.act(y, mod.act(x, m));
                for (const auto& [mm, cc] : yx) add_term(lhs, mm, both_odd ? cc : -cc);
                VermaVector rhs = mod.act(alg.bracket(i, j), unit(m));
                if (lhs != rhs) ++bad;
            }
        }
    }
    CHECK(bad == 0);
}

} // namespace

TEST_CASE("monomial bookkeeping: depth, parity, printing, order")
{
    PbwMono one;
    CHECK(one.str() == "1");
    CHECK(one.letter_count() == 0);
    CHECK(one.depth() == std::array<int, 3>{0, 0, 0});

    PbwMono m = mono({1, 1, 0, 0}, {0, 0, 2});
    CHECK(m.str() == "f1 f2 F3^2");
    CHECK(m.letter_count() == 4);
    CHECK(m.parity_class() == 0);
    // f1 f2 lowers by b1+b2, F3^2 by 2(b1+b2)
    CHECK(m.depth() == std::array<int, 3>{3, 3, 0});

    PbwMono k = mono({0, 0, 0, 1}, {1, 0, 0});
    CHECK(k.str() == "f123 F1");
    CHECK(k.depth() == std::array<int, 3>{1, 2, 2});
    CHECK(k.parity_class() == 1);

    // odd letters sort before even exponents
    CHECK(mono({0, 0, 0, 0}, {0, 0, 1}) < mono({1, 1, 0, 0}, {0, 0, 0}));
}

TEST_CASE("straightening is a representation of the whole algebra")
{
    SUBCASE("symbolic parameter, mixed weight") {
        AlgebraTable alg = AlgebraTable::build(Scalar::alpha());
        Weight lam{{Scalar::alpha(), Scalar::from_rat(Rat(1, 2)), Scalar::from_int(-3)}};
        VermaModule mod(alg, lam);
        check_rep_property(mod, {PbwMono{}, mono({1, 0, 0, 0}, {0, 0, 0}),
                                 mono({0, 0, 0, 0}, {1, 0, 0}),
                                 mono({0, 1, 1, 0}, {0, 1, 0})});
    }
    SUBCASE("rational parameter, deeper monomials") {
        AlgebraTable alg = AlgebraTable::build(Scalar::from_rat(Rat(5, 2)));
        Weight lam{{Scalar::from_rat(Rat(4, 3)), Scalar::from_rat(Rat(-7, 5)),
                    Scalar::from_int(9)}};
        VermaModule mod(alg, lam);
        check_rep_property(mod, {mono({1, 1, 1, 1}, {0, 0, 0}),
                                 mono({0, 0, 0, 0}, {1, 1, 1}),
                                 mono({0, 1, 0, 1}, {1, 0, 1})});
    }
}

TEST_CASE("raising against a single lowering letter reads off the weight")
{
    AlgebraTable alg = AlgebraTable::build(Scalar::alpha());
    Weight lam{{Scalar::alpha(), Scalar::from_rat(Rat(1, 2)), Scalar::from_int(-3)}};
    VermaModule mod(alg, lam);

    for (int i = 1; i <= 3; ++i) {
        PbwMono fi;
        fi.a[i - 1] = 1;
        VermaVector got = mod.act(alg.e(i), fi);
        VermaVector want{{PbwMono{}, lam.v[i - 1]}};
        CHECK(got == want);
    }
    // the long odd pair brackets to minus the sum of the coroots
    PbwMono f123 = mono({0, 0, 0, 1}, {0, 0, 0});
    VermaVector got = mod.act(GElem::basis(be123), f123);
    Scalar s = -(lam.v[0] + lam.v[1] + lam.v[2]);
    VermaVector want{{PbwMono{}, s}};
    CHECK(got == want);
}

TEST_CASE("cartan values agree with the root-system c values")
{
    RootSystem rs(Scalar::from_int(2));
    AlgebraTable alg = AlgebraTable::build(Scalar::from_int(2));
    Weight lam{{Scalar::one(), Scalar::one(), Scalar::one()}};
    VermaModule mod(alg, lam);
    auto c = rs.c_values(lam);
    for (int i = 0; i < 3; ++i) CHECK(mod.cartan_values()[i] == c[i]);
    CHECK(c[0] == Scalar::from_rat(Rat(-2, 3)));
    CHECK(c[1] == Scalar::one());
    CHECK(c[2] == Scalar::from_int(2));
}

TEST_CASE("weight space dimensions match the character coefficient by coefficient")
{
    AlgebraTable alg = AlgebraTable::build(Scalar::from_int(2));
    Weight lam{{Scalar::one(), Scalar::one(), Scalar::one()}};
    VermaModule mod(alg, lam);
    for (int x = 0; x <= 3; ++x)
        for (int y = 0; y <= 3; ++y)
            for (int z = 0; z <= 3; ++z) {
                auto basis = mod.weight_basis({x, y, z});
                ParityCoeff c = verma_mult_oracle({x, y, z});
                std::uint64_t ev = 0, od = 0;
                for (const PbwMono& m : basis) (m.parity_class() == 0 ? ev : od) += 1;
                CHECK(ev == c.even);
                CHECK(od == c.odd);
                CHECK(mod.verma_dim({x, y, z}) == int(c.even + c.odd));
                // all monomials really live at the requested depth, sorted
                for (std::size_t t = 0; t < basis.size(); ++t) {
                    CHECK(basis[t].depth() == std::array<int, 3>{x, y, z});
                    if (t) CHECK(basis[t - 1] < basis[t]);
                }
            }
}

TEST_CASE("contravariant form: frozen 2x2 block and symmetry")
{
    SUBCASE("rational weight") {
        AlgebraTable alg = AlgebraTable::build(Scalar::alpha());
        Weight lam{{Scalar::from_rat(Rat(5, 3)), Scalar::from_rat(Rat(7, 2)),
                    Scalar::from_int(-2)}};
        VermaModule mod(alg, lam);
        auto basis = mod.weight_basis({1, 1, 0});
        REQUIRE(basis.size() == 2);
        CHECK(basis[0].str() == "F3");
        CHECK(basis[1].str() == "f1 f2");
        ScalarMatrix g = mod.gram({1, 1, 0});
        // [[-(l1+l2), -l2], [-l2, (l1-1) l2]]
        CHECK(g.at(0, 0) == Scalar::from_rat(Rat(-31, 6)));
        CHECK(g.at(0, 1) == Scalar::from_rat(Rat(-7, 2)));
        CHECK(g.at(1, 0) == Scalar::from_rat(Rat(-7, 2)));
        CHECK(g.at(1, 1) == Scalar::from_rat(Rat(7, 3)));
        Scalar det = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0);
        // -l1 l2 (l1 + l2 - 1)
        CHECK(det == Scalar::from_rat(Rat(-875, 36)));
    }
    SUBCASE("symbolic weight entry") {
        AlgebraTable alg = AlgebraTable::build(Scalar::alpha());
        Weight lam{{Scalar::alpha(), Scalar::one(), Scalar::one()}};
        VermaModule mod(alg, lam);
        ScalarMatrix g = mod.gram({1, 1, 0});
        Scalar det = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0);
        CHECK(det == -(Scalar::alpha() * Scalar::alpha()));
    }
    SUBCASE("symmetry at mixed depths") {
        AlgebraTable alg = AlgebraTable::build(Scalar::from_rat(Rat(3, 2)));
        Weight lam{{Scalar::from_rat(Rat(2, 7)), Scalar::from_int(1),
                    Scalar::from_rat(Rat(-1, 3))}};
        VermaModule mod(alg, lam);
        for (auto nu : {std::array<int, 3>{1, 1, 1}, {2, 1, 1}, {2, 2, 1}}) {
            ScalarMatrix g = mod.gram(nu);
            CHECK(g.rows == mod.verma_dim(nu));
            for (int i = 0; i < g.rows; ++i)
                for (int j = 0; j < i; ++j) CHECK(g.at(i, j) == g.at(j, i));
        }
    }
}

TEST_CASE("typical weights keep full weight spaces in the simple quotient")
{
    AlgebraTable alg = AlgebraTable::build(Scalar::alpha());
    Weight lam{{Scalar::from_rat(Rat(1, 3)), Scalar::from_rat(Rat(1, 3)),
                Scalar::from_rat(Rat(1, 3))}};
    VermaModule mod(alg, lam);
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y)
            for (int z = 0; z <= 2; ++z)
                CHECK(mod.simple_mult({x, y, z}) == mod.verma_dim({x, y, z}));
}

TEST_CASE("atypical weights lose dimensions somewhere")
{
    SUBCASE("vanishing first entry kills f1 immediately") {
        AlgebraTable alg = AlgebraTable::build(Scalar::from_int(2));
        Weight lam{{Scalar::zero(), Scalar::one(), Scalar::one()}};
        VermaModule mod(alg, lam);
        CHECK(mod.verma_dim({1, 0, 0}) == 1);
        CHECK(mod.simple_mult({1, 0, 0}) == 0);
    }
    SUBCASE("zero weight sum drops strictly inside the box") {
        AlgebraTable alg = AlgebraTable::build(Scalar::from_int(2));
        Weight lam{{Scalar::one(), Scalar::one(), Scalar::from_int(-2)}};
        VermaModule mod(alg, lam);
        bool strict = false;
        for (int x = 0; x <= 2; ++x)
            for (int y = 0; y <= 2; ++y)
                for (int z = 0; z <= 2; ++z) {
                    int s = mod.simple_mult({x, y, z});
                    int v = mod.verma_dim({x, y, z});
                    CHECK(s <= v);
                    if (s < v) strict = true;
                }
        CHECK(strict);
    }
}

TEST_CASE("injectivity scan: domain checks and stabilized directions")
{
    SUBCASE("rejects symbolic data") {
        AlgebraTable symA = AlgebraTable::build(Scalar::alpha());
        Weight ratL{{Scalar::one(), Scalar::one(), Scalar::one()}};
        VermaModule m1(symA, ratL);
        CHECK_THROWS_AS(m1.injective_at(1, {0, 0, 0}), std::invalid_argument);

        AlgebraTable ratA = AlgebraTable::build(Scalar::from_int(2));
        Weight symL{{Scalar::alpha(), Scalar::one(), Scalar::one()}};
        VermaModule m2(ratA, symL);
        CHECK_THROWS_AS(m2.injective_at(1, {0, 0, 0}), std::invalid_argument);
    }
    SUBCASE("rejects directions outside 1..3") {
        AlgebraTable alg = AlgebraTable::build(Scalar::from_int(2));
        Weight lam{{Scalar::one(), Scalar::one(), Scalar::one()}};
        VermaModule mod(alg, lam);
        CHECK_THROWS_AS(mod.injective_at(0, {0, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(mod.injective_at(4, {0, 0, 0}), std::invalid_argument);
    }
    SUBCASE("empty weight space is vacuously injective") {
        AlgebraTable alg = AlgebraTable::build(Scalar::from_int(2));
        Weight lam{{Scalar::one(), Scalar::one(), Scalar::one()}};
        VermaModule mod(alg, lam);
        CHECK(mod.verma_dim({2, 0, 0}) == 0);
        CHECK(mod.injective_at(1, {2, 0, 0}));
    }
    SUBCASE("weight with one integral c value fails exactly off that direction") {
        // lambda = (1,1,1) at alpha = 2: c = (-2/3, 1, 2), so the scans
        // along directions 2 and 3 must both find an obstruction
        AlgebraTable alg = AlgebraTable::build(Scalar::from_int(2));
        Weight lam{{Scalar::one(), Scalar::one(), Scalar::one()}};
        VermaModule mod(alg, lam);
        CHECK(mod.injectivity_witness(1, 3));
        CHECK(!mod.injectivity_witness(2, 3));
        CHECK(!mod.injectivity_witness(3, 3));
    }
}
