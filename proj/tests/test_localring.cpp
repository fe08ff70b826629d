#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mext/duval.hpp"
#include "mext/error.hpp"
#include "mext/localring.hpp"

using namespace mext;
using mext::testing::P;
using mext::testing::random_poly;

TEST_CASE("colength of simple ideals") {
    auto len = [&](std::vector<std::string> gens) {
        std::vector<Polynomial> g;
        for (const auto& s : gens)
            g.push_back(P(s));
        return colength(g);
    };
    Colength c1 = len({"x", "y", "z"});
    CHECK(c1.stabilized);
    CHECK(c1.value == 1);

    Colength c3 = len({"x", "y^3", "z"});
    CHECK(c3.stabilized);
    CHECK(c3.value == 3);

    Colength c8 = len({"x^2", "y^2", "z^2"});
    CHECK(c8.stabilized);
    CHECK(c8.value == 8);

    Colength e7 = len({"x", "y", "z^3"});
    CHECK(e7.stabilized);
    CHECK(e7.value == 3);

    Colength unit = len({"1 + x"});
    CHECK(unit.stabilized);
    CHECK(unit.value == 0);

    Colength inf = colength({});
    CHECK_FALSE(inf.stabilized);
}

TEST_CASE("colength is monotone under added generators") {
    std::mt19937_64 rng(71);
    int done = 0;
    while (done < 25) {
        std::vector<Polynomial> gens{P("x^2") + random_poly(rng, ctx_xyz(), 3, 2),
                                     P("y^3") + random_poly(rng, ctx_xyz(), 3, 2), P("z^2")};
        Colength before = colength(gens, 16);
        gens.push_back(random_poly(rng, ctx_xyz(), 2, 2));
        Colength after = colength(gens, 16);
        if (!before.stabilized || !after.stabilized)
            continue;
        ++done;
        CHECK(after.value <= before.value);
    }
}

TEST_CASE("colength of powers of the maximal ideal") {
    for (int k = 1; k <= 5; ++k) {
        std::vector<Polynomial> gens;
        auto basis = monomials_below(ctx_xyz(), k + 1);
        for (const auto& m : basis) {
            long d = 0;
            for (unsigned e : m.exps())
                d += e;
            if (d == k) {
                Polynomial f(ctx_xyz());
                f.add_term(m, Scalar(1));
                gens.push_back(f);
            }
        }
        Colength c = colength(gens);
        CHECK(c.stabilized);
        CHECK(c.value == k * (k + 1) * (k + 2) / 6);
    }
}

TEST_CASE("milnor numbers") {
    auto mu = [&](const std::string& s) { return milnor_number(P(s)); };
    MilnorNumber a1 = mu("x^2 + y^2 + z^2");
    CHECK(a1.isolated);
    CHECK(a1.mu == 1);

    MilnorNumber a3 = mu("x*z - y^4");
    CHECK(a3.isolated);
    CHECK(a3.mu == 3);

    MilnorNumber e6 = mu("x*(x + z^2) - y^3");
    CHECK(e6.isolated);
    CHECK(e6.mu == 6);

    MilnorNumber bad = mu("x^2");
    CHECK_FALSE(bad.isolated);

    MilnorNumber zero = milnor_number(Polynomial(ctx_xyz()));
    CHECK_FALSE(zero.isolated);

    CHECK_THROWS_AS(mu("1 + x"), DomainError);
}

TEST_CASE("milnor number of every ADE normal form equals the rank") {
    std::vector<DuValType> types;
    for (int n = 1; n <= 8; ++n)
        types.emplace_back('A', n);
    for (int n = 4; n <= 8; ++n)
        types.emplace_back('D', n);
    for (int n = 6; n <= 8; ++n)
        types.emplace_back('E', n);
    for (const auto& t : types) {
        MilnorNumber m = milnor_number(duval_equation(t));
        CHECK(m.isolated);
        CHECK(m.mu == t.rank);
    }
}

TEST_CASE("width of format ideals") {
    FormatSpec plain0 = FormatSpec::plain(FormatKind::A, 4, 2, Polynomial(ctx_xyz()),
                                          Polynomial(ctx_xyz()));
    CHECK(width(plain0) == 2);

    FormatSpec red = FormatSpec::plain(FormatKind::A, 4, 2, P("y"), P("z"));
    CHECK(width(red) == 1);

    FormatSpec unit = FormatSpec::plain(FormatKind::A, 4, 2, P("1"), P("0"));
    CHECK(width(unit) == 0);
}

TEST_CASE("width is bounded by the phi colength") {
    // w(D_0) <= w_phi with equality when a = b = 0
    struct Row {
        FormatKind kind;
        int n, i;
        long wphi;
    };
    std::vector<Row> rows{{FormatKind::A, 6, 2, 2},  {FormatKind::Dl, 5, 0, 2},
                          {FormatKind::Dr, 6, 0, 3}, {FormatKind::Dr, 7, 0, 3},
                          {FormatKind::E6, 6, 0, 2}, {FormatKind::E7, 7, 0, 3}};
    std::mt19937_64 rng(83);
    for (const auto& r : rows) {
        FormatSpec zero = FormatSpec::plain(r.kind, r.n, r.i, Polynomial(ctx_xyz()),
                                            Polynomial(ctx_xyz()));
        CHECK(width(zero) == r.wphi);
        for (int trial = 0; trial < 5; ++trial) {
            CtxPtr yz = ctx_xyz();
            Polynomial a = r.kind == FormatKind::A
                               ? P("x") * random_poly(rng, yz, 1, 1) + P("y") * random_poly(rng, yz, 1, 1)
                               : P("y") * random_poly(rng, yz, 1, 1) + P("z") * random_poly(rng, yz, 1, 1);
            // keep supports legal: A needs a(x,y)
            if (r.kind == FormatKind::A)
                a = P("x + y^2");
            else
                a = P("y - z^2");
            Polynomial b = P("y*z + z^2");
            FormatSpec s = FormatSpec::plain(r.kind, r.n, r.i, a, b);
            CHECK(width(s) <= r.wphi);
        }
    }
}

TEST_CASE("bounded membership certificates") {
    std::vector<Polynomial> gens{P("x^2 - y^3"), P("y*z + x^2"), P("z^2")};
    Polynomial h = gens[0] * gens[1];
    Membership m = membership_bounded(h, gens, static_cast<int>(h.degree()));
    CHECK(m.proven);
    REQUIRE(m.cofactors.size() == gens.size());
    Polynomial check(ctx_xyz());
    for (std::size_t k = 0; k < gens.size(); ++k)
        check += m.cofactors[k] * gens[k];
    CHECK(check == h);

    // 1 is not in the maximal ideal at any degree bound
    Membership no = membership_bounded(P("1"), {P("x + y^2"), P("z"), P("y*x")}, 6);
    CHECK_FALSE(no.proven);
}

TEST_CASE("membership search stops at the degree bound") {
    // x*y^5 needs a degree-5 cofactor on x
    Membership low = membership_bounded(P("x*y^5"), {P("x")}, 3);
    CHECK_FALSE(low.proven);
    Membership hi = membership_bounded(P("x*y^5"), {P("x")}, 5);
    CHECK(hi.proven);
}
