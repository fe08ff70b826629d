#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mext/error.hpp"
#include "mext/newton.hpp"
#include "mext/skew.hpp"
#include "mext/unipoly.hpp"

using namespace mext;
using mext::testing::P;
using mext::testing::random_poly;
using mext::testing::random_rational;

TEST_CASE("rational arithmetic is exact") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        Scalar a(random_rational(rng, 1000)), b(random_rational(rng, 1000));
        CHECK((a + b) - b == a);
        if (!b.is_zero())
            CHECK((a / b) * b == a);
    }
}

TEST_CASE("extension elements stay reduced and invert") {
    // Q(i)
    FieldPtr gi = NumberField::gaussian();
    Scalar i = Scalar::generator(gi);
    CHECK(i * i == Scalar(-1));
    CHECK((i * i * i * i) == Scalar(1));
    Scalar z = Scalar(3) + i * Scalar(2);
    CHECK(z * z.inverse() == Scalar(1));
    CHECK(z.coeffs().size() == 2);

    // Q[t]/(t^3 - 2)
    FieldPtr cb = std::make_shared<NumberField>(std::vector<Rational>{-2, 0, 0, 1}, "c");
    Scalar c = Scalar::generator(cb);
    CHECK(c.pow(3) == Scalar(2));
    Scalar w = Scalar(1) + c + c * c;
    CHECK(w * w.inverse() == Scalar(1));

    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; ++k) {
        Scalar a = Scalar(random_rational(rng)) + i * Scalar(random_rational(rng));
        Scalar b = Scalar(random_rational(rng)) + i * Scalar(random_rational(rng));
        CHECK((a + b) - b == a);
        if (!b.is_zero())
            CHECK((a * b) / b == a);
    }

    CHECK_THROWS_AS(Scalar::generator(gi) + Scalar::generator(cb), ContextError);
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 100; ++k) {
        Polynomial f = random_poly(rng, ctx_xyz());
        Polynomial g = random_poly(rng, ctx_xyz());
        Polynomial h = random_poly(rng, ctx_xyz());
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("canonical form stores no zero coefficients") {
    Polynomial f = P("x^2 - x^2 + y - y + 3 - 3");
    CHECK(f.is_zero());
    CHECK(f.num_terms() == 0);
    CHECK(P("x + y") == P("y + x"));
}

TEST_CASE("parse round trip on canonical output") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        Polynomial f = random_poly(rng, ctx_xyz(), 5, 6);
        CHECK(parse_polynomial(f.str(), ctx_xyz()) == f);
    }
}

static RingMap map_by() {
    // b_y : (x,y,z) -> (xy, y, yz)
    return RingMap(ctx_xyz(), {P("x*y"), P("y"), P("y*z")});
}

static RingMap map_mu4() {
    // chart (4) composite: (x,y,z) -> (x*y^2*z^4, y^2*z^3, y*z^2)
    return RingMap(ctx_xyz(), {P("x*y^2*z^4"), P("y^2*z^3"), P("y*z^2")});
}

TEST_CASE("substitute: blowup coordinate changes") {
    CHECK(map_by().apply(P("x + z^2")) == P("x*y + y^2*z^2"));

    RingMap id = RingMap::identity(ctx_xyz());
    std::mt19937_64 rng(17);
    for (int k = 0; k < 20; ++k) {
        Polynomial f = random_poly(rng, ctx_xyz());
        CHECK(id.apply(f) == f);
    }

    // mu_4 pulls the E6 equation back to y^4 z^8 (x(x+1) - y^2 z)
    Polynomial e6 = P("x*(x + z^2) - y^3");
    CHECK(map_mu4().apply(e6) == P("y^4*z^8") * P("x*(x+1) - y^2*z"));
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 60; ++k) {
        Polynomial f = random_poly(rng, ctx_xyz(), 3, 3);
        Polynomial g = random_poly(rng, ctx_xyz(), 3, 3);
        RingMap m = map_mu4();
        CHECK(m.apply(f * g) == m.apply(f) * m.apply(g));
        CHECK(m.apply(f + g) == m.apply(f) + m.apply(g));
    }
    CHECK_THROWS_AS(map_by().apply(P("t", ctx_t())), ContextError);
}

TEST_CASE("pfaffian of the textbook 4x4") {
    CtxPtr c = ctx_xyz();
    auto k = [&](int v) { return Polynomial::constant(c, Scalar(v)); };
    SkewMatrix m(c, 4, {k(1), k(2), k(3), k(4), k(5), k(6)});
    auto pf = pfaffians(m);
    REQUIRE(pf.size() == 1);
    CHECK(pf[0] == k(1 * 6 - 2 * 5 + 3 * 4));
    CHECK(pf[0] == k(8));
}

TEST_CASE("pfaffian squared equals determinant (random 4x4)") {
    std::mt19937_64 rng(41);
    CtxPtr c = ctx_xyz();
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial> upper;
        for (int k = 0; k < 6; ++k)
            upper.push_back(Polynomial::constant(c, Scalar(random_rational(rng))));
        SkewMatrix m(c, 4, upper);
        Polynomial pf = m.pfaffian();
        CHECK(pf * pf == m.determinant());
    }
}

TEST_CASE("non-skew input is rejected") {
    CtxPtr c = ctx_xyz();
    auto k = [&](int v) { return Polynomial::constant(c, Scalar(v)); };
    std::vector<std::vector<Polynomial>> bad{
        {k(0), k(1)},
        {k(1), k(0)},
    };
    CHECK_THROWS_AS(SkewMatrix::from_full(bad), InvariantError);
    std::vector<std::vector<Polynomial>> diag{
        {k(1), k(1)},
        {k(-1), k(0)},
    };
    CHECK_THROWS_AS(SkewMatrix::from_full(diag), InvariantError);
}

static CtxPtr ctx_uv() {
    static CtxPtr c = make_context({"u", "v"});
    return c;
}

TEST_CASE("newton polygon examples") {
    auto Q = [&](const std::string& s) { return P(s, ctx_uv()); };

    NewtonPolygon p1 = newton_polygon(Q("u^4 + v^4"));
    CHECK(p1.monomial_factor == std::make_pair(0L, 0L));
    REQUIRE(p1.edges.size() == 1);
    CHECK(p1.edges[0].from == std::make_pair(4L, 0L));
    CHECK(p1.edges[0].to == std::make_pair(0L, 4L));
    CHECK(p1.edges[0].lattice_length == 4);

    NewtonPolygon p2 = newton_polygon(Q("u*(u + v^3)"));
    CHECK(p2.monomial_factor == std::make_pair(1L, 0L));
    REQUIRE(p2.edges.size() == 1);
    CHECK(p2.edges[0].from == std::make_pair(1L, 0L));
    CHECK(p2.edges[0].to == std::make_pair(0L, 3L));
    CHECK(p2.edges[0].lattice_length == 1);

    NewtonPolygon p3 = newton_polygon(Q("u^2 + v^3*u + v^4"));
    REQUIRE(p3.edges.size() == 1);
    CHECK(p3.edges[0].from == std::make_pair(2L, 0L));
    CHECK(p3.edges[0].to == std::make_pair(0L, 4L));
    CHECK(p3.edges[0].lattice_length == 2);

    CHECK_THROWS_AS(newton_polygon(Polynomial(ctx_uv())), DomainError);
}

TEST_CASE("newton polygon slopes decrease strictly and edges add on products") {
    std::mt19937_64 rng(59);
    auto edge_profile = [](const Polynomial& f) {
        // per-slope total edge vector, plus the monomial factor
        std::map<Rational, std::pair<long, long>> prof;
        NewtonPolygon p = newton_polygon(f);
        for (const auto& e : p.edges) {
            auto& v = prof[e.slope];
            v.first += e.from.first - e.to.first;
            v.second += e.to.second - e.from.second;
        }
        return std::make_pair(p.monomial_factor, prof);
    };
    int done = 0;
    while (done < 40) {
        Polynomial f = random_poly(rng, ctx_uv(), 5, 4);
        Polynomial g = random_poly(rng, ctx_uv(), 5, 4);
        if (f.is_zero() || g.is_zero())
            continue;
        ++done;
        NewtonPolygon pf = newton_polygon(f);
        for (std::size_t k = 1; k < pf.edges.size(); ++k)
            CHECK(pf.edges[k].slope < pf.edges[k - 1].slope);

        auto [mf, ef] = edge_profile(f);
        auto [mg, eg] = edge_profile(g);
        auto [mp, ep] = edge_profile(f * g);
        CHECK(mp.first == mf.first + mg.first);
        CHECK(mp.second == mf.second + mg.second);
        std::map<Rational, std::pair<long, long>> merged = ef;
        for (const auto& [s, v] : eg) {
            merged[s].first += v.first;
            merged[s].second += v.second;
        }
        CHECK(merged == ep);
    }
}

TEST_CASE("binary root structure") {
    CtxPtr yz = make_context({"y", "z"});
    auto Q = [&](const std::string& s) { return P(s, yz); };
    CHECK(binary_root_structure(Q("y^2*z + z^3")) == std::vector<int>{1, 1, 1});
    CHECK(binary_root_structure(Q("y^3")) == std::vector<int>{3});
    CHECK(binary_root_structure(Q("y^2*z")) == std::vector<int>{2, 1});
    CHECK_THROWS_AS(binary_root_structure(Polynomial(yz)), DomainError);

    // multiplicities sum to the degree
    std::mt19937_64 rng(61);
    int done = 0;
    while (done < 40) {
        Polynomial f = random_poly(rng, yz, 5, 3);
        if (f.is_zero())
            continue;
        long d = f.degree();
        Polynomial top(yz);
        for (const auto& [m, c] : f.terms())
            if (m.weighted_degree(*yz) == d)
                top.add_term(m, c);
        ++done;
        auto pat = binary_root_structure(top);
        long sum = 0;
        for (int k : pat)
            sum += k;
        CHECK(sum == d);
    }
}

TEST_CASE("unipoly gcd and orders") {
    UniPoly t = UniPoly::t();
    UniPoly f = (t - UniPoly::constant(Scalar(2))) * (t - UniPoly::constant(Scalar(2))) *
                (t + UniPoly::constant(Scalar(1)));
    CHECK(order_at(f, Scalar(2)) == 2);
    CHECK(order_at(f, Scalar(-1)) == 1);
    CHECK(order_at(f, Scalar(5)) == 0);
    UniPoly g = (t - UniPoly::constant(Scalar(2))) * UniPoly::t();
    UniPoly d = gcd(f, g);
    CHECK(d.degree() == 1);
    CHECK(order_at(d, Scalar(2)) == 1);

    auto sq = squarefree_decomposition(f);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].second == 1);
    CHECK(sq[0].first.degree() == 1);
    CHECK(sq[1].second == 2);
    CHECK(sq[1].first.degree() == 1);
}
