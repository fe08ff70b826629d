#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mext/duval.hpp"
#include "mext/error.hpp"
#include "mext/localring.hpp"

using namespace mext;
using mext::testing::P;

TEST_CASE("normal form equations") {
    CHECK(duval_equation(DuValType('A', 3)) == P("x*z - y^4"));
    CHECK(duval_equation(DuValType('E', 6)) == P("x*(x + z^2) - y^3"));
    CHECK(duval_equation(DuValType('D', 4)) == P("x^2 - z*(y^2 + z^2)"));
    CHECK(duval_equation(DuValType('E', 7)) == P("x^2 - y*(y^2 + z^3)"));
    CHECK(duval_equation(DuValType('E', 8)) == P("x^2 + y^3 + z^5"));
    CHECK_THROWS_AS(DuValType('D', 3), DomainError);
    CHECK_THROWS_AS(DuValType('E', 9), DomainError);
}

TEST_CASE("format matrices") {
    FormatSpec a42 = FormatSpec::plain(FormatKind::A, 4, 2, P("1"), P("0"));
    FormatMatrix m = format_matrix(a42);
    CHECK(m.m[0][0] == P("x"));
    CHECK(m.m[0][1] == P("y^2"));
    CHECK(m.m[0][2] == P("0"));
    CHECK(m.m[1][0] == P("y^2"));
    CHECK(m.m[1][1] == P("z"));
    CHECK(m.m[1][2] == P("1"));

    FormatSpec e7 = FormatSpec::plain(FormatKind::E7, 7, 0, P("y"), P("z"));
    FormatMatrix me7 = format_matrix(e7);
    CHECK(me7.phi[0][0] == P("x"));
    CHECK(me7.phi[0][1] == P("y^2 + z^3"));
    CHECK(me7.phi[1][0] == P("y"));
    CHECK(me7.phi[1][1] == P("x"));
}

TEST_CASE("det phi equals the Du Val equation") {
    // exact equality for A, Dl, E6, E7; the Dr matrices give an equation
    // recognized as the same type but written differently
    auto zero = Polynomial(ctx_xyz());
    for (int n = 2; n <= 8; ++n)
        for (int i = 1; i < n; ++i) {
            FormatSpec s = FormatSpec::plain(FormatKind::A, n, i, zero, zero);
            CHECK(format_matrix(s).det_phi() == duval_equation(s.type()));
        }
    for (int n = 4; n <= 8; ++n) {
        FormatSpec s = FormatSpec::plain(FormatKind::Dl, n, 0, zero, zero);
        CHECK(format_matrix(s).det_phi() == duval_equation(s.type()));
    }
    CHECK(format_matrix(FormatSpec::plain(FormatKind::E6, 6, 0, zero, zero)).det_phi() ==
          duval_equation(DuValType('E', 6)));
    CHECK(format_matrix(FormatSpec::plain(FormatKind::E7, 7, 0, zero, zero)).det_phi() ==
          duval_equation(DuValType('E', 7)));
    for (int n = 4; n <= 8; ++n) {
        FormatSpec s = FormatSpec::plain(FormatKind::Dr, n, 0, zero, zero);
        Recognition r = recognize(format_matrix(s).det_phi());
        CHECK(r.du_val);
        CHECK(r.type == DuValType('D', n));
    }
}

TEST_CASE("minor identity and invariants of the format") {
    FormatSpec s = FormatSpec::plain(FormatKind::E6, 6, 0, P("y + 1"), P("z^2 - y"));
    FormatMatrix m = format_matrix(s);
    auto minors = m.minors();
    CHECK(minors[0] == m.det_phi());
    CHECK_THROWS_AS(FormatSpec::plain(FormatKind::A, 4, 0, P("1"), P("0")), InvariantError);
    CHECK_THROWS_AS(FormatSpec::plain(FormatKind::A, 4, 2, P("z"), P("y")), InvariantError);
    CHECK_THROWS_AS(FormatSpec::unproj(FormatKind::E6, 6, 0, 3, P("1"), P("1"), P("1"), P("1")),
                    InvariantError);
}

TEST_CASE("recognizer on normal forms") {
    for (int n = 1; n <= 8; ++n) {
        Polynomial f = P("x^2 + y^2 + z^" + std::to_string(n + 1));
        Recognition r = recognize(f);
        CHECK(r.du_val);
        CHECK(r.type == DuValType('A', n));
    }
    Recognition e6 = recognize(P("x*(x + z^2) - y^3"));
    CHECK(e6.du_val);
    CHECK(e6.type == DuValType('E', 6));

    // the paper's germ at P_xi, in variables (y, z, nu)
    CtxPtr yznu = make_context({"y", "z", "nu"});
    Polynomial germ = parse_polynomial("y^2 - y*nu^2 + nu*z^2", yznu);
    Recognition d5 = recognize(germ);
    CHECK(d5.du_val);
    CHECK(d5.type == DuValType('D', 5));
}

TEST_CASE("recognizer accepts every normal form and the alternate D shape") {
    std::vector<DuValType> types;
    for (int n = 1; n <= 8; ++n)
        types.emplace_back('A', n);
    for (int n = 4; n <= 8; ++n)
        types.emplace_back('D', n);
    for (int n = 6; n <= 8; ++n)
        types.emplace_back('E', n);
    for (const auto& t : types) {
        Recognition r = recognize(duval_equation(t));
        CHECK(r.du_val);
        CHECK(r.type == t);
    }
    // the textbook D form differs from ours by a linear change
    for (int n = 4; n <= 8; ++n) {
        Polynomial f = P("x^2 + y^2*z + z^" + std::to_string(n - 1));
        Recognition r = recognize(f);
        CHECK(r.du_val);
        CHECK(r.type == DuValType('D', n));
    }
}

TEST_CASE("recognizer under random linear coordinate changes") {
    std::mt19937_64 rng(97);
    std::vector<DuValType> types{{'A', 1}, {'A', 4}, {'D', 4}, {'D', 6}, {'E', 6}, {'E', 7}};
    for (const auto& t : types) {
        Polynomial f0 = duval_equation(t);
        int done = 0;
        while (done < 5) {
            // random invertible integer matrix with small entries
            std::uniform_int_distribution<int> d(-2, 2);
            std::array<std::array<int, 3>, 3> a{};
            for (auto& row : a)
                for (auto& v : row)
                    v = d(rng);
            long det = 0;
            det += a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
            det -= a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]);
            det += a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
            if (det == 0)
                continue;
            ++done;
            std::vector<Polynomial> images;
            for (int row = 0; row < 3; ++row) {
                Polynomial img(ctx_xyz());
                for (int col = 0; col < 3; ++col)
                    img += Polynomial::variable(ctx_xyz(), static_cast<std::size_t>(col))
                               .scaled(Scalar(a[static_cast<std::size_t>(row)]
                                               [static_cast<std::size_t>(col)]));
                images.push_back(img);
            }
            Polynomial f = RingMap(ctx_xyz(), images).apply(f0);
            Recognition r = recognize(f);
            CHECK(r.du_val);
            CHECK(r.type == t);
        }
    }
}

TEST_CASE("recognizer rejects junk") {
    CHECK_FALSE(recognize(P("x*y*z")).du_val);            // corank 3
    CHECK_FALSE(recognize(P("x^2 + y^4 + z^4")).du_val);  // not simple (mu = 9)
    CHECK_FALSE(recognize(P("x^2 + y^2")).du_val);        // non-isolated
    CHECK_FALSE(recognize(P("x + y^2")).du_val);          // smooth
    CHECK_THROWS_AS(recognize(P("1 + x")), DomainError);
}

TEST_CASE("delta cycles") {
    NumericalType d54 = delta(5, 4);
    CHECK(d54.alpha == std::vector<long>{0, 0, 0, 1, 1});
    CHECK(d54.str() == "C_4+C_5");

    NumericalType d52 = delta(5, 2);
    CHECK(d52.alpha == std::vector<long>{0, 1, 0, 0, 0});

    NumericalType d44 = delta(4, 4, NumericalType::Branch::right);
    CHECK(d44.alpha == std::vector<long>{0, 0, 0, 2});
    CHECK(d44.str() == "2C_4");
    NumericalType d44l = delta(4, 4, NumericalType::Branch::left);
    CHECK(d44l.alpha == std::vector<long>{0, 0, 2, 0});

    CHECK_THROWS_AS(delta(5, 6), DomainError);
}

TEST_CASE("numerical type display and symmetry") {
    NumericalType t(DuValType('A', 5), {1, 0, 0, 0, 2});
    CHECK(t.str() == "C_1+2C_5");
    CHECK(t.mirrored().alpha == std::vector<long>{2, 0, 0, 0, 1});
    CHECK(t.canonical().str() == "C_1+2C_5");

    NumericalType e6(DuValType('E', 6), {0, 0, 0, 1, 1, 0});
    CHECK(e6.mirrored().alpha == std::vector<long>{1, 1, 0, 0, 0, 0});
    CHECK(e6.mirrored().str() == "C_1+C_2");
}

TEST_CASE("dynkin edge lists") {
    auto ea = dynkin_edges(DuValType('A', 1));
    CHECK(ea.empty());
    auto ed = dynkin_edges(DuValType('D', 5));
    CHECK(ed == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {3, 5}});
    auto ee = dynkin_edges(DuValType('E', 6));
    CHECK(ee == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
}
