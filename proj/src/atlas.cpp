#include "mext/atlas.hpp"

#include <algorithm>
#include <map>

#include "mext/error.hpp"
#include "mext/unipoly.hpp"

namespace mext {

namespace {

CtxPtr X3() { return ctx_xyz(); }

Polynomial xv() { return Polynomial::variable(X3(), std::size_t(0)); }
Polynomial yv() { return Polynomial::variable(X3(), std::size_t(1)); }
Polynomial zv() { return Polynomial::variable(X3(), std::size_t(2)); }
Polynomial cst(const Scalar& s) { return Polynomial::constant(X3(), s); }

Polynomial tvar() { return Polynomial::variable(ctx_t(), std::size_t(0)); }
Polynomial tconst(const Scalar& s) { return Polynomial::constant(ctx_t(), s); }

std::array<Polynomial, 3> triple(Polynomial a, Polynomial b, Polynomial c) {
    return {std::move(a), std::move(b), std::move(c)};
}

// Apply one step to a coordinate triple (images of the prior frame).
std::vector<Polynomial> apply_step(const ChartStep& s, const std::vector<Polynomial>& t) {
    using K = ChartStep::Kind;
    const Polynomial& a = t[0];
    const Polynomial& b = t[1];
    const Polynomial& c = t[2];
    CtxPtr ctx = a.context();
    switch (s.kind) {
        case K::BlowX: return {a, a * b, a * c};
        case K::BlowY: return {a * b, b, b * c};
        case K::BlowZ: return {a * c, b * c, c};
        case K::TransX: return {a + Polynomial::constant(ctx, s.shift), b, c};
        case K::TransY: return {a, b + Polynomial::constant(ctx, s.shift), c};
        case K::TransZ: return {a, b, c + Polynomial::constant(ctx, s.shift)};
    }
    throw InvariantError("apply_step: bad kind");
}

std::size_t blow_var(const ChartStep& s) {
    switch (s.kind) {
        case ChartStep::Kind::BlowX: return 0;
        case ChartStep::Kind::BlowY: return 1;
        case ChartStep::Kind::BlowZ: return 2;
        default: throw InvariantError("blow_var: not a blow step");
    }
}

bool is_blow(const ChartStep& s) {
    return s.kind == ChartStep::Kind::BlowX || s.kind == ChartStep::Kind::BlowY ||
           s.kind == ChartStep::Kind::BlowZ;
}

// Strict transform along the word: pull back one step at a time, dividing
// the step's exceptional coordinate power after each blowup.  On charts
// with purely monomial words this equals dividing the full pullback by
// the maximal monomial in the chart's exceptional variables.
Polynomial strict_along_word(const Polynomial& f, const std::vector<ChartStep>& word) {
    Polynomial g = f;
    for (const auto& s : word) {
        std::vector<Polynomial> images{xv(), yv(), zv()};
        images = apply_step(s, images);
        g = RingMap(X3(), images).apply(g);
        if (is_blow(s) && !g.is_zero()) {
            std::size_t v = blow_var(s);
            Monomial content = g.monomial_content();
            std::vector<unsigned> e(3, 0);
            e[v] = content.exp(v);
            g = g.divided_by(Monomial(e));
        }
    }
    return g;
}

Chart make_chart(std::string name, std::vector<ChartStep> word, const Polynomial& equation) {
    std::vector<Polynomial> images = word_map(word);
    RingMap map(X3(), images);
    Polynomial surface = strict_along_word(equation, word);
    std::vector<std::size_t> exc;
    for (std::size_t v = 0; v < 3; ++v) {
        bool divides_all = true;
        for (const auto& img : images) {
            if (img.is_zero())
                continue;
            if (img.monomial_content().exp(v) == 0) {
                divides_all = false;
                break;
            }
        }
        if (divides_all)
            exc.push_back(v);
    }
    return Chart{std::move(name), std::move(word), std::move(map), std::move(surface),
                 std::move(exc), {}};
}

std::vector<ChartStep> reps(ChartStep s, int k) {
    return std::vector<ChartStep>(static_cast<std::size_t>(std::max(k, 0)), s);
}

std::vector<ChartStep> cat(std::vector<ChartStep> a, const std::vector<ChartStep>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

CurvePatch patch(int node, std::vector<Polynomial> ideal,
                 std::optional<std::array<Polynomial, 3>> param = std::nullopt) {
    return CurvePatch{node, std::move(ideal), std::move(param)};
}

OffPoint off_poly(std::size_t chart, std::array<Polynomial, 3> nums, Scalar t0) {
    OffPoint o;
    o.chart = chart;
    o.nums = std::move(nums);
    o.den = tconst(Scalar(1));
    o.t0 = std::move(t0);
    return o;
}

ExcCurve curve(int node, std::size_t primary, std::array<Polynomial, 3> param, OffPoint off) {
    return ExcCurve{node, primary, std::move(param), std::move(off)};
}

// ---------------------------------------------------------------------
// A_{rank}: chain of point blowups of xz - y^{rank+1}.

ResolutionAtlas build_atlas_A(int rank) {
    const int n = rank + 1;
    const int m = n / 2;
    const bool even = n % 2 == 0;
    ResolutionAtlas atlas;
    atlas.type = DuValType('A', rank);
    atlas.equation = duval_equation(atlas.type);

    Polynomial t = tvar(), zero = tconst(Scalar(0));
    auto by = ChartStep::by();

    std::map<std::string, std::size_t> index;
    auto add_chart = [&](const std::string& name, std::vector<ChartStep> word) {
        index[name] = atlas.charts.size();
        atlas.charts.push_back(make_chart(name, std::move(word), atlas.equation));
    };

    for (int k = 1; k <= m; ++k)
        add_chart("Z" + std::to_string(k), cat(reps(by, k - 1), {ChartStep::bz()}));
    for (int k = 1; k <= m; ++k)
        add_chart("X" + std::to_string(k), cat(reps(by, k - 1), {ChartStep::bx()}));
    if (!even)
        add_chart("Y" + std::to_string(m), reps(by, m));

    auto Z = [&](int k) { return index.at("Z" + std::to_string(k)); };
    auto X = [&](int k) { return index.at("X" + std::to_string(k)); };

    for (int k = 1; k <= m; ++k) {
        Chart& zc = atlas.charts[Z(k)];
        if (n - 2 * k >= 1)
            zc.curves.push_back(patch(k, {xv(), zv()}, triple(zero, t, zero)));
        else  // even n, k == m: surface x - y^2
            zc.curves.push_back(patch(m, {zv(), xv() - yv() * yv()}, triple(t * t, t, zero)));
        if (k >= 2)
            zc.curves.push_back(patch(k - 1, {xv(), yv()}, triple(zero, zero, t)));

        Chart& xc = atlas.charts[X(k)];
        if (n - 2 * k >= 1)
            xc.curves.push_back(patch(n - k, {xv(), zv()}, triple(zero, t, zero)));
        else  // even n, k == m: surface z - y^2
            xc.curves.push_back(patch(m, {xv(), zv() - yv() * yv()}, triple(zero, t, t * t)));
        if (k >= 2)
            xc.curves.push_back(patch(n - k + 1, {yv(), zv()}, triple(t, zero, zero)));
    }
    if (!even) {
        Chart& yc = atlas.charts[index.at("Y" + std::to_string(m))];
        yc.curves.push_back(patch(m, {xv(), yv()}, triple(zero, zero, t)));
        yc.curves.push_back(patch(m + 1, {yv(), zv()}, triple(t, zero, zero)));
    }

    atlas.curves.resize(static_cast<std::size_t>(rank),
                        ExcCurve{0, 0, triple(zero, zero, zero), OffPoint{}});
    auto set_curve = [&](int node, std::size_t primary, std::array<Polynomial, 3> param,
                         OffPoint off) {
        atlas.curves[static_cast<std::size_t>(node - 1)] =
            curve(node, primary, std::move(param), std::move(off));
    };

    for (int k = 1; k <= m - 1; ++k) {
        set_curve(k, Z(k), triple(zero, t, zero),
                  off_poly(Z(k + 1), triple(zero, zero, t), Scalar(0)));
        set_curve(n - k, X(k), triple(zero, t, zero),
                  off_poly(X(k + 1), triple(t, zero, zero), Scalar(0)));
    }
    if (even) {
        set_curve(m, X(m), triple(zero, t, t * t),
                  off_poly(Z(m), triple(t * t, t, zero), Scalar(0)));
    } else {
        std::size_t ym = index.at("Y" + std::to_string(m));
        set_curve(m, Z(m), triple(zero, t, zero),
                  off_poly(ym, triple(zero, zero, t), Scalar(0)));
        set_curve(m + 1, X(m), triple(zero, t, zero),
                  off_poly(ym, triple(t, zero, zero), Scalar(0)));
    }
    return atlas;
}

// ---------------------------------------------------------------------
// D_n: trunk of b_z blowups with one b_y side chart per step.  The three
// collinear A_1 points at the end of the trunk are resolved by chains of
// translated blowups; the fork pair needs Q(i) when n is even and stays
// rational when n is odd.

ResolutionAtlas build_atlas_D(int rank) {
    const int n = rank;
    const bool even = n % 2 == 0;
    const int r = n / 2;  // even: n = 2r; odd: n = 2r + 1
    ResolutionAtlas atlas;
    atlas.type = DuValType('D', rank);
    atlas.equation = duval_equation(atlas.type);

    Polynomial t = tvar(), zero = tconst(Scalar(0)), one = tconst(Scalar(1));
    auto bz = ChartStep::bz();
    auto by = ChartStep::by();

    std::map<std::string, std::size_t> index;
    auto add_chart = [&](const std::string& name, std::vector<ChartStep> word) {
        index[name] = atlas.charts.size();
        atlas.charts.push_back(make_chart(name, std::move(word), atlas.equation));
    };

    const int u_max = even ? r - 1 : r;
    const int v_max = even ? r - 2 : r;
    for (int j = 1; j <= u_max; ++j)
        add_chart("U" + std::to_string(j), cat(reps(bz, j - 1), {by, by}));
    for (int j = 1; j <= v_max; ++j)
        add_chart("V" + std::to_string(j), cat(reps(bz, j - 1), {by, ChartStep::bz()}));

    Scalar im(0);
    if (even) {
        atlas.field = NumberField::gaussian();
        im = Scalar::generator(atlas.field);
        add_chart("Q", cat(reps(bz, r - 2),
                           {by, ChartStep::bz(), ChartStep::tz(im), ChartStep::bz(),
                            ChartStep::tz(Scalar(-2) * im), ChartStep::bz()}));
        add_chart("Qp", cat(reps(bz, r - 1),
                            {ChartStep::ty(-im), by, ChartStep::ty(Scalar(2) * im), by}));
        // direct blowups of the two fork centres; each fork line closes
        // up at the origin of its own chart
        add_chart("Pp", cat(reps(bz, r - 2), {by, ChartStep::tz(im), by}));
        add_chart("Pm", cat(reps(bz, r - 2), {by, ChartStep::tz(-im), by}));
    } else {
        add_chart("T", reps(bz, r));
    }

    auto U = [&](int j) { return index.at("U" + std::to_string(j)); };
    auto V = [&](int j) { return index.at("V" + std::to_string(j)); };

    // Node labels: delta_j <-> 2j-1 and Gamma_j <-> 2j along the chain;
    // fork nodes are n-1 and n.  For odd n the chain ends in the conic
    // rho = node n-2 carrying both rational fork lines.
    for (int j = 1; j <= u_max; ++j) {
        Chart& uc = atlas.charts[U(j)];
        if (!even && j == r)
            uc.curves.push_back(patch(n - 2, {yv(), xv() * xv() - zv() - zv() * zv()}));
        else
            uc.curves.push_back(
                patch(2 * j - 1, {yv(), zv() - xv() * xv()}, triple(t, zero, t * t)));
        if (j >= 2)
            uc.curves.push_back(patch(2 * (j - 1), {xv(), zv()}, triple(zero, t, zero)));
    }
    for (int j = 1; j <= v_max; ++j) {
        Chart& vc = atlas.charts[V(j)];
        if (!even && j == r) {
            vc.curves.push_back(patch(n - 2, {zv(), yv() - xv() * xv() + cst(Scalar(1))},
                                      triple(t, t * t - one, zero)));
            vc.curves.push_back(patch(n - 1, {yv(), xv() - cst(Scalar(1))}, triple(one, zero, t)));
            vc.curves.push_back(patch(n, {yv(), xv() + cst(Scalar(1))}, triple(-one, zero, t)));
        } else {
            vc.curves.push_back(
                patch(2 * j - 1, {zv(), yv() - xv() * xv()}, triple(t, t * t, zero)));
            vc.curves.push_back(patch(2 * j, {xv(), yv()}, triple(zero, zero, t)));
        }
    }
    if (even) {
        Chart& q = atlas.charts[index.at("Q")];
        q.curves.push_back(patch(n - 2, {xv(), yv()}, triple(zero, zero, t)));
        q.curves.push_back(patch(n - 3, {zv() - cst(im), yv() - xv() * xv()},
                                 triple(t, t * t, tconst(im))));
        q.curves.push_back(patch(n - 1, {zv() - cst(Scalar(2) * im), yv() - xv() * xv()},
                                 triple(t, t * t, tconst(Scalar(2) * im))));
        q.curves.push_back(patch(n, {zv(), yv() - xv() * xv()}, triple(t, t * t, zero)));

        Chart& qp = atlas.charts[index.at("Qp")];
        qp.curves.push_back(patch(n - 2, {xv(), zv()}, triple(zero, t, zero)));
        qp.curves.push_back(patch(n - 1, {yv() + cst(Scalar(2) * im), zv() - xv() * xv()},
                                  triple(t, tconst(Scalar(-2) * im), t * t)));
        qp.curves.push_back(patch(n, {yv(), zv() - xv() * xv()}, triple(t, zero, t * t)));

        Polynomial fork_para = (-(t * t)).scaled(Scalar(1, 2));
        Chart& pp = atlas.charts[index.at("Pp")];
        pp.curves.push_back(patch(n - 1, {yv(), xv() * xv() + zv().scaled(Scalar(2))},
                                  triple(t, zero, fork_para)));
        Chart& pm = atlas.charts[index.at("Pm")];
        pm.curves.push_back(patch(n, {yv(), xv() * xv() + zv().scaled(Scalar(2))},
                                  triple(t, zero, fork_para)));
    } else {
        Chart& tr = atlas.charts[index.at("T")];
        tr.curves.push_back(patch(n - 1, {zv(), xv() - cst(Scalar(1))}, triple(one, t, zero)));
        tr.curves.push_back(patch(n, {zv(), xv() + cst(Scalar(1))}, triple(-one, t, zero)));
    }

    atlas.curves.resize(static_cast<std::size_t>(rank),
                        ExcCurve{0, 0, triple(zero, zero, zero), OffPoint{}});
    auto set_curve = [&](int node, std::size_t primary, std::array<Polynomial, 3> param,
                         OffPoint off) {
        atlas.curves[static_cast<std::size_t>(node - 1)] =
            curve(node, primary, std::move(param), std::move(off));
    };

    const int delta_chain = even ? r - 1 : r - 1;  // plain parabola deltas
    for (int j = 1; j <= delta_chain; ++j) {
        if (even && j == r - 1)
            break;  // handled below with the Q chart
        set_curve(2 * j - 1, U(j), triple(t, zero, t * t),
                  off_poly(V(j), triple(t, t * t, zero), Scalar(0)));
    }
    for (int j = 1; j <= (even ? r - 2 : r - 1); ++j) {
        if (!even && j == r - 1)
            break;  // Gamma_{r-1} handled below
        set_curve(2 * j, V(j), triple(zero, zero, t),
                  off_poly(U(j + 1), triple(zero, t, zero), Scalar(0)));
    }

    if (even) {
        std::size_t q = index.at("Q");
        std::size_t qp = index.at("Qp");
        Polynomial fork_para = (-(t * t)).scaled(Scalar(1, 2));
        set_curve(n - 3, U(r - 1), triple(t, zero, t * t),
                  off_poly(q, triple(t, t * t, tconst(im)), Scalar(0)));
        set_curve(n - 2, q, triple(zero, zero, t), off_poly(qp, triple(zero, t, zero), -im));
        set_curve(n - 1, q, triple(t, t * t, tconst(Scalar(2) * im)),
                  off_poly(index.at("Pp"), triple(t, zero, fork_para), Scalar(0)));
        set_curve(n, q, triple(t, t * t, zero),
                  off_poly(index.at("Pm"), triple(t, zero, fork_para), Scalar(0)));
    } else {
        std::size_t tr = index.at("T");
        set_curve(2 * (r - 1), V(r - 1), triple(zero, zero, t),
                  off_poly(U(r), triple(zero, t, zero), Scalar(0)));
        {
            // rho: primary patch in V_r; the missing point (the
            // Gamma_{r-1} crossing) lies on the U_r conic, rationally
            // parametrized through the origin.
            OffPoint o;
            o.chart = U(r);
            o.nums = triple(t, zero, t * t);
            o.den = one - t * t;
            o.t0 = Scalar(0);
            set_curve(n - 2, V(r), triple(t, t * t - one, zero), std::move(o));
        }
        set_curve(n - 1, V(r), triple(one, zero, t),
                  off_poly(tr, triple(one, t, zero), Scalar(0)));
        set_curve(n, V(r), triple(-one, zero, t),
                  off_poly(tr, triple(-one, t, zero), Scalar(0)));
    }
    return atlas;
}

// ---------------------------------------------------------------------
// E6: the five affine charts of the resolution of x(x+z^2) - y^3, with
// the labelling fixed by the chart (4) equations E_1 = V(x,y),
// E_2 = V(x,z), E_4 = V(x+1,z), E_5 = V(x+1,y).

ResolutionAtlas build_atlas_E6() {
    ResolutionAtlas atlas;
    atlas.type = DuValType('E', 6);
    atlas.equation = duval_equation(atlas.type);

    Polynomial t = tvar(), zero = tconst(Scalar(0)), one = tconst(Scalar(1));
    auto by = ChartStep::by();
    auto bz = ChartStep::bz();

    atlas.charts.push_back(make_chart("1", {by}, atlas.equation));                // 0
    atlas.charts.push_back(make_chart("2", {bz, by, by, by}, atlas.equation));    // 1
    atlas.charts.push_back(make_chart("3", {bz, by, by, bz}, atlas.equation));    // 2
    atlas.charts.push_back(make_chart("4", {bz, by, bz}, atlas.equation));        // 3
    atlas.charts.push_back(make_chart("5", {bz, bz}, atlas.equation));            // 4

    Chart& c1 = atlas.charts[0];
    Chart& c2 = atlas.charts[1];
    Chart& c3 = atlas.charts[2];
    Chart& c4 = atlas.charts[3];
    Chart& c5 = atlas.charts[4];

    c1.curves.push_back(patch(6, {xv(), yv()}, triple(zero, zero, t)));

    c2.curves.push_back(patch(6, {xv(), zv()}, triple(zero, t, zero)));
    c2.curves.push_back(patch(3, {yv(), xv() * xv() + xv() * zv() - zv()}));

    c3.curves.push_back(
        patch(3, {zv(), yv() - xv() * xv() - xv()}, triple(t, t * t + t, zero)));
    c3.curves.push_back(patch(2, {yv(), xv()}, triple(zero, zero, t)));
    c3.curves.push_back(patch(4, {yv(), xv() + cst(Scalar(1))}, triple(-one, zero, t)));

    c4.curves.push_back(patch(1, {xv(), yv()}, triple(zero, zero, t)));
    c4.curves.push_back(patch(2, {xv(), zv()}, triple(zero, t, zero)));
    c4.curves.push_back(patch(4, {xv() + cst(Scalar(1)), zv()}, triple(-one, t, zero)));
    c4.curves.push_back(patch(5, {xv() + cst(Scalar(1)), yv()}, triple(-one, zero, t)));

    c5.curves.push_back(patch(1, {xv(), zv()}, triple(zero, t, zero)));
    c5.curves.push_back(patch(5, {xv() + cst(Scalar(1)), zv()}, triple(-one, t, zero)));

    atlas.curves.resize(6, ExcCurve{0, 0, triple(zero, zero, zero), OffPoint{}});
    auto set_curve = [&](int node, std::size_t primary, std::array<Polynomial, 3> param,
                         OffPoint off) {
        atlas.curves[static_cast<std::size_t>(node - 1)] =
            curve(node, primary, std::move(param), std::move(off));
    };

    set_curve(1, 3, triple(zero, zero, t), off_poly(4, triple(zero, t, zero), Scalar(0)));
    set_curve(2, 3, triple(zero, t, zero), off_poly(2, triple(zero, zero, t), Scalar(0)));
    {
        OffPoint o;   // E_3 closes up at the E_6 crossing in chart 2
        o.chart = 1;
        o.nums = triple(t - t * t, zero, t * t);
        o.den = one - t;
        o.t0 = Scalar(0);
        set_curve(3, 2, triple(t, t * t + t, zero), std::move(o));
    }
    set_curve(4, 3, triple(-one, t, zero), off_poly(2, triple(-one, zero, t), Scalar(0)));
    set_curve(5, 3, triple(-one, zero, t), off_poly(4, triple(-one, t, zero), Scalar(0)));
    set_curve(6, 0, triple(zero, zero, t), off_poly(1, triple(zero, t, zero), Scalar(0)));
    return atlas;
}

// ---------------------------------------------------------------------
// E7 and E8 towers.

ResolutionAtlas build_atlas_E7() {
    ResolutionAtlas atlas;
    atlas.type = DuValType('E', 7);
    atlas.equation = duval_equation(atlas.type);

    Polynomial t = tvar(), zero = tconst(Scalar(0)), one = tconst(Scalar(1));
    auto by = ChartStep::by();
    auto bz = ChartStep::bz();
    Scalar m1(-1);

    atlas.charts.push_back(make_chart("C1", {by}, atlas.equation));                      // 0
    atlas.charts.push_back(make_chart("C2", {bz, by, by, by}, atlas.equation));          // 1
    atlas.charts.push_back(
        make_chart("Wa", {bz, by, by, bz, ChartStep::tz(m1), bz}, atlas.equation));      // 2
    atlas.charts.push_back(
        make_chart("Wb", {bz, by, bz, by, ChartStep::ty(m1), by}, atlas.equation));      // 3
    atlas.charts.push_back(make_chart("Vb", {bz, by, bz, bz}, atlas.equation));          // 4
    atlas.charts.push_back(make_chart("C6", {bz, bz, by}, atlas.equation));              // 5
    atlas.charts.push_back(make_chart("C7", {bz, bz, bz}, atlas.equation));              // 6
    atlas.charts.push_back(
        make_chart("P7", {bz, by, by, ChartStep::tz(m1), by}, atlas.equation));          // 7

    Chart& c1 = atlas.charts[0];
    Chart& c2 = atlas.charts[1];
    Chart& wa = atlas.charts[2];
    Chart& wb = atlas.charts[3];
    Chart& vb = atlas.charts[4];
    Chart& c6 = atlas.charts[5];
    Chart& c7 = atlas.charts[6];

    c1.curves.push_back(patch(1, {xv(), yv()}, triple(zero, zero, t)));

    c2.curves.push_back(patch(2, {yv(), zv() - xv() * xv()}, triple(t, zero, t * t)));
    c2.curves.push_back(patch(1, {xv(), zv()}, triple(zero, t, zero)));

    wa.curves.push_back(patch(3, {xv(), yv()}, triple(zero, zero, t)));
    wa.curves.push_back(
        patch(2, {zv() - cst(Scalar(1)), yv() - xv() * xv()}, triple(t, t * t, one)));
    wa.curves.push_back(patch(7, {zv(), yv() - xv() * xv()}, triple(t, t * t, zero)));

    wb.curves.push_back(patch(3, {xv(), zv()}, triple(zero, t, zero)));
    wb.curves.push_back(
        patch(4, {yv() - cst(Scalar(1)), zv() - xv() * xv()}, triple(t, one, t * t)));
    wb.curves.push_back(patch(7, {yv(), zv() - xv() * xv()}, triple(t, zero, t * t)));

    vb.curves.push_back(patch(4, {zv(), yv() - xv() * xv()}, triple(t, t * t, zero)));
    vb.curves.push_back(patch(5, {xv(), yv()}, triple(zero, zero, t)));

    c6.curves.push_back(patch(6, {yv(), zv() - xv() * xv()}, triple(t, zero, t * t)));
    c6.curves.push_back(patch(5, {xv(), zv()}, triple(zero, t, zero)));

    c7.curves.push_back(patch(6, {zv(), yv() - xv() * xv()}, triple(t, t * t, zero)));

    atlas.charts[7].curves.push_back(
        patch(7, {yv(), zv() + xv() * xv()}, triple(t, zero, -(t * t))));

    atlas.curves.resize(7, ExcCurve{0, 0, triple(zero, zero, zero), OffPoint{}});
    auto set_curve = [&](int node, std::size_t primary, std::array<Polynomial, 3> param,
                         OffPoint off) {
        atlas.curves[static_cast<std::size_t>(node - 1)] =
            curve(node, primary, std::move(param), std::move(off));
    };

    set_curve(1, 1, triple(zero, t, zero), off_poly(0, triple(zero, zero, t), Scalar(0)));
    set_curve(2, 1, triple(t, zero, t * t), off_poly(2, triple(t, t * t, one), Scalar(0)));
    set_curve(3, 2, triple(zero, zero, t), off_poly(3, triple(zero, t, zero), Scalar(1)));
    set_curve(4, 4, triple(t, t * t, zero), off_poly(3, triple(t, one, t * t), Scalar(0)));
    set_curve(5, 4, triple(zero, zero, t), off_poly(5, triple(zero, t, zero), Scalar(0)));
    set_curve(6, 5, triple(t, zero, t * t), off_poly(6, triple(t, t * t, zero), Scalar(0)));
    set_curve(7, 2, triple(t, t * t, zero), off_poly(7, triple(t, zero, -(t * t)), Scalar(0)));
    return atlas;
}

ResolutionAtlas build_atlas_E8() {
    ResolutionAtlas atlas;
    atlas.type = DuValType('E', 8);
    atlas.equation = duval_equation(atlas.type);

    Polynomial t = tvar(), zero = tconst(Scalar(0)), one = tconst(Scalar(1));
    auto by = ChartStep::by();
    auto bz = ChartStep::bz();
    Scalar m1(-1);

    atlas.charts.push_back(make_chart("C1", {by}, atlas.equation));                       // 0
    atlas.charts.push_back(make_chart("C2", {bz, bz}, atlas.equation));                   // 1
    atlas.charts.push_back(make_chart("C3", {bz, by, by, by}, atlas.equation));           // 2
    atlas.charts.push_back(make_chart("C4", {bz, by, by, bz}, atlas.equation));           // 3
    atlas.charts.push_back(make_chart("C5", {bz, by, bz, by, by}, atlas.equation));       // 4
    atlas.charts.push_back(
        make_chart("W1", {bz, by, bz, by, bz, ChartStep::tz(m1), bz}, atlas.equation));   // 5
    atlas.charts.push_back(
        make_chart("W2", {bz, by, bz, bz, by, ChartStep::ty(m1), by}, atlas.equation));   // 6
    atlas.charts.push_back(make_chart("V2", {bz, by, bz, bz, bz}, atlas.equation));       // 7
    atlas.charts.push_back(
        make_chart("P8", {bz, by, bz, by, ChartStep::tz(m1), by}, atlas.equation));       // 8

    Chart& c1 = atlas.charts[0];
    Chart& c2 = atlas.charts[1];
    Chart& c3 = atlas.charts[2];
    Chart& c4 = atlas.charts[3];
    Chart& c5 = atlas.charts[4];
    Chart& w1 = atlas.charts[5];
    Chart& w2 = atlas.charts[6];
    Chart& v2 = atlas.charts[7];

    c1.curves.push_back(patch(7, {xv(), yv()}, triple(zero, zero, t)));

    c2.curves.push_back(patch(1, {xv(), zv()}, triple(zero, t, zero)));

    c3.curves.push_back(patch(6, {yv(), zv() + xv() * xv()}, triple(t, zero, -(t * t))));
    c3.curves.push_back(patch(7, {xv(), zv()}, triple(zero, t, zero)));

    c4.curves.push_back(patch(6, {zv(), yv() + xv() * xv()}, triple(t, -(t * t), zero)));
    c4.curves.push_back(patch(5, {xv(), yv()}, triple(zero, zero, t)));

    c5.curves.push_back(patch(4, {yv(), zv() + xv() * xv()}, triple(t, zero, -(t * t))));
    c5.curves.push_back(patch(5, {xv(), zv()}, triple(zero, t, zero)));

    w1.curves.push_back(patch(3, {xv(), yv()}, triple(zero, zero, t)));
    w1.curves.push_back(
        patch(4, {zv() - cst(Scalar(1)), yv() + xv() * xv()}, triple(t, -(t * t), one)));
    w1.curves.push_back(patch(8, {zv(), yv() + xv() * xv()}, triple(t, -(t * t), zero)));

    w2.curves.push_back(patch(3, {xv(), zv()}, triple(zero, t, zero)));
    w2.curves.push_back(
        patch(2, {yv() - cst(Scalar(1)), zv() + xv() * xv()}, triple(t, one, -(t * t))));
    w2.curves.push_back(patch(8, {yv(), zv() + xv() * xv()}, triple(t, zero, -(t * t))));

    v2.curves.push_back(patch(2, {zv(), yv() + xv() * xv()}, triple(t, -(t * t), zero)));
    v2.curves.push_back(patch(1, {xv(), yv()}, triple(zero, zero, t)));

    atlas.charts[8].curves.push_back(
        patch(8, {yv(), zv() - xv() * xv()}, triple(t, zero, t * t)));

    atlas.curves.resize(8, ExcCurve{0, 0, triple(zero, zero, zero), OffPoint{}});
    auto set_curve = [&](int node, std::size_t primary, std::array<Polynomial, 3> param,
                         OffPoint off) {
        atlas.curves[static_cast<std::size_t>(node - 1)] =
            curve(node, primary, std::move(param), std::move(off));
    };

    set_curve(7, 2, triple(zero, t, zero), off_poly(0, triple(zero, zero, t), Scalar(0)));
    set_curve(6, 2, triple(t, zero, -(t * t)),
              off_poly(3, triple(t, -(t * t), zero), Scalar(0)));
    set_curve(5, 3, triple(zero, zero, t), off_poly(4, triple(zero, t, zero), Scalar(0)));
    set_curve(4, 4, triple(t, zero, -(t * t)),
              off_poly(5, triple(t, -(t * t), one), Scalar(0)));
    set_curve(3, 5, triple(zero, zero, t), off_poly(6, triple(zero, t, zero), Scalar(1)));
    set_curve(8, 5, triple(t, -(t * t), zero),
              off_poly(8, triple(t, zero, t * t), Scalar(0)));
    set_curve(2, 7, triple(t, -(t * t), zero),
              off_poly(6, triple(t, one, -(t * t)), Scalar(0)));
    set_curve(1, 7, triple(zero, zero, t), off_poly(1, triple(zero, t, zero), Scalar(0)));
    return atlas;
}

// ---------------------------------------------------------------------

void validate_atlas(const ResolutionAtlas& atlas) {
    if (atlas.curves.size() != static_cast<std::size_t>(atlas.type.rank))
        throw InvariantError("atlas: exceptional curve count != rank");
    for (const auto& c : atlas.charts) {
        if (c.surface.is_zero())
            throw InvariantError("atlas: degenerate chart " + c.name);
        for (const auto& cp : c.curves) {
            if (!cp.param)
                continue;
            std::vector<Polynomial> tparam((*cp.param).begin(), (*cp.param).end());
            RingMap restrict(X3(), tparam);
            if (!restrict.apply(c.surface).is_zero())
                throw InvariantError("atlas: parametrization leaves the surface in chart " +
                                     c.name);
            for (const auto& g : cp.ideal)
                if (!restrict.apply(g).is_zero())
                    throw InvariantError("atlas: parametrization not inside its curve ideal");
            for (const auto& img : c.map.images())
                if (!restrict.apply(img).is_zero())
                    throw InvariantError("atlas: exceptional curve not over the base point");
        }
    }
    for (const auto& e : atlas.curves) {
        if (e.node == 0)
            throw InvariantError("atlas: missing curve entry");
        const Chart& prim = atlas.charts.at(e.primary_chart);
        std::vector<Polynomial> tparam(e.param.begin(), e.param.end());
        if (!RingMap(X3(), tparam).apply(prim.surface).is_zero())
            throw InvariantError("atlas: primary parametrization leaves the surface");
        const Chart& host = atlas.charts.at(e.off.chart);
        UniPoly den = UniPoly::from(e.off.den);
        if (den.is_zero() || den.evaluate(e.off.t0).is_zero())
            throw InvariantError("atlas: off-point denominator vanishes at t0");
        // homogenize against the denominator: surface(nums/den)*den^deg = 0
        long deg = 0;
        for (const auto& [mono, coeff] : host.surface.terms()) {
            long d = 0;
            for (std::size_t v = 0; v < 3; ++v)
                d += mono.exp(v);
            deg = std::max(deg, d);
        }
        Polynomial acc(ctx_t());
        for (const auto& [mono, coeff] : host.surface.terms()) {
            Polynomial term = Polynomial::constant(ctx_t(), coeff);
            long used = 0;
            for (std::size_t v = 0; v < 3; ++v)
                for (unsigned k = 0; k < mono.exp(v); ++k) {
                    term = term * e.off.nums[v];
                    ++used;
                }
            for (long k = used; k < deg; ++k)
                term = term * e.off.den;
            acc += term;
        }
        if (!acc.is_zero())
            throw InvariantError("atlas: off-point parametrization leaves the surface");
    }
}

} // namespace

int ResolutionAtlas::find_chart(const std::string& name) const {
    for (std::size_t k = 0; k < charts.size(); ++k)
        if (charts[k].name == name)
            return static_cast<int>(k);
    return -1;
}

std::vector<Polynomial> word_map(const std::vector<ChartStep>& word) {
    std::vector<Polynomial> t{xv(), yv(), zv()};
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        t = apply_step(*it, t);
    return t;
}

Polynomial strict_transform(const Polynomial& f, const Chart& c) {
    if (f.is_zero())
        throw DomainError("strict_transform: zero polynomial");
    return strict_along_word(f, c.word);
}

ResolutionAtlas build_atlas(const DuValType& t) {
    if (t.rank > 8)
        throw UnsupportedError("build_atlas: rank above the supported cap (8)");
    ResolutionAtlas atlas;
    if (t.family == 'A')
        atlas = build_atlas_A(t.rank);
    else if (t.family == 'D')
        atlas = build_atlas_D(t.rank);
    else if (t.rank == 6)
        atlas = build_atlas_E6();
    else if (t.rank == 7)
        atlas = build_atlas_E7();
    else
        atlas = build_atlas_E8();
    validate_atlas(atlas);
    return atlas;
}

std::vector<std::pair<int, int>> dynkin_graph(const ResolutionAtlas& atlas) {
    std::vector<std::pair<int, int>> edges;
    auto add_edge = [&](int a, int b) {
        if (a == b)
            return;
        std::pair<int, int> p{std::min(a, b), std::max(a, b)};
        if (std::find(edges.begin(), edges.end(), p) == edges.end())
            edges.push_back(p);
    };

    for (const auto& chart : atlas.charts) {
        for (const auto& a : chart.curves) {
            if (!a.param)
                continue;
            std::vector<Polynomial> pa((*a.param).begin(), (*a.param).end());
            RingMap restrict(X3(), pa);
            for (const auto& b : chart.curves) {
                if (b.node == a.node)
                    continue;
                UniPoly g;
                bool all_zero = true;
                for (const auto& gen : b.ideal) {
                    Polynomial r = restrict.apply(gen);
                    if (r.is_zero())
                        continue;
                    all_zero = false;
                    g = g.is_zero() ? UniPoly::from(r) : gcd(g, UniPoly::from(r));
                }
                if (all_zero)
                    throw InvariantError("dynkin_graph: distinct curves with equal loci");
                if (g.degree() >= 1)
                    add_edge(a.node, b.node);
            }
        }
    }
    for (const auto& e : atlas.curves) {
        const Chart& host = atlas.charts.at(e.off.chart);
        Scalar inv = UniPoly::from(e.off.den).evaluate(e.off.t0).inverse();
        std::vector<Scalar> pt;
        for (const auto& num : e.off.nums)
            pt.push_back(UniPoly::from(num).evaluate(e.off.t0) * inv);
        for (const auto& b : host.curves) {
            if (b.node == e.node)
                continue;
            bool on = true;
            for (const auto& gen : b.ideal)
                if (!gen.evaluate(pt).is_zero()) {
                    on = false;
                    break;
                }
            if (on)
                add_edge(e.node, b.node);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace mext
