#include "mext/numtype.hpp"

#include <numeric>
#include <random>

#include "mext/error.hpp"
#include "mext/newton.hpp"
#include "mext/unipoly.hpp"

namespace mext {

namespace {

Polynomial xyz(const char* n) { return Polynomial::variable(ctx_xyz(), std::string(n)); }

// Coordinate change carrying the Dr matrix determinant onto the D_n
// normal form: det phi composed with this map is a scalar multiple of
// duval_equation(D_n).
RingMap dr_normalizer(const FormatSpec& spec) {
    int k = spec.half();
    Polynomial x = xyz("x"), y = xyz("y"), z = xyz("z");
    if (spec.n % 2 == 1) {
        // x -> 2^{2k-1}(x - z^k), y -> 2^{2k-2} y, z -> 4z
        Rational two_a = 1, two_b = 1;
        for (int j = 0; j < 2 * k - 1; ++j)
            two_a *= 2;
        for (int j = 0; j < 2 * k - 2; ++j)
            two_b *= 2;
        Polynomial ix = (x - z.pow(static_cast<unsigned>(k))).scaled(Scalar(two_a));
        return RingMap(ctx_xyz(), {ix, y.scaled(Scalar(two_b)), z.scaled(Scalar(4))});
    }
    // even: x -> ix/2, y -> (iy - z^{k-1})/2, z -> z over Q(i)
    Scalar i = Scalar::generator(NumberField::gaussian());
    Scalar half(1, 2);
    Polynomial ix = x.scaled(i * half);
    Polynomial iy = y.scaled(i * half) - z.pow(static_cast<unsigned>(k - 1)).scaled(half);
    return RingMap(ctx_xyz(), {ix, iy, z});
}

} // namespace

std::vector<Polynomial> curve_generators(const CurveSpec& spec) {
    if (spec.is_lci()) {
        const LciSpec& l = spec.lci();
        if (!l.g.constant_term().is_zero())
            throw DomainError("curve_generators: l.c.i. second equation has a constant term");
        return {l.g};
    }
    const FormatSpec& f = spec.format();
    auto minors = format_matrix(f).minors();
    std::vector<Polynomial> gens(minors.begin(), minors.end());
    if (f.kind == FormatKind::Dr) {
        RingMap sigma = dr_normalizer(f);
        for (auto& g : gens)
            g = sigma.apply(g);
    }
    return gens;
}

namespace {

DuValType atlas_type_of(const CurveSpec& spec) {
    if (!spec.is_lci())
        return spec.format().type();
    const Polynomial& f = spec.lci().f;
    Recognition r = recognize(f);
    if (!r.du_val)
        throw DomainError("numerical_type: l.c.i. surface equation is not Du Val");
    if (!(f == duval_equation(r.type)))
        throw UnsupportedError(
            "numerical_type: l.c.i. surface must be given in the normal form " +
            duval_equation(r.type).str());
    return r.type;
}

// Restriction of f to a polynomial parametrization.
UniPoly restrict_param(const Polynomial& f, const std::array<Polynomial, 3>& param) {
    std::vector<Polynomial> images(param.begin(), param.end());
    return UniPoly::from(RingMap(ctx_xyz(), images).apply(f));
}

// Numerator of the restriction of f to a rational parametrization
// nums/den; orders at points where den != 0 are unaffected by the
// homogenization factor.
UniPoly restrict_rational(const Polynomial& f, const std::array<Polynomial, 3>& nums,
                          const Polynomial& den) {
    long deg = 0;
    for (const auto& [mono, c] : f.terms()) {
        long d = 0;
        for (std::size_t v = 0; v < 3; ++v)
            d += mono.exp(v);
        deg = std::max(deg, d);
    }
    Polynomial acc(ctx_t());
    for (const auto& [mono, c] : f.terms()) {
        Polynomial term = Polynomial::constant(ctx_t(), c);
        long used = 0;
        for (std::size_t v = 0; v < 3; ++v)
            for (unsigned k = 0; k < mono.exp(v); ++k) {
                term = term * nums[v];
                ++used;
            }
        for (long k = used; k < deg; ++k)
            term = term * den;
        acc += term;
    }
    return UniPoly::from(acc);
}

} // namespace

NumericalType numerical_type(const CurveSpec& spec, const ResolutionAtlas& atlas,
                             std::uint64_t seed) {
    std::vector<Polynomial> gens = curve_generators(spec);

    // Random combinations defeat the degenerate case where every listed
    // generator picks up extra vanishing along some curve.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(1, 997);
    std::vector<Polynomial> probes = gens;
    if (gens.size() > 1) {
        for (int k = 0; k < 5; ++k) {
            Polynomial combo(ctx_xyz());
            for (const auto& g : gens)
                combo += g.scaled(Scalar(coeff(rng)));
            probes.push_back(std::move(combo));
        }
    }

    std::vector<long> alpha;
    for (const auto& curve : atlas.curves) {
        const Chart& prim = atlas.chart(curve.primary_chart);
        UniPoly g;
        bool all_zero = true;
        for (const auto& p : probes) {
            Polynomial st = strict_transform(p, prim);
            UniPoly r = restrict_param(st, curve.param);
            if (r.is_zero())
                continue;
            all_zero = false;
            g = g.is_zero() ? r.monic() : gcd(g, r);
        }
        if (all_zero)
            throw DomainError("numerical_type: curve contains the exceptional curve E_" +
                              std::to_string(curve.node) + " (not a finite numerical type)");
        long total = g.degree();

        const Chart& host = atlas.chart(curve.off.chart);
        long best = -1;
        for (const auto& p : probes) {
            Polynomial st = strict_transform(p, host);
            UniPoly r = restrict_rational(st, curve.off.nums, curve.off.den);
            if (r.is_zero())
                continue;
            long o = order_at(r, curve.off.t0);
            best = best < 0 ? o : std::min(best, o);
            if (best == 0)
                break;
        }
        if (best < 0)
            throw DomainError("numerical_type: curve contains the exceptional curve E_" +
                              std::to_string(curve.node) + " (not a finite numerical type)");
        total += best;
        alpha.push_back(total);
    }
    NumericalType out(atlas.type, std::move(alpha));
    if (out.is_zero())
        throw DomainError("numerical_type: empty intersection with the exceptional locus");
    return out;
}

NumericalType numerical_type(const CurveSpec& spec, std::uint64_t seed) {
    ResolutionAtlas atlas = build_atlas(atlas_type_of(spec));
    return numerical_type(spec, atlas, seed);
}

Polynomial orbifold_equation(const CurveSpec& spec, int* n_out) {
    CtxPtr uv = make_context({"u", "v"});
    Polynomial u = Polynomial::variable(uv, std::size_t(0));
    Polynomial v = Polynomial::variable(uv, std::size_t(1));
    int n = 0;
    Polynomial gamma(uv);
    if (spec.is_lci()) {
        DuValType t = atlas_type_of(spec);
        if (t.family != 'A')
            throw DomainError("orbifold_equation: A-type curves only");
        n = t.rank + 1;
        std::vector<Polynomial> images{u.pow(static_cast<unsigned>(n)), u * v,
                                       v.pow(static_cast<unsigned>(n))};
        gamma = RingMap(ctx_xyz(), images).apply(spec.lci().g);
    } else {
        const FormatSpec& f = spec.format();
        if (f.kind != FormatKind::A)
            throw DomainError("orbifold_equation: A-type curves only");
        n = f.n;
        std::vector<Polynomial> images{u.pow(static_cast<unsigned>(n)), u * v,
                                       v.pow(static_cast<unsigned>(n))};
        RingMap pi(ctx_xyz(), images);
        gamma = pi.apply(f.a_eff()) * u.pow(static_cast<unsigned>(f.i)) +
                pi.apply(f.b_eff()) * v.pow(static_cast<unsigned>(n - f.i));
    }
    if (n_out)
        *n_out = n;
    return gamma;
}

NumericalType orbifold_numtype_A(const Polynomial& gamma, int n) {
    if (gamma.context()->size() != 2)
        throw ContextError("orbifold_numtype_A: expected a polynomial in (u, v)");
    if (gamma.is_zero())
        throw DomainError("orbifold_numtype_A: zero orbifold equation");
    if (n < 2)
        throw DomainError("orbifold_numtype_A: need n >= 2");
    // semi-invariance: all exponent pairs share p - q mod n
    long cls = -1;
    for (const auto& [m, c] : gamma.terms()) {
        long d = (static_cast<long>(m.exp(0)) - static_cast<long>(m.exp(1))) % n;
        d = (d + n) % n;
        if (cls < 0)
            cls = d;
        else if (cls != d)
            throw DomainError("orbifold_numtype_A: equation is not semi-invariant mod " +
                              std::to_string(n));
    }

    std::vector<long> alpha(static_cast<std::size_t>(n - 1), 0);
    NewtonPolygon poly = newton_polygon(gamma);
    alpha[0] += poly.monomial_factor.first;
    alpha[static_cast<std::size_t>(n - 2)] += poly.monomial_factor.second;
    for (const auto& e : poly.edges) {
        long a = e.from.first - e.to.first;   // drop in the u exponent
        long b = e.to.second - e.from.second; // rise in the v exponent
        // The branch cluster has direction (b, a); it lies in the cone
        // spanned by the weight rays f_j = (n-j, j) and f_{j+1}.
        long j = (n * a) / (a + b);
        long cj_num = (j + 1) * b - (n - j - 1) * a;
        long cj1_num = (n - j) * a - j * b;
        if (cj_num % n != 0 || cj1_num % n != 0 || cj_num < 0 || cj1_num < 0)
            throw InvariantError("orbifold_numtype_A: non-integral edge contribution");
        // Contributions on the boundary rays j = 0 and j + 1 = n meet the
        // strict transforms of the coordinate axes, not exceptional curves.
        if (j >= 1 && j <= n - 1)
            alpha[static_cast<std::size_t>(j - 1)] += cj_num / n;
        if (j + 1 <= n - 1)
            alpha[static_cast<std::size_t>(j)] += cj1_num / n;
    }
    return NumericalType(DuValType('A', n - 1), std::move(alpha));
}

NumericalType orbifold_numtype_A(const CurveSpec& spec) {
    int n = 0;
    Polynomial gamma = orbifold_equation(spec, &n);
    return orbifold_numtype_A(gamma, n);
}

} // namespace mext
