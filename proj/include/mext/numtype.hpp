#ifndef MEXT_NUMTYPE_HPP
#define MEXT_NUMTYPE_HPP

#include <cstdint>

#include "mext/atlas.hpp"
#include "mext/duval.hpp"

namespace mext {

inline constexpr std::uint64_t kDefaultSeed = 0x6d657874;

// Curve generators on the ambient space: {g} for an l.c.i. spec, the
// three 2x2 minors for a format spec (pulled through the Dr coordinate
// change when the format's det phi differs from the atlas equation).
std::vector<Polynomial> curve_generators(const CurveSpec& spec);

// Intersection numbers alpha_j of the strict transform with each
// exceptional curve, computed per curve from the vanishing orders of the
// generator restrictions (plus >= 5 random combinations) along the
// primary-patch parametrization and at the off-chart point.
NumericalType numerical_type(const CurveSpec& spec, const ResolutionAtlas& atlas,
                             std::uint64_t seed = kDefaultSeed);
NumericalType numerical_type(const CurveSpec& spec, std::uint64_t seed = kDefaultSeed);

// Orbifold (semi-invariant) equation of an A-type curve spec on
// C^2_{u,v}: g(u^n, uv, v^n) for l.c.i. and a_eff u^i + b_eff v^{n-i}
// for the format.
Polynomial orbifold_equation(const CurveSpec& spec, int* n_out = nullptr);

// Newton-polygon numerical type on A_{n-1}: axis factors feed alpha_1
// and alpha_{n-1}; each lower-hull edge contributes to the one or two
// nodes whose weight rays bound the edge direction.
NumericalType orbifold_numtype_A(const Polynomial& gamma, int n);
NumericalType orbifold_numtype_A(const CurveSpec& spec);

} // namespace mext

#endif
