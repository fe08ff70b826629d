#ifndef MEXT_ATLAS_HPP
#define MEXT_ATLAS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mext/duval.hpp"
#include "mext/poly.hpp"

namespace mext {

// One step of a chart word.  Blow steps are the three coordinate charts
// of a point blowup; translation steps recentre an off-origin centre.
// A word [s_1, ..., s_m] lists blowups in the order they are performed;
// the composite map to the base substitutes s_m first.
struct ChartStep {
    enum class Kind { BlowX, BlowY, BlowZ, TransX, TransY, TransZ };
    Kind kind;
    Scalar shift;  // translations only

    static ChartStep bx() { return {Kind::BlowX, Scalar(0)}; }
    static ChartStep by() { return {Kind::BlowY, Scalar(0)}; }
    static ChartStep bz() { return {Kind::BlowZ, Scalar(0)}; }
    static ChartStep tx(Scalar c) { return {Kind::TransX, std::move(c)}; }
    static ChartStep ty(Scalar c) { return {Kind::TransY, std::move(c)}; }
    static ChartStep tz(Scalar c) { return {Kind::TransZ, std::move(c)}; }
};

// Presence of an exceptional curve in one chart: its defining ideal and,
// when the patch is affine in one coordinate, a polynomial parametrization.
struct CurvePatch {
    int node = 0;                                      // Dynkin index
    std::vector<Polynomial> ideal;                     // chart coordinates
    std::optional<std::array<Polynomial, 3>> param;    // over ctx_t()
};

struct Chart {
    std::string name;
    std::vector<ChartStep> word;
    RingMap map;                      // chart -> base coordinates
    Polynomial surface;               // strict transform of the Du Val equation
    std::vector<std::size_t> exc_vars;
    std::vector<CurvePatch> curves;
};

// The one point of an exceptional curve missing from its primary patch,
// given by a rational parametrization (nums/den) in a host chart and the
// parameter value of the point.  den(t0) != 0.
struct OffPoint {
    std::size_t chart = 0;
    std::array<Polynomial, 3> nums;
    Polynomial den;
    Scalar t0;

    OffPoint() : nums{Polynomial(ctx_t()), Polynomial(ctx_t()), Polynomial(ctx_t())},
                 den(ctx_t()) {}
};

struct ExcCurve {
    int node = 0;
    std::size_t primary_chart = 0;
    std::array<Polynomial, 3> param;  // polynomial, covers all but one point
    OffPoint off;
};

struct ResolutionAtlas {
    DuValType type{'A', 1};
    FieldPtr field;                    // extension used by the charts (may be null)
    std::vector<Chart> charts;
    std::vector<ExcCurve> curves;      // index node-1, size == rank
    Polynomial equation = Polynomial(ctx_xyz());

    const Chart& chart(std::size_t k) const { return charts.at(k); }
    int find_chart(const std::string& name) const;
};

// Composite map of a chart word (images of x, y, z).
std::vector<Polynomial> word_map(const std::vector<ChartStep>& word);

// Minimal resolution atlas; supported for rank <= 8.
ResolutionAtlas build_atlas(const DuValType& t);

// substitute(c.map, f) divided by the maximal monomial in the chart's
// exceptional variables.
Polynomial strict_transform(const Polynomial& f, const Chart& c);

// Pairwise intersection graph of the exceptional curves, as edges on the
// Dynkin indices (i < j), sorted.
std::vector<std::pair<int, int>> dynkin_graph(const ResolutionAtlas& atlas);

} // namespace mext

#endif
