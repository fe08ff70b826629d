#include "mext/newton.hpp"

#include <algorithm>
#include <numeric>

#include "mext/error.hpp"
#include "mext/unipoly.hpp"

namespace mext {

NewtonPolygon newton_polygon(const Polynomial& f) {
    if (f.context()->size() != 2)
        throw ContextError("newton_polygon: expected two variables");
    if (f.is_zero())
        throw DomainError("newton_polygon: zero polynomial");

    NewtonPolygon out;
    Monomial content = f.monomial_content();
    out.monomial_factor = {content.exp(0), content.exp(1)};
    Polynomial g = f.divided_by(content);

    std::vector<std::pair<long, long>> pts;
    for (const auto& [m, c] : g.terms())
        pts.emplace_back(m.exp(0), m.exp(1));

    // Start on the p-axis: minimal q, then minimal p.
    auto cur = *std::min_element(pts.begin(), pts.end(), [](auto a, auto b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    // Gift wrapping toward the q-axis, shallowest edge first; collinear
    // points merge into a single edge by preferring the farthest endpoint.
    while (true) {
        bool found = false;
        std::pair<long, long> best{};
        for (const auto& p : pts) {
            if (p.first >= cur.first)
                continue;
            if (!found) {
                best = p;
                found = true;
                continue;
            }
            // slope(p) > slope(best) iff lhs > rhs (both denominators are
            // negative, so the two sign flips cancel)
            long lhs = (p.second - cur.second) * (best.first - cur.first);
            long rhs = (best.second - cur.second) * (p.first - cur.first);
            if (lhs > rhs || (lhs == rhs && p.first < best.first))
                best = p;
        }
        if (!found)
            break;
        long dp = cur.first - best.first;
        long dq = best.second - cur.second;
        NewtonEdge e;
        e.from = cur;
        e.to = best;
        e.lattice_length = std::gcd(dp, dq);
        e.slope = Rational(-dq, dp);
        e.slope.canonicalize();
        out.edges.push_back(std::move(e));
        cur = best;
    }
    return out;
}

std::vector<int> binary_root_structure(const Polynomial& f) {
    if (f.context()->size() != 2)
        throw ContextError("binary_root_structure: expected two variables");
    if (f.is_zero())
        throw DomainError("binary_root_structure: zero form");
    if (!f.is_homogeneous())
        throw DomainError("binary_root_structure: form is not homogeneous");

    long d = f.degree();
    // Dehomogenize at v = 1; the root (1:0) keeps multiplicity d - deg r.
    std::vector<Scalar> coeffs(static_cast<std::size_t>(d) + 1, Scalar(0));
    for (const auto& [m, c] : f.terms())
        coeffs[m.exp(0)] = c;
    UniPoly r{std::move(coeffs)};

    std::vector<int> pattern;
    long inf_mult = d - r.degree();
    if (inf_mult > 0)
        pattern.push_back(static_cast<int>(inf_mult));
    for (const auto& [p, k] : squarefree_decomposition(r))
        for (int c = 0; c < p.degree(); ++c)
            pattern.push_back(k);
    std::sort(pattern.rbegin(), pattern.rend());
    return pattern;
}

} // namespace mext
