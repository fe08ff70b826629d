#ifndef MEXT_NEWTON_HPP
#define MEXT_NEWTON_HPP

#include <utility>
#include <vector>

#include "mext/poly.hpp"

namespace mext {

struct NewtonEdge {
    std::pair<long, long> from;   // lattice endpoint with larger first exponent
    std::pair<long, long> to;
    long lattice_length;          // gcd of the coordinate drops
    Rational slope;               // negative rational
};

struct NewtonPolygon {
    std::pair<long, long> monomial_factor;  // (p, q): split-off factor u^p v^q
    std::vector<NewtonEdge> edges;          // strictly decreasing slope
};

// Lower-left Newton boundary of a nonzero polynomial in two variables.
// The maximal monomial factor is split off before hull computation.
NewtonPolygon newton_polygon(const Polynomial& f);

// Multiset of root multiplicities (descending) of a nonzero binary form
// over the algebraic closure, computed via iterated gcds.
std::vector<int> binary_root_structure(const Polynomial& f);

} // namespace mext

#endif
