#ifndef MEXT_LOCALRING_HPP
#define MEXT_LOCALRING_HPP

#include <optional>
#include <vector>

#include "mext/poly.hpp"

namespace mext {

struct FormatSpec;  // duval.hpp

// Result of a truncated colength computation.  When stabilized, value is
// the exact colength of the ideal in the local ring at the origin;
// otherwise value is a lower bound at the truncation cap.
struct Colength {
    long value = 0;
    bool stabilized = false;
    int truncation = 0;
};

// Colength dim C[vars]/(generators) at the origin by truncated linear
// algebra.  The truncation order doubles from 4 until the stabilization
// certificate holds (every monomial of degree N-1 lies in the ideal's
// truncated span) or the cap is exceeded.
Colength colength(const std::vector<Polynomial>& generators, int cap = 32);

struct MilnorNumber {
    bool isolated = false;
    long mu = 0;  // meaningful when isolated
};

// Colength of the Jacobian ideal; "not isolated" when no stabilization
// occurs by the cap (including f = 0).
MilnorNumber milnor_number(const Polynomial& f, int cap = 32);

// Width of the unprojection divisor: colength of the ideal generated by
// all six entries of the format's 2x3 matrix.
long width(const FormatSpec& spec);

struct Membership {
    bool proven = false;
    // cofactors aligned with the generators when proven
    std::vector<Polynomial> cofactors;
};

// Sound one-sided test for h in (generators) with cofactor degrees <= D.
// "proven" comes with an exactly verified cofactor identity; a negative
// answer is inconclusive by design.
Membership membership_bounded(const Polynomial& h,
                              const std::vector<Polynomial>& generators,
                              int degree_bound);

// All monomials of the context with plain total degree < bound, in
// graded-lex order.
std::vector<Monomial> monomials_below(const CtxPtr& ctx, int bound);

} // namespace mext

#endif
