#ifndef MEXT_TESTS_HELPERS_HPP
#define MEXT_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "mext/parse.hpp"
#include "mext/poly.hpp"

namespace mext::testing {

inline Polynomial P(const std::string& s) {
    return parse_polynomial(s, ctx_xyz());
}

inline Polynomial P(const std::string& s, const CtxPtr& ctx) {
    return parse_polynomial(s, ctx);
}

inline Rational random_rational(std::mt19937_64& rng, int max_abs = 9) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, 4);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Scalar random_nonzero_rational(std::mt19937_64& rng, int max_abs = 9) {
    while (true) {
        Rational q = random_rational(rng, max_abs);
        if (q != 0)
            return Scalar(q);
    }
}

// Random sparse polynomial with small support and small coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, const CtxPtr& ctx, int max_deg = 4,
                              int terms = 4) {
    std::uniform_int_distribution<int> ed(0, max_deg);
    Polynomial f(ctx);
    for (int k = 0; k < terms; ++k) {
        std::vector<unsigned> exps(ctx->size(), 0);
        int budget = ed(rng);
        for (std::size_t v = 0; v < ctx->size() && budget > 0; ++v) {
            std::uniform_int_distribution<int> pick(0, budget);
            int e = pick(rng);
            exps[v] = static_cast<unsigned>(e);
            budget -= e;
        }
        f.add_term(Monomial(exps), Scalar(random_rational(rng)));
    }
    return f;
}

} // namespace mext::testing

#endif
