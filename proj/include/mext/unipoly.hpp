#ifndef MEXT_UNIPOLY_HPP
#define MEXT_UNIPOLY_HPP

#include <utility>
#include <vector>

#include "mext/poly.hpp"

namespace mext {

// Dense univariate polynomial over Scalar, used for restrictions of
// curves to one-parameter loci.  The zero polynomial has empty coeffs.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs);
    static UniPoly constant(const Scalar& c);
    static UniPoly t();

    // Conversion from a polynomial in a single-variable context.
    static UniPoly from(const Polynomial& f);

    const std::vector<Scalar>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    Scalar lead() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Scalar& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly monic() const;
    UniPoly derivative() const;
    Scalar evaluate(const Scalar& x) const;

    // Quotient and remainder by a nonzero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  private:
    void trim();
    std::vector<Scalar> c_;
};

// Monic gcd; gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Vanishing order of f at x0 (f nonzero), i.e. multiplicity of the
// root x0; zero when f(x0) != 0.
int order_at(const UniPoly& f, const Scalar& x0);

// Squarefree decomposition f = c * prod p_k^k with p_k squarefree monic
// (Yun); returns pairs (p_k, k) with deg p_k >= 1.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

} // namespace mext

#endif
