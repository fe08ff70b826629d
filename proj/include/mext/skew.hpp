#ifndef MEXT_SKEW_HPP
#define MEXT_SKEW_HPP

#include <vector>

#include "mext/poly.hpp"

namespace mext {

// Square skew-symmetric matrix of polynomials.  Constructed from the
// strictly upper triangular entries; the lower triangle and zero
// diagonal are implied.  An optional weight vector for rows/columns is
// carried for homogeneity checks of the Pfaffians.
class SkewMatrix {
  public:
    SkewMatrix(CtxPtr ctx, std::size_t n, std::vector<Polynomial> upper,
               std::vector<int> row_weights = {});

    // Build from a full matrix, verifying antisymmetry exactly.
    static SkewMatrix from_full(const std::vector<std::vector<Polynomial>>& m,
                                std::vector<int> row_weights = {});

    std::size_t size() const { return n_; }
    const CtxPtr& context() const { return ctx_; }
    const std::vector<int>& row_weights() const { return weights_; }
    // Signed entry (i,j); zero on the diagonal.
    Polynomial entry(std::size_t i, std::size_t j) const;

    // Pfaffian of the full matrix (size must be even).
    Polynomial pfaffian() const;

    // Principal submatrix deleting row and column k.
    SkewMatrix minor_skew(std::size_t k) const;

    Polynomial determinant() const;

  private:
    const Polynomial& upper(std::size_t i, std::size_t j) const;

    CtxPtr ctx_;
    std::size_t n_;
    std::vector<Polynomial> upper_;   // row-major strict upper triangle
    std::vector<int> weights_;
};

// Maximal Pfaffians.  Size 4: the single Pfaffian
// m12*m34 - m13*m24 + m14*m23.  Size 5: the five maximal Pfaffians,
// Pf_k = (-1)^{k+1} Pf(delete row/column k), in index order k = 1..5.
std::vector<Polynomial> pfaffians(const SkewMatrix& m);

} // namespace mext

#endif
