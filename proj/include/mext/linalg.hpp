#ifndef MEXT_LINALG_HPP
#define MEXT_LINALG_HPP

#include <optional>
#include <vector>

#include "mext/scalar.hpp"

namespace mext {

// Incremental row space over the scalar field with exact elimination.
// Rows are dense vectors of a fixed width.
class RowSpace {
  public:
    explicit RowSpace(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduce v against the basis and absorb the remainder if nonzero.
    // Returns true when the row enlarged the span.
    bool insert(std::vector<Scalar> v);

    // Does v lie in the current span?
    bool contains(std::vector<Scalar> v) const;

  private:
    void reduce(std::vector<Scalar>& v) const;

    std::size_t width_;
    std::vector<std::vector<Scalar>> rows_;  // echelon rows, monic pivots
    std::vector<std::size_t> pivots_;        // pivot column per row
};

// Solve A x = b exactly; returns one solution (free variables zero)
// or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> a,
                                                std::vector<Scalar> b);

} // namespace mext

#endif
