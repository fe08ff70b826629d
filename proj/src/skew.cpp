#include "mext/skew.hpp"

#include "mext/error.hpp"

namespace mext {

SkewMatrix::SkewMatrix(CtxPtr ctx, std::size_t n, std::vector<Polynomial> upper,
                       std::vector<int> row_weights)
    : ctx_(std::move(ctx)), n_(n), upper_(std::move(upper)), weights_(std::move(row_weights)) {
    if (upper_.size() != n_ * (n_ - 1) / 2)
        throw DomainError("SkewMatrix: wrong number of upper entries");
    if (!weights_.empty() && weights_.size() != n_)
        throw DomainError("SkewMatrix: weight vector size mismatch");
    for (const auto& e : upper_)
        if (!(*e.context() == *ctx_))
            throw ContextError("SkewMatrix: entry context mismatch");
}

SkewMatrix SkewMatrix::from_full(const std::vector<std::vector<Polynomial>>& m,
                                 std::vector<int> row_weights) {
    std::size_t n = m.size();
    if (n == 0)
        throw DomainError("SkewMatrix: empty matrix");
    CtxPtr ctx = m[0][0].context();
    std::vector<Polynomial> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n)
            throw DomainError("SkewMatrix: not square");
        if (!m[i][i].is_zero())
            throw InvariantError("SkewMatrix: nonzero diagonal entry");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(m[i][j] == -m[j][i]))
                throw InvariantError("SkewMatrix: entries not antisymmetric");
            upper.push_back(m[i][j]);
        }
    }
    return SkewMatrix(ctx, n, std::move(upper), std::move(row_weights));
}

const Polynomial& SkewMatrix::upper(std::size_t i, std::size_t j) const {
    // strict upper triangle, row-major: offset(i) + (j - i - 1)
    std::size_t off = i * n_ - i * (i + 1) / 2;
    return upper_[off + (j - i - 1)];
}

Polynomial SkewMatrix::entry(std::size_t i, std::size_t j) const {
    if (i == j)
        return Polynomial(ctx_);
    if (i < j)
        return upper(i, j);
    return -upper(j, i);
}

SkewMatrix SkewMatrix::minor_skew(std::size_t k) const {
    std::vector<Polynomial> up;
    std::vector<int> w;
    for (std::size_t i = 0; i < n_; ++i) {
        if (i == k)
            continue;
        if (!weights_.empty())
            w.push_back(weights_[i]);
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (j == k)
                continue;
            up.push_back(upper(i, j));
        }
    }
    return SkewMatrix(ctx_, n_ - 1, std::move(up), std::move(w));
}

Polynomial SkewMatrix::pfaffian() const {
    if (n_ % 2 != 0)
        throw DomainError("pfaffian: odd size");
    if (n_ == 0)
        return Polynomial::constant(ctx_, Scalar(1));
    if (n_ == 2)
        return upper(0, 1);
    // Expansion along the first row: Pf = sum_j (-1)^j a_{1j} Pf(M_{1^,j^}).
    Polynomial acc(ctx_);
    for (std::size_t j = 1; j < n_; ++j) {
        // delete rows/cols 0 and j
        std::vector<Polynomial> up;
        for (std::size_t a = 1; a < n_; ++a) {
            if (a == j)
                continue;
            for (std::size_t b = a + 1; b < n_; ++b) {
                if (b == j)
                    continue;
                up.push_back(upper(a, b));
            }
        }
        SkewMatrix sub(ctx_, n_ - 2, std::move(up));
        Polynomial t = upper(0, j) * sub.pfaffian();
        if (j % 2 == 1)
            acc += t;
        else
            acc -= t;
    }
    return acc;
}

Polynomial SkewMatrix::determinant() const {
    // Cofactor expansion on the full signed matrix; sizes here are tiny.
    std::vector<std::vector<Polynomial>> m(n_, std::vector<Polynomial>(n_, Polynomial(ctx_)));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            m[i][j] = entry(i, j);
    std::vector<std::size_t> cols(n_);
    for (std::size_t k = 0; k < n_; ++k)
        cols[k] = k;
    // recursive lambda over remaining columns
    auto det = [&](auto&& self, std::size_t row, std::vector<std::size_t> cs) -> Polynomial {
        if (cs.empty())
            return Polynomial::constant(ctx_, Scalar(1));
        Polynomial acc(ctx_);
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (m[row][cs[k]].is_zero())
                continue;
            std::vector<std::size_t> rest;
            for (std::size_t a = 0; a < cs.size(); ++a)
                if (a != k)
                    rest.push_back(cs[a]);
            Polynomial t = m[row][cs[k]] * self(self, row + 1, rest);
            if (k % 2 == 0)
                acc += t;
            else
                acc -= t;
        }
        return acc;
    };
    return det(det, 0, cols);
}

std::vector<Polynomial> pfaffians(const SkewMatrix& m) {
    if (m.size() == 4)
        return {m.pfaffian()};
    if (m.size() == 5) {
        std::vector<Polynomial> out;
        out.reserve(5);
        for (std::size_t k = 0; k < 5; ++k) {
            Polynomial p = m.minor_skew(k).pfaffian();
            out.push_back(k % 2 == 0 ? p : -p);
        }
        return out;
    }
    throw DomainError("pfaffians: supported sizes are 4 and 5");
}

} // namespace mext
