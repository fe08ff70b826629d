#include "mext/linalg.hpp"

#include "mext/error.hpp"

namespace mext {

void RowSpace::reduce(std::vector<Scalar>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (c.is_zero())
            continue;
        Scalar f = c;  // pivot rows are monic
        for (std::size_t k = pivots_[r]; k < width_; ++k)
            if (!rows_[r][k].is_zero())
                v[k] -= f * rows_[r][k];
    }
}

bool RowSpace::insert(std::vector<Scalar> v) {
    if (v.size() != width_)
        throw DomainError("RowSpace: row width mismatch");
    reduce(v);
    std::size_t p = 0;
    while (p < width_ && v[p].is_zero())
        ++p;
    if (p == width_)
        return false;
    Scalar inv = v[p].inverse();
    for (std::size_t k = p; k < width_; ++k)
        if (!v[k].is_zero())
            v[k] *= inv;
    // keep rows sorted by pivot for a mild reduction speedup
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p)
        ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
}

bool RowSpace::contains(std::vector<Scalar> v) const {
    if (v.size() != width_)
        throw DomainError("RowSpace: row width mismatch");
    reduce(v);
    for (const auto& c : v)
        if (!c.is_zero())
            return false;
    return true;
}

std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> a,
                                                std::vector<Scalar> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c].is_zero())
            ++sel;
        if (sel == rows)
            continue;
        std::swap(a[sel], a[r]);
        std::swap(b[sel], b[r]);
        Scalar inv = a[r][c].inverse();
        for (std::size_t k = c; k < cols; ++k)
            a[r][k] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero())
                continue;
            Scalar f = a[i][c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero())
            return std::nullopt;
    std::vector<Scalar> x(cols, Scalar(0));
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
        x[pivot_col[k]] = b[k];
    return x;
}

} // namespace mext
