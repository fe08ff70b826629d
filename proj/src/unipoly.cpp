#include "mext/unipoly.hpp"

#include "mext/error.hpp"

namespace mext {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(const Scalar& c) {
    return UniPoly(std::vector<Scalar>{c});
}

UniPoly UniPoly::t() {
    return UniPoly({Scalar(0), Scalar(1)});
}

UniPoly UniPoly::from(const Polynomial& f) {
    if (f.context()->size() != 1)
        throw ContextError("UniPoly::from: expected a univariate context");
    std::vector<Scalar> c(static_cast<std::size_t>(std::max<long>(f.degree() + 1, 0)), Scalar(0));
    for (const auto& [m, k] : f.terms())
        c[m.exp(0)] = k;
    return UniPoly(std::move(c));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Scalar UniPoly::lead() const {
    if (c_.empty())
        throw DomainError("UniPoly::lead: zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar(0));
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = coeff(k) + o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar(0));
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = coeff(k) - o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero())
        return UniPoly();
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(0));
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero())
            continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b)
            r[a + b] += c_[a] * o.c_[b];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Scalar& s) const {
    std::vector<Scalar> r(c_);
    for (auto& x : r)
        x *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero())
        return *this;
    return scaled(lead().inverse());
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1)
        return UniPoly();
    std::vector<Scalar> r(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        r[k - 1] = c_[k] * Scalar(static_cast<int>(k));
    return UniPoly(std::move(r));
}

Scalar UniPoly::evaluate(const Scalar& x) const {
    Scalar acc(0);
    for (std::size_t k = c_.size(); k-- > 0;)
        acc = acc * x + c_[k];
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero())
        throw DomainError("UniPoly::divmod: division by zero");
    std::vector<Scalar> rem(c_);
    std::vector<Scalar> quo;
    int dd = d.degree();
    Scalar dl = d.lead().inverse();
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= 0 && rem[static_cast<std::size_t>(dr)].is_zero())
        --dr;
    if (dr >= dd)
        quo.assign(static_cast<std::size_t>(dr - dd + 1), Scalar(0));
    while (dr >= dd) {
        Scalar f = rem[static_cast<std::size_t>(dr)] * dl;
        quo[static_cast<std::size_t>(dr - dd)] = f;
        for (int k = 0; k <= dd; ++k)
            rem[static_cast<std::size_t>(dr - dd + k)] -= f * d.c_[static_cast<std::size_t>(k)];
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)].is_zero())
            --dr;
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UniPoly r2 = r0.divmod(r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

int order_at(const UniPoly& f, const Scalar& x0) {
    if (f.is_zero())
        throw DomainError("order_at: zero polynomial");
    UniPoly lin({-x0, Scalar(1)});
    UniPoly g = f;
    int ord = 0;
    while (true) {
        auto [q, r] = g.divmod(lin);
        if (!r.is_zero())
            return ord;
        ++ord;
        g = std::move(q);
        if (g.is_zero())
            return ord;
    }
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() < 1)
        return out;
    // Yun's algorithm (characteristic zero).
    UniPoly g = gcd(f, f.derivative());
    UniPoly w = f.divmod(g).first;
    int k = 1;
    while (w.degree() >= 1) {
        UniPoly y = gcd(w, g);
        UniPoly p = w.divmod(y).first;
        if (p.degree() >= 1)
            out.emplace_back(p.monic(), k);
        g = g.divmod(y).first;
        w = std::move(y);
        ++k;
    }
    return out;
}

} // namespace mext
