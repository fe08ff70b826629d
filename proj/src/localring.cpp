#include "mext/localring.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "mext/error.hpp"

namespace mext {

namespace {

void collect(const CtxPtr& ctx, std::vector<unsigned>& exps, std::size_t var, int remaining,
             std::vector<Monomial>& out) {
    if (var + 1 == ctx->size()) {
        for (int e = 0; e <= remaining; ++e) {
            exps[var] = static_cast<unsigned>(e);
            out.emplace_back(exps);
        }
        exps[var] = 0;
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        exps[var] = static_cast<unsigned>(e);
        collect(ctx, exps, var + 1, remaining - e, out);
    }
    exps[var] = 0;
}

long plain_degree(const Monomial& m) {
    long d = 0;
    for (unsigned e : m.exps())
        d += e;
    return d;
}

// Sparse row over column indices, kept sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

SparseRow axpy(const SparseRow& v, const Scalar& f, const SparseRow& w) {
    // v - f*w
    SparseRow r;
    r.reserve(v.size() + w.size());
    std::size_t a = 0, b = 0;
    while (a < v.size() || b < w.size()) {
        if (b == w.size() || (a < v.size() && v[a].first < w[b].first)) {
            r.push_back(v[a++]);
        } else if (a == v.size() || w[b].first < v[a].first) {
            r.emplace_back(w[b].first, -(f * w[b].second));
            ++b;
        } else {
            Scalar c = v[a].second - f * w[b].second;
            if (!c.is_zero())
                r.emplace_back(v[a].first, std::move(c));
            ++a;
            ++b;
        }
    }
    return r;
}

// Echelon basis of a truncated ideal span.  Pivot = smallest column
// (graded-lex lowest monomial), rows monic at the pivot.
class SparseEchelon {
  public:
    // Reduce v in place; returns true if the reduced row was inserted
    // (i.e. it enlarged the span).
    bool insert(SparseRow v) {
        reduce(v);
        if (v.empty())
            return false;
        Scalar inv = v.front().second.inverse();
        for (auto& [c, s] : v)
            s *= inv;
        std::size_t pivot = v.front().first;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    bool contains(SparseRow v) const {
        reduce(v);
        return v.empty();
    }

    std::size_t rank() const { return rows_.size(); }

    const std::map<std::size_t, SparseRow>& rows() const { return rows_; }

  private:
    void reduce(SparseRow& v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.front().first);
            if (it == rows_.end())
                return;
            v = axpy(v, v.front().second, it->second);
        }
    }

    std::map<std::size_t, SparseRow> rows_;  // pivot column -> row
};

} // namespace

std::vector<Monomial> monomials_below(const CtxPtr& ctx, int bound) {
    std::vector<Monomial> out;
    if (bound <= 0)
        return out;
    std::vector<unsigned> exps(ctx->size(), 0);
    collect(ctx, exps, 0, bound - 1, out);
    GradedLex cmp{ctx};
    std::sort(out.begin(), out.end(), cmp);
    return out;
}

Colength colength(const std::vector<Polynomial>& generators, int cap) {
    if (cap < 2)
        throw DomainError("colength: cap must be >= 2");
    CtxPtr ctx;
    for (const auto& g : generators) {
        if (!ctx)
            ctx = g.context();
        else
            require_same_context(generators[0], g, "colength");
    }
    std::vector<const Polynomial*> gens;
    for (const auto& g : generators)
        if (!g.is_zero())
            gens.push_back(&g);
    if (!ctx)
        ctx = ctx_xyz();
    const std::size_t nv = ctx->size();

    Colength res;
    int n = 4;
    while (true) {
        n = std::min(n, cap);
        std::vector<Monomial> basis = monomials_below(ctx, n);
        std::map<Monomial, std::size_t, GradedLex> index(GradedLex{ctx});
        for (std::size_t k = 0; k < basis.size(); ++k)
            index.emplace(basis[k], k);

        auto to_row = [&](const Polynomial& f, const Monomial& m) {
            SparseRow row;
            for (const auto& [fm, fc] : f.terms()) {
                auto it = index.find(fm * m);
                if (it != index.end())
                    row.emplace_back(it->second, fc);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            return row;
        };

        // Saturate the span of the generators under multiplication by the
        // variables; this reaches the span of all m*g without forming
        // every product row explicitly.
        SparseEchelon span;
        std::deque<SparseRow> work;
        Monomial unit = Monomial::one(nv);
        for (const Polynomial* g : gens)
            work.push_back(to_row(*g, unit));
        while (!work.empty()) {
            SparseRow row = std::move(work.front());
            work.pop_front();
            SparseRow copy = row;
            if (!span.insert(std::move(copy)))
                continue;
            for (std::size_t v = 0; v < nv; ++v) {
                SparseRow shifted;
                shifted.reserve(row.size());
                std::vector<unsigned> e(nv, 0);
                e[v] = 1;
                Monomial xv{e};
                for (const auto& [col, c] : row) {
                    auto it = index.find(basis[col] * xv);
                    if (it != index.end())
                        shifted.emplace_back(it->second, c);
                }
                if (!shifted.empty())
                    work.push_back(std::move(shifted));
            }
        }

        bool stable = true;
        for (std::size_t k = 0; k < basis.size() && stable; ++k) {
            if (plain_degree(basis[k]) != n - 1)
                continue;
            if (!span.contains({{k, Scalar(1)}}))
                stable = false;
        }

        res.value = static_cast<long>(basis.size() - span.rank());
        res.truncation = n;
        if (stable) {
            res.stabilized = true;
            return res;
        }
        if (n >= cap)
            return res;  // lower bound only
        n = n < 8 ? n * 2 : n + 2;
    }
}

MilnorNumber milnor_number(const Polynomial& f, int cap) {
    if (!f.constant_term().is_zero())
        throw DomainError("milnor_number: nonzero constant term");
    MilnorNumber out;
    if (f.is_zero())
        return out;  // not isolated
    if (f.context()->size() != 3)
        throw ContextError("milnor_number: expected three variables");
    std::vector<Polynomial> jac;
    for (std::size_t v = 0; v < 3; ++v)
        jac.push_back(f.derivative(v));
    Colength c = colength(jac, cap);
    if (!c.stabilized)
        return out;
    out.isolated = true;
    out.mu = c.value;
    return out;
}

Membership membership_bounded(const Polynomial& h, const std::vector<Polynomial>& generators,
                              int degree_bound) {
    Membership out;
    CtxPtr ctx = h.context();
    for (const auto& g : generators)
        require_same_context(h, g, "membership_bounded");
    std::vector<std::pair<std::size_t, const Polynomial*>> gens;
    for (std::size_t k = 0; k < generators.size(); ++k)
        if (!generators[k].is_zero())
            gens.emplace_back(k, &generators[k]);
    if (h.is_zero()) {
        out.proven = true;
        out.cofactors.assign(generators.size(), Polynomial(ctx));
        return out;
    }
    if (gens.empty())
        return out;

    // Columns of the ambient space are product monomials, discovered on
    // the fly.  Each span row carries its provenance: the combination of
    // (generator, cofactor monomial) pairs that produced it.
    std::map<Monomial, std::size_t, GradedLex> col_index(GradedLex{ctx});
    std::vector<Monomial> col_monos;
    auto col_of = [&](const Monomial& m) {
        auto it = col_index.find(m);
        if (it == col_index.end()) {
            it = col_index.emplace(m, col_monos.size()).first;
            col_monos.push_back(m);
        }
        return it->second;
    };

    struct Row {
        SparseRow vec;                       // sorted by column
        std::vector<std::pair<std::size_t, Scalar>> prov;  // flat cofactor index
    };
    std::vector<Row> basis;                   // echelon rows
    std::map<std::size_t, std::size_t> pivot_row;

    auto reduce = [&](Row& r) {
        while (!r.vec.empty()) {
            auto it = pivot_row.find(r.vec.front().first);
            if (it == pivot_row.end())
                return;
            const Row& p = basis[it->second];
            Scalar f = r.vec.front().second;
            r.vec = axpy(r.vec, f, p.vec);
            for (const auto& [idx, c] : p.prov)
                r.prov.emplace_back(idx, -(f * c));
        }
    };

    SparseRow target;
    for (const auto& [hm, hc] : h.terms())
        target.emplace_back(col_of(hm), hc);

    std::vector<Monomial> cof_monos;  // shared cofactor monomial list
    std::size_t mono_cursor = 0;
    for (int d = 0; d <= degree_bound; ++d) {
        // append monomials of plain degree exactly d
        for (const auto& m : monomials_below(ctx, d + 1))
            if (plain_degree(m) == d)
                cof_monos.push_back(m);
        for (; mono_cursor < cof_monos.size(); ++mono_cursor) {
            const Monomial& m = cof_monos[mono_cursor];
            for (const auto& [gk, g] : gens) {
                Row r;
                for (const auto& [gm, gc] : g->terms())
                    r.vec.emplace_back(col_of(gm * m), gc);
                std::sort(r.vec.begin(), r.vec.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                r.prov.emplace_back(gk * 100000 + mono_cursor, Scalar(1));
                reduce(r);
                if (r.vec.empty())
                    continue;
                Scalar inv = r.vec.front().second.inverse();
                for (auto& [c, s] : r.vec)
                    s *= inv;
                for (auto& [i, s] : r.prov)
                    s *= inv;
                pivot_row[r.vec.front().first] = basis.size();
                basis.push_back(std::move(r));
            }
        }
        // try to reduce the target to zero
        Row probe;
        std::sort(target.begin(), target.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        probe.vec = target;
        reduce(probe);
        if (!probe.vec.empty())
            continue;

        std::vector<Polynomial> cof(generators.size(), Polynomial(ctx));
        for (const auto& [idx, c] : probe.prov) {
            std::size_t gk = idx / 100000, mk = idx % 100000;
            cof[gk].add_term(cof_monos[mk], -c);
        }
        Polynomial check(ctx);
        for (std::size_t k = 0; k < generators.size(); ++k)
            check += cof[k] * generators[k];
        if (!(check == h))
            throw InvariantError("membership_bounded: cofactor identity failed exact verification");
        out.proven = true;
        out.cofactors = std::move(cof);
        return out;
    }
    return out;
}

} // namespace mext
