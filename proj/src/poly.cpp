#include "mext/poly.hpp"

#include <algorithm>
#include <sstream>

#include "mext/error.hpp"

namespace mext {

VarContext::VarContext(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size())
        throw DomainError("VarContext: names/weights size mismatch");
    for (std::size_t a = 0; a < names_.size(); ++a)
        for (std::size_t b = a + 1; b < names_.size(); ++b)
            if (names_[a] == names_[b])
                throw DomainError("VarContext: duplicate variable " + names_[a]);
}

VarContext::VarContext(std::vector<std::string> names)
    : names_(std::move(names)), weights_(names_.size(), 1) {
    for (std::size_t a = 0; a < names_.size(); ++a)
        for (std::size_t b = a + 1; b < names_.size(); ++b)
            if (names_[a] == names_[b])
                throw DomainError("VarContext: duplicate variable " + names_[a]);
}

int VarContext::find(const std::string& name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name)
            return static_cast<int>(k);
    return -1;
}

std::size_t VarContext::index_of(const std::string& name) const {
    int k = find(name);
    if (k < 0)
        throw ContextError("variable '" + name + "' not in context");
    return static_cast<std::size_t>(k);
}

CtxPtr make_context(std::vector<std::string> names, std::vector<int> weights) {
    return std::make_shared<VarContext>(std::move(names), std::move(weights));
}

CtxPtr make_context(std::vector<std::string> names) {
    std::vector<int> w(names.size(), 1);
    return make_context(std::move(names), std::move(w));
}

CtxPtr ctx_xyz() {
    static const CtxPtr c = make_context({"x", "y", "z"});
    return c;
}

CtxPtr ctx_unproj() {
    static const CtxPtr c = make_context({"x", "y", "z", "xi", "nu", "eta", "zeta"},
                                         {1, 1, 1, 1, 1, 1, 2});
    return c;
}

CtxPtr ctx_t() {
    static const CtxPtr c = make_context({"t"});
    return c;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

long Monomial::weighted_degree(const VarContext& ctx) const {
    long d = 0;
    for (std::size_t k = 0; k < exps_.size(); ++k)
        d += static_cast<long>(exps_[k]) * ctx.weight(k);
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<unsigned> e(exps_);
    for (std::size_t k = 0; k < e.size(); ++k)
        e[k] += o.exps_[k];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& o) const {
    std::vector<unsigned> e(exps_);
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (o.exps_[k] > e[k])
            throw DomainError("Monomial: non-exact division");
        e[k] -= o.exps_[k];
    }
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t k = 0; k < exps_.size(); ++k)
        if (exps_[k] > o.exps_[k])
            return false;
    return true;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
    long da = a.weighted_degree(*ctx), db = b.weighted_degree(*ctx);
    if (da != db)
        return da < db;
    for (std::size_t k = 0; k < a.nvars(); ++k)
        if (a.exp(k) != b.exp(k))
            return a.exp(k) < b.exp(k);
    return false;
}

Polynomial::Polynomial(CtxPtr ctx) : ctx_(std::move(ctx)), terms_(GradedLex{ctx_}) {
    if (!ctx_)
        throw DomainError("Polynomial: null context");
}

Polynomial Polynomial::constant(CtxPtr ctx, const Scalar& c) {
    Polynomial f(std::move(ctx));
    if (!c.is_zero())
        f.terms_.emplace(Monomial::one(f.ctx_->size()), c);
    return f;
}

Polynomial Polynomial::variable(const CtxPtr& ctx, const std::string& name) {
    return variable(ctx, ctx->index_of(name));
}

Polynomial Polynomial::variable(CtxPtr ctx, std::size_t index) {
    Polynomial f(std::move(ctx));
    std::vector<unsigned> e(f.ctx_->size(), 0);
    e.at(index) = 1;
    f.terms_.emplace(Monomial(std::move(e)), Scalar(1));
    return f;
}

long Polynomial::degree() const {
    if (terms_.empty())
        return -1;
    return terms_.rbegin()->first.weighted_degree(*ctx_);
}

long Polynomial::degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<long>(m.exp(var)));
    return d;
}

Scalar Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Polynomial::constant_term() const {
    return coeff(Monomial::one(ctx_->size()));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

void require_same_context(const Polynomial& a, const Polynomial& b, const char* where) {
    if (a.context() != b.context() && !(*a.context() == *b.context()))
        throw ContextError(std::string(where) + ": operands over different variable contexts");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_context(*this, o, "Polynomial::operator+");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_context(*this, o, "Polynomial::operator-");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_context(*this, o, "Polynomial::operator*");
    Polynomial r(ctx_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(ctx_);
    if (c.is_zero())
        return r;
    for (const auto& [m, k] : terms_) {
        Scalar p = k * c;
        if (!p.is_zero())
            r.terms_.emplace(m, p);
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = constant(ctx_, Scalar(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    require_same_context(*this, o, "Polynomial::operator==");
    if (terms_.size() != o.terms_.size())
        return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (!(a->first == b->first) || a->second != b->second)
            return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exp(var);
        if (e == 0)
            continue;
        std::vector<unsigned> ex = m.exps();
        ex[var] -= 1;
        r.add_term(Monomial(std::move(ex)), c * Scalar(static_cast<int>(e)));
    }
    return r;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty())
        throw DomainError("monomial_content: zero polynomial");
    std::vector<unsigned> mins = terms_.begin()->first.exps();
    for (const auto& [m, c] : terms_)
        for (std::size_t k = 0; k < mins.size(); ++k)
            mins[k] = std::min(mins[k], m.exp(k));
    return Monomial(std::move(mins));
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
    Polynomial r(ctx_);
    for (const auto& [mm, c] : terms_)
        r.terms_.emplace(mm / m, c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial r(ctx_);
    for (const auto& [mm, c] : terms_)
        r.terms_.emplace(mm * m, c);
    return r;
}

Polynomial Polynomial::homogeneous_part(long d) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(*ctx_) == d)
            r.terms_.emplace(m, c);
    return r;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty())
        return true;
    long d = terms_.begin()->first.weighted_degree(*ctx_);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
        return t.first.weighted_degree(*ctx_) == d;
    });
}

long Polynomial::fibre_degree(const std::vector<std::size_t>& vars) const {
    if (terms_.empty())
        return -1;
    long common = -2;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (std::size_t v : vars)
            d += static_cast<long>(m.exp(v)) * ctx_->weight(v);
        if (common == -2)
            common = d;
        else if (common != d)
            throw InvariantError("fibre_degree: polynomial is not fibre-homogeneous");
    }
    return common;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& values) const {
    if (values.size() != ctx_->size())
        throw ContextError("evaluate: wrong number of values");
    Scalar acc(0);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t k = 0; k < values.size(); ++k)
            if (m.exp(k))
                t *= values[k].pow(m.exp(k));
        acc += t;
    }
    return acc;
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // print leading terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Scalar c = it->second;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                   cs.find(" - ") == std::string::npos;
        if (first) {
            first = false;
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        bool wrap = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        std::ostringstream vars;
        bool anyvar = false;
        for (std::size_t k = 0; k < ctx_->size(); ++k) {
            unsigned e = m.exp(k);
            if (!e)
                continue;
            if (anyvar)
                vars << "*";
            anyvar = true;
            vars << ctx_->name(k);
            if (e > 1)
                vars << "^" << e;
        }
        if (!anyvar) {
            os << (wrap ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << vars.str();
        } else {
            os << (wrap ? "(" + cs + ")" : cs) << "*" << vars.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    return os << f.str();
}

RingMap::RingMap(CtxPtr src, std::vector<Polynomial> images)
    : src_(std::move(src)), images_(std::move(images)) {
    if (images_.size() != src_->size())
        throw ContextError("RingMap: one image per source variable required");
    for (const auto& g : images_)
        require_same_context(images_[0], g, "RingMap");
}

RingMap RingMap::identity(const CtxPtr& ctx) {
    std::vector<Polynomial> im;
    im.reserve(ctx->size());
    for (std::size_t k = 0; k < ctx->size(); ++k)
        im.push_back(Polynomial::variable(ctx, k));
    return RingMap(ctx, std::move(im));
}

Polynomial RingMap::apply(const Polynomial& f) const {
    if (!(*f.context() == *src_))
        throw ContextError("RingMap::apply: polynomial context does not match map source");
    CtxPtr dst = target();
    Polynomial acc(dst);
    // cache powers of each image
    std::vector<std::vector<Polynomial>> powers(images_.size());
    auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
        auto& tab = powers[var];
        if (tab.empty())
            tab.push_back(Polynomial::constant(dst, Scalar(1)));
        while (tab.size() <= e)
            tab.push_back(tab.back() * images_[var]);
        return tab[e];
    };
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(dst, c);
        for (std::size_t k = 0; k < images_.size(); ++k)
            if (m.exp(k))
                t = t * power(k, m.exp(k));
        acc += t;
    }
    return acc;
}

Polynomial subs3(const Polynomial& f, const std::vector<Polynomial>& triple) {
    if (triple.size() != 3 || f.context()->size() != 3)
        throw ContextError("subs3: expected three variables and three images");
    RingMap m(f.context(), triple);
    return m.apply(f);
}

} // namespace mext
