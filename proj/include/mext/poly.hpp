#ifndef MEXT_POLY_HPP
#define MEXT_POLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mext/scalar.hpp"

namespace mext {

// Ordered list of variable names with per-variable weights.
class VarContext {
  public:
    VarContext(std::vector<std::string> names, std::vector<int> weights);
    explicit VarContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::string& name(std::size_t k) const { return names_[k]; }
    int weight(std::size_t k) const { return weights_[k]; }
    // Index of a variable, or -1 when absent.
    int find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;

    bool operator==(const VarContext& o) const {
        return names_ == o.names_ && weights_ == o.weights_;
    }

  private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using CtxPtr = std::shared_ptr<const VarContext>;

CtxPtr make_context(std::vector<std::string> names);
CtxPtr make_context(std::vector<std::string> names, std::vector<int> weights);
// The ambient coordinate ring C[x,y,z].
CtxPtr ctx_xyz();
// C[x,y,z,xi,nu,eta,zeta] with fibre weights (1,1,1,2) on xi,nu,eta,zeta.
CtxPtr ctx_unproj();
// Single parameter ring C[t].
CtxPtr ctx_t();

// Exponent vector over some context (the context is carried by Polynomial).
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }

    const std::vector<unsigned>& exps() const { return exps_; }
    unsigned exp(std::size_t k) const { return exps_[k]; }
    std::size_t nvars() const { return exps_.size(); }
    bool is_one() const;
    long weighted_degree(const VarContext& ctx) const;

    Monomial operator*(const Monomial& o) const;
    // Exact division; caller must ensure divisibility.
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  private:
    std::vector<unsigned> exps_;
};

// Graded lexicographic order tied to a context's weights.
struct GradedLex {
    CtxPtr ctx;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact Scalar coefficients.
// Canonical form: no zero coefficients are stored.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Scalar, GradedLex>;

    explicit Polynomial(CtxPtr ctx);
    static Polynomial constant(CtxPtr ctx, const Scalar& c);
    static Polynomial variable(const CtxPtr& ctx, const std::string& name);
    static Polynomial variable(CtxPtr ctx, std::size_t index);

    const CtxPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    // Maximal weighted total degree (-1 for the zero polynomial).
    long degree() const;
    long degree_in(std::size_t var) const;
    Scalar coeff(const Monomial& m) const;
    Scalar constant_term() const;
    bool is_constant() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(unsigned e) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    void add_term(const Monomial& m, const Scalar& c);

    Polynomial derivative(std::size_t var) const;

    // Componentwise minimum of exponent vectors over all terms.
    Monomial monomial_content() const;
    Polynomial divided_by(const Monomial& m) const;
    Polynomial times_monomial(const Monomial& m) const;

    // Sum of terms of exact weighted degree d.
    Polynomial homogeneous_part(long d) const;
    bool is_homogeneous() const;
    // Weighted degree counting only the listed variables (-1 for zero poly);
    // returns the common such degree or throws InvariantError if mixed.
    long fibre_degree(const std::vector<std::size_t>& vars) const;

    Scalar evaluate(const std::vector<Scalar>& values) const;

    std::string str() const;

  private:
    CtxPtr ctx_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

// Ordered assignment of one target polynomial per source variable.
// Application is the induced ring homomorphism.
class RingMap {
  public:
    RingMap(CtxPtr src, std::vector<Polynomial> images);

    const CtxPtr& source() const { return src_; }
    const CtxPtr& target() const { return images_.empty() ? src_ : images_[0].context(); }
    const std::vector<Polynomial>& images() const { return images_; }

    Polynomial apply(const Polynomial& f) const;

    static RingMap identity(const CtxPtr& ctx);

  private:
    CtxPtr src_;
    std::vector<Polynomial> images_;
};

// Substitute the three ambient variables of f's context by the given triple
// (a map C[x,y,z] -> target ring of the triple).
Polynomial subs3(const Polynomial& f, const std::vector<Polynomial>& triple);

void require_same_context(const Polynomial& a, const Polynomial& b, const char* where);

} // namespace mext

#endif
