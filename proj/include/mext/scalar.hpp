#ifndef MEXT_SCALAR_HPP
#define MEXT_SCALAR_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "mext/error.hpp"

namespace mext {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// A simple extension Q[theta]/(p(theta)) with p monic irreducible.
// Elements are represented by coefficient vectors of degree < deg p.
class NumberField {
  public:
    // minpoly coefficients c0..cd with cd = 1, d >= 2.
    NumberField(std::vector<Rational> minpoly, std::string generator_name);

    const std::vector<Rational>& minpoly() const { return minpoly_; }
    const std::string& generator_name() const { return name_; }
    int degree() const { return static_cast<int>(minpoly_.size()) - 1; }

    bool same_field(const NumberField& other) const;

    // The Gaussian field Q(i), shared so extension elements built in
    // different places compare by pointer on the fast path.
    static std::shared_ptr<const NumberField> gaussian();

  private:
    std::vector<Rational> minpoly_;
    std::string name_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// An exact scalar: a rational number, or an element of a simple
// extension Q[theta]/(p).  All arithmetic is exact; extension elements
// are kept reduced modulo the minimal polynomial.
class Scalar {
  public:
    Scalar() : rat_(0) {}
    Scalar(int n) : rat_(n) {}                 // NOLINT(google-explicit-constructor)
    Scalar(long n) : rat_(n) {}                // NOLINT(google-explicit-constructor)
    Scalar(const Rational& q) : rat_(q) {}     // NOLINT(google-explicit-constructor)
    Scalar(int num, int den);

    // Element sum c_k theta^k of the given field; coeffs may be any length
    // and are reduced modulo the minimal polynomial.
    Scalar(FieldPtr field, std::vector<Rational> coeffs);

    static Scalar generator(const FieldPtr& field);

    bool is_rational() const { return !field_; }
    bool is_zero() const;
    bool is_one() const;
    const Rational& rational() const;
    const FieldPtr& field() const { return field_; }
    // Coefficients on 1, theta, ..., theta^{d-1}; rationals report {value}.
    std::vector<Rational> coeffs() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order used for canonical maps; not a numeric comparison.
    bool operator<(const Scalar& o) const;

    std::string str() const;

  private:
    void reduce();
    void promote(const FieldPtr& field);
    static void check_compatible(const Scalar& a, const Scalar& b);

    Rational rat_;                 // value when field_ == nullptr
    FieldPtr field_;               // extension field, if any
    std::vector<Rational> ext_;    // coefficients, size == field_->degree()
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace mext

#endif
