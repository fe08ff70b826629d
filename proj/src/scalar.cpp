#include "mext/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace mext {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

NumberField::NumberField(std::vector<Rational> minpoly, std::string generator_name)
    : minpoly_(std::move(minpoly)), name_(std::move(generator_name)) {
    if (minpoly_.size() < 3)
        throw DomainError("NumberField: minimal polynomial must have degree >= 2");
    if (minpoly_.back() != 1)
        throw DomainError("NumberField: minimal polynomial must be monic");
}

bool NumberField::same_field(const NumberField& other) const {
    return this == &other || minpoly_ == other.minpoly_;
}

FieldPtr NumberField::gaussian() {
    static const FieldPtr k = std::make_shared<NumberField>(
        std::vector<Rational>{1, 0, 1}, "i");
    return k;
}

Scalar::Scalar(int num, int den) : rat_(num, den) {
    if (den == 0)
        throw DomainError("Scalar: zero denominator");
    rat_.canonicalize();
}

Scalar::Scalar(FieldPtr field, std::vector<Rational> coeffs)
    : rat_(0), field_(std::move(field)), ext_(std::move(coeffs)) {
    if (!field_)
        throw DomainError("Scalar: null field");
    reduce();
}

Scalar Scalar::generator(const FieldPtr& field) {
    return Scalar(field, {0, 1});
}

void Scalar::reduce() {
    const auto& p = field_->minpoly();
    const std::size_t d = p.size() - 1;
    // Divide by the monic minimal polynomial, keep the remainder.
    while (ext_.size() > d) {
        Rational lead = ext_.back();
        ext_.pop_back();
        if (lead == 0)
            continue;
        const std::size_t off = ext_.size() - d;
        for (std::size_t k = 0; k < d; ++k)
            ext_[off + k] -= lead * p[k];
    }
    ext_.resize(d, Rational(0));
    // Collapse to a plain rational when possible.
    bool pure = true;
    for (std::size_t k = 1; k < ext_.size(); ++k)
        if (ext_[k] != 0) { pure = false; break; }
    if (pure) {
        rat_ = ext_.empty() ? Rational(0) : ext_[0];
        field_.reset();
        ext_.clear();
    }
}

void Scalar::promote(const FieldPtr& field) {
    if (field_)
        return;
    field_ = field;
    ext_.assign(static_cast<std::size_t>(field->degree()), Rational(0));
    ext_[0] = rat_;
    rat_ = 0;
}

void Scalar::check_compatible(const Scalar& a, const Scalar& b) {
    if (a.field_ && b.field_ && a.field_ != b.field_ &&
        !a.field_->same_field(*b.field_))
        throw ContextError("Scalar: mixing elements of different extension fields");
}

bool Scalar::is_zero() const {
    if (!field_)
        return rat_ == 0;
    return std::all_of(ext_.begin(), ext_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool Scalar::is_one() const {
    return !field_ && rat_ == 1;
}

const Rational& Scalar::rational() const {
    if (field_)
        throw DomainError("Scalar: not a rational number");
    return rat_;
}

std::vector<Rational> Scalar::coeffs() const {
    if (!field_)
        return {rat_};
    return ext_;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    if (!r.field_) {
        r.rat_ = -r.rat_;
    } else {
        for (auto& c : r.ext_)
            c = -c;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_compatible(*this, o);
    if (!field_ && !o.field_) {
        rat_ += o.rat_;
        return *this;
    }
    if (!field_)
        promote(o.field_);
    if (o.field_) {
        for (std::size_t k = 0; k < ext_.size(); ++k)
            ext_[k] += o.ext_[k];
    } else {
        ext_[0] += o.rat_;
    }
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_compatible(*this, o);
    if (!field_ && !o.field_) {
        rat_ *= o.rat_;
        return *this;
    }
    if (!field_) {
        // rational * extension
        Scalar r(o);
        for (auto& c : r.ext_)
            c *= rat_;
        r.reduce();
        return *this = r;
    }
    if (!o.field_) {
        for (auto& c : ext_)
            c *= o.rat_;
        reduce();
        return *this;
    }
    std::vector<Rational> prod(ext_.size() + o.ext_.size() - 1, Rational(0));
    for (std::size_t a = 0; a < ext_.size(); ++a) {
        if (ext_[a] == 0)
            continue;
        for (std::size_t b = 0; b < o.ext_.size(); ++b)
            prod[a + b] += ext_[a] * o.ext_[b];
    }
    ext_ = std::move(prod);
    reduce();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw DomainError("Scalar: division by zero");
    if (!field_) {
        Scalar r;
        r.rat_ = 1 / rat_;
        return r;
    }
    // Extended Euclid on (representative, minpoly) over Q[t].
    using Poly = std::vector<Rational>;
    auto deg = [](const Poly& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<std::size_t>(d)] == 0)
            --d;
        return d;
    };
    Poly r0 = field_->minpoly(), r1 = ext_;
    Poly s0 = {Rational(0)}, s1 = {Rational(1)};
    while (true) {
        int d1 = deg(r1);
        if (d1 < 0)
            throw DomainError("Scalar: element not invertible (reducible modulus?)");
        if (d1 == 0) {
            Rational c = 1 / r1[0];
            Poly inv(s1.size());
            for (std::size_t k = 0; k < s1.size(); ++k)
                inv[k] = s1[k] * c;
            return Scalar(field_, std::move(inv));
        }
        // r0 = q*r1 + r2
        Poly rem = r0;
        Poly q(std::max<std::size_t>(rem.size(), 1), Rational(0));
        int dr = deg(rem);
        while (dr >= d1) {
            Rational f = rem[static_cast<std::size_t>(dr)] / r1[static_cast<std::size_t>(d1)];
            q[static_cast<std::size_t>(dr - d1)] = f;
            for (int k = 0; k <= d1; ++k)
                rem[static_cast<std::size_t>(dr - d1 + k)] -= f * r1[static_cast<std::size_t>(k)];
            dr = deg(rem);
        }
        // s2 = s0 - q*s1
        Poly s2(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
        for (std::size_t k = 0; k < s0.size(); ++k)
            s2[k] = s0[k];
        for (std::size_t a = 0; a < q.size(); ++a) {
            if (q[a] == 0)
                continue;
            for (std::size_t b = 0; b < s1.size(); ++b)
                s2[a + b] -= q[a] * s1[b];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar base(*this), acc(1);
    while (e) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!field_ && !o.field_)
        return rat_ == o.rat_;
    if (static_cast<bool>(field_) != static_cast<bool>(o.field_))
        return false;
    if (field_ != o.field_ && !field_->same_field(*o.field_))
        return false;
    return ext_ == o.ext_;
}

bool Scalar::operator<(const Scalar& o) const {
    if (static_cast<bool>(field_) != static_cast<bool>(o.field_))
        return !field_;
    if (!field_)
        return rat_ < o.rat_;
    for (std::size_t k = 0; k < ext_.size(); ++k)
        if (ext_[k] != o.ext_[k])
            return ext_[k] < o.ext_[k];
    return false;
}

std::string Scalar::str() const {
    if (!field_)
        return to_string(rat_);
    std::ostringstream os;
    bool first = true;
    const std::string& g = field_->generator_name();
    for (std::size_t k = 0; k < ext_.size(); ++k) {
        if (ext_[k] == 0)
            continue;
        Rational c = ext_[k];
        if (first) {
            first = false;
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (k == 0) {
            os << to_string(c);
        } else {
            if (c != 1)
                os << to_string(c) << "*";
            os << g;
            if (k > 1)
                os << "^" << k;
        }
    }
    if (first)
        os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

} // namespace mext
