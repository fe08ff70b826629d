#include "mext/parse.hpp"

#include <cctype>

namespace mext {

namespace {

class Parser {
  public:
    Parser(const std::string& s, CtxPtr ctx) : s_(s), ctx_(std::move(ctx)) {}

    Polynomial run() {
        skip_ws();
        if (pos_ >= s_.size())
            throw ParseError("empty expression", pos_);
        Polynomial f = expr();
        skip_ws();
        if (pos_ < s_.size())
            throw ParseError("unexpected trailing input", pos_);
        return f;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        Polynomial b = base();
        while (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected exponent", at);
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
                if (e > 4096)
                    throw ParseError("exponent too large", at);
                ++pos_;
            }
            b = b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial base() {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Polynomial f = expr();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("expected denominator", pos_);
                mpz_class den = integer();
                if (den == 0)
                    throw ParseError("zero denominator", at);
                Rational q(num, den);
                q.canonicalize();
                return Polynomial::constant(ctx_, Scalar(q));
            }
            return Polynomial::constant(ctx_, Scalar(Rational(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            int k = ctx_->find(name);
            if (k < 0)
                throw ParseError("unknown variable '" + name + "'", at);
            return Polynomial::variable(ctx_, static_cast<std::size_t>(k));
        }
        throw ParseError("unexpected character", pos_);
    }

    mpz_class integer() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        return mpz_class(digits);
    }

    const std::string& s_;
    CtxPtr ctx_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& s, const CtxPtr& ctx) {
    return Parser(s, ctx).run();
}

} // namespace mext
