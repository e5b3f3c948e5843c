#include "qybe/scalar.hpp"

#include <cctype>
#include <sstream>

#include "qybe/errors.hpp"

namespace qybe {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw SingularError("scalar with zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(make_rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Scalar Scalar::q() { return Scalar(Poly::variable()); }

Scalar Scalar::q_pow(long k) {
    if (k >= 0)
        return Scalar(Poly::monomial(make_rational(1), static_cast<std::size_t>(k)));
    return Scalar(Poly(make_rational(1)),
                  Poly::monomial(make_rational(1), static_cast<std::size_t>(-k)));
}

Rational Scalar::as_rational() const {
    if (!is_rational()) throw DomainError("scalar is not a rational constant");
    return num_.coeff(0);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw SingularError("division by the zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1);
    Scalar base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Rational Scalar::evaluate_at(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d == 0)
        throw PoleError("pole of scalar at q = " + qybe::to_string(q0));
    return num_.eval(q0) / d;
}

namespace {

// One Laurent term, exponent may be negative.
void print_term(std::ostringstream& out, bool first, const Rational& c, long e) {
    bool neg = c < 0;
    if (first) {
        if (neg) out << "-";
    } else {
        out << (neg ? " - " : " + ");
    }
    Rational mag = neg ? Rational(-c) : c;
    if (e == 0) {
        out << to_string(mag);
        return;
    }
    if (mag != 1) out << to_string(mag) << "*";
    out << "q";
    if (e != 1) out << "^" << e;
}

}  // namespace

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    if (den_.is_one()) return num_.to_string();
    if (den_.is_monomial()) {
        // Laurent form: every term of num gets its exponent shifted down.
        long shift = den_.degree();
        std::ostringstream out;
        bool first = true;
        for (int k = num_.degree(); k >= 0; --k) {
            Rational c = num_.coeff(k);
            if (c == 0) continue;
            print_term(out, first, c, k - shift);
            first = false;
        }
        return out.str();
    }
    std::string num_str = num_.to_string();
    if (!num_.is_monomial()) num_str = "(" + num_str + ")";
    return num_str + "/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := primary ('^' ['-'] integer)?
//   primary:= integer | 'q' | '(' expr ')'
// ---------------------------------------------------------------------------

namespace {

class ScalarParser {
  public:
    explicit ScalarParser(const std::string& text) : text_(text) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return v;
    }

  private:
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v = v + term();
            } else if (peek() == '-') {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v = v * factor();
            } else if (peek() == '/') {
                std::size_t op_pos = pos_;
                ++pos_;
                Scalar d = factor();
                if (d.is_zero())
                    throw ParseError("division by the zero scalar", op_pos);
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        if (peek() == '+') {
            ++pos_;
            return factor();
        }
        return power();
    }

    Scalar power() {
        Scalar base = primary();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer exponent after '^'", pos_);
        long e = read_small_int();
        return base.pow(neg ? -e : e);
    }

    Scalar primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            skip_ws();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return Scalar::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            Integer n(text_.substr(start, pos_ - start));
            return Scalar(Rational(n));
        }
        throw ParseError(c == '\0' ? "unexpected end of input"
                                   : std::string("unexpected character '") + c + "'",
                         pos_);
    }

    long read_small_int() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 6)
            throw ParseError("exponent out of range", start);
        return std::stol(digits);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text) { return ScalarParser(text).parse(); }

}  // namespace qybe
