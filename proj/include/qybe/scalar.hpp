#pragma once

#include <string>

#include "qybe/poly.hpp"

namespace qybe {

/// Element of the rational-function field Q(q), kept in a unique canonical
/// form: the denominator is monic and coprime to the numerator, and zero is
/// 0/1. Structural equality therefore coincides with field equality.
///
/// Laurent monomials live here too: q^(-k) is stored as 1 / q^k.
class Scalar {
  public:
    Scalar() : num_(), den_(make_rational(1)) {}
    Scalar(long v) : num_(v), den_(make_rational(1)) {}  // NOLINT(runtime/explicit)
    explicit Scalar(const Rational& v) : num_(v), den_(make_rational(1)) {}
    explicit Scalar(const Poly& p) : num_(p), den_(make_rational(1)) {}
    Scalar(Poly num, Poly den);

    /// The variable q.
    static Scalar q();

    /// q^k for any integer k (negative exponents allowed).
    static Scalar q_pow(long k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    /// True iff the value lies in Q.
    bool is_rational() const { return den_.is_one() && num_.degree() <= 0; }
    Rational as_rational() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    /// Exact substitution q := q0; throws PoleError when den(q0) = 0.
    Rational evaluate_at(const Rational& q0) const;

    bool operator==(const Scalar& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Minimal-parenthesis text form using q^-1 style exponents; parsing the
    /// result reproduces the value exactly.
    std::string to_string() const;

  private:
    void normalize();
    Poly num_, den_;
};

/// Parses the scalar grammar: integer literals, the symbol q, binary
/// + - * /, ^ with a possibly negative integer exponent, unary minus and
/// parentheses. Reports syntax errors with their input position.
Scalar parse_scalar(const std::string& text);

inline std::string to_string(const Scalar& s) { return s.to_string(); }

}  // namespace qybe
