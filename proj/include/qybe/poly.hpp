#pragma once

#include <string>
#include <vector>

#include "qybe/rational.hpp"

namespace qybe {

/// Dense univariate polynomial over Q in the formal parameter q.
///
/// Coefficients are stored in ascending degree order; the leading coefficient
/// is nonzero (the zero polynomial has an empty coefficient vector).
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rational& constant);
    explicit Poly(long constant) : Poly(make_rational(constant)) {}

    /// Polynomial from ascending coefficients; trailing zeros are trimmed.
    static Poly from_coeffs(std::vector<Rational> coeffs);

    /// The variable q.
    static Poly variable();

    /// c * q^k, k >= 0.
    static Poly monomial(const Rational& c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& leading() const;
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// True iff the polynomial is c * q^k for some single k.
    bool is_monomial() const;
    bool is_monic() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    /// Exact division; throws if the remainder is nonzero.
    Poly operator/(const Poly& d) const;

    Poly pow(unsigned long e) const;

    /// Scaled so the leading coefficient is 1; zero stays zero.
    Poly monic() const;

    Rational eval(const Rational& q0) const;

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Deterministic order for sorting constraint lists: by degree, then by
    /// coefficients from the top.
    static int compare(const Poly& a, const Poly& b);

    std::string to_string() const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd in Q[q] (Euclidean algorithm); gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace qybe
