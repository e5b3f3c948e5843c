#include "qybe/poly.hpp"

#include <sstream>

#include "qybe/errors.hpp"

namespace qybe {

Poly::Poly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::variable() { return monomial(make_rational(1), 1); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, make_rational(0));
        p.coeffs_[k] = c;
    }
    return p;
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Rational& Poly::leading() const {
    static const Rational zero;
    return coeffs_.empty() ? zero : coeffs_.back();
}

Rational Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : make_rational(0);
}

bool Poly::is_monomial() const {
    if (coeffs_.empty()) return false;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, make_rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw SingularError("polynomial division by zero");
    Poly quot;
    Poly rem = *this;
    if (rem.degree() >= d.degree())
        quot.coeffs_.assign(rem.degree() - d.degree() + 1, make_rational(0));
    const Rational& lead = d.leading();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        std::size_t shift = rem.degree() - d.degree();
        Rational factor = rem.leading() / lead;
        quot.coeffs_[shift] = factor;
        rem = rem - d * Poly::monomial(factor, shift);
    }
    quot.trim();
    return {quot, rem};
}

Poly Poly::operator/(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

Poly Poly::pow(unsigned long e) const {
    Poly r(make_rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / leading());
}

Rational Poly::eval(const Rational& q0) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q0 + *it;
    return acc;
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int k = a.degree(); k >= 0; --k) {
        const Rational ca = a.coeff(k), cb = b.coeff(k);
        if (ca != cb) return ca < cb ? -1 : 1;
    }
    return 0;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        Rational mag = neg ? Rational(-c) : c;
        if (k == 0) {
            out << qybe::to_string(mag);
        } else {
            if (mag != 1) out << qybe::to_string(mag) << "*";
            out << "q";
            if (k != 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = y;
        y = r.monic();  // keeps coefficient growth in check
    }
    return x.monic();
}

}  // namespace qybe
