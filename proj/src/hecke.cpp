#include "qybe/hecke.hpp"

#include <algorithm>
#include <cmath>

#include "qybe/errors.hpp"

namespace qybe {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Kulish: return "kulish";
        case Provenance::StandardGlqn: return "standard_glqn";
        case Provenance::Projection: return "projection";
    }
    return "kulish";
}

TLGenerator tl_from_b(const ExactMatrix& b) {
    if (!b.is_square()) throw ShapeError("tl_from_b needs a square matrix");
    ExactMatrix b_inv = b.inverse();
    ExactMatrix u = b.vec();
    ExactMatrix v = b_inv.vec();
    TLGenerator x;
    x.matrix = u * v.transpose();
    Scalar mu(0);
    for (std::size_t k = 0; k < u.rows(); ++k) mu += v.at(k, 0) * u.at(k, 0);
    x.mu = mu;
    x.source = std::make_pair(b, b_inv);
    return x;
}

HeckeCandidate hecke_from_tl(const TLGenerator& x) {
    std::size_t n = x.matrix.rows();
    HeckeCandidate cand;
    cand.matrix = ExactMatrix::identity(n) * Scalar::q() + x.matrix;
    cand.provenance = Provenance::Kulish;
    // (R - qI)(R + q^-1 I) = (mu + q + q^-1) X: Hecke iff the factor vanishes.
    Scalar factor = x.mu + Scalar::q() + Scalar::q_pow(-1);
    if (!factor.is_zero()) cand.q_constraints.push_back(factor.num().monic());
    return cand;
}

HeckeCandidate standard_r(std::size_t n) {
    if (n < 1) throw DomainError("standard_r needs n >= 1");
    ExactMatrix r(n * n, n * n);
    Scalar lambda = Scalar::q() - Scalar::q_pow(-1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t d = pair_index(i, j, n);
            r.at(d, d) = i == j ? Scalar::q() : Scalar(1);
            if (i > j) r.at(pair_index(j, i, n), pair_index(i, j, n)) = lambda;
        }
    return {r, {}, Provenance::StandardGlqn};
}

HeckeCandidate projection_r(const ExactMatrix& p) {
    if (!p.is_square()) throw ShapeError("projection_r needs a square matrix");
    if (p * p != p) throw DomainError("projection_r needs an idempotent matrix");
    ExactMatrix id = ExactMatrix::identity(p.rows());
    HeckeCandidate cand;
    cand.matrix = p * Scalar::q() - (id - p) * Scalar::q_pow(-1);
    cand.provenance = Provenance::Projection;
    return cand;
}

ExactMatrix flip(std::size_t n) {
    ExactMatrix f(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            f.at(pair_index(j, i, n), pair_index(i, j, n)) = Scalar(1);
    return f;
}

HeckeDefect hecke_defect(const ExactMatrix& r) {
    if (!r.is_square()) throw ShapeError("hecke_defect needs a square matrix");
    ExactMatrix id = ExactMatrix::identity(r.rows());
    Scalar q = Scalar::q();
    Scalar qi = Scalar::q_pow(-1);
    HeckeDefect d;
    d.product_form = (r - id * q) * (r + id * qi);
    d.quadratic_form = r * r - id - r * (q - qi);
    if (d.product_form != d.quadratic_form)
        throw Error("internal inconsistency: the two Hecke residual forms differ");
    d.zero = d.product_form.is_zero();
    return d;
}

ExactMatrix braid_defect_q(const ExactMatrix& r, std::size_t n) {
    return braid_defect(r, n);
}

Scalar tl_braid_scalar(const ExactMatrix& p, std::size_t n) {
    if (!p.is_square() || p.rows() != n * n)
        throw ShapeError("tl_braid_scalar: matrix must be n^2 x n^2");
    ExactMatrix id = ExactMatrix::identity(n);
    ExactMatrix p12 = kron(p, id);
    ExactMatrix p23 = kron(id, p);
    ExactMatrix triple = p12 * p23 * p12;
    auto nz = p12.first_nonzero();
    if (!nz) throw DomainError("tl_braid_scalar of the zero matrix");
    Scalar c = triple.at(nz->first, nz->second) / p12.at(nz->first, nz->second);
    ExactMatrix residual = triple - p12 * c;
    if (auto bad = residual.first_nonzero())
        throw DomainError("P12 P23 P12 is not proportional to P12; witness entry (" +
                          std::to_string(bad->first) + ", " +
                          std::to_string(bad->second) + ")");
    return c;
}

SpecialQResult special_q_constraints(const TLGenerator& x) {
    if (x.matrix.rank() != 1)
        throw DomainError("special_q_constraints needs a rank-one generator");
    if (x.mu.is_zero())
        throw DomainError("special_q_constraints needs mu != 0");
    if (!x.mu.is_rational())
        throw DomainError("special_q_constraints expects a rational mu");
    std::size_t n2 = x.matrix.rows();
    auto n = static_cast<std::size_t>(std::lround(std::sqrt(double(n2))));
    if (n * n != n2) throw ShapeError("TL generator must be n^2 x n^2");

    ExactMatrix p = x.matrix * x.mu.inverse();
    Scalar c = tl_braid_scalar(p, n);
    if (!c.is_rational() || c.as_rational() <= 0)
        throw DomainError("braid scalar of P is not a positive rational");

    SpecialQResult res;
    Rational mu = x.mu.as_rational();
    auto s = rational_sqrt(c.as_rational());
    if (!s) {
        // alpha^2 = 1/c is not a rational square; report it symbolically.
        res.alpha_squared = 1 / c.as_rational();
        return res;
    }
    // e = alpha P with alpha = -mu (q + q^-1); the middle TL relation forces
    // alpha^2 c = 1, i.e. -mu (q + q^-1) = +- 1/s. Cleared and made monic in q:
    // q^2 +- (1 / (s mu)) q + 1.
    Rational t = 1 / (*s * mu);
    for (const Rational& sign : {Rational(t), Rational(-t)}) {
        Poly constraint = Poly::from_coeffs(
            {make_rational(1), sign, make_rational(1)});
        res.constraints.push_back(constraint);
    }
    std::sort(res.constraints.begin(), res.constraints.end(),
              [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
    return res;
}

Poly defect_constraint_gcd(const ExactMatrix& defect) {
    Poly g;
    for (std::size_t i = 0; i < defect.rows(); ++i)
        for (std::size_t j = 0; j < defect.cols(); ++j) {
            const Scalar& e = defect.at(i, j);
            if (e.is_zero()) continue;
            g = poly_gcd(g, e.num());
            if (g.degree() == 0) return g;  // no common root
        }
    return g;
}

}  // namespace qybe
