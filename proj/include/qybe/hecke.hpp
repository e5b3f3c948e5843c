#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qybe/matrix.hpp"

namespace qybe {

/// Rank-one Temperley-Lieb generator X = vec(b) vec(b^{-1})^T with
/// X^2 = mu X, mu = <vec(b^{-1}), vec(b)>.
struct TLGenerator {
    ExactMatrix matrix;  // n^2 x n^2
    Scalar mu;
    std::optional<std::pair<ExactMatrix, ExactMatrix>> source;  // (b, b_inv)
};

enum class Provenance { Kulish, StandardGlqn, Projection };

std::string provenance_name(Provenance p);

/// Candidate Hecke R-matrix together with the polynomial constraints in q
/// under which the Hecke identity holds (empty = unconditional).
struct HeckeCandidate {
    ExactMatrix matrix;                 // over Q(q)
    std::vector<Poly> q_constraints;    // monic, canonical
    Provenance provenance = Provenance::Kulish;
};

/// Kulish's recipe: X = vec(b) vec(b^{-1})^T for invertible b (entries may
/// lie in Q(q)); throws SingularError for singular b.
TLGenerator tl_from_b(const ExactMatrix& b);

/// R = q I + X. The Hecke identity factors as
/// (R - qI)(R + q^{-1}I) = (mu + q + q^{-1}) X, so the returned constraint is
/// the cleared monic numerator of mu + q + q^{-1} (empty when it vanishes
/// identically).
HeckeCandidate hecke_from_tl(const TLGenerator& x);

/// Standard GL_q(n) R-matrix: q on the (ii,ii) diagonal, 1 on (ij,ij) for
/// i != j, and q - q^{-1} at row (j,i), column (i,j) for i > j.
HeckeCandidate standard_r(std::size_t n);

/// R(q) = q P - q^{-1} (I - P) for an idempotent P; the Hecke identity holds
/// for every idempotent. Throws DomainError when P^2 != P.
HeckeCandidate projection_r(const ExactMatrix& p);

/// Tensor-factor swap on K^n x K^n under the pair index.
ExactMatrix flip(std::size_t n);

/// Both algebraic forms of the Hecke residual; they coincide identically:
/// (R - qI)(R + q^{-1}I) = R^2 - I - (q - q^{-1}) R.
struct HeckeDefect {
    ExactMatrix product_form;    // (R - qI)(R + q^{-1}I)
    ExactMatrix quadratic_form;  // R^2 - I - (q - q^{-1}) R
    bool zero = false;
};

HeckeDefect hecke_defect(const ExactMatrix& r);

/// Braid residual R12 R23 R12 - R23 R12 R23 over Q(q), R12 = R x I,
/// R23 = I x R; r must be n^2 x n^2.
ExactMatrix braid_defect_q(const ExactMatrix& r, std::size_t n);

/// Proportionality constant c with P12 P23 P12 = c P12. Throws DomainError
/// (with a witness position in the message) when not proportional.
Scalar tl_braid_scalar(const ExactMatrix& p, std::size_t n);

/// Special-q analysis for a rank-one TL generator: e = -(q + q^{-1}) X
/// satisfies the middle Temperley-Lieb relation iff alpha^2 c = 1 where
/// alpha = -mu (q + q^{-1}) and c = tl_braid_scalar(X / mu). When c = s^2 is
/// a rational square this yields the two monic constraints
/// q^2 +- (1 / (s mu)) q + 1; otherwise alpha_squared reports 1/c.
struct SpecialQResult {
    std::vector<Poly> constraints;          // sorted, monic
    std::optional<Rational> alpha_squared;  // set when c is not a rational square
};

SpecialQResult special_q_constraints(const TLGenerator& x);

/// Monic gcd of all defect-entry numerators: the largest single constraint
/// polynomial on which the defect vanishes. Returns 0 for the zero matrix
/// and 1 when the entries share no common root.
Poly defect_constraint_gcd(const ExactMatrix& defect);

}  // namespace qybe
