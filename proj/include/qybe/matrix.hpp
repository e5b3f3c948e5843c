#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qybe/scalar.hpp"

namespace qybe {

/// Row-major flattening of the pair (i, j), 0 <= i, j < n. This fixes the
/// basis order {e1 x e1, e1 x e2, ..., en x en} used by every tensor-space
/// matrix in the library.
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    return i * n + j;
}

/// Dense matrix over Q(q). Zero entries are stored as canonical zeros; there
/// is no sparse mode.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    /// Builds from nested initializer-style data (rows of entries).
    static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator*(const Scalar& c) const;
    ExactMatrix operator-() const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix transpose() const;
    bool is_symmetric() const;

    /// Entry-wise substitution q := q0 (throws PoleError on a pole).
    ExactMatrix evaluate_at(const Rational& q0) const;

    /// Row-major vectorization as an n*m x 1 column.
    ExactMatrix vec() const;

    /// Rank over Q(q) by Gaussian elimination.
    std::size_t rank() const;

    /// Inverse over Q(q); throws SingularError when singular.
    ExactMatrix inverse() const;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> entries_;
};

/// Exact matrix product (same as operator*, named per the interface).
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

/// Kronecker product, block form [a_ij * b].
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Result of the Temperley-Lieb scalar test m^2 = mu * m.
struct MuResult {
    bool exists = false;
    Scalar mu;
    bool degenerate = false;  // set when m is the zero matrix (mu = 0 by convention)
};

/// Finds the unique mu with m^2 = mu * m when it exists (m nonzero); the zero
/// matrix yields mu = 0 with the degenerate flag set.
MuResult tl_scalar(const ExactMatrix& m);

/// Rank-one factorization m = u * v^T.
struct RankOneFactors {
    ExactMatrix u;  // column
    ExactMatrix v;  // column
    bool symmetric_form = false;  // v == u (the a * a^T normal form)
};

/// Returns u, v with m = u v^T when rank(m) = 1, u's first nonzero entry 1.
/// For symmetric m whose scaling admits a rational square root the symmetric
/// normal form u = v is returned instead. None when rank(m) != 1.
std::optional<RankOneFactors> rank_one_factor(const ExactMatrix& m);

/// Witness scalar for kron(x, y) = kron(u, v): the lambda with x = lambda u
/// and y = lambda^{-1} v. Throws DomainError when the hypothesis fails.
Scalar kron_proportionality(const ExactMatrix& x, const ExactMatrix& y,
                            const ExactMatrix& u, const ExactMatrix& v);

/// Braid-form defect (X x I)(I x X)(X x I) - (I x X)(X x I)(I x X) for an
/// n^2 x n^2 matrix x; zero iff x satisfies the quantum Yang-Baxter equation
/// in braid form.
ExactMatrix braid_defect(const ExactMatrix& x, std::size_t n);

/// Defect of A^2 x A^3 x A = A x A^3 x A^2 for square A.
ExactMatrix triple_kron_defect(const ExactMatrix& a);

/// Four-cycle identity check for adjacency matrices on pair-indexed vertex
/// sets: m[(i,j),(k,l)] * m[(i',j'),(k',l')] = m[(i,j),(k',l')] * m[(i',j'),(k,l)].
/// Returns a violating index quadruple ((row, col), (row', col')) or none.
std::optional<std::array<std::size_t, 4>> four_cycle_violation(const ExactMatrix& m);

}  // namespace qybe
