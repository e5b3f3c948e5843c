#include "qybe/matrix.hpp"

#include <array>
#include <sstream>

#include "qybe/errors.hpp"

namespace qybe {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return ExactMatrix();
    ExactMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw ShapeError("ragged row in matrix literal");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> ExactMatrix::first_nonzero() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("matrix addition shape mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    return *this + (-o);
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_)
        throw ShapeError("matrix product shape mismatch: " + std::to_string(rows_) +
                         "x" + std::to_string(cols_) + " * " +
                         std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    ExactMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

ExactMatrix ExactMatrix::operator*(const Scalar& c) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * c;
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ExactMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

ExactMatrix ExactMatrix::evaluate_at(const Rational& q0) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] = Scalar(entries_[k].evaluate_at(q0));
    return r;
}

ExactMatrix ExactMatrix::vec() const {
    ExactMatrix r(rows_ * cols_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i * cols_ + j, 0) = at(i, j);
    return r;
}

std::size_t ExactMatrix::rank() const {
    ExactMatrix work = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(work.at(pivot, j), work.at(rank, j));
        Scalar inv = work.at(rank, col).inverse();
        for (std::size_t j = col; j < cols_; ++j)
            work.at(rank, j) = work.at(rank, j) * inv;
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            Scalar f = work.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < cols_; ++j)
                work.at(i, j) = work.at(i, j) - f * work.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

ExactMatrix ExactMatrix::inverse() const {
    if (!is_square()) throw ShapeError("inverse of a non-square matrix");
    std::size_t n = rows_;
    ExactMatrix work = *this;
    ExactMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularError("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Scalar s = work.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) = work.at(col, j) * s;
            inv.at(col, j) = inv.at(col, j) * s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Scalar f = work.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) = work.at(i, j) - f * work.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string();
        }
        out << "]\n";
    }
    return out.str();
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& f = a.at(i, j);
            if (f.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Scalar& g = b.at(k, l);
                    if (g.is_zero()) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = f * g;
                }
        }
    return r;
}

MuResult tl_scalar(const ExactMatrix& m) {
    if (!m.is_square()) throw ShapeError("tl_scalar needs a square matrix");
    MuResult res;
    auto nz = m.first_nonzero();
    if (!nz) {
        res.exists = true;
        res.mu = Scalar(0);
        res.degenerate = true;
        return res;
    }
    ExactMatrix sq = m * m;
    // mu is forced by the ratio at any nonzero entry of m; verify everywhere.
    Scalar mu = sq.at(nz->first, nz->second) / m.at(nz->first, nz->second);
    if (sq == m * mu) {
        res.exists = true;
        res.mu = mu;
    }
    return res;
}

std::optional<RankOneFactors> rank_one_factor(const ExactMatrix& m) {
    if (!m.is_square()) throw ShapeError("rank_one_factor needs a square matrix");
    auto nz = m.first_nonzero();
    if (!nz) return std::nullopt;  // zero matrix has rank 0
    if (m.rank() != 1) return std::nullopt;
    std::size_t r0 = nz->first, c0 = nz->second;
    std::size_t n = m.rows();
    ExactMatrix u(n, 1), v(n, 1);
    Scalar base = m.at(r0, c0);
    for (std::size_t i = 0; i < n; ++i) u.at(i, 0) = m.at(i, c0) / base;
    for (std::size_t j = 0; j < n; ++j) v.at(j, 0) = m.at(r0, j);
    RankOneFactors out{u, v, false};
    if (m.is_symmetric()) {
        // v = lambda u; a rational square root of lambda gives the a a^T form.
        Scalar lambda = m.at(r0, r0);
        if (lambda.is_rational()) {
            if (auto s = rational_sqrt(lambda.as_rational()); s && *s != 0) {
                ExactMatrix a(n, 1);
                for (std::size_t i = 0; i < n; ++i)
                    a.at(i, 0) = u.at(i, 0) * Scalar(*s);
                out.u = a;
                out.v = a;
                out.symmetric_form = true;
            }
        }
    }
    return out;
}

Scalar kron_proportionality(const ExactMatrix& x, const ExactMatrix& y,
                            const ExactMatrix& u, const ExactMatrix& v) {
    if (x.is_zero() || y.is_zero() || u.is_zero() || v.is_zero())
        throw DomainError("kron_proportionality needs nonzero matrices");
    if (kron(x, y) != kron(u, v))
        throw DomainError("kron_proportionality hypothesis fails: X x Y != U x V");
    auto nz = u.first_nonzero();
    Scalar lambda = x.at(nz->first, nz->second) / u.at(nz->first, nz->second);
    if (x != u * lambda || y != v * lambda.inverse())
        throw DomainError("kron_proportionality witness verification failed");
    return lambda;
}

ExactMatrix braid_defect(const ExactMatrix& x, std::size_t n) {
    if (!x.is_square() || x.rows() != n * n)
        throw ShapeError("braid_defect: matrix must be n^2 x n^2");
    ExactMatrix id = ExactMatrix::identity(n);
    ExactMatrix x12 = kron(x, id);
    ExactMatrix x23 = kron(id, x);
    return x12 * x23 * x12 - x23 * x12 * x23;
}

ExactMatrix triple_kron_defect(const ExactMatrix& a) {
    if (!a.is_square()) throw ShapeError("triple_kron_defect needs a square matrix");
    ExactMatrix a2 = a * a;
    ExactMatrix a3 = a2 * a;
    return kron(kron(a2, a3), a) - kron(kron(a, a3), a2);
}

std::optional<std::array<std::size_t, 4>> four_cycle_violation(const ExactMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (std::size_t r2 = r; r2 < m.rows(); ++r2)
                for (std::size_t c2 = c; c2 < m.cols(); ++c2)
                    if (m.at(r, c) * m.at(r2, c2) != m.at(r, c2) * m.at(r2, c))
                        return std::array<std::size_t, 4>{r, c, r2, c2};
    return std::nullopt;
}

}  // namespace qybe
