#pragma once

#include <random>

#include "qybe/matrix.hpp"

namespace qybe::testutil {

// Fixed default seed; override with QYBE_TEST_SEED for exploratory runs.
inline std::uint64_t test_seed() {
    if (const char* env = std::getenv("QYBE_TEST_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 20240915ull;
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(engine_);
    }

    Rational rational(long max_abs = 6, long max_den = 4) {
        long num = integer(-max_abs, max_abs);
        long den = integer(1, max_den);
        return make_rational(num, den);
    }

    Rational nonzero_rational(long max_abs = 6, long max_den = 4) {
        for (;;) {
            Rational r = rational(max_abs, max_den);
            if (r != 0) return r;
        }
    }

    Poly poly(int max_deg = 3, long max_abs = 4) {
        std::vector<Rational> c;
        int deg = static_cast<int>(integer(0, max_deg));
        for (int k = 0; k <= deg; ++k) c.push_back(rational(max_abs, 3));
        return Poly::from_coeffs(std::move(c));
    }

    Scalar scalar(int max_deg = 3) {
        Poly num = poly(max_deg);
        Poly den;
        do {
            den = poly(max_deg);
        } while (den.is_zero());
        return Scalar(num, den);
    }

    Scalar nonzero_scalar(int max_deg = 3) {
        for (;;) {
            Scalar s = scalar(max_deg);
            if (!s.is_zero()) return s;
        }
    }

    ExactMatrix rational_matrix(std::size_t rows, std::size_t cols,
                                long max_abs = 4) {
        ExactMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = Scalar(rational(max_abs, 3));
        return m;
    }

    /// Symmetric rank-one block a a^T from a random nonzero integer vector.
    ExactMatrix rank_one_block(std::size_t n, long max_abs = 3) {
        std::vector<long> a(n);
        bool nonzero = false;
        while (!nonzero)
            for (auto& x : a) {
                x = integer(-max_abs, max_abs);
                nonzero = nonzero || x != 0;
            }
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = Scalar(make_rational(a[i] * a[j]));
        return m;
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace qybe::testutil
