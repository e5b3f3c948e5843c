#pragma once

#include <map>
#include <string>
#include <vector>

#include "qybe/matrix.hpp"

namespace qybe {

/// Ordered list of generator names; words index into it.
class GeneratorSet {
  public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t index(const std::string& name) const;

    bool operator==(const GeneratorSet& o) const { return names_ == o.names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

/// Word in the free monoid on the generators; empty = unit monomial.
using Word = std::vector<std::size_t>;

/// Degree-lexicographic order: shorter words first, then left-to-right by
/// generator index.
int word_compare(const Word& a, const Word& b);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        return word_compare(a, b) < 0;
    }
};

/// Noncommutative polynomial over Q(q) in named generators. Terms map words
/// to nonzero coefficients; values are immutable in spirit (all operations
/// return new polynomials).
class NCPoly {
  public:
    NCPoly() = default;
    static NCPoly constant(const Scalar& c);
    static NCPoly generator(std::size_t index);
    static NCPoly monomial(const Scalar& c, Word w);

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    int degree() const;

    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }
    Scalar coeff(const Word& w) const;

    /// Deglex-smallest word (the leading word for canonical forms).
    const Word& leading_word() const;

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;  // word concatenation
    NCPoly operator*(const Scalar& c) const;
    NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    /// Kills every term containing one of the listed generators.
    NCPoly substitute_zero(const std::vector<std::size_t>& gens) const;

    /// Image under letting all generators commute (words become sorted).
    NCPoly abelianization() const;

    /// Rendering against a generator set. Words are concatenated when every
    /// name is a single character, otherwise joined with spaces; composite
    /// Q(q) coefficients are parenthesized.
    std::string to_string(const GeneratorSet& gens) const;

  private:
    std::map<Word, Scalar, WordLess> terms_;
};

/// Dense matrix over NCPoly, used to expand the RTT products.
class NCMatrix {
  public:
    NCMatrix() = default;
    NCMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static NCMatrix identity(std::size_t n);
    static NCMatrix from_scalar(const ExactMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const NCPoly& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    NCPoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    NCMatrix operator*(const NCMatrix& o) const;
    NCMatrix operator-(const NCMatrix& o) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<NCPoly> entries_;
};

/// Kronecker product of NC matrices (entries multiply in argument order).
NCMatrix nc_kron(const NCMatrix& a, const NCMatrix& b);

}  // namespace qybe
