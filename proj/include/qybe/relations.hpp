#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qybe/matrix.hpp"
#include "qybe/ncpoly.hpp"

namespace qybe {

/// Finite set of noncommutative polynomial relations over a fixed generator
/// list. In canonical form every relation is monic in its deglex-leading
/// word, no relation is a Q(q)-combination of the others, leading words are
/// eliminated from all other relations, and the list is sorted by leading
/// word.
struct RelationSet {
    GeneratorSet generators;
    std::vector<NCPoly> relations;
    bool canonical = false;
};

/// Layout of the loop-generator matrix.
enum class Layout { Full, Diag };

Layout layout_from_name(const std::string& name);
std::string layout_name(Layout l);

/// Matrix of degree-1 generators from a grid of names (row-major); supports
/// non-square grids. Throws DomainError on duplicate names.
NCMatrix generator_matrix(const std::vector<std::vector<std::string>>& names,
                          GeneratorSet& gens_out);

/// n names placed on the diagonal of an n x n matrix (the diagonal layout is
/// always selected explicitly, never inferred from a loop count).
NCMatrix diagonal_generator_matrix(const std::vector<std::string>& names,
                                   GeneratorSet& gens_out);

/// RTT relation set of r against the loop-generator matrix t.
///
/// Full layout: the entries of R X1 X2 - X2 X1 R with X1 = I x T and
/// X2 = T x I under the pair index (this leg labelling reproduces the
/// standard quantum-matrix relations; the opposite labelling yields their
/// q <-> q^-1 mirror).
///
/// Diag layout: a diagonal T makes the matrix equation collapse to plain
/// commutators, so the relations are taken from the Hecke eigenvalue
/// condition (R - qI) w = 0, where w is the column of products t_i t_j.
RelationSet rtt_relations(const ExactMatrix& r, const NCMatrix& t,
                          const GeneratorSet& gens, Layout layout = Layout::Full);

/// Gaussian elimination over Q(q) on the word-indexed coefficient matrix;
/// span is unchanged and the result satisfies the canonical invariants.
RelationSet canonicalize(const RelationSet& s);

/// Faddeev-Reshetikhin-Takhtajan relations for O_q(M_n) on generators
/// t11..tnn: q-commuting rows and columns, cross commutation, and the
/// q-commutator with defect (q - q^-1).
RelationSet frt_relations(std::size_t n);

struct SpanComparison {
    bool equal = false;
    std::optional<NCPoly> witness;  // lies in one span but not the other
    int witness_side = 0;           // 1: only in s1's span, 2: only in s2's
};

/// Q(q)-linear span equality of the relation spaces. Generator lists must
/// agree.
SpanComparison span_equal(const RelationSet& s1, const RelationSet& s2);

/// Remainder of p after eliminating the leading words of a canonical set.
NCPoly reduce_against(const NCPoly& p, const RelationSet& canonical_set);

}  // namespace qybe
