#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qybe/matrix.hpp"

namespace qybe {

enum class QuiverMode { Simple, Loops, Multi, Weighted };

std::string mode_name(QuiverMode m);
QuiverMode mode_from_name(const std::string& name);

struct Arrow {
    std::string src;
    std::string dst;
    Scalar weight;
    std::string name;  // optional; auto-assigned as e1, e2, ... when empty
};

/// Finite weighted directed multigraph with named vertices. A weight of zero
/// is disallowed; absence of an arrow encodes zero. Parallel arrows are kept
/// in the arrow list and summed in the adjacency matrix.
class Quiver {
  public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
           QuiverMode mode = QuiverMode::Weighted);

    /// Quiver with adjacency matrix a and vertices named v1..vn.
    static Quiver from_adjacency(const ExactMatrix& a,
                                 QuiverMode mode = QuiverMode::Weighted);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    QuiverMode mode() const { return mode_; }

    std::size_t vertex_index(const std::string& name) const;
    std::size_t num_vertices() const { return vertices_.size(); }

    /// adjacency[i][j] = sum of weights of arrows i -> j.
    ExactMatrix adjacency() const;

    /// Loops at the given vertex, in declaration order.
    std::vector<const Arrow*> loops_at(const std::string& vertex) const;

    /// Out-degree counted with multiplicity (regular vertex test for CK2).
    std::size_t out_degree(std::size_t vertex) const;

  private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    QuiverMode mode_ = QuiverMode::Weighted;
};

/// Kronecker square: vertices are ordered pairs [u,v], arrows are pairs
/// [e,f] with s([e,f]) = [s(e),s(f)], r([e,f]) = [r(e),r(f)] and weight
/// w(e)w(f); the adjacency matrix is A x A under the pair-index order.
Quiver kronecker_square(const Quiver& q);

/// Verdict of the quantum Yang-Baxter test for a quiver.
struct QybeReport {
    bool holds = false;
    std::optional<Scalar> mu;           // present when A^2 = mu A
    bool mu_degenerate = false;         // zero adjacency convention mu = 0
    bool a3_nonzero = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // defect entry
};

/// Exact braid-form test on X = A x A, with the A^2 = mu A shortcut computed
/// alongside; the two routes must agree whenever A^3 != 0.
QybeReport satisfies_qybe(const Quiver& q);

struct ComponentInfo {
    std::vector<std::string> vertices;
    ExactMatrix block;
    bool rank_one = false;
    std::optional<std::vector<Scalar>> a_vector;  // block = a a^T when present
    std::optional<Scalar> mu;                     // block^2 = mu block
    bool complete_weighted = false;
};

struct Classification {
    std::vector<ComponentInfo> components;  // nontrivial connected components
    std::vector<std::string> isolated;
    std::optional<Scalar> global_mu;
    std::vector<std::string> vertex_order;  // component vertices then isolated
};

/// Structural classification of a quiver with symmetric adjacency: connected
/// components, per-block rank-one data and mu, completeness, global mu.
/// Throws DomainError on non-symmetric adjacency.
Classification classify(const Quiver& q);

/// Quiver of a groupoid given per-component automorphism-group sizes: each
/// component contributes the block 1 * g^T (entry (i, j) = g_j).
Quiver groupoid_quiver(const std::vector<std::vector<long>>& components);

}  // namespace qybe
