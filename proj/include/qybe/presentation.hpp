#pragma once

#include <map>
#include <string>
#include <vector>

#include "qybe/quiver.hpp"
#include "qybe/relations.hpp"

namespace qybe {

/// RTT data attached to a vertex: the R-matrix acting on the loop space and
/// the declared layout of the loop-generator matrix.
struct RttAssignment {
    ExactMatrix r;
    Layout layout = Layout::Full;
};

/// Generators and grouped relations of a Leavitt path algebra presentation,
/// optionally enriched with RTT relation groups at assigned vertices.
struct Presentation {
    GeneratorSet generators;              // vertices, edges, ghosts
    std::vector<std::string> vertices;
    std::vector<std::string> edges;
    std::vector<std::string> ghosts;
    std::vector<NCPoly> relations;
    std::map<std::string, std::vector<std::size_t>> groups;  // path/CK1/CK2/RTT

    std::string to_text() const;
};

/// Leavitt path algebra presentation of the double quiver modulo the
/// Cuntz-Krieger relations, with the RTT relation group per assigned vertex:
/// vertex idempotents and path relations, CK1 for every ghost/edge pair, CK2
/// at regular vertices. Full layout needs a square loop count, diagonal uses
/// the loop count directly; either way the assigned R must match the loop
/// space. Ordering is deterministic.
Presentation leavitt_presentation(
    const Quiver& q, const std::map<std::string, RttAssignment>& r_assignments);

}  // namespace qybe
