#pragma once

#include <string>
#include <vector>

#include "qybe/quiver.hpp"

namespace qybe {

/// One graph for which the A^2 = mu A route and the structural
/// characterization disagree (expected never).
struct CensusCounterexample {
    std::size_t vertices;
    std::vector<long> adjacency;  // row-major
    bool tl_holds;
    bool structure_holds;
};

struct CensusReport {
    QuiverMode mode = QuiverMode::Simple;
    std::size_t max_vertices = 0;
    std::size_t graphs_checked = 0;
    std::size_t satisfying = 0;
    std::vector<CensusCounterexample> counterexamples;
};

/// Enumerates every graph of the mode on 1..max_vertices vertices and checks
/// the structural characterization of A^2 = mu A exactly:
///   simple: only edgeless graphs qualify;
///   loops:  disjoint unions of equal-size complete-with-loops blocks plus
///           isolated vertices;
///   multi:  symmetric blocks of rank one with equal trace (edge
///           multiplicities up to 2), plus isolated vertices.
/// Cost guards: simple <= 6, loops <= 5, multi <= 4 vertices.
CensusReport census_check(std::size_t max_vertices, QuiverMode mode);

}  // namespace qybe
