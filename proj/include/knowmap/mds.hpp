#pragma once

#include "knowmap/graph.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace knowmap {

struct MdsResult {
    std::vector<std::array<double, 2>> coords;
    double stress = 0;       // Frobenius residual of the rank-2 Gram reconstruction
    bool degenerate = false; // both leading eigenvalues below 1e-12
};

// Classical (Torgerson) MDS on a symmetric dissimilarity matrix: double-center
// the squared dissimilarities, take the top-2 eigenpairs by deterministic
// subspace iteration with fixed seeded start vectors, and orient each axis so
// its largest-magnitude coordinate is positive.
MdsResult classical_mds(const std::vector<std::vector<double>>& dissimilarity);

struct MdsLayout {
    std::map<std::string, std::array<double, 2>> points;
    double stress = 0;
    bool degenerate = false;
};

// Dissimilarity d(a,b) = 1 - AS(a,b), association strength
// AS = weight * N / (occ_a * occ_b) clamped to [0,1], N = corpus documents;
// non-adjacent pairs sit at d = 1.
MdsLayout mds_layout(const WeightedGraph& graph);

} // namespace knowmap
