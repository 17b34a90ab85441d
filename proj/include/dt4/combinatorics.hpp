#pragma once

#include <utility>
#include <vector>

#include "dt4/partition.hpp"
#include "dt4/rational.hpp"

namespace dt4 {

// A multiset of (d-1)-partitions xi with multiplicities m_xi >= 1 whose
// binary layers rebuild pi: pi(p) = sum_xi m_xi * xi-indicator(p).
struct Decomposition {
    std::vector<std::pair<DPartition, int>> layers;  // sorted, multiplicities > 0
};

// 1 iff the last coordinate of the point is <= the xi-entry at the
// leading coordinates.
int binary_indicator(const DPartition& xi, const std::vector<int>& point);

// The full finite set C_pi in a deterministic order. dim(pi) >= 2.
std::vector<Decomposition> decompositions(const DPartition& pi,
                                          long long cap = 1000000);

// omega^c_pi = sum over C_pi of prod 1/(m_xi)!; 1 for the empty partition.
Rat omega_c(const DPartition& pi);

}  // namespace dt4
