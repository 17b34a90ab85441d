#pragma once

#include <map>
#include <string>
#include <vector>

#include "dt4/errors.hpp"

namespace dt4 {

// A d-dimensional partition: finitely many positive entries indexed by
// d-tuples of positive integers, non-increasing along every axis. d = 3
// is a solid partition; d = 2 a plane partition; d = 1 an ordinary one.
//
// Equivalently, the cell set {(p, l) : 1 <= l <= entry(p)} is a finite
// order ideal in Z_{>=1}^{d+1}; that cell list is the interchange form.
class DPartition {
public:
    using Index = std::vector<int>;  // length dim, 1-based
    using Cell = std::vector<int>;   // length dim+1, 1-based

    explicit DPartition(int dim) : dim_(dim) {
        if (dim < 1) throw ParseError("partition dimension must be >= 1");
    }
    DPartition(int dim, std::map<Index, int> entries);

    static DPartition from_cells(int dim, const std::vector<Cell>& cells);

    int dim() const { return dim_; }
    long long size() const;
    // Entry at the all-ones index; 0 for the empty partition.
    int height() const;
    int entry(const Index& p) const;
    bool empty() const { return entries_.empty(); }
    const std::map<Index, int>& entries() const { return entries_; }

    // All (dim+1)-tuples (p, l) with 1 <= l <= entry(p), sorted lex.
    std::vector<Cell> cells() const;

    // Injective, platform-stable serialization of the sorted cell list.
    std::string canonical_key() const;

    bool operator==(const DPartition& o) const {
        return dim_ == o.dim_ && entries_ == o.entries_;
    }
    bool operator<(const DPartition& o) const;

private:
    void validate() const;

    int dim_;
    std::map<Index, int> entries_;
};

// All partitions of the given dimension and size, exactly once, sorted by
// their cell lists. Throws ResourceLimitError past the cap.
std::vector<DPartition> enumerate_partitions(int dim, int size,
                                             long long cap = 1000000);

// Inverse of canonical_key.
DPartition partition_from_key(const std::string& key);

}  // namespace dt4
