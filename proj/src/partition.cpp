#include "dt4/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dt4 {

DPartition::DPartition(int dim, std::map<Index, int> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1) throw ParseError("partition dimension must be >= 1");
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (it->second == 0)
            it = entries_.erase(it);
        else
            ++it;
    }
    validate();
}

void DPartition::validate() const {
    for (const auto& [p, v] : entries_) {
        if (static_cast<int>(p.size()) != dim_)
            throw ParseError("entry index arity does not match dim");
        if (v < 0) throw ParseError("negative partition entry");
        for (int x : p)
            if (x < 1) throw ParseError("partition indices are 1-based");
        // Non-increase along every axis: predecessor >= this entry.
        for (int ax = 0; ax < dim_; ++ax) {
            if (p[ax] == 1) continue;
            Index q = p;
            --q[ax];
            if (entry(q) < v) throw ParseError("partition entries not monotone");
        }
    }
}

long long DPartition::size() const {
    long long s = 0;
    for (const auto& [p, v] : entries_) s += v;
    return s;
}

int DPartition::height() const {
    return entry(Index(dim_, 1));
}

int DPartition::entry(const Index& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

std::vector<DPartition::Cell> DPartition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<size_t>(size()));
    for (const auto& [p, v] : entries_)
        for (int l = 1; l <= v; ++l) {
            Cell c = p;
            c.push_back(l);
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end());
    return out;
}

DPartition DPartition::from_cells(int dim, const std::vector<Cell>& cells) {
    std::map<Index, int> entries;
    for (const auto& c : cells) {
        if (static_cast<int>(c.size()) != dim + 1)
            throw ParseError("cell arity does not match dim+1");
        for (int x : c)
            if (x < 1) throw ParseError("cell coordinates are 1-based");
        Index p(c.begin(), c.end() - 1);
        entries[p] = std::max(entries[p], c.back());
    }
    // The l-range at each index must be contiguous from 1, i.e. the cell
    // count at p must equal the recorded maximum.
    std::map<Index, int> counts;
    for (const auto& c : cells) {
        Index p(c.begin(), c.end() - 1);
        ++counts[p];
    }
    for (const auto& [p, v] : entries)
        if (counts[p] != v) throw ParseError("cell list is not an order ideal");
    return DPartition(dim, std::move(entries));  // validates monotonicity
}

std::string DPartition::canonical_key() const {
    std::ostringstream os;
    os << dim_ << '|';
    bool first = true;
    for (const auto& c : cells()) {
        if (!first) os << ';';
        first = false;
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ',';
            os << c[i];
        }
    }
    return os.str();
}

DPartition partition_from_key(const std::string& key) {
    auto bar = key.find('|');
    if (bar == std::string::npos) throw ParseError("bad partition key");
    int dim = std::stoi(key.substr(0, bar));
    std::vector<DPartition::Cell> cells;
    std::string rest = key.substr(bar + 1);
    std::istringstream cs(rest);
    std::string cell;
    while (std::getline(cs, cell, ';')) {
        if (cell.empty()) continue;
        DPartition::Cell c;
        std::istringstream xs(cell);
        std::string x;
        while (std::getline(xs, x, ',')) c.push_back(std::stoi(x));
        cells.push_back(std::move(c));
    }
    return DPartition::from_cells(dim, cells);
}

bool DPartition::operator<(const DPartition& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    return cells() < o.cells();
}

namespace {

// Recursive extension over box positions in lex order. The value at a
// position is capped by its axis predecessors, all of which are
// lex-earlier, so monotonicity holds by construction.
struct Enumerator {
    int dim;
    int target;
    long long cap;
    std::vector<DPartition::Index> positions;
    std::map<DPartition::Index, int> current;
    std::vector<DPartition>* out;

    void run() {
        build_positions();
        recurse(0, target);
    }

    void build_positions() {
        int side = std::max(target, 1);
        DPartition::Index p(dim, 1);
        while (true) {
            positions.push_back(p);
            int ax = dim - 1;
            while (ax >= 0 && p[ax] == side) {
                p[ax] = 1;
                --ax;
            }
            if (ax < 0) break;
            ++p[ax];
        }
    }

    int upper_bound(const DPartition::Index& p, int remaining) const {
        int ub = remaining;
        for (int ax = 0; ax < dim; ++ax) {
            if (p[ax] == 1) continue;
            DPartition::Index q = p;
            --q[ax];
            auto it = current.find(q);
            ub = std::min(ub, it == current.end() ? 0 : it->second);
            if (ub == 0) break;
        }
        return ub;
    }

    void recurse(size_t idx, int remaining) {
        if (remaining == 0) {
            emit();
            return;
        }
        if (idx == positions.size()) return;
        const auto& p = positions[idx];
        int ub = upper_bound(p, remaining);
        for (int v = ub; v >= 1; --v) {
            current[p] = v;
            recurse(idx + 1, remaining - v);
        }
        current.erase(p);
        recurse(idx + 1, remaining);
    }

    void emit() {
        if (static_cast<long long>(out->size()) >= cap)
            throw ResourceLimitError("partition enumeration exceeded cap");
        out->emplace_back(dim, current);
    }
};

}  // namespace

std::vector<DPartition> enumerate_partitions(int dim, int size, long long cap) {
    if (dim < 1) throw ParseError("dim must be >= 1");
    if (size < 0) throw ParseError("size must be >= 0");
    std::vector<DPartition> out;
    if (size == 0) {
        out.emplace_back(dim);
        return out;
    }
    Enumerator e{dim, size, cap, {}, {}, &out};
    e.run();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dt4
