#include "dt4/combinatorics.hpp"

#include <algorithm>

namespace dt4 {

int binary_indicator(const DPartition& xi, const std::vector<int>& point) {
    if (static_cast<int>(point.size()) != xi.dim() + 1)
        throw ParseError("indicator point arity must be dim+1");
    std::vector<int> lead(point.begin(), point.end() - 1);
    return point.back() <= xi.entry(lead) ? 1 : 0;
}

namespace {

// Support depth of pi along its last axis: a (d-1)-partition bounding
// every layer that can appear in a decomposition.
DPartition support_profile(const DPartition& pi) {
    std::map<DPartition::Index, int> prof;
    for (const auto& [p, v] : pi.entries()) {
        DPartition::Index lead(p.begin(), p.end() - 1);
        auto& depth = prof[lead];
        depth = std::max(depth, p.back());
    }
    return DPartition(pi.dim() - 1, std::move(prof));
}

// All nonempty (d-1)-partitions pointwise <= bound.
std::vector<DPartition> partitions_under(const DPartition& bound) {
    std::vector<DPartition> out;
    std::vector<DPartition::Index> positions;
    for (const auto& [p, v] : bound.entries()) positions.push_back(p);

    std::map<DPartition::Index, int> current;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == positions.size()) {
            if (!current.empty()) out.emplace_back(bound.dim(), current);
            return;
        }
        const auto& p = positions[idx];
        int ub = bound.entry(p);
        for (int ax = 0; ax < bound.dim(); ++ax) {
            if (p[ax] == 1) continue;
            DPartition::Index q = p;
            --q[ax];
            auto it = current.find(q);
            ub = std::min(ub, it == current.end() ? 0 : it->second);
        }
        for (int v = ub; v >= 1; --v) {
            current[p] = v;
            self(self, idx + 1);
        }
        current.erase(p);
        self(self, idx + 1);
    };
    rec(rec, 0);
    return out;
}

// The lattice points covered by the binary indicator of xi, as d-tuples.
std::vector<std::vector<int>> indicator_support(const DPartition& xi) {
    return xi.cells();
}

}  // namespace

std::vector<Decomposition> decompositions(const DPartition& pi, long long cap) {
    if (pi.dim() < 2)
        throw ParseError("decompositions needs dim >= 2");
    std::vector<Decomposition> out;
    if (pi.empty()) {
        out.emplace_back();
        return out;
    }

    // Candidate pool ordered largest-first, then by cell list.
    std::vector<DPartition> pool = partitions_under(support_profile(pi));
    std::sort(pool.begin(), pool.end(), [](const DPartition& a, const DPartition& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::vector<std::vector<std::vector<int>>> supports;
    supports.reserve(pool.size());
    for (const auto& xi : pool) supports.push_back(indicator_support(xi));

    // Remaining entry value at each d-tuple index of pi.
    std::map<std::vector<int>, int> remaining;
    for (const auto& [p, v] : pi.entries()) remaining[p] = v;
    long long size_left = pi.size();
    DPartition::Index ones(pi.dim(), 1);

    std::vector<std::pair<DPartition, int>> chosen;
    auto rec = [&](auto&& self, size_t idx) -> void {
        int layers_left = remaining.count(ones) ? remaining[ones] : 0;
        if (size_left == 0) {
            if (static_cast<long long>(out.size()) >= cap)
                throw ResourceLimitError("decomposition enumeration exceeded cap");
            out.push_back(Decomposition{chosen});
            return;
        }
        if (idx == pool.size()) return;
        // Every nonempty layer covers the all-ones point, so exactly
        // layers_left layers remain; each future layer has at most the
        // current candidate's size.
        if (layers_left == 0) return;
        if (size_left > layers_left * pool[idx].size()) return;

        const auto& supp = supports[idx];
        int max_mult = layers_left;
        for (const auto& pt : supp) {
            auto it = remaining.find(pt);
            max_mult = std::min(max_mult, it == remaining.end() ? 0 : it->second);
            if (max_mult == 0) break;
        }
        for (int m = max_mult; m >= 1; --m) {
            for (const auto& pt : supp) remaining[pt] -= m;
            size_left -= m * pool[idx].size();
            chosen.emplace_back(pool[idx], m);
            self(self, idx + 1);
            chosen.pop_back();
            size_left += m * pool[idx].size();
            for (const auto& pt : supp) remaining[pt] += m;
        }
        self(self, idx + 1);
    };
    rec(rec, 0);
    return out;
}

Rat omega_c(const DPartition& pi) {
    if (pi.empty()) return Rat(1);
    std::vector<Rat> inv_fact(pi.height() + 1, Rat(1));
    for (int k = 1; k <= pi.height(); ++k)
        inv_fact[k] = inv_fact[k - 1] / k;

    Rat total(0);
    for (const auto& dec : decompositions(pi)) {
        Rat term(1);
        for (const auto& [xi, m] : dec.layers) term *= inv_fact[m];
        total += term;
    }
    return total;
}

}  // namespace dt4
