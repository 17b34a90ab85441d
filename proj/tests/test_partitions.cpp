#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dt4/json_io.hpp"
#include "dt4/partition.hpp"

using namespace dt4;

namespace {

// Oracle: coefficients of prod_{n>=1} (1-q^n)^{-n} by direct dense
// expansion in machine integers, independent of the series module.
std::vector<long long> macmahon_oracle(int order) {
    std::vector<long long> c(order + 1, 0);
    c[0] = 1;
    for (int n = 1; n <= order; ++n)
        for (int rep = 0; rep < n; ++rep)  // (1-q^n)^{-1}, n times
            for (int k = n; k <= order; ++k) c[k] += c[k - n];
    return c;
}

// Oracle: partitions, plane partitions and solid partitions over dense
// monotone integer arrays. Plane partitions are rows of non-increasing
// integers, each row pointwise <= the one above; a solid partition is a
// pointwise non-increasing chain of plane partitions (its value layers).
using Row = std::vector<int>;
using Plane = std::vector<Row>;

void rows_under(const Row& bound, int maxsum, std::vector<Row>& out, Row cur = {},
                int sum = 0) {
    out.push_back(cur);  // includes the empty row
    size_t i = cur.size();
    if (i >= bound.size()) return;
    int cap = std::min(bound[i], i == 0 ? maxsum : cur[i - 1]);
    for (int v = 1; v <= cap && sum + v <= maxsum; ++v) {
        Row next = cur;
        next.push_back(v);
        rows_under(bound, maxsum, out, next, sum + v);
    }
}

int plane_size(const Plane& p) {
    int s = 0;
    for (const auto& r : p)
        for (int v : r) s += v;
    return s;
}

void planes_under(const Plane& bound, int maxsum, std::vector<Plane>& out,
                  Plane cur = {}, int sum = 0) {
    out.push_back(cur);
    size_t i = cur.size();
    if (i >= bound.size()) return;
    Row rowbound = bound[i];
    if (i > 0) {
        const Row& prev = cur[i - 1];
        rowbound.resize(std::min(rowbound.size(), prev.size()));
        for (size_t j = 0; j < rowbound.size(); ++j)
            rowbound[j] = std::min(rowbound[j], prev[j]);
    }
    std::vector<Row> rows;
    rows_under(rowbound, maxsum - sum, rows);
    for (const auto& r : rows) {
        if (r.empty()) continue;
        Plane next = cur;
        next.push_back(r);
        planes_under(bound, maxsum, out, next, sum + plane_size(Plane{r}));
    }
}

std::vector<Plane> planes_of_size(int n) {
    Plane everything(n, Row(n, n));
    std::vector<Plane> all;
    planes_under(everything, n, all);
    std::vector<Plane> out;
    for (auto& p : all)
        if (plane_size(p) == n) out.push_back(p);
    return out;
}

bool plane_leq(const Plane& a, const Plane& b) {
    if (a.size() > b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() > b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] > b[i][j]) return false;
    }
    return true;
}

long long count_chains(const std::vector<std::vector<Plane>>& by_size,
                       const Plane* upper, int remaining) {
    if (remaining == 0) return 1;
    long long total = 0;
    for (int s = 1; s <= remaining; ++s) {
        // Chains use weakly decreasing sizes, so the next layer cannot
        // outgrow what is left per remaining layer.
        for (const auto& xi : by_size[s]) {
            if (upper && !plane_leq(xi, *upper)) continue;
            total += count_chains(by_size, &xi, remaining - s);
        }
    }
    return total;
}

long long solid_count_oracle(int n) {
    std::vector<std::vector<Plane>> by_size(n + 1);
    for (int s = 1; s <= n; ++s) by_size[s] = planes_of_size(s);
    return count_chains(by_size, nullptr, n);
}

}  // namespace

TEST_CASE("enumeration counts match the oracles and the pinned values") {
    CHECK(enumerate_partitions(3, 0).size() == 1);  // the empty partition
    CHECK(enumerate_partitions(3, 0)[0].empty());

    // dim 2 counts are the MacMahon coefficients; 48 at size 6.
    auto mac = macmahon_oracle(6);
    for (int n = 0; n <= 6; ++n)
        CHECK(static_cast<long long>(enumerate_partitions(2, n).size()) == mac[n]);
    CHECK(enumerate_partitions(2, 6).size() == 48);

    // dim 3 counts 1, 4, 10, 26, 59 against the chain oracle, 140 at size 6.
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<long long>(enumerate_partitions(3, n).size()) ==
              solid_count_oracle(n));
    const long long expected[] = {1, 4, 10, 26, 59, 140};
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<long long>(enumerate_partitions(3, n).size()) ==
              expected[n - 1]);

    // dim 1 sanity: ordinary partition counts.
    const size_t p1[] = {1, 1, 2, 3, 5, 7, 11};
    for (int n = 0; n <= 6; ++n)
        CHECK(enumerate_partitions(1, n).size() == p1[n]);
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
    auto a = enumerate_partitions(3, 4);
    auto b = enumerate_partitions(3, 4);
    REQUIRE(a.size() == b.size());
    std::set<std::string> keys;
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        keys.insert(a[i].canonical_key());
    }
    CHECK(keys.size() == a.size());
    CHECK(std::is_sorted(a.begin(), a.end(),
                         [](const DPartition& x, const DPartition& y) { return x < y; }));
}

TEST_CASE("enumeration cap raises a resource error") {
    CHECK_THROWS_AS(enumerate_partitions(3, 6, 50), ResourceLimitError);
}

TEST_CASE("cells of the small examples") {
    CHECK(DPartition(3).cells().empty());

    DPartition box(3, {{{1, 1, 1}, 1}});
    CHECK(box.cells() == std::vector<DPartition::Cell>{{1, 1, 1, 1}});

    // Z_pi = 1 + t1 + t4: entries pi_111 = 2, pi_211 = 1.
    DPartition pi(3, {{{1, 1, 1}, 2}, {{2, 1, 1}, 1}});
    CHECK(pi.cells() == std::vector<DPartition::Cell>{
                            {1, 1, 1, 1}, {1, 1, 1, 2}, {2, 1, 1, 1}});
    CHECK(pi.size() == 3);
    CHECK(pi.height() == 2);
}

TEST_CASE("cells reconstruct the partition") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& pi : enumerate_partitions(3, n)) {
            auto back = DPartition::from_cells(3, pi.cells());
            CHECK(back == pi);
            CHECK(static_cast<long long>(pi.cells().size()) == pi.size());
        }
}

TEST_CASE("monotonicity: bumping any non-addable position breaks validity") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& pi : enumerate_partitions(3, n)) {
            for (int i = 1; i <= n + 1; ++i)
                for (int j = 1; j <= n + 1; ++j)
                    for (int k = 1; k <= n + 1; ++k) {
                        DPartition::Index p{i, j, k};
                        bool addable = true;
                        for (int ax = 0; ax < 3; ++ax) {
                            if (p[ax] == 1) continue;
                            DPartition::Index q = p;
                            --q[ax];
                            if (pi.entry(q) < pi.entry(p) + 1) addable = false;
                        }
                        auto entries = pi.entries();
                        entries[p] = pi.entry(p) + 1;
                        if (addable) {
                            CHECK_NOTHROW(DPartition(3, entries));
                        } else {
                            CHECK_THROWS_AS(DPartition(3, entries), ParseError);
                        }
                    }
        }
}

TEST_CASE("canonical keys are injective and insertion-order independent") {
    std::set<std::string> keys;
    size_t total = 0;
    for (int n = 0; n <= 4; ++n)
        for (const auto& pi : enumerate_partitions(3, n)) {
            keys.insert(pi.canonical_key());
            ++total;
            CHECK(partition_from_key(pi.canonical_key()) == pi);
        }
    CHECK(keys.size() == total);

    std::mt19937 rng(7);
    for (const auto& pi : enumerate_partitions(3, 4)) {
        auto cells = pi.cells();
        std::shuffle(cells.begin(), cells.end(), rng);
        CHECK(DPartition::from_cells(3, cells).canonical_key() ==
              pi.canonical_key());
    }
}

TEST_CASE("JSON interchange form round-trips") {
    DPartition pi(3, {{{1, 1, 1}, 2}, {{2, 1, 1}, 1}});
    json j = partition_to_json(pi);
    CHECK(j["dim"] == 3);
    CHECK(j["cells"] == json::parse("[[1,1,1,1],[1,1,1,2],[2,1,1,1]]"));
    CHECK(partition_from_json(j) == pi);

    CHECK_THROWS_AS(partition_from_json(json::parse("{\"dim\":3}")), ParseError);
    // Not an order ideal: missing the (1,1,1,1) cell under (1,1,1,2).
    CHECK_THROWS_AS(partition_from_json(json::parse(
                        "{\"dim\":3,\"cells\":[[1,1,1,2]]}")),
                    ParseError);
}
