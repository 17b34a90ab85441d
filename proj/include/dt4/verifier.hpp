#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dt4/combinatorics.hpp"
#include "dt4/localization.hpp"
#include "dt4/series.hpp"

namespace dt4 {

using json = nlohmann::json;

inline constexpr const char* kEngineVersion = "0.1.0";

// Orientation choice at the combinatorial level: one sign per canonical
// partition key, with a provenance tag per key.
struct SignAssignment {
    std::map<std::string, int> signs;
    std::map<std::string, std::string> provenance;

    int sign_for(const std::string& key) const {
        auto it = signs.find(key);
        if (it == signs.end())
            throw ParseError("sign assignment is missing key " + key);
        return it->second;
    }
    void set(const std::string& key, int sign, const std::string& prov) {
        signs[key] = sign;
        provenance[key] = prov;
    }
};

struct VerificationReport {
    std::string target;
    int order = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    bool pass = false;
    std::vector<json> witnesses;  // nonempty whenever pass is false
    json details;                 // target-specific extras
    long long elapsed_ms = 0;

    json to_json() const;
};

// The s -> 0 limit of L_pi(0,0,0,-d) * w_pi written as
// (-1)^{|pi|} * omega * prod_{l=1}^{height}(d-(l-1)); omega > 0 and the
// sign flip applied to the canonical w_pi to reach that form.
struct OmegaResult {
    Rat omega;
    int sign_flip;
    std::vector<Poly1> d_factors;
};
OmegaResult omega_from_dt4(const DPartition& pi);

// Everything the verifier needs per fixed point, computed once.
struct VertexData {
    DPartition pi = DPartition(3);
    std::string key;
    int height = 0;
    FactoredValue<Rat> w;
    std::optional<OmegaResult> omega;  // absent if the specialization failed
    std::string omega_error;
};

// Enumerations and weights for all |pi| <= order; weight computations for
// distinct partitions run on a worker pool and merge deterministically.
class VertexTable {
public:
    explicit VertexTable(int order, int threads = 0);

    int order() const { return order_; }
    const std::vector<VertexData>& at_size(int n) const { return by_size_.at(n); }
    long long total_count() const;

    // The positivity rule of the specialization conjecture; throws with
    // the offending partition if any limit failed.
    SignAssignment positivity_signs() const;

private:
    int order_;
    std::vector<std::vector<VertexData>> by_size_;
};

VerificationReport verify_affine(const VertexTable& table, int order, int trials,
                                 std::uint64_t seed, const SignAssignment& signs);

VerificationReport verify_nekrasov(const VertexTable& table, int order, int trials,
                                   std::uint64_t seed, const SignAssignment& signs);

// The counting identity over Q[t]; independent of the vertex machinery.
// When dt4_side is given, the DT4-derived omegas replace omega^c for
// sizes within its range and the identity is rechecked.
VerificationReport verify_counting(int order, const VertexTable* dt4_side = nullptr);

// The d = 2 analogue: log sum over plane partitions of omega^c q^{|pi|}
// equals sum_n p(n) q^n with p(n) the linear-partition counts.
VerificationReport verify_counting_dim2(int order);

VerificationReport verify_specconj(const VertexTable& table, int order);

VerificationReport sign_uniqueness_brute(const VertexTable& table, int order,
                                         std::uint64_t seed);

VerificationReport sign_uniqueness_incremental(const VertexTable& table, int order);

// GKM-style per-fixed-point data: characters of the chart coordinates in
// the global torus basis, plus the bundle character.
struct ToricChart {
    std::array<std::array<int, 4>, 4> tangent;
    std::array<int, 4> bundle;

    void validate() const;  // lattice basis with det +-1, CY row sum
};

VerificationReport toric_series(const VertexTable& table,
                                const std::vector<ToricChart>& charts, int order,
                                int trials, std::uint64_t seed,
                                const SignAssignment& signs);

// Exact rationals lambda1..3 with every coordinate and their sum nonzero.
std::array<Rat, 3> sample_lambda(RatSampler& sampler);

}  // namespace dt4
