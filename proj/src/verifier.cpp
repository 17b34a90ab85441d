#include "dt4/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace dt4 {

namespace {

class StopWatch {
public:
    StopWatch() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::vector<std::string> lambda_strings(std::span<const Rat> lam) {
    std::vector<std::string> out;
    for (const Rat& l : lam) out.push_back(rat_to_string(l));
    return out;
}

OmegaResult omega_from_weight(const DPartition& pi, const FactoredValue<Rat>& w) {
    auto lw = lift_factored<Poly1>(w) *
              tautological_factor<Poly1>(pi, symbolic_d_axis4());
    SpecializedLimit lim = specialize_limit(lw);

    int h = pi.height();
    std::map<Poly1, int> expected;
    for (int l = 1; l <= h; ++l)
        expected[Poly1::var(0) - Poly1(Rat(l - 1))] += 1;
    if (lim.factors != expected)
        throw WrongShapeError("d-factorization of " + pi.canonical_key() +
                              " is not prod_{l<=height} (d-(l-1))");

    Rat signed_omega = (pi.size() % 2 == 0) ? lim.scalar : Rat(-lim.scalar);
    if (signed_omega == 0)
        throw Error("internal: vanishing specialization scalar");

    OmegaResult res;
    res.sign_flip = rat_sign(signed_omega);
    res.omega = rat_abs(signed_omega);
    for (const auto& [p, e] : lim.factors)
        for (int i = 0; i < e; ++i) res.d_factors.push_back(p);
    return res;
}

// Product of the factored value's forms at a fixed lambda-point with the
// d-variables kept symbolic. Only polynomial (pole-free) values qualify.
Poly4 eval_lambda_symbolic(const FactoredValue<Poly4>& f,
                           std::span<const Rat> lam) {
    Poly4 out(f.scalar);
    for (const auto& [form, e] : f.factors) {
        if (e < 0) throw Error("internal: pole in a polynomial product");
        Poly4 v = form.c[0].scaled(lam[0]) + form.c[1].scaled(lam[1]) +
                  form.c[2].scaled(lam[2]);
        for (int i = 0; i < e; ++i) out = out * v;
    }
    return out;
}

// E = (d1 l1 + d2 l2 + d3 l3 + d4 l4) * (-e3(l)) / e4(l), l4 = -(l1+l2+l3).
Poly4 affine_exponent(std::span<const Rat> lam) {
    std::array<Rat, 4> l{lam[0], lam[1], lam[2], -(lam[0] + lam[1] + lam[2])};
    Rat e3 = l[0] * l[1] * l[2] + l[0] * l[1] * l[3] + l[0] * l[2] * l[3] +
             l[1] * l[2] * l[3];
    Rat e4 = l[0] * l[1] * l[2] * l[3];
    Rat rho = -e3 / e4;
    Poly4 out;
    for (int m = 0; m < 4; ++m) out += Poly4::var(m).scaled(l[m] * rho);
    return out;
}

json poly4_mismatch_witness(int n, const Poly4& lhs, const Poly4& rhs,
                            std::span<const Rat> lam) {
    Poly4 diff = lhs - rhs;
    auto it = diff.terms().begin();
    return json{{"q_power", n},
                {"d_monomial", it->first},
                {"lambda", lambda_strings(lam)},
                {"lhs", rat_to_string(lhs.coeff(it->first))},
                {"rhs", rat_to_string(rhs.coeff(it->first))}};
}

constexpr int kMaxPoleRetries = 20;
constexpr size_t kMaxWitnesses = 20;

}  // namespace

json VerificationReport::to_json() const {
    return json{{"target", target},   {"order", order},
                {"trials", trials},   {"seed", seed},
                {"status", pass ? "pass" : "fail"},
                {"witnesses", witnesses},
                {"details", details}, {"elapsed_ms", elapsed_ms}};
}

OmegaResult omega_from_dt4(const DPartition& pi) {
    return omega_from_weight(pi, vertex_weight(pi));
}

VertexTable::VertexTable(int order, int threads) : order_(order) {
    if (order < 0) throw ParseError("order must be >= 0");
    by_size_.resize(order + 1);
    struct Slot {
        int n;
        size_t idx;
        const DPartition* pi;
    };
    std::vector<std::vector<DPartition>> parts(order + 1);
    std::vector<Slot> slots;
    for (int n = 0; n <= order; ++n) {
        parts[n] = enumerate_partitions(3, n);
        by_size_[n].resize(parts[n].size());
        for (size_t i = 0; i < parts[n].size(); ++i)
            slots.push_back({n, i, &parts[n][i]});
    }

    if (threads <= 0) {
        const char* env = std::getenv("DT4_THREADS");
        threads = env ? std::atoi(env)
                      : static_cast<int>(std::thread::hardware_concurrency());
    }
    threads = std::clamp(threads, 1, 8);

    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](int tid) {
        try {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= slots.size()) break;
                const Slot& s = slots[i];
                VertexData d;
                d.pi = *s.pi;
                d.key = s.pi->canonical_key();
                d.height = s.pi->height();
                d.w = vertex_weight(*s.pi);
                try {
                    d.omega = omega_from_weight(*s.pi, d.w);
                } catch (const Error& e) {
                    d.omega_error = e.what();
                }
                by_size_[s.n][s.idx] = std::move(d);
            }
        } catch (...) {
            errors[tid] = std::current_exception();
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

long long VertexTable::total_count() const {
    long long c = 0;
    for (const auto& v : by_size_) c += static_cast<long long>(v.size());
    return c;
}

SignAssignment VertexTable::positivity_signs() const {
    SignAssignment signs;
    for (const auto& level : by_size_)
        for (const auto& d : level) {
            if (!d.omega)
                throw Error("specialization failed for " + d.key + ": " +
                            d.omega_error);
            signs.set(d.key, d.omega->sign_flip, "specialization-derived");
        }
    return signs;
}

std::array<Rat, 3> sample_lambda(RatSampler& sampler) {
    for (;;) {
        std::array<Rat, 3> lam{sampler.next(), sampler.next(), sampler.next()};
        if (lam[0] + lam[1] + lam[2] == 0) continue;
        return lam;
    }
}

VerificationReport verify_affine(const VertexTable& table, int order, int trials,
                                 std::uint64_t seed, const SignAssignment& signs) {
    StopWatch watch;
    VerificationReport rep;
    rep.target = "affine";
    rep.order = order;
    rep.trials = trials;
    rep.seed = seed;
    rep.pass = true;
    if (order > table.order()) throw ParseError("order exceeds vertex table");

    struct Term {
        const VertexData* vd;
        int sign;
        FactoredValue<Poly4> taut;
    };
    std::vector<std::vector<Term>> terms(order + 1);
    for (int n = 0; n <= order; ++n)
        for (const auto& vd : table.at_size(n))
            terms[n].push_back({&vd, signs.sign_for(vd.key),
                                tautological_factor<Poly4>(vd.pi, symbolic_d4())});

    auto mac = lift_series<Poly4>(macmahon(order, -1));
    RatSampler sampler(seed);

    for (int trial = 0; trial < trials; ++trial) {
        int attempts = 0;
        for (;;) {
            std::array<Rat, 3> lam = sample_lambda(sampler);
            try {
                std::vector<Poly4> lhs(order + 1);
                for (int n = 0; n <= order; ++n)
                    for (const auto& t : terms[n]) {
                        Rat wv = evaluate(t.vd->w, lam);
                        if (wv == 0) continue;
                        lhs[n] += eval_lambda_symbolic(t.taut, lam)
                                      .scaled(t.sign > 0 ? wv : Rat(-wv));
                    }
                auto rhs = series_pow_scalar(mac, affine_exponent(lam));
                for (int n = 0; n <= order; ++n)
                    if (!(lhs[n] == rhs[n])) {
                        rep.pass = false;
                        if (rep.witnesses.size() < kMaxWitnesses)
                            rep.witnesses.push_back(
                                poly4_mismatch_witness(n, lhs[n], rhs[n], lam));
                    }
                break;
            } catch (const PoleHitError&) {
                if (++attempts > kMaxPoleRetries)
                    throw Error("pole resample budget exhausted in affine trial");
            }
        }
    }
    rep.elapsed_ms = watch.ms();
    return rep;
}

VerificationReport verify_nekrasov(const VertexTable& table, int order, int trials,
                                   std::uint64_t seed, const SignAssignment& signs) {
    StopWatch watch;
    VerificationReport rep;
    rep.target = "nekrasov";
    rep.order = order;
    rep.trials = trials;
    rep.seed = seed;
    rep.pass = true;
    if (order > table.order()) throw ParseError("order exceeds vertex table");

    RatSampler sampler(seed);
    for (int trial = 0; trial < trials; ++trial) {
        int attempts = 0;
        for (;;) {
            std::array<Rat, 3> lam = sample_lambda(sampler);
            try {
                std::vector<Rat> lhs(order + 1);
                for (int n = 0; n <= order; ++n)
                    for (const auto& vd : table.at_size(n)) {
                        Rat wv = evaluate(vd.w, lam);
                        lhs[n] += signs.sign_for(vd.key) > 0 ? wv : Rat(-wv);
                    }
                Rat c = (lam[0] + lam[1]) * (lam[0] + lam[2]) * (lam[1] + lam[2]) /
                        (lam[0] * lam[1] * lam[2] * (lam[0] + lam[1] + lam[2]));
                Rat coeff(1);
                for (int n = 0; n <= order; ++n) {
                    if (n > 0) coeff *= c / n;  // c^n / n!
                    if (lhs[n] != coeff) {
                        rep.pass = false;
                        if (rep.witnesses.size() < kMaxWitnesses)
                            rep.witnesses.push_back(
                                json{{"q_power", n},
                                     {"lambda", lambda_strings(lam)},
                                     {"lhs", rat_to_string(lhs[n])},
                                     {"rhs", rat_to_string(coeff)}});
                    }
                }
                break;
            } catch (const PoleHitError&) {
                if (++attempts > kMaxPoleRetries)
                    throw Error("pole resample budget exhausted in nekrasov trial");
            }
        }
    }
    rep.elapsed_ms = watch.ms();
    return rep;
}

namespace {

void compare_t_series(const TruncatedSeries<Poly1>& lhs,
                      const TruncatedSeries<Poly1>& rhs, const std::string& side,
                      VerificationReport& rep) {
    for (int n = 0; n <= lhs.order(); ++n) {
        if (lhs[n] == rhs[n]) continue;
        rep.pass = false;
        Poly1 diff = lhs[n] - rhs[n];
        auto it = diff.terms().begin();
        if (rep.witnesses.size() < kMaxWitnesses)
            rep.witnesses.push_back(json{{"q_power", n},
                                         {"t_power", it->first[0]},
                                         {"side", side},
                                         {"lhs", rat_to_string(lhs[n].coeff(it->first))},
                                         {"rhs", rat_to_string(rhs[n].coeff(it->first))}});
    }
}

}  // namespace

VerificationReport verify_counting(int order, const VertexTable* dt4_side) {
    StopWatch watch;
    VerificationReport rep;
    rep.target = "counting";
    rep.order = order;
    rep.pass = true;
    if (dt4_side && order > dt4_side->order())
        throw ParseError("dt4-side counting needs order within the vertex table");

    // RHS exp(t(M(q)-1)) over Q[t].
    auto mac = macmahon(order, 1);
    TruncatedSeries<Poly1> arg(order);
    for (int n = 1; n <= order; ++n) arg[n] = Poly1::var(0).scaled(mac[n]);
    auto rhs = series_exp(arg);

    TruncatedSeries<Poly1> lhs(order);
    lhs[0] = Poly1(Rat(1));
    for (int n = 1; n <= order; ++n)
        for (const auto& pi : enumerate_partitions(3, n))
            lhs[n] += Poly1::var(0, pi.height()).scaled(omega_c(pi));
    compare_t_series(lhs, rhs, "omega_c", rep);

    if (dt4_side) {
        TruncatedSeries<Poly1> lhs2(order);
        lhs2[0] = Poly1(Rat(1));
        for (int n = 1; n <= order; ++n)
            for (const auto& vd : dt4_side->at_size(n)) {
                if (!vd.omega) {
                    rep.pass = false;
                    rep.witnesses.push_back(
                        json{{"key", vd.key}, {"error", vd.omega_error}});
                    continue;
                }
                lhs2[n] += Poly1::var(0, vd.height).scaled(vd.omega->omega);
            }
        compare_t_series(lhs2, rhs, "omega_dt4", rep);
    }
    rep.elapsed_ms = watch.ms();
    return rep;
}

VerificationReport verify_counting_dim2(int order) {
    StopWatch watch;
    VerificationReport rep;
    rep.target = "counting-dim2";
    rep.order = order;
    rep.pass = true;

    auto gen = TruncatedSeries<Rat>::one(order);
    for (int n = 1; n <= order; ++n) {
        Rat c(0);
        for (const auto& pi : enumerate_partitions(2, n)) c += omega_c(pi);
        gen[n] = c;
    }
    auto lhs = series_log(gen);
    for (int n = 1; n <= order; ++n) {
        Rat expected(static_cast<long>(enumerate_partitions(1, n).size()));
        if (lhs[n] != expected) {
            rep.pass = false;
            if (rep.witnesses.size() < kMaxWitnesses)
                rep.witnesses.push_back(json{{"q_power", n},
                                             {"lhs", rat_to_string(lhs[n])},
                                             {"rhs", rat_to_string(expected)}});
        }
    }
    rep.elapsed_ms = watch.ms();
    return rep;
}

VerificationReport verify_specconj(const VertexTable& table, int order) {
    StopWatch watch;
    VerificationReport rep;
    rep.target = "specconj";
    rep.order = order;
    rep.pass = true;
    if (order > table.order()) throw ParseError("order exceeds vertex table");

    json sizes = json::array();
    for (int n = 0; n <= order; ++n) {
        int ok = 0;
        for (const auto& vd : table.at_size(n)) {
            if (vd.omega && vd.omega->omega > 0) {
                ++ok;
                continue;
            }
            rep.pass = false;
            if (rep.witnesses.size() < kMaxWitnesses)
                rep.witnesses.push_back(json{{"key", vd.key},
                                             {"error", vd.omega ? "omega not positive"
                                                                : vd.omega_error}});
        }
        sizes.push_back(json{{"size", n}, {"checked", table.at_size(n).size()},
                             {"ok", ok}});
    }
    rep.details = json{{"per_size", sizes}};
    rep.elapsed_ms = watch.ms();
    return rep;
}

VerificationReport sign_uniqueness_brute(const VertexTable& table, int order,
                                         std::uint64_t seed) {
    StopWatch watch;
    VerificationReport rep;
    rep.target = "uniqueness-brute";
    rep.order = order;
    rep.seed = seed;
    rep.pass = true;
    if (order > 3) throw ParseError("brute uniqueness is capped at order 3");
    if (order > table.order()) throw ParseError("order exceeds vertex table");

    SignAssignment positivity = table.positivity_signs();
    RatSampler sampler(seed);
    constexpr int kPoints = 2;

    // Per lambda-point, per size: the fixed d-polynomials w(lam)*L(lam)(d)
    // each sign multiplies, plus the matching RHS coefficient.
    struct PointData {
        std::array<Rat, 3> lam;
        std::vector<std::vector<Poly4>> contrib;  // [size][partition]
        std::vector<Poly4> rhs;
    };
    std::vector<PointData> points;
    auto mac = lift_series<Poly4>(macmahon(order, -1));
    while (static_cast<int>(points.size()) < kPoints) {
        std::array<Rat, 3> lam = sample_lambda(sampler);
        try {
            PointData pd;
            pd.lam = lam;
            pd.contrib.resize(order + 1);
            for (int n = 1; n <= order; ++n)
                for (const auto& vd : table.at_size(n)) {
                    Rat wv = evaluate(vd.w, lam);
                    auto taut = tautological_factor<Poly4>(vd.pi, symbolic_d4());
                    pd.contrib[n].push_back(
                        eval_lambda_symbolic(taut, lam).scaled(wv));
                }
            auto rhs = series_pow_scalar(mac, affine_exponent(lam));
            for (int n = 0; n <= order; ++n) pd.rhs.push_back(rhs[n]);
            points.push_back(std::move(pd));
        } catch (const PoleHitError&) {
            continue;
        }
    }

    // The q-grading decouples the search: a size-n partition only enters
    // the q^n coefficient, so exhaust each size class separately.
    json orders = json::array();
    long long total_candidates = 1;
    long long total_passing = 1;
    for (int n = 1; n <= order; ++n) {
        const auto& level = table.at_size(n);
        size_t k = level.size();
        long long candidates = 1LL << k;
        long long passing = 0;
        std::vector<int> passing_signs;
        for (long long mask = 0; mask < candidates; ++mask) {
            bool ok = true;
            for (const auto& pd : points) {
                Poly4 sum;
                for (size_t i = 0; i < k; ++i) {
                    const Poly4& c = pd.contrib[n][i];
                    sum += (mask >> i) & 1 ? -c : c;
                }
                if (!(sum == pd.rhs[n])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            ++passing;
            passing_signs.clear();
            for (size_t i = 0; i < k; ++i)
                passing_signs.push_back((mask >> i) & 1 ? -1 : 1);
        }
        bool matches_positivity = passing == 1;
        if (passing == 1)
            for (size_t i = 0; i < k; ++i)
                if (passing_signs[i] != positivity.sign_for(level[i].key))
                    matches_positivity = false;
        if (passing != 1 || !matches_positivity) {
            rep.pass = false;
            rep.witnesses.push_back(json{{"q_power", n},
                                         {"candidates", candidates},
                                         {"passing", passing},
                                         {"matches_positivity", matches_positivity}});
        }
        orders.push_back(json{{"order", n},
                              {"candidates", candidates},
                              {"passing", passing},
                              {"matches_positivity", matches_positivity}});
        total_candidates *= candidates;
        total_passing *= passing;
    }
    rep.details = json{{"orders", orders},
                       {"total_candidates", total_candidates},
                       {"total_passing", total_passing}};
    rep.elapsed_ms = watch.ms();
    return rep;
}

VerificationReport sign_uniqueness_incremental(const VertexTable& table, int order) {
    StopWatch watch;
    VerificationReport rep;
    rep.target = "uniqueness-incremental";
    rep.order = order;
    rep.pass = true;
    if (order > table.order()) throw ParseError("order exceeds vertex table");

    // After the (0,0,0,-d), s = 0 specialization and q -> -q, the order-n
    // comparison reads sum_pi sigma_pi omega_pi prod_{l<=h}(d-(l-1)) =
    // [q^n] M(q)^d. Descending through d-degrees, the degree-k comparison
    // involves exactly the partitions of height >= k; those of height > k
    // are already fixed, and the height-k ones enter with their positive
    // leading weight omega_pi, so (the weights being positive) at most one
    // sign vector can satisfy it. Each degree therefore fixes the signs of
    // one height class.
    auto rhs = series_pow_scalar(lift_series<Poly1>(macmahon(order, 1)),
                                 Poly1::var(0));

    json per_order = json::array();
    for (int n = 1; n <= order; ++n) {
        std::vector<const VertexData*> level;
        for (const auto& vd : table.at_size(n)) {
            if (!vd.omega) {
                rep.pass = false;
                rep.witnesses.push_back(
                    json{{"key", vd.key}, {"error", vd.omega_error}});
                continue;
            }
            level.push_back(&vd);
        }
        std::vector<Poly1> polys;
        for (const VertexData* vd : level) {
            Poly1 p(vd->omega->omega);
            for (int l = 1; l <= vd->height; ++l)
                p = p * (Poly1::var(0) - Poly1(Rat(l - 1)));
            polys.push_back(std::move(p));
        }
        std::vector<int> fixes;
        for (int k = n; k >= 1; --k) {
            Rat lhs_k(0);
            int newly_fixed = 0;
            for (size_t i = 0; i < level.size(); ++i) {
                if (level[i]->height < k) continue;
                lhs_k += polys[i].coeff({k});
                if (level[i]->height == k) ++newly_fixed;
            }
            Rat rhs_k = rhs[n].coeff({k});
            if (lhs_k != rhs_k) {
                rep.pass = false;
                if (rep.witnesses.size() < kMaxWitnesses)
                    rep.witnesses.push_back(json{{"q_power", n},
                                                 {"d_degree", k},
                                                 {"lhs", rat_to_string(lhs_k)},
                                                 {"rhs", rat_to_string(rhs_k)}});
            }
            fixes.push_back(newly_fixed);
        }
        per_order.push_back(json{{"order", n}, {"fixed_per_degree", fixes}});
    }
    rep.details = json{{"per_order", per_order}};
    rep.elapsed_ms = watch.ms();
    return rep;
}

void ToricChart::validate() const {
    // Integer determinant by cofactor expansion.
    long long m[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = tangent[i][j];
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    long long det = m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
                    m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
    if (det != 1 && det != -1)
        throw BadChartError("chart tangent characters are not a lattice basis");
    for (int j = 0; j < 4; ++j) {
        int s = 0;
        for (int i = 0; i < 4; ++i) s += tangent[i][j];
        if (s != 1)
            throw BadChartError("chart tangent characters violate the CY condition");
    }
}

VerificationReport toric_series(const VertexTable& table,
                                const std::vector<ToricChart>& charts, int order,
                                int trials, std::uint64_t seed,
                                const SignAssignment& signs) {
    StopWatch watch;
    VerificationReport rep;
    rep.target = "toric";
    rep.order = order;
    rep.trials = trials;
    rep.seed = seed;
    rep.pass = true;
    if (order > table.order()) throw ParseError("order exceeds vertex table");
    if (charts.empty()) throw BadChartError("no charts given");
    for (const auto& c : charts) c.validate();

    // Per chart, the tautological factors are lambda-independent.
    struct ChartData {
        const ToricChart* chart;
        std::vector<std::vector<FactoredValue<Rat>>> taut;  // [size][partition]
    };
    std::vector<ChartData> chart_data;
    for (const auto& c : charts) {
        ChartData cd{&c, {}};
        cd.taut.resize(order + 1);
        std::array<Rat, 4> d{Rat(c.bundle[0]), Rat(c.bundle[1]), Rat(c.bundle[2]),
                             Rat(c.bundle[3])};
        for (int n = 0; n <= order; ++n)
            for (const auto& vd : table.at_size(n))
                cd.taut[n].push_back(tautological_factor<Rat>(vd.pi, d));
        chart_data.push_back(std::move(cd));
    }

    auto mac = macmahon(order, -1);
    RatSampler sampler(seed);
    for (int trial = 0; trial < trials; ++trial) {
        int attempts = 0;
        for (;;) {
            std::array<Rat, 3> lam = sample_lambda(sampler);
            std::array<Rat, 4> lam4{lam[0], lam[1], lam[2],
                                    -(lam[0] + lam[1] + lam[2])};
            try {
                auto lhs = TruncatedSeries<Rat>::one(order);
                Rat exponent_sum(0);
                for (const auto& cd : chart_data) {
                    std::array<Rat, 4> mu;
                    for (int i = 0; i < 4; ++i) {
                        mu[i] = Rat(0);
                        for (int j = 0; j < 4; ++j)
                            mu[i] += Rat(cd.chart->tangent[i][j]) * lam4[j];
                        if (mu[i] == 0)
                            throw PoleHitError("chart weight vanishes at sample");
                    }
                    std::array<Rat, 3> mu3{mu[0], mu[1], mu[2]};
                    TruncatedSeries<Rat> s(order);
                    s[0] = Rat(1);
                    for (int n = 1; n <= order; ++n) {
                        Rat acc(0);
                        const auto& level = table.at_size(n);
                        for (size_t i = 0; i < level.size(); ++i) {
                            Rat lv = evaluate(cd.taut[n][i], mu3);
                            if (lv == 0) continue;
                            Rat wv = evaluate(level[i].w, mu3);
                            acc += signs.sign_for(level[i].key) > 0 ? lv * wv
                                                                    : Rat(-lv * wv);
                        }
                        s[n] = acc;
                    }
                    lhs = lhs * s;

                    Rat c1(0);
                    for (int m = 0; m < 4; ++m) c1 += Rat(cd.chart->bundle[m]) * mu[m];
                    Rat e3 = mu[0] * mu[1] * mu[2] + mu[0] * mu[1] * mu[3] +
                             mu[0] * mu[2] * mu[3] + mu[1] * mu[2] * mu[3];
                    Rat e4 = mu[0] * mu[1] * mu[2] * mu[3];
                    exponent_sum += c1 * (-e3) / e4;
                }
                TruncatedSeries<Rat> rhs =
                    exponent_sum == 0 ? TruncatedSeries<Rat>::one(order)
                                      : series_pow_scalar(mac, exponent_sum);
                for (int n = 0; n <= order; ++n)
                    if (lhs[n] != rhs[n]) {
                        rep.pass = false;
                        if (rep.witnesses.size() < kMaxWitnesses)
                            rep.witnesses.push_back(
                                json{{"q_power", n},
                                     {"lambda", lambda_strings(lam)},
                                     {"lhs", rat_to_string(lhs[n])},
                                     {"rhs", rat_to_string(rhs[n])}});
                    }
                break;
            } catch (const PoleHitError&) {
                if (++attempts > kMaxPoleRetries)
                    throw Error("pole resample budget exhausted in toric trial");
            }
        }
    }
    rep.elapsed_ms = watch.ms();
    return rep;
}

}  // namespace dt4
