#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dt4/combinatorics.hpp"
#include "dt4/json_io.hpp"
#include "dt4/series.hpp"

using namespace dt4;

namespace {

// Independent dense expansion of prod (1 - (s q)^n)^{-n} in int64.
std::vector<long long> macmahon_oracle(int order, int s) {
    std::vector<long long> c(order + 1, 0);
    c[0] = 1;
    for (int n = 1; n <= order; ++n) {
        long long sn = (s == -1 && n % 2) ? -1 : 1;
        // multiply by (1 - sn q^n)^{-1} n times, i.e. divide by (1 - sn q^n)
        for (int rep = 0; rep < n; ++rep) {
            std::vector<long long> quot(order + 1, 0);
            for (int k = 0; k <= order; ++k)
                quot[k] = c[k] + (k >= n ? sn * quot[k - n] : 0);
            c = quot;
        }
    }
    return c;
}

TruncatedSeries<Rat> random_unit_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    TruncatedSeries<Rat> f(order);
    f[0] = Rat(1);
    for (int n = 1; n <= order; ++n) f[n] = rat(num(rng), den(rng));
    return f;
}

}  // namespace

TEST_CASE("macmahon expansion") {
    auto m0 = macmahon(0);
    CHECK(m0.order() == 0);
    CHECK(m0[0] == 1);

    auto m6 = macmahon(6);
    const long expected[] = {1, 1, 3, 6, 13, 24, 48};
    for (int n = 0; n <= 6; ++n) CHECK(m6[n] == expected[n]);

    auto oracle = macmahon_oracle(9, 1);
    auto m9 = macmahon(9);
    for (int n = 0; n <= 9; ++n) CHECK(m9[n] == Rat(static_cast<long>(oracle[n])));

    auto m3neg = macmahon(3, -1);
    const long neg[] = {1, -1, 3, -6};
    for (int n = 0; n <= 3; ++n) CHECK(m3neg[n] == neg[n]);

    auto oneg = macmahon_oracle(8, -1);
    auto m8neg = macmahon(8, -1);
    for (int n = 0; n <= 8; ++n) CHECK(m8neg[n] == Rat(static_cast<long>(oneg[n])));
}

TEST_CASE("series_log") {
    auto zero = series_log(TruncatedSeries<Rat>::one(4));
    for (int n = 0; n <= 4; ++n) CHECK(zero[n] == 0);

    TruncatedSeries<Rat> f(3);
    f[0] = Rat(1);
    f[1] = Rat(1);
    auto l = series_log(f);
    CHECK(l[1] == 1);
    CHECK(l[2] == rat(-1, 2));
    CHECK(l[3] == rat(1, 3));

    auto lm = series_log(macmahon(3));
    CHECK(lm[1] == 1);
    CHECK(lm[2] == rat(5, 2));
    CHECK(lm[3] == rat(10, 3));

    TruncatedSeries<Rat> bad(2);
    bad[0] = Rat(2);
    CHECK_THROWS_AS(series_log(bad), BadConstantTermError);
}

TEST_CASE("series_exp") {
    auto one = series_exp(TruncatedSeries<Rat>(4));
    CHECK(one == TruncatedSeries<Rat>::one(4));

    TruncatedSeries<Rat> q(3);
    q[1] = Rat(1);
    auto e = series_exp(q);
    CHECK(e[0] == 1);
    CHECK(e[1] == 1);
    CHECK(e[2] == rat(1, 2));
    CHECK(e[3] == rat(1, 6));

    TruncatedSeries<Rat> bad(2);
    bad[0] = Rat(1);
    CHECK_THROWS_AS(series_exp(bad), BadConstantTermError);
}

TEST_CASE("exp(t(M(q)-1)) to order 2 over Q[t]") {
    auto mac = macmahon(2);
    TruncatedSeries<Poly1> arg(2);
    for (int n = 1; n <= 2; ++n) arg[n] = Poly1::var(0).scaled(mac[n]);
    auto e = series_exp(arg);
    CHECK(e[0] == Poly1(Rat(1)));
    CHECK(e[1] == Poly1::var(0));
    // 3t + t^2/2
    Poly1 expected = Poly1::var(0).scaled(Rat(3)) + Poly1::var(0, 2).scaled(rat(1, 2));
    CHECK(e[2] == expected);
}

TEST_CASE("exp and log are mutually inverse") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_unit_series(rng, 12);
        CHECK(series_exp(series_log(f)) == f);
    }
}

TEST_CASE("series_pow_scalar") {
    auto mac = macmahon(5, -1);
    auto p0 = series_pow_scalar(mac, Rat(0));
    CHECK(p0 == TruncatedSeries<Rat>::one(5));
    CHECK(series_pow_scalar(mac, Rat(1)) == mac);

    // Symbolic exponent: the q^1 coefficient of M(-q)^c is -c.
    auto sym = series_pow_scalar(lift_series<Poly1>(mac), Poly1::var(0));
    CHECK(sym[1] == Poly1::var(0).scaled(Rat(-1)));
    // c-degree of the q^n coefficient stays <= n.
    for (int n = 0; n <= 5; ++n) CHECK(sym[n].total_degree() <= n);
}

TEST_CASE("power homomorphism M(-q)^{c1+c2} = M(-q)^{c1} M(-q)^{c2}") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    auto mac = macmahon(8, -1);
    for (int trial = 0; trial < 10; ++trial) {
        Rat c1 = rat(num(rng), den(rng)), c2 = rat(num(rng), den(rng));
        auto lhs = series_pow_scalar(mac, Rat(c1 + c2));
        auto rhs = series_pow_scalar(mac, c1) * series_pow_scalar(mac, c2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("binomial pattern of the counting proof at order 6") {
    // 1 + sum_{i<=k} k!/(k-i)! sum_{height=i} omega^c q^{|pi|} = M(q)^k.
    const int order = 6;
    auto mac = macmahon(order);
    std::vector<std::vector<Rat>> height_sums(order + 1,
                                              std::vector<Rat>(order + 1, Rat(0)));
    for (int n = 1; n <= order; ++n)
        for (const auto& pi : enumerate_partitions(3, n))
            height_sums[pi.height()][n] += omega_c(pi);

    for (int k = 1; k <= 3; ++k) {
        TruncatedSeries<Rat> lhs(order);
        lhs[0] = Rat(1);
        Rat falling(1);
        for (int i = 1; i <= k; ++i) {
            falling *= k - i + 1;  // k!/(k-i)!
            for (int n = 1; n <= order; ++n) lhs[n] += falling * height_sums[i][n];
        }
        auto rhs = series_pow_scalar(mac, Rat(k));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("mixed-order arithmetic truncates to the minimum") {
    auto a = macmahon(6);
    auto b = macmahon(3);
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
}

TEST_CASE("series JSON dump") {
    auto m = macmahon(3);
    CHECK(series_to_json(m) ==
          json::parse("{\"order\":3,\"coeffs\":[\"1\",\"1\",\"3\",\"6\"]}"));
}
