#include <doctest.h>

#include <algorithm>
#include <random>

#include "subkdom/enumerate.hpp"
#include "subkdom/families.hpp"
#include "subkdom/invariants.hpp"

using namespace subkdom;

namespace {

DegreeSequence seq(std::vector<int> degrees) {
    return DegreeSequence::from_degrees(degrees);
}

// Independent route: evaluate the defining condition t + (1/k) S_t >= n with
// exact rationals, no prefix-scan shortcut.
int sub_k_by_definition(const DegreeSequence& d, int k) {
    const int n = d.n();
    for (int t = 1; t <= n; ++t) {
        if (Rational(t) + Rational(d.prefix(t), k) >= Rational(n)) return t;
    }
    FAIL("condition must hold at t = n");
    return -1;
}

// Independent route for the stratified bound: the literal level sum
// (Delta + 1 - Delta_t - i) * n_{Delta+1-i} rather than the prefix identity.
Rational stratified_by_definition(const DegreeSequence& d, int k, int t) {
    const auto p = stratified_params(d, t);
    const int max_degree = d.max_degree();
    std::int64_t level_sum = 0;
    for (int i = 1; i <= t; ++i)
        level_sum += (max_degree + 1 - p.delta_t - i) *
                     p.level_counts[static_cast<std::size_t>(i) - 1];
    return {static_cast<std::int64_t>(k) * d.n() - level_sum, k + p.delta_t};
}

std::vector<int> random_degrees(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> degree(0, n - 1);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (auto& d : out) d = degree(rng);
    return out;
}

}  // namespace

TEST_CASE("sub_k examples") {
    CHECK(sub_k(seq({3, 2, 2, 1, 1, 1}), 1) == 2);
    CHECK(sub_k(seq({3, 3, 3, 3}), 3) == 2);
    CHECK(sub_k(seq({0, 0, 0, 0}), 1) == 4);
    CHECK(sub_k(seq({4, 4, 4, 1, 1, 1, 1, 1, 1}), 1) == 2);
    CHECK(sub_k(seq({4, 2, 2, 2, 2, 1, 1, 1, 1}), 1) == 3);
    CHECK(sub_k(seq({2, 1, 1}), 1) == 1);
    CHECK(sub_k(star_corona(5), 1) == 3);

    CHECK_THROWS_AS(sub_k(seq({1, 1}), 0), DomainError);
    CHECK_THROWS_AS(sub_k(seq({}), 1), DomainError);
}

TEST_CASE("sub_k equals the all-zero order") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= 4; ++k)
            CHECK(sub_k(seq(std::vector<int>(static_cast<std::size_t>(n), 0)), k) == n);
}

TEST_CASE("sub_k agrees with the definitional route") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto d = seq(random_degrees(n, rng));
        for (int k = 1; k <= 5; ++k) CHECK(sub_k(d, k) == sub_k_by_definition(d, k));
    }
    for (int n = 1; n <= 6; ++n)
        for_each_nonisomorphic(n, [&](const Graph& g) {
            const auto d = DegreeSequence::of(g);
            for (int k = 1; k <= 4; ++k) CHECK(sub_k(d, k) == sub_k_by_definition(d, k));
        });
}

TEST_CASE("sub_k is monotone in k") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto d = seq(random_degrees(n, rng));
        for (int k = 1; k <= 5; ++k) CHECK(sub_k(d, k) <= sub_k(d, k + 1));
    }
}

TEST_CASE("regular closed form") {
    CHECK(sub_k_regular(10, 3, 1) == 3);
    CHECK(sub_k_regular(6, 2, 2) == 3);
    CHECK(sub_k_regular(4, 3, 3) == 2);
    CHECK_THROWS_AS(sub_k_regular(4, 4, 1), DomainError);
    CHECK_THROWS_AS(sub_k_regular(4, -1, 1), DomainError);

    // any constant sequence matches the closed form
    for (int n = 1; n <= 200; ++n)
        for (int r = 0; r < n; r += (n > 40 ? 7 : 1))
            for (int k = 1; k <= 5; ++k)
                CHECK(sub_k(seq(std::vector<int>(static_cast<std::size_t>(n), r)), k) ==
                      sub_k_regular(n, r, k));
}

TEST_CASE("complete-graph equality threshold") {
    CHECK_FALSE(kn_equality_threshold(4, 3));
    CHECK(kn_equality_threshold(5, 3));
    CHECK(kn_equality_threshold(2, 1));
    CHECK_THROWS_AS(kn_equality_threshold(4, 4), DomainError);

    for (int n = 2; n <= 30; ++n)
        for (int k = 1; k <= n - 1; ++k)
            CHECK(kn_equality_threshold(n, k) == (sub_k_regular(n, n - 1, k) == k));
}

TEST_CASE("fink_jacobson examples") {
    CHECK(fink_jacobson_bound(9, 4, 1) == 2);
    CHECK(fink_jacobson_bound(10, 3, 2) == 4);
    CHECK(fink_jacobson_bound(4, 0, 1) == 4);
    CHECK_THROWS_AS(fink_jacobson_bound(4, 4, 1), DomainError);
}

TEST_CASE("stratified bound examples") {
    const auto corona = DegreeSequence::of(star_corona(5));
    CHECK(stratified_guard(corona, 1));
    CHECK(stratified_bound(corona, 1, 1) == Rational(7, 3));
    CHECK(stratified_bound(corona, 1, 1).ceil() == sub_k(corona, 1));

    const auto spider = seq({3, 2, 2, 1, 1, 1});
    CHECK(stratified_guard(spider, 1));
    CHECK(stratified_bound(spider, 1, 1) == Rational(5, 3));
    CHECK(stratified_bound(spider, 1, 1).ceil() == sub_k(spider, 1));

    // a single degree level never satisfies the hypothesis
    const auto regular = seq({2, 2, 2, 2});
    CHECK_FALSE(stratified_guard(regular, 1));
    CHECK_THROWS_AS(stratified_bound(regular, 1, 1), PreconditionError);
    CHECK_THROWS_AS(stratified_bound(spider, 1, 0), PreconditionError);
    CHECK_THROWS_AS(stratified_bound(spider, 1, 4), PreconditionError);
}

TEST_CASE("stratified params expose the level structure") {
    const auto corona = DegreeSequence::of(star_corona(5));
    const auto p1 = stratified_params(corona, 1);
    CHECK(p1.s_t == 1);
    CHECK(p1.delta_t == 2);
    CHECK(p1.level_counts == std::vector<std::int64_t>{1});
    // the level below the maximum is empty, so t = 2 keeps the same stratum
    const auto p2 = stratified_params(corona, 2);
    CHECK(p2.s_t == 1);
    CHECK(p2.delta_t == 2);
    CHECK(p2.level_counts == std::vector<std::int64_t>{1, 0});
}

TEST_CASE("best stratified bound") {
    const auto corona = DegreeSequence::of(star_corona(5));
    const auto best = best_stratified_bound(corona, 1);
    REQUIRE(best.has_value());
    CHECK(best->t == 1);
    CHECK(best->bound == Rational(7, 3));

    CHECK_FALSE(best_stratified_bound(DegreeSequence::of(complete(5)), 1).has_value());
    CHECK_FALSE(best_stratified_bound(seq({0, 0, 0}), 1).has_value());

    const auto spider = seq({3, 2, 2, 1, 1, 1});
    const auto best_spider = best_stratified_bound(spider, 1);
    REQUIRE(best_spider.has_value());
    CHECK(best_spider->t == 1);
    CHECK(best_spider->bound == Rational(5, 3));
}

TEST_CASE("stratified bounds agree with the literal level sum") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const auto d = seq(random_degrees(n, rng));
        for (int k = 1; k <= 3; ++k) {
            const auto per_t = stratified_bounds_per_t(d, k);
            for (const auto& entry : per_t) {
                CHECK(stratified_guard(d, entry.t));
                CHECK(entry.bound == stratified_by_definition(d, k, entry.t));
                CHECK(entry.bound.ceil() <= sub_k(d, k));
            }
            // the reported best is the maximum over every valid stratum count,
            // at the smallest stratum count attaining it
            const auto best = best_stratified_bound(d, k);
            if (per_t.empty()) {
                CHECK_FALSE(best.has_value());
            } else {
                REQUIRE(best.has_value());
                for (const auto& entry : per_t) {
                    CHECK(entry.bound <= best->bound);
                    if (entry.bound == best->bound) {
                        CHECK(best->t <= entry.t);
                        break;
                    }
                }
            }
            // the hypothesis fails for every stratum count past the last valid one
            for (int t = static_cast<int>(per_t.size()) + 1; t <= d.max_degree(); ++t)
                CHECK_FALSE(stratified_guard(d, t));
        }
    }
}

TEST_CASE("corona comparison") {
    const auto c1 = corona_comparison(5, 1);
    CHECK(c1.stratified == Rational(7, 3));
    CHECK(c1.fink_jacobson == Rational(9, 5));
    CHECK(c1.difference == Rational(8, 15));

    const auto c2 = corona_comparison(100, 1);
    CHECK(c2.stratified == Rational(34));
    CHECK(c2.fink_jacobson == Rational(199, 100));
    CHECK(c2.fink_jacobson.ceil() == 2);
    CHECK(c2.difference == Rational(3201, 100));

    const auto c3 = corona_comparison(5, 2);
    CHECK(c3.stratified == Rational(4));
    CHECK(c3.fink_jacobson == Rational(3));
    CHECK(c3.difference == Rational(1));

    // the gap grows with n for fixed k
    CHECK(corona_comparison(50, 1).difference < corona_comparison(100, 1).difference);
    CHECK(corona_comparison(100, 1).difference < corona_comparison(200, 1).difference);

    CHECK_THROWS_AS(corona_comparison(3, 1), DomainError);
    CHECK_THROWS_AS(corona_comparison(5, 0), DomainError);
}

TEST_CASE("corona closed form matches the generic machinery") {
    for (int n = 4; n <= 50; ++n)
        for (int k = 1; k <= 3; ++k) {
            const auto comparison = corona_comparison(n, k);
            CHECK(comparison.stratified ==
                  Rational((2 * k - 1) * n - (k - 3), 2 + k));
            const auto direct = best_stratified_bound(DegreeSequence::of(star_corona(n)), k);
            REQUIRE(direct.has_value());
            CHECK(direct->bound == comparison.stratified);
        }
}

TEST_CASE("bound chain on small graphs") {
    for (int n = 1; n <= 6; ++n)
        for_each_nonisomorphic(n, [&](const Graph& g) {
            const auto d = DegreeSequence::of(g);
            for (int k = 1; k <= 3; ++k) {
                const int sub = sub_k(d, k);
                CHECK(fink_jacobson_bound(d.n(), d.max_degree(), k) <= sub);
                const auto best = best_stratified_bound(d, k);
                if (best) {
                    CHECK(fink_jacobson_bound(d.n(), d.max_degree(), k) <= best->bound.ceil());
                    CHECK(best->bound.ceil() <= sub);
                }
            }
        });
}
