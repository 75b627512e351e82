#include "hollowcheck/certificate.hpp"
#include "hollowcheck/harness.hpp"
#include "hollowcheck/oracle.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace hollowcheck;
using namespace hollowcheck::oracle;
using Q = Rational;
using M = Matrix<Q>;
using V = Vector<Q>;

TEST_CASE("fm_eliminate pairs upper and lower bounds") {
    const auto e = fm_eliminate(M{{1}, {-1}}, V{1, 0}, 0);
    REQUIRE(e.system.rows.size() == 1);
    CHECK(e.system.rows[0].coeffs.is_zero());
    CHECK(e.system.rows[0].rhs == 1);
    CHECK(e.system.rows[0].multipliers == V{1, 1});

    const auto bad = fm_eliminate(M{{1}, {-1}}, V{1, -3}, 0);
    REQUIRE(bad.system.rows.size() == 1);
    CHECK(bad.system.rows[0].rhs == -2);
}

TEST_CASE("fm_eliminate passes rows without the variable through") {
    const auto e = fm_eliminate(M{{0, 1}, {1, 0}, {-1, 0}}, V{4, 2, 1}, 0);
    REQUIRE(e.system.rows.size() == 2);
    CHECK(e.system.rows[0].coeffs == V{0, 1});
    CHECK(e.system.rows[0].rhs == 4);
    CHECK(e.log[0].upper == LogEntry::npos);
    CHECK(e.log[1].lower == 2);
    CHECK(e.log[1].upper == 1);
}

TEST_CASE("fm_eliminate keeps only the tightest of proportional rows") {
    const auto e = fm_eliminate(M{{0, 1}, {0, 2}, {0, 3}}, V{4, 6, 30}, 0);
    REQUIRE(e.system.rows.size() == 1);
    CHECK(e.system.rows[0].coeffs == V{0, 2});
    CHECK(e.system.rows[0].rhs == 6);
    CHECK_THROWS_AS(fm_eliminate(M{{1}}, V{1}, 1), DimensionMismatch);
}

TEST_CASE("fm_eliminate rejects blowups past the row cap") {
    M A(6, 2);
    V b(6);
    for (std::size_t i = 0; i < 6; ++i) {
        A(i, 0) = i < 3 ? 1 : -1;
        A(i, 1) = Q(static_cast<int>(i));
    }
    CHECK_THROWS_AS(fm_eliminate(A, b, 0, FmOptions{8}), SizeExceeded);
    CHECK_NOTHROW(fm_eliminate(A, b, 0, FmOptions{9}));
}

TEST_CASE("fm_feasible on the hand instances") {
    const auto infeasible = fm_feasible(M{{1}, {1}, {-1}}, V{1, 2, -3});
    CHECK_FALSE(infeasible.feasible());
    CHECK(infeasible.certificate == V{1, 0, 1});

    const auto feasible = fm_feasible(M{{1}, {1}, {-1}}, V{1, 2, 0});
    CHECK(feasible.feasible());
    CHECK(feasible.witness == V{Q(1, 2)});
}

TEST_CASE("fm_feasible witness rules") {
    CHECK(fm_feasible(FmSystem::unconstrained(1)).witness == V{0});
    CHECK(fm_feasible(M{{-1}}, V{-3}).witness == V{4});
    CHECK(fm_feasible(M{{1}}, V{-3}).witness == V{-4});
    CHECK(fm_feasible(M{{1}, {-1}}, V{2, -2}).witness == V{2});
}

TEST_CASE("fm_feasible catches an input row 0 <= negative") {
    const auto r = fm_feasible(M{{0, 0}, {1, 0}}, V{-1, 5});
    CHECK_FALSE(r.feasible());
    CHECK(r.certificate == V{1, 0});
}

TEST_CASE("fm_feasible agrees with vertex enumeration and its outputs validate") {
    harness::Rng rng(51);
    int feasible = 0, infeasible = 0;
    for (int t = 0; t < 400; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto n = static_cast<std::size_t>(rng.uniform(1, 2));
        M A(m, n);
        V b(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) A(i, j) = rng.uniform(-3, 3);
            b[i] = rng.uniform(-3, 3);
        }
        const auto r = fm_feasible(A, b);
        CHECK(r.feasible() == testing::vertex_feasible(A, b).has_value());
        if (r.feasible()) {
            ++feasible;
            CHECK(testing::naive_satisfies(A, b, r.witness));
        } else {
            ++infeasible;
            CHECK(check_farkas(A, b, r.certificate).valid());
        }
    }
    CHECK(feasible > 50);
    CHECK(infeasible > 50);
}

TEST_CASE("fm_feasible on three variables agrees with vertex enumeration") {
    for (const auto& spec : harness::make_specs(52, 150, 7, 3, 4)) {
        const auto sys = harness::gen_random_system(spec);
        const auto r = fm_feasible(sys.A, sys.b);
        CHECK(r.feasible() == testing::vertex_feasible(sys.A, sys.b).has_value());
        if (r.feasible()) CHECK(testing::naive_satisfies(sys.A, sys.b, r.witness));
        else CHECK(check_farkas(sys.A, sys.b, r.certificate).valid());
    }
}

TEST_CASE("a point is feasible for the projection iff it extends") {
    harness::Rng rng(53);
    for (int t = 0; t < 150; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform(2, 5));
        M A(m, 2);
        V b(m);
        for (std::size_t i = 0; i < m; ++i) {
            A(i, 0) = rng.uniform(-3, 3);
            A(i, 1) = rng.uniform(-3, 3);
            b[i] = rng.uniform(-3, 3);
        }
        const auto projected = fm_eliminate(A, b, 0).system;
        for (int p = 0; p < 8; ++p) {
            const Q y = rng.small_rational(3, 2);
            bool in_projection = true;
            for (const auto& row : projected.rows) in_projection = in_projection && row.coeffs[1] * y <= row.rhs;
            // Extension search: the x with a_i0 x <= b_i - a_i1 y for all i.
            std::optional<Q> lo, hi;
            bool consistent = true;
            for (std::size_t i = 0; i < m; ++i) {
                const Q rest = b[i] - A(i, 1) * y;
                if (A(i, 0) == 0) consistent = consistent && rest >= 0;
                else if (A(i, 0) > 0) hi = hi ? std::min(*hi, Q(rest / A(i, 0))) : Q(rest / A(i, 0));
                else lo = lo ? std::max(*lo, Q(rest / A(i, 0))) : Q(rest / A(i, 0));
            }
            const bool extends = consistent && (!lo || !hi || *lo <= *hi);
            CHECK(in_projection == extends);
        }
    }
}

TEST_CASE("multipliers reproduce every derived row") {
    const M A{{1, 2}, {-1, 1}, {2, -3}, {-1, -1}};
    const V b{4, 1, 3, 2};
    const auto e = fm_eliminate(A, b, 0);
    for (const auto& row : e.system.rows) {
        CHECK(vec_mat(row.multipliers, A) == row.coeffs);
        CHECK(dot(row.multipliers, b) == row.rhs);
        for (const auto& y : row.multipliers) CHECK(y >= 0);
    }
}

TEST_CASE("residual_interval") {
    const auto system = FmSystem::from(M{{1, 1}, {-1, 0}, {0, 1}}, V{4, 0, 1});
    const auto r = residual_interval(system, 0, V{0, 1});
    CHECK(*r.lower == 0);
    CHECK(*r.upper == 3);
    CHECK(r.nonempty());
    const auto bad = residual_interval(system, 0, V{0, 2});
    CHECK_FALSE(bad.consistent);
}
