#include "hollowcheck/certificate.hpp"
#include "hollowcheck/harness.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace hollowcheck;
using namespace hollowcheck::harness;
using Q = Rational;
using M = Matrix<Q>;
using V = Vector<Q>;

TEST_CASE("gen_random_system is reproducible and satisfies the assumptions") {
    const GenSpec spec{1, 4, 2, 3, 3};
    const auto a = gen_random_system(spec);
    const auto b = gen_random_system(spec);
    CHECK(a.A == b.A);
    CHECK(a.b == b.b);
    CHECK(check_assumptions(a.A, a.b).ok());
    CHECK(serialize(a.A, a.b) == serialize(b.A, b.b));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(abs(a.A(i, j)) <= 3);
}

TEST_CASE("GenSpec invariants") {
    CHECK_THROWS_AS(gen_random_system(GenSpec{1, 2, 2, 3, 3}), InvalidDimension);
    CHECK_THROWS_AS(gen_random_system(GenSpec{1, 3, 0, 3, 3}), InvalidDimension);
    CHECK_THROWS_AS(gen_random_system(GenSpec{1, 3, 2, 0, 3}), InvalidDimension);
}

TEST_CASE("Rng streams are fixed for a seed") {
    Rng a(99), b(99);
    for (int i = 0; i < 20; ++i) CHECK(a.uniform(-5, 5) == b.uniform(-5, 5));
    Rng c(7);
    for (int i = 0; i < 200; ++i) {
        const auto x = c.uniform(-2, 3);
        CHECK(x >= -2);
        CHECK(x <= 3);
    }
}

TEST_CASE("make_specs respects its bounds") {
    const auto specs = make_specs(5, 100, 8, 3, 5);
    CHECK(specs.size() == 100);
    for (const auto& s : specs) {
        CHECK(s.n >= 1);
        CHECK(s.n <= 3);
        CHECK(s.m > s.n);
        CHECK(s.m <= 8);
    }
    CHECK(make_specs(5, 100, 8, 3, 5)[17].seed == specs[17].seed);
}

TEST_CASE("probe_lemma1 holds on generated systems") {
    for (const auto& spec : make_specs(61, 30, 8, 4, 5)) {
        const auto r = probe_lemma1(gen_random_system(spec), 20, spec.seed);
        CHECK(r.checks == 61);
        CHECK(r.positives >= 21);
        CHECK(r.negatives >= 20);
    }
}

TEST_CASE("probe_lemma1 on the 1D instance: positives, perturbation and zero") {
    const auto sys = make_standard(M{{1}, {1}, {-1}}, V{1, 2, 0});
    const auto dec = decompose(sys);
    const M Rhat = vstack(dec.R, M::identity(1));
    const V c = mat_vec(Rhat, V{Q(3, 2)});
    CHECK(mat_vec(build_U(dec), c).is_zero());
    V perturbed = c;
    perturbed[0] += 1;
    CHECK_FALSE(mat_vec(build_U(dec), perturbed).is_zero());
    const M A = dec.permuted_A();
    const M AAp = mat_mul(A, pinv_full_col_rank(A));
    CHECK(mat_vec(AAp, c) == c);
    CHECK(mat_vec(AAp, perturbed) != perturbed);
}

TEST_CASE("probe_lemma2 over k <= n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            const auto r = probe_lemma2(n, k, 20, 1000 * n + k);
            CHECK(r.checks == 61);
        }
    CHECK_THROWS_AS(probe_lemma2(2, 3, 1, 1), InvalidDimension);
}

TEST_CASE("pinv_rank_factorization satisfies the Penrose axioms on rank-deficient matrices") {
    Rng rng(62);
    for (int t = 0; t < 60; ++t) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto c = static_cast<std::size_t>(rng.uniform(1, 4));
        M A(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) A(i, j) = rng.uniform(-1, 1);
        const M P = pinv_rank_factorization(A);
        const M AP = testing::naive_mul(A, P);
        const M PA = testing::naive_mul(P, A);
        CHECK(testing::naive_mul(AP, A) == A);
        CHECK(testing::naive_mul(PA, P) == P);
        CHECK(testing::naive_transpose(AP) == AP);
        CHECK(testing::naive_transpose(PA) == PA);
    }
}

TEST_CASE("probe_theorem1 on the hand instances") {
    const auto empty = probe_theorem1(make_standard(M{{1}, {1}, {-1}}, V{1, 2, -3}), 0);
    CHECK(empty.support == std::vector<std::size_t>{0, 2});
    CHECK_FALSE(empty.interval_contains_zero);
    CHECK_FALSE(empty.subsystem_feasible);
    CHECK(empty.agree());

    const auto ne = probe_theorem1(make_standard(M{{1}, {1}, {-1}}, V{1, 2, 0}), 0);
    CHECK(ne.interval_contains_zero);
    CHECK(ne.subsystem_feasible);
    CHECK_THROWS_AS(probe_theorem1(make_standard(M{{1}, {1}, {-1}}, V{1, 2, 0}), 2), InvalidDimension);
}

TEST_CASE("theorem1_run agrees on a random batch") {
    const auto stats = theorem1_run(make_specs(63, 60, 8, 3, 5));
    CHECK(stats.instances == 60);
    CHECK(stats.agreements == stats.checks);
    CHECK(stats.findings.empty());
}

TEST_CASE("tally classifies the hand instances") {
    AgreementStats stats;
    tally(make_standard(M{{1}, {1}, {-1}}, V{1, 2, -3}), "", stats);
    tally(make_standard(M{{1}, {1}, {-1}}, V{1, 2, 0}), "", stats);
    CHECK(stats.total == 2);
    CHECK(stats.empty_agree == 1);
    CHECK(stats.notproven_and_feasible == 1);
    CHECK(stats.discrepancies.empty());
    CHECK(stats.family_failures[static_cast<std::size_t>(Family::Canonical)] == 1);
    CHECK(stats.consistent());
}

TEST_CASE("agreement_run is reproducible and its discrepancies replay") {
    const auto specs = make_specs(64, 150, 8, 3, 5);
    const auto a = agreement_run(specs, Mode::Algorithm);
    const auto b = agreement_run(specs, Mode::Algorithm);
    CHECK(a.consistent());
    CHECK(a.total == 150);
    CHECK(a.empty_agree == b.empty_agree);
    CHECK(a.notproven_and_feasible == b.notproven_and_feasible);
    REQUIRE(a.discrepancies.size() == b.discrepancies.size());
    for (std::size_t i = 0; i < a.discrepancies.size(); ++i) {
        CHECK(a.discrepancies[i].minimized == b.discrepancies[i].minimized);
        // The minimized instance still shows the discrepancy.
        const auto& text = a.discrepancies[i].minimized;
        CAPTURE(text);
        std::istringstream in(text);
        std::size_t m = 0, n = 0;
        in >> m >> n;
        M A(m, n);
        V bb(m);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                std::string tok;
                in >> tok;
                A(r, c) = *parse_rational(tok);
            }
            std::string tok;
            in >> tok;
            bb[r] = *parse_rational(tok);
        }
        const auto sys = make_standard(A, bb);
        CHECK(decide(sys).verdict == Verdict::NotProvenEmpty);
        CHECK_FALSE(testing::vertex_feasible(A, bb).has_value());
    }
}

TEST_CASE("shrink removes rows and reduces entries while the predicate holds") {
    // Predicate: infeasible. Start from a padded infeasible system.
    const M A{{1, 0}, {0, 1}, {-1, 0}, {3, 5}, {-4, 2}};
    const V b{1, 5, -3, 40, 40};
    auto infeasible = [](const M& a, const V& bb) { return !testing::vertex_feasible(a, bb).has_value(); };
    auto [SA, Sb] = shrink(A, b, infeasible);
    CHECK(infeasible(SA, Sb));
    CHECK(check_assumptions(SA, Sb).ok());
    CHECK(SA.rows() == 3);
}

TEST_CASE("permutation_sensitivity is reproducible") {
    const auto specs = make_specs(65, 40, 8, 3, 5);
    const auto a = permutation_sensitivity(specs, 3, Mode::Algorithm);
    const auto b = permutation_sensitivity(specs, 3, Mode::Algorithm);
    CHECK(a.instances == 40);
    CHECK(a.changed_instances == b.changed_instances);
    CHECK(a.examples.size() == a.changed_instances);
}

TEST_CASE("gen_raw_system covers every form") {
    const GenSpec spec{3, 2, 3, 2, 2};
    for (auto form : {RawForm::Ineq, RawForm::IneqNonneg, RawForm::EqNonneg}) {
        const auto raw = gen_raw_system(spec, form);
        CHECK(raw.form == form);
        CHECK(raw.A.rows() == 2);
        CHECK(raw.A.cols() == 3);
    }
}
