#include "hollowcheck/certificate.hpp"
#include "hollowcheck/harness.hpp"
#include "hollowcheck/oracle.hpp"
#include "hollowcheck/standardize.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace hollowcheck;
using Q = Rational;
using M = Matrix<Q>;
using V = Vector<Q>;

namespace {

StandardSystem<Q> standard_or_fail(const RawSystem<Q>& raw) {
    auto result = standardize(raw);
    REQUIRE(std::holds_alternative<StandardSystem<Q>>(result));
    return std::get<StandardSystem<Q>>(result);
}

}  // namespace

TEST_CASE("drop_or_decide_zero_rows") {
    const auto early = drop_or_decide_zero_rows(M{{0, 0}, {1, 0}}, V{-1, 5});
    REQUIRE(std::holds_alternative<EarlyEmpty<Q>>(early));
    CHECK(std::get<EarlyEmpty<Q>>(early).row == 0);
    CHECK(std::get<EarlyEmpty<Q>>(early).bound == -1);

    const auto reduced = drop_or_decide_zero_rows(M{{0, 0}, {1, 0}}, V{3, 5});
    REQUIRE(std::holds_alternative<ReducedSystem<Q>>(reduced));
    const auto& r = std::get<ReducedSystem<Q>>(reduced);
    CHECK(r.A == M{{1, 0}});
    CHECK(r.b == V{5});
    CHECK(r.kept == std::vector<std::size_t>{1});

    const auto same = drop_or_decide_zero_rows(M{{1}, {2}}, V{1, 2});
    CHECK(std::get<ReducedSystem<Q>>(same).A == M{{1}, {2}});

    CHECK_THROWS_AS(drop_or_decide_zero_rows(M{{0}, {0}}, V{0, 1}), AllRowsRemoved);
}

TEST_CASE("check_assumptions") {
    CHECK(check_assumptions(M{{1}, {2}, {3}}, V{0, 0, 0}).ok());
    const auto square = check_assumptions(M{{1, 0}, {0, 1}}, V{0, 0});
    CHECK_FALSE(square.tall());
    CHECK_FALSE(square.ok());
    const auto zero_row = check_assumptions(M{{1}, {0}, {1}}, V{0, 0, 0});
    CHECK_FALSE(zero_row.no_zero_rows());
    CHECK(zero_row.zero_rows == std::vector<std::size_t>{1});
    const auto deficient = check_assumptions(M{{1, 2}, {2, 4}, {3, 6}}, V{0, 0, 0});
    CHECK_FALSE(deficient.full_column_rank());
    CHECK_THROWS_AS(make_standard(M{{1, 0}, {0, 1}}, V{0, 0}), AssumptionViolation);
}

TEST_CASE("standardize ineq sign-splits a short system") {
    const auto sys = standard_or_fail(RawSystem<Q>(RawForm::Ineq, M{{1}}, V{5}));
    CHECK(sys.A == M{{1, -1}, {-1, 0}, {0, -1}});
    CHECK(sys.b == V{5, 0, 0});
    CHECK(sys.embedding == Embedding::SignSplit);
    CHECK(sys.columns == std::vector<ColumnOrigin>{{0, 1}, {0, -1}});
    CHECK(sys.to_original(V{3, 1}) == V{2});
    CHECK(sys.from_original(V{-4}) == V{0, 4});
}

TEST_CASE("standardize ineq-nonneg appends -I") {
    const auto sys = standard_or_fail(RawSystem<Q>(RawForm::IneqNonneg, M{{1, 1}}, V{1}));
    CHECK(sys.A == M{{1, 1}, {-1, 0}, {0, -1}});
    CHECK(sys.b == V{1, 0, 0});
    CHECK(sys.embedding == Embedding::Nonneg);
}

TEST_CASE("standardize eq-nonneg stacks both inequalities and -I") {
    const auto sys = standard_or_fail(RawSystem<Q>(RawForm::EqNonneg, M{{1}}, V{2}));
    CHECK(sys.A == M{{1}, {-1}, {-1}});
    CHECK(sys.b == V{2, -2, 0});
    using K = RowOrigin::Kind;
    CHECK(sys.rows == std::vector<RowOrigin>{{K::Constraint, 0}, {K::NegatedConstraint, 0}, {K::Nonneg, 0}});
}

TEST_CASE("standardize bypasses systems already in standard shape") {
    const auto sys = standard_or_fail(RawSystem<Q>(RawForm::Ineq, M{{1}, {1}, {-1}}, V{1, 2, 0}));
    CHECK(sys.embedding == Embedding::None);
    CHECK(sys.A == M{{1}, {1}, {-1}});
}

TEST_CASE("standardize drops null rows and decides on negative ones") {
    const auto sys = standard_or_fail(RawSystem<Q>(RawForm::Ineq, M{{1}, {0}, {1}, {-1}}, V{1, 4, 2, 0}));
    CHECK(sys.A == M{{1}, {1}, {-1}});
    CHECK(sys.rows[1] == RowOrigin{RowOrigin::Kind::Constraint, 2});

    const auto early = standardize(RawSystem<Q>(RawForm::IneqNonneg, M{{1, 0}, {0, 0}}, V{1, -2}));
    REQUIRE(std::holds_alternative<EarlyEmpty<Q>>(early));
    CHECK(std::get<EarlyEmpty<Q>>(early).origin == RowOrigin{RowOrigin::Kind::Constraint, 1});

    const auto eq = standardize(RawSystem<Q>(RawForm::EqNonneg, M{{0}}, V{3}));
    REQUIRE(std::holds_alternative<EarlyEmpty<Q>>(eq));
    CHECK(std::get<EarlyEmpty<Q>>(eq).origin == RowOrigin{RowOrigin::Kind::NegatedConstraint, 0});
}

TEST_CASE("standardize appends an implied row when only the -I block survives") {
    const auto sys = standard_or_fail(RawSystem<Q>(RawForm::IneqNonneg, M{{0, 0}}, V{1}));
    CHECK(sys.A == M{{-1, 0}, {0, -1}, {-1, -1}});
    CHECK(sys.b == V{0, 0, 0});
    CHECK(sys.rows.back().kind == RowOrigin::Kind::Redundant);
    CHECK(check_assumptions(sys.A, sys.b).ok());
}

TEST_CASE("feasibility of random points is preserved by standardization") {
    harness::Rng rng(31);
    for (int t = 0; t < 150; ++t) {
        const auto form = static_cast<RawForm>(t % 3);
        harness::GenSpec spec{rng.next(), static_cast<std::size_t>(rng.uniform(1, 4)),
                              static_cast<std::size_t>(rng.uniform(1, 3)), 3, 3};
        const auto raw = harness::gen_raw_system(spec, form);
        auto result = standardize(raw);
        if (auto* early = std::get_if<EarlyEmpty<Q>>(&result)) {
            CHECK(early->bound < 0);
            CHECK_FALSE(testing::vertex_feasible(raw_inequalities(raw).first, raw_inequalities(raw).second));
            continue;
        }
        const auto& sys = std::get<StandardSystem<Q>>(result);
        CHECK(check_assumptions(sys.A, sys.b).ok());
        const auto [RA, Rb] = raw_inequalities(raw);
        for (int p = 0; p < 10; ++p) {
            const V x = rng.small_vector(raw.variables(), 3, 2);
            CHECK(satisfies(RA, Rb, x) == satisfies(sys.A, sys.b, sys.from_original(x)));
        }
        // Any standardized witness maps back to a raw one.
        const auto fm = oracle::fm_feasible(sys.A, sys.b);
        if (fm.feasible()) CHECK(satisfies(RA, Rb, sys.to_original(fm.witness)));
        CHECK(fm.feasible() == testing::vertex_feasible(RA, Rb).has_value());
    }
}

TEST_CASE("raw forms parse and print") {
    CHECK(parse_form("ineq") == RawForm::Ineq);
    CHECK(parse_form("ineq-nonneg") == RawForm::IneqNonneg);
    CHECK(parse_form("eq-nonneg") == RawForm::EqNonneg);
    CHECK_FALSE(parse_form("eq").has_value());
    CHECK(to_string(RawForm::EqNonneg) == "eq-nonneg");
}
