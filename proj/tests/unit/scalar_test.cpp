#include "hollowcheck/matrix.hpp"
#include "hollowcheck/scalar.hpp"

#include <doctest.h>

using namespace hollowcheck;

TEST_CASE("parse_rational reads integers, fractions, decimals and exponents exactly") {
    CHECK(*parse_rational("12") == Rational(12));
    CHECK(*parse_rational("-3") == Rational(-3));
    CHECK(*parse_rational("+7") == Rational(7));
    CHECK(*parse_rational("1/3") == Rational(1, 3));
    CHECK(*parse_rational("-4/6") == Rational(-2, 3));
    CHECK(*parse_rational("-2.75") == Rational(-11, 4));
    CHECK(*parse_rational("0.1") == Rational(1, 10));
    CHECK(*parse_rational(".5") == Rational(1, 2));
    CHECK(*parse_rational("4e-2") == Rational(1, 25));
    CHECK(*parse_rational("1.5E3") == Rational(1500));
}

TEST_CASE("parse_rational rejects malformed text") {
    for (const char* bad : {"", "-", "1/0", "1/", "/2", "abc", "1.2.3", "1e", "1/2/3", "--1", "0x10", "1 2"}) {
        CAPTURE(bad);
        CHECK_FALSE(parse_rational(bad).has_value());
    }
}

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
    const Rational x = Rational(6) / Rational(-4);
    CHECK(numerator(x) == -3);
    CHECK(denominator(x) == 2);
    CHECK(ScalarTraits<Rational>::to_string(x) == "-3/2");
    CHECK(ScalarTraits<Rational>::to_string(Rational(4, 2)) == "2");
}

TEST_CASE("float64 zero test is relative to the operand scale") {
    using F = ScalarTraits<double>;
    CHECK(F::is_zero(1e-10));
    CHECK_FALSE(F::is_zero(1e-8));
    CHECK(F::is_zero(1e-4, 1e6));
    CHECK(F::sign(-1e-12) == 0);
    CHECK(F::sign(-1.0) == -1);
    CHECK(F::is_zero(1e-6, 0.0, Tolerance{1e-5}));
    CHECK(F::to_string(0.1) == "0.1");
    CHECK(F::to_string(-0.0) == "0");
}

TEST_CASE("matrices reject empty shapes") {
    CHECK_THROWS_AS(Matrix<Rational>(0, 2), InvalidDimension);
    CHECK_THROWS_AS(Matrix<Rational>(2, 0), InvalidDimension);
    CHECK_NOTHROW(Vector<Rational>(0));
}

TEST_CASE("matrix accessors and transpose") {
    const Matrix<Rational> M{{1, 2, 3}, {4, 5, 6}};
    CHECK(M.rows() == 2);
    CHECK(M.cols() == 3);
    CHECK(M.row(1) == Vector<Rational>{4, 5, 6});
    CHECK(M.col(2) == Vector<Rational>{3, 6});
    CHECK(M.transpose() == Matrix<Rational>{{1, 4}, {2, 5}, {3, 6}});
    CHECK(M.max_abs() == 6);
    CHECK(Matrix<Rational>::identity(2) == Matrix<Rational>{{1, 0}, {0, 1}});
    CHECK(to_string(Vector<Rational>{Rational(1, 2), -3}) == "(1/2, -3)");
}
