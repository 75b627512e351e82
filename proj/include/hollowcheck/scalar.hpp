#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace hollowcheck {

// GMP rationals are canonicalized on every operation: lowest terms, positive
// denominator.
using Rational = boost::multiprecision::mpq_rational;

enum class Backend { Rational, Float64 };

// Relative zero test used by the float64 backend:
//   |x| <= rel * (1 + scale)
// where scale is the max-abs entry of the operand being reduced.
struct Tolerance {
    double rel = 1e-9;
};

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr Backend backend = Backend::Rational;
    static constexpr std::string_view name = "rational";

    static bool is_zero(const Rational& x, const Rational& /*scale*/ = 0, Tolerance /*tol*/ = {}) {
        return x.is_zero();
    }
    static int sign(const Rational& x, const Rational& /*scale*/ = 0, Tolerance /*tol*/ = {}) {
        return x.sign();
    }
    static Rational abs(const Rational& x) { return boost::multiprecision::abs(x); }
    static std::string to_string(const Rational& x) { return x.str(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr Backend backend = Backend::Float64;
    static constexpr std::string_view name = "float64";

    static bool is_zero(double x, double scale = 0.0, Tolerance tol = {}) {
        return std::abs(x) <= tol.rel * (1.0 + scale);
    }
    static int sign(double x, double scale = 0.0, Tolerance tol = {}) {
        if (is_zero(x, scale, tol)) return 0;
        return x > 0 ? 1 : -1;
    }
    static double abs(double x) { return std::abs(x); }
    static std::string to_string(double x);
};

template <typename T>
concept Field = requires { ScalarTraits<T>::backend; };

// Exact parse of "12", "-3", "1/3", "-2.75", "+0.5", "4e-2".
std::optional<Rational> parse_rational(std::string_view text);

double to_double(const Rational& x);

template <Field T>
T from_rational(const Rational& x) {
    if constexpr (std::is_same_v<T, Rational>) {
        return x;
    } else {
        return to_double(x);
    }
}

}  // namespace hollowcheck
