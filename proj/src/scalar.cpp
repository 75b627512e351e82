#include "hollowcheck/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace hollowcheck {

std::string ScalarTraits<double>::to_string(double x) {
    if (x == 0.0) return "0";  // folds -0
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) return "nan";
    return std::string(buf.data(), end);
}

namespace {

using boost::multiprecision::mpz_int;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Signed decimal with optional fraction and exponent; no "/".
std::optional<Rational> parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 4) return std::nullopt;
        auto [p, ec] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
        if (ec != std::errc{} || p != exp_part.data() + exp_part.size()) return std::nullopt;
        if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
        if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;

    std::string digits(int_part);
    digits.append(frac_part);
    mpz_int numerator(digits);
    mpz_int denominator = 1;
    long scale = static_cast<long>(frac_part.size()) - exponent;
    mpz_int ten = 10;
    if (scale > 0) {
        denominator = boost::multiprecision::pow(ten, static_cast<unsigned>(scale));
    } else if (scale < 0) {
        numerator *= boost::multiprecision::pow(ten, static_cast<unsigned>(-scale));
    }
    Rational value(numerator, denominator);
    return negative ? Rational(-value) : value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_decimal(text);

    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_int d{std::string(den)};
    if (d == 0) return std::nullopt;
    Rational value(mpz_int{std::string(num)}, d);
    return negative ? Rational(-value) : value;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace hollowcheck
