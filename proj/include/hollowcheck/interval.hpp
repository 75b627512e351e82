#pragma once

// Interval arithmetic over the extended reals: sums, scaling by a real with
// the three-way sign split, and linear combinations ᵗz·𝕒 = Σ zᵢ·Iᵢ.
//
// Each variable occurs once in a linear combination, so the interval result
// is exactly {ᵗz a : a ∈ 𝕒} rather than an enclosure.

#include "hollowcheck/errors.hpp"
#include "hollowcheck/matrix.hpp"
#include "hollowcheck/scalar.hpp"

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hollowcheck {

template <Field T>
class ExtReal {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtReal(T value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

    static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }
    static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    const T& value() const { return value_; }

    friend std::strong_ordering operator<=>(const ExtReal& x, const ExtReal& y) {
        if (x.kind_ != y.kind_) return x.kind_ <=> y.kind_;
        if (x.kind_ != Kind::Finite) return std::strong_ordering::equal;
        if (x.value_ < y.value_) return std::strong_ordering::less;
        if (y.value_ < x.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const ExtReal& x, const ExtReal& y) { return (x <=> y) == 0; }

    std::string str() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "+inf";
            case Kind::Finite: break;
        }
        return ScalarTraits<T>::to_string(value_);
    }

private:
    explicit ExtReal(Kind kind) : kind_(kind), value_(0) {}

    Kind kind_;
    T value_;
};

template <Field T>
class Interval {
public:
    Interval(ExtReal<T> lo, ExtReal<T> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (hi_ < lo_) throw InvalidInterval("[" + lo_.str() + ", " + hi_.str() + "]");
    }

    static Interval point(const T& x) { return {x, x}; }
    static Interval zero() { return point(T(0)); }
    static Interval below(const T& b) { return {ExtReal<T>::neg_inf(), b}; }
    static Interval whole() { return {ExtReal<T>::neg_inf(), ExtReal<T>::pos_inf()}; }

    const ExtReal<T>& lo() const { return lo_; }
    const ExtReal<T>& hi() const { return hi_; }

    bool is_thin() const { return lo_ == hi_; }
    bool contains(const T& x) const { return lo_ <= ExtReal<T>(x) && ExtReal<T>(x) <= hi_; }

    std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    ExtReal<T> lo_;
    ExtReal<T> hi_;
};

template <Field T>
std::ostream& operator<<(std::ostream& os, const Interval<T>& x) {
    return os << x.str();
}

template <Field T>
class IntervalVector {
public:
    explicit IntervalVector(std::vector<Interval<T>> boxes) : boxes_(std::move(boxes)) {
        if (boxes_.empty()) throw InvalidDimension("interval vector must be nonempty");
    }

    std::size_t dim() const { return boxes_.size(); }
    const Interval<T>& operator[](std::size_t i) const { return boxes_[i]; }
    auto begin() const { return boxes_.begin(); }
    auto end() const { return boxes_.end(); }

private:
    std::vector<Interval<T>> boxes_;
};

namespace detail {

template <Field T>
ExtReal<T> ext_add(const ExtReal<T>& x, const ExtReal<T>& y) {
    using K = typename ExtReal<T>::Kind;
    if (x.is_finite() && y.is_finite()) return ExtReal<T>(x.value() + y.value());
    if ((x.kind() == K::NegInf && y.kind() == K::PosInf) ||
        (x.kind() == K::PosInf && y.kind() == K::NegInf)) {
        throw UndefinedSum("(-inf) + (+inf)");
    }
    return x.is_finite() ? y : x;
}

// z * x for z != 0.
template <Field T>
ExtReal<T> ext_scale(const T& z, const ExtReal<T>& x) {
    if (x.is_finite()) return ExtReal<T>(z * x.value());
    const bool flip = z < T(0);
    const bool neg = (x.kind() == ExtReal<T>::Kind::NegInf) != flip;
    return neg ? ExtReal<T>::neg_inf() : ExtReal<T>::pos_inf();
}

}  // namespace detail

template <Field T>
Interval<T> iv_add(const Interval<T>& x, const Interval<T>& y) {
    return {detail::ext_add(x.lo(), y.lo()), detail::ext_add(x.hi(), y.hi())};
}

template <Field T>
Interval<T> iv_scale(const T& z, const Interval<T>& x) {
    if (z == T(0)) return Interval<T>::zero();
    if (z > T(0)) return {detail::ext_scale(z, x.lo()), detail::ext_scale(z, x.hi())};
    return {detail::ext_scale(z, x.hi()), detail::ext_scale(z, x.lo())};
}

template <Field T>
Interval<T> iv_dot(const Vector<T>& z, const IntervalVector<T>& boxes) {
    if (z.dim() != boxes.dim()) {
        throw DimensionMismatch("iv_dot: " + std::to_string(z.dim()) + " coefficients vs " +
                                std::to_string(boxes.dim()) + " intervals");
    }
    Interval<T> acc = Interval<T>::zero();
    for (std::size_t i = 0; i < z.dim(); ++i) acc = iv_add(acc, iv_scale(z[i], boxes[i]));
    return acc;
}

template <Field T>
bool contains_zero(const Interval<T>& x) {
    return x.contains(T(0));
}

// 𝕔 = {c : -∞ ≤ c ≤ b}
template <Field T>
IntervalVector<T> box_below(const Vector<T>& b) {
    std::vector<Interval<T>> boxes;
    boxes.reserve(b.dim());
    for (const auto& bi : b) boxes.push_back(Interval<T>::below(bi));
    return IntervalVector<T>(std::move(boxes));
}

}  // namespace hollowcheck
