#pragma once

#include "hollowcheck/harness.hpp"

#include <utility>
#include <vector>

namespace hollowcheck::harness {

namespace detail {

inline bool standard_shape(const Matrix<Rational>& A, const Vector<Rational>& b) {
    return check_assumptions(A, b).ok();
}

// Candidates strictly closer to 0 than x, nearest-to-zero first.
inline std::vector<Rational> toward_zero(const Rational& x) {
    std::vector<Rational> out;
    if (x == 0) return out;
    out.emplace_back(0);
    const Rational half = x / 2;
    Rational trunc_half(boost::multiprecision::numerator(half) / boost::multiprecision::denominator(half));
    if (trunc_half != 0) out.push_back(trunc_half);
    const Rational step = x > 0 ? Rational(x - 1) : Rational(x + 1);
    if (abs(step) < abs(x) && step != 0 && step != trunc_half) out.push_back(step);
    return out;
}

}  // namespace detail

template <typename Pred>
std::pair<Matrix<Rational>, Vector<Rational>> shrink(Matrix<Rational> A, Vector<Rational> b, Pred still_failing) {
    // Row removal.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < A.rows() && A.rows() > A.cols() + 1; ++r) {
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < A.rows(); ++i)
                if (i != r) keep.push_back(i);
            Matrix<Rational> A2 = select_rows(A, keep);
            Vector<Rational> b2(keep.size());
            for (std::size_t i = 0; i < keep.size(); ++i) b2[i] = b[keep[i]];
            if (detail::standard_shape(A2, b2) && still_failing(A2, b2)) {
                A = std::move(A2);
                b = std::move(b2);
                changed = true;
                break;
            }
        }
    }
    // Entry magnitude reduction.
    changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            for (std::size_t j = 0; j <= A.cols(); ++j) {
                const Rational current = j < A.cols() ? A(i, j) : b[i];
                for (const auto& cand : detail::toward_zero(current)) {
                    Matrix<Rational> A2 = A;
                    Vector<Rational> b2 = b;
                    if (j < A.cols()) A2(i, j) = cand;
                    else b2[i] = cand;
                    if (detail::standard_shape(A2, b2) && still_failing(A2, b2)) {
                        A = std::move(A2);
                        b = std::move(b2);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    return {std::move(A), std::move(b)};
}

}  // namespace hollowcheck::harness
