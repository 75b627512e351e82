#pragma once

#include "hollowcheck/densemat.hpp"
#include "hollowcheck/matrix.hpp"

#include <cstddef>

namespace hollowcheck {

// y >= 0, ᵗyA = 0, ᵗyb < 0 proves {x : Ax <= b} = ∅.
struct FarkasCheck {
    bool nonnegative = false;
    bool annihilates = false;
    bool negative_bound = false;

    bool valid() const { return nonnegative && annihilates && negative_bound; }
};

template <Field T>
FarkasCheck check_farkas(const Matrix<T>& A, const Vector<T>& b, const Vector<T>& y, const T& tol = T(0)) {
    if (y.dim() != A.rows() || b.dim() != A.rows()) throw DimensionMismatch("check_farkas");
    FarkasCheck out;
    out.nonnegative = true;
    for (const auto& v : y) out.nonnegative = out.nonnegative && v >= -tol;
    out.annihilates = true;
    for (const auto& v : vec_mat(y, A)) out.annihilates = out.annihilates && ScalarTraits<T>::abs(v) <= tol;
    out.negative_bound = dot(y, b) < -tol;
    return out;
}

template <Field T>
bool satisfies(const Matrix<T>& A, const Vector<T>& b, const Vector<T>& x, const T& tol = T(0)) {
    const auto Ax = mat_vec(A, x);
    for (std::size_t i = 0; i < Ax.dim(); ++i)
        if (Ax[i] > b[i] + tol) return false;
    return true;
}

}  // namespace hollowcheck
