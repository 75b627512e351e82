#pragma once

// Dense linear algebra over Rational (exact) or double (tolerance-based
// pivoting). Every routine is a pure function of its arguments.

#include "hollowcheck/errors.hpp"
#include "hollowcheck/matrix.hpp"
#include "hollowcheck/scalar.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hollowcheck {

namespace detail {

inline std::string dims(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

template <Field T>
bool is_zero_scaled(const T& x, const T& scale, Tolerance tol) {
    if constexpr (std::is_same_v<T, double>) {
        return ScalarTraits<T>::is_zero(x, scale, tol);
    } else {
        return x == 0;
    }
}

// Flip v so its first nonzero entry is positive. Basis vectors come out in a
// canonical orientation, which keeps test enumeration deterministic.
template <Field T>
void orient(Vector<T>& v) {
    for (const auto& x : v) {
        if (x == T(0)) continue;
        if (x < T(0)) v = -v;
        return;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Products

template <Field T>
Matrix<T> mat_mul(const Matrix<T>& A, const Matrix<T>& B) {
    if (A.cols() != B.rows()) {
        throw DimensionMismatch("mat_mul " + detail::dims(A.rows(), A.cols()) + " * " +
                                detail::dims(B.rows(), B.cols()));
    }
    Matrix<T> C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const T& a = A(i, k);
            if (a == T(0)) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += a * B(k, j);
        }
    }
    return C;
}

template <Field T>
Vector<T> mat_vec(const Matrix<T>& A, const Vector<T>& x) {
    if (A.cols() != x.dim()) throw DimensionMismatch("mat_vec");
    Vector<T> y(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) y[i] += A(i, j) * x[j];
    return y;
}

// Row vector times matrix: returns ᵗx·A as a column vector.
template <Field T>
Vector<T> vec_mat(const Vector<T>& x, const Matrix<T>& A) {
    if (A.rows() != x.dim()) throw DimensionMismatch("vec_mat");
    Vector<T> y(A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (x[i] == T(0)) continue;
        for (std::size_t j = 0; j < A.cols(); ++j) y[j] += x[i] * A(i, j);
    }
    return y;
}

template <Field T>
T dot(const Vector<T>& x, const Vector<T>& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch("dot");
    T s(0);
    for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
    return s;
}

template <Field T>
Vector<T> add(const Vector<T>& x, const Vector<T>& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch("add");
    Vector<T> z(x);
    for (std::size_t i = 0; i < z.dim(); ++i) z[i] += y[i];
    return z;
}

template <Field T>
Vector<T> sub(const Vector<T>& x, const Vector<T>& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch("sub");
    Vector<T> z(x);
    for (std::size_t i = 0; i < z.dim(); ++i) z[i] -= y[i];
    return z;
}

template <Field T>
Matrix<T> sub(const Matrix<T>& A, const Matrix<T>& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw DimensionMismatch("sub");
    Matrix<T> C(A);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) -= B(i, j);
    return C;
}

template <Field T>
Vector<T> scale(const T& z, const Vector<T>& x) {
    Vector<T> y(x);
    for (auto& v : y) v *= z;
    return y;
}

// [A | B]
template <Field T>
Matrix<T> hstack(const Matrix<T>& A, const Matrix<T>& B) {
    if (A.rows() != B.rows()) throw DimensionMismatch("hstack");
    Matrix<T> C(A.rows(), A.cols() + B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
        for (std::size_t j = 0; j < B.cols(); ++j) C(i, A.cols() + j) = B(i, j);
    }
    return C;
}

// [A ; B]
template <Field T>
Matrix<T> vstack(const Matrix<T>& A, const Matrix<T>& B) {
    if (A.cols() != B.cols()) throw DimensionMismatch("vstack");
    Matrix<T> C(A.rows() + B.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(A.rows() + i, j) = B(i, j);
    return C;
}

// Rows [first, first + count) of A.
template <Field T>
Matrix<T> row_block(const Matrix<T>& A, std::size_t first, std::size_t count) {
    if (first + count > A.rows()) throw DimensionMismatch("row_block");
    Matrix<T> B(count, A.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) B(i, j) = A(first + i, j);
    return B;
}

template <Field T>
Matrix<T> select_rows(const Matrix<T>& A, const std::vector<std::size_t>& rows) {
    Matrix<T> B(rows.size(), A.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) B(i, j) = A(rows[i], j);
    return B;
}

// ---------------------------------------------------------------------------
// Elimination

template <Field T>
struct Echelon {
    Matrix<T> reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan to reduced row echelon form. The rational backend takes the
// first nonzero pivot; float64 takes the largest magnitude in the column.
template <Field T>
Echelon<T> rref(Matrix<T> M, Tolerance tol = {}) {
    const T scale = M.max_abs();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t p = r;
        if constexpr (std::is_same_v<T, double>) {
            for (std::size_t i = r + 1; i < M.rows(); ++i)
                if (std::abs(M(i, c)) > std::abs(M(p, c))) p = i;
        } else {
            while (p < M.rows() && M(p, c) == 0) ++p;
            if (p == M.rows()) continue;
        }
        if (detail::is_zero_scaled(M(p, c), scale, tol)) {
            for (std::size_t i = r; i < M.rows(); ++i) M(i, c) = T(0);
            continue;
        }
        if (p != r)
            for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(p, j), M(r, j));
        const T pivot = M(r, c);
        for (std::size_t j = c; j < M.cols(); ++j) M(r, j) /= pivot;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c) == T(0)) continue;
            const T f = M(i, c);
            for (std::size_t j = c; j < M.cols(); ++j) M(i, j) -= f * M(r, j);
            M(i, c) = T(0);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(M), std::move(pivots)};
}

template <Field T>
std::size_t rank(const Matrix<T>& M, Tolerance tol = {}) {
    return rref(M, tol).pivots.size();
}

template <Field T>
Matrix<T> invert(const Matrix<T>& M, Tolerance tol = {}) {
    if (M.rows() != M.cols())
        throw DimensionMismatch("invert needs a square matrix, got " + detail::dims(M.rows(), M.cols()));
    const std::size_t n = M.rows();
    auto ech = rref(hstack(M, Matrix<T>::identity(n)), tol);
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)
        throw Singular("matrix of order " + std::to_string(n) + " is not invertible");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
    return inv;
}

// Basis of {x : M x = 0}, one vector per free column of rref(M).
template <Field T>
std::vector<Vector<T>> nullspace_basis(const Matrix<T>& M, Tolerance tol = {}) {
    auto ech = rref(M, tol);
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<Vector<T>> basis;
    for (std::size_t f = 0; f < M.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector<T> x(M.cols());
        x[f] = T(1);
        for (std::size_t k = 0; k < ech.pivots.size(); ++k) x[ech.pivots[k]] = -ech.reduced(k, f);
        detail::orient(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

// Basis of the left kernel {k : ᵗk R = 0}. A trivial kernel is represented by
// the single zero vector.
template <Field T>
std::vector<Vector<T>> left_nullspace_basis(const Matrix<T>& R, Tolerance tol = {}) {
    auto basis = nullspace_basis(R.transpose(), tol);
    if (basis.empty()) basis.emplace_back(R.rows());
    return basis;
}

// dim-1 independent vectors orthogonal to v; the canonical basis if v = 0.
template <Field T>
std::vector<Vector<T>> orth_complement_basis(const Vector<T>& v, Tolerance tol = {}) {
    if (v.empty()) return {};
    Matrix<T> row(1, v.dim());
    row.set_row(0, v);
    if (rank(row, tol) == 0) {
        std::vector<Vector<T>> canonical;
        for (std::size_t i = 0; i < v.dim(); ++i) canonical.push_back(Vector<T>::unit(v.dim(), i));
        return canonical;
    }
    return nullspace_basis(row, tol);
}

// ---------------------------------------------------------------------------
// Pseudoinverses

template <Field T>
bool approx_equal(const Matrix<T>& A, const Matrix<T>& B, const T& tol) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (ScalarTraits<T>::abs(A(i, j) - B(i, j)) > tol) return false;
    return true;
}

// A⁺ = (ᵗA A)⁻¹ ᵗA, valid when A has full column rank.
template <Field T>
Matrix<T> pinv_full_col_rank(const Matrix<T>& A, Tolerance tol = {}) {
    const auto r = rank(A, tol);
    if (r != A.cols()) {
        throw RankDeficient("rank " + std::to_string(r) + " < " + std::to_string(A.cols()) + " columns");
    }
    const Matrix<T> At = A.transpose();
    return mat_mul(invert(mat_mul(At, A), tol), At);
}

// Pseudoinverse of the bordered matrix [ᵗa ; B] from the pseudoinverse of a
// full-row-rank B (k x n), when ᵗa lies in the row space of B:
//
//   v = ᵗB⁺ a,  h = 1 + ᵗv v
//   [ᵗa ; B]⁺ = [ h⁻¹ B⁺ v | B⁺ - h⁻¹ B⁺ v ᵗv ]
//
// B_pinv must be the Moore-Penrose right inverse of B (B B⁺ = I_k and B⁺B
// symmetric).
template <Field T>
Matrix<T> pinv_append_row(const Matrix<T>& B_pinv, const Matrix<T>& B, const Vector<T>& a,
                          Tolerance tol = {}) {
    const std::size_t k = B.rows();
    const std::size_t n = B.cols();
    if (B_pinv.rows() != n || B_pinv.cols() != k || a.dim() != n) {
        throw DimensionMismatch("pinv_append_row: B is " + detail::dims(k, n) + ", B_pinv is " +
                                detail::dims(B_pinv.rows(), B_pinv.cols()) + ", a has dim " +
                                std::to_string(a.dim()));
    }
    T eps(0);
    if constexpr (std::is_same_v<T, double>) eps = tol.rel * (1.0 + std::max(B.max_abs(), B_pinv.max_abs()));

    const Matrix<T> BX = mat_mul(B, B_pinv);
    if (!approx_equal(BX, Matrix<T>::identity(k), eps))
        throw NotRightInverse("B * B_pinv != I_" + std::to_string(k));
    const Matrix<T> XB = mat_mul(B_pinv, B);
    if (!approx_equal(XB, XB.transpose(), eps))
        throw NotRightInverse("B_pinv * B is not symmetric; not the Moore-Penrose right inverse");

    const Vector<T> v = vec_mat(a, B_pinv);
    const Vector<T> gamma = sub(a, vec_mat(v, B));
    for (const auto& g : gamma) {
        if (ScalarTraits<T>::abs(g) > eps) throw NotInRowSpace("a - ᵗB v != 0");
    }

    const T h = T(1) + dot(v, v);
    const Vector<T> w = mat_vec(B_pinv, v);
    Matrix<T> P(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        P(i, 0) = w[i] / h;
        for (std::size_t j = 0; j < k; ++j) P(i, j + 1) = B_pinv(i, j) - w[i] * v[j] / h;
    }
    return P;
}

struct MpAxioms {
    bool apa_eq_a = false;        // A P A = A
    bool pap_eq_p = false;        // P A P = P
    bool ap_symmetric = false;    // ᵗ(A P) = A P
    bool pa_symmetric = false;    // ᵗ(P A) = P A

    bool all() const { return apa_eq_a && pap_eq_p && ap_symmetric && pa_symmetric; }
    bool is_12_inverse() const { return apa_eq_a && pap_eq_p; }
};

// Checks the four Penrose conditions to absolute tolerance tol (use 0 for
// the rational backend).
template <Field T>
MpAxioms mp_axioms_check(const Matrix<T>& A, const Matrix<T>& P, const T& tol) {
    if (P.rows() != A.cols() || P.cols() != A.rows())
        throw DimensionMismatch("mp_axioms_check: P must be " + detail::dims(A.cols(), A.rows()));
    const Matrix<T> AP = mat_mul(A, P);
    const Matrix<T> PA = mat_mul(P, A);
    MpAxioms out;
    out.apa_eq_a = approx_equal(mat_mul(AP, A), A, tol);
    out.pap_eq_p = approx_equal(mat_mul(PA, P), P, tol);
    out.ap_symmetric = approx_equal(AP, AP.transpose(), tol);
    out.pa_symmetric = approx_equal(PA, PA.transpose(), tol);
    return out;
}

}  // namespace hollowcheck
