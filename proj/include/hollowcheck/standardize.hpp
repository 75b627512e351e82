#pragma once

// Reduction of the three common polyhedron forms to Ax <= b with m > n, full
// column rank and no null row.

#include "hollowcheck/densemat.hpp"
#include "hollowcheck/errors.hpp"
#include "hollowcheck/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hollowcheck {

enum class RawForm {
    Ineq,        // Ãx <= b̃
    IneqNonneg,  // Ãx <= b̃, x >= 0
    EqNonneg,    // Ãx  = b̃, x >= 0
};

std::string_view to_string(RawForm form);
std::optional<RawForm> parse_form(std::string_view text);

template <Field T>
struct RawSystem {
    RawForm form = RawForm::Ineq;
    Matrix<T> A;
    Vector<T> b;

    RawSystem(RawForm f, Matrix<T> a, Vector<T> rhs) : form(f), A(std::move(a)), b(std::move(rhs)) {
        if (A.rows() != b.dim()) throw DimensionMismatch("raw system: rows of A != dim b");
    }

    std::size_t variables() const { return A.cols(); }
};

enum class Embedding {
    None,       // input already in standard shape
    Nonneg,     // [Ã ; -I]
    EqNonneg,   // [Ã ; -Ã ; -I]
    SignSplit,  // [[Ã, -Ã] ; [-I, 0] ; [0, -I]] on (x₊, x₋)
};

std::string_view to_string(Embedding e);

// Where a standard-form row came from.
struct RowOrigin {
    enum class Kind {
        Constraint,         // row `index` of Ã
        NegatedConstraint,  // -(row `index` of Ã), from an equality
        Nonneg,             // -x_index <= 0 (for sign-split: index over 2ñ split columns)
        Redundant,          // implied row appended to keep m > n
    };
    Kind kind = Kind::Constraint;
    std::size_t index = 0;

    friend bool operator==(const RowOrigin&, const RowOrigin&) = default;
};

// Standard-form column j contributes sign * column to original variable.
struct ColumnOrigin {
    std::size_t variable = 0;
    int sign = 1;

    friend bool operator==(const ColumnOrigin&, const ColumnOrigin&) = default;
};

template <Field T>
struct StandardSystem {
    Matrix<T> A;
    Vector<T> b;
    Embedding embedding = Embedding::None;
    std::vector<RowOrigin> rows;
    std::vector<ColumnOrigin> columns;
    std::size_t original_variables = 0;

    std::size_t m() const { return A.rows(); }
    std::size_t n() const { return A.cols(); }

    // x = Σ sign·column, mapped back to the original variables.
    Vector<T> to_original(const Vector<T>& y) const {
        if (y.dim() != n()) throw DimensionMismatch("to_original");
        Vector<T> x(original_variables);
        for (std::size_t j = 0; j < n(); ++j) {
            const auto& c = columns[j];
            if (c.sign > 0) x[c.variable] += y[j];
            else x[c.variable] -= y[j];
        }
        return x;
    }

    // Image of an original point: identity, or (max(x,0), max(-x,0)) under
    // the sign split.
    Vector<T> from_original(const Vector<T>& x) const {
        if (x.dim() != original_variables) throw DimensionMismatch("from_original");
        Vector<T> y(n());
        for (std::size_t j = 0; j < n(); ++j) {
            const auto& c = columns[j];
            const T& v = x[c.variable];
            if (embedding != Embedding::SignSplit) y[j] = v;
            else if (c.sign > 0) y[j] = v > T(0) ? v : T(0);
            else y[j] = v < T(0) ? T(-v) : T(0);
        }
        return y;
    }
};

// A null row with a negative bound: the polyhedron is empty.
template <Field T>
struct EarlyEmpty {
    std::size_t row = 0;  // row index in the system that was reduced
    RowOrigin origin;     // provenance of that row in the raw system
    T bound{0};
};

template <Field T>
struct ReducedSystem {
    Matrix<T> A;
    Vector<T> b;
    std::vector<std::size_t> kept;  // original indices of the surviving rows
};

namespace detail {

template <Field T>
struct RowList {
    std::vector<Vector<T>> rows;
    std::vector<T> rhs;
    std::vector<RowOrigin> origins;

    void push(Vector<T> row, T bound, RowOrigin origin) {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(bound));
        origins.push_back(origin);
    }
};

// Removes null rows in place. Returns the first null row whose bound is
// negative, if any.
template <Field T>
std::optional<EarlyEmpty<T>> drop_zero_rows(RowList<T>& list, std::vector<std::size_t>* kept) {
    RowList<T> out;
    for (std::size_t i = 0; i < list.rows.size(); ++i) {
        if (!list.rows[i].is_zero()) {
            out.push(list.rows[i], list.rhs[i], list.origins[i]);
            if (kept) kept->push_back(i);
            continue;
        }
        if (list.rhs[i] < T(0)) return EarlyEmpty<T>{i, list.origins[i], list.rhs[i]};
    }
    list = std::move(out);
    return std::nullopt;
}

}  // namespace detail

// Removes null rows 0·x <= bᵢ; any such row with bᵢ < 0 makes the system
// empty. Throws AllRowsRemoved when every row is null with bᵢ >= 0 (the
// polyhedron is all of ℝⁿ).
template <Field T>
std::variant<ReducedSystem<T>, EarlyEmpty<T>> drop_or_decide_zero_rows(const Matrix<T>& A,
                                                                       const Vector<T>& b) {
    if (A.rows() != b.dim()) throw DimensionMismatch("drop_or_decide_zero_rows");
    detail::RowList<T> list;
    for (std::size_t i = 0; i < A.rows(); ++i) list.push(A.row(i), b[i], {RowOrigin::Kind::Constraint, i});
    std::vector<std::size_t> kept;
    if (auto early = detail::drop_zero_rows(list, &kept)) return *early;
    if (list.rows.empty()) throw AllRowsRemoved("every row is 0 <= b_i with b_i >= 0");
    return ReducedSystem<T>{Matrix<T>::from_rows(list.rows), Vector<T>(list.rhs), std::move(kept)};
}

struct AssumptionReport {
    std::vector<std::size_t> zero_rows;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t rank = 0;

    bool no_zero_rows() const { return zero_rows.empty(); }
    bool tall() const { return m > n; }
    bool full_column_rank() const { return rank == n; }
    bool ok() const { return no_zero_rows() && tall() && full_column_rank(); }
    std::string describe() const;
};

template <Field T>
AssumptionReport check_assumptions(const Matrix<T>& A, const Vector<T>& b, Tolerance tol = {}) {
    if (A.rows() != b.dim()) throw DimensionMismatch("check_assumptions");
    AssumptionReport r;
    r.m = A.rows();
    r.n = A.cols();
    for (std::size_t i = 0; i < A.rows(); ++i)
        if (A.row_is_zero(i)) r.zero_rows.push_back(i);
    r.rank = rank(A, tol);
    return r;
}

// Wraps (A, b) that already satisfies the standard-form assumptions.
template <Field T>
StandardSystem<T> make_standard(Matrix<T> A, Vector<T> b, Tolerance tol = {}) {
    const auto report = check_assumptions(A, b, tol);
    if (!report.ok()) throw AssumptionViolation(report.describe());
    StandardSystem<T> sys{std::move(A), std::move(b), Embedding::None, {}, {}, 0};
    for (std::size_t i = 0; i < sys.m(); ++i) sys.rows.push_back({RowOrigin::Kind::Constraint, i});
    for (std::size_t j = 0; j < sys.n(); ++j) sys.columns.push_back({j, 1});
    sys.original_variables = sys.n();
    return sys;
}

template <Field T>
using StandardizeResult = std::variant<StandardSystem<T>, EarlyEmpty<T>>;

// The inequality system described by a raw form, over the original variables
// (no sign split): Ãx <= b̃, plus -x <= 0 for the nonneg forms, plus -Ãx <= -b̃
// for equalities. Null rows are kept.
template <Field T>
std::pair<Matrix<T>, Vector<T>> raw_inequalities(const RawSystem<T>& raw) {
    const std::size_t m = raw.A.rows();
    const std::size_t n = raw.A.cols();
    detail::RowList<T> list;
    for (std::size_t i = 0; i < m; ++i) list.push(raw.A.row(i), raw.b[i], {});
    if (raw.form == RawForm::EqNonneg)
        for (std::size_t i = 0; i < m; ++i) list.push(-raw.A.row(i), -raw.b[i], {});
    if (raw.form != RawForm::Ineq)
        for (std::size_t j = 0; j < n; ++j) list.push(-Vector<T>::unit(n, j), T(0), {});
    return {Matrix<T>::from_rows(list.rows), Vector<T>(list.rhs)};
}

template <Field T>
StandardizeResult<T> standardize(const RawSystem<T>& raw, Tolerance tol = {}) {
    using Kind = RowOrigin::Kind;
    const std::size_t mt = raw.A.rows();
    const std::size_t nt = raw.A.cols();

    detail::RowList<T> list;
    std::vector<ColumnOrigin> columns;
    Embedding embedding = Embedding::None;

    switch (raw.form) {
        case RawForm::Ineq: {
            for (std::size_t i = 0; i < mt; ++i) list.push(raw.A.row(i), raw.b[i], {Kind::Constraint, i});
            if (auto early = detail::drop_zero_rows(list, nullptr)) return *early;
            if (!list.rows.empty()) {
                const auto A = Matrix<T>::from_rows(list.rows);
                if (A.rows() > A.cols() && rank(A, tol) == A.cols()) {
                    StandardSystem<T> sys{A, Vector<T>(list.rhs), Embedding::None, list.origins, {}, nt};
                    for (std::size_t j = 0; j < nt; ++j) sys.columns.push_back({j, 1});
                    return sys;
                }
            }
            // Sign split: x = x₊ - x₋ restores full column rank.
            embedding = Embedding::SignSplit;
            detail::RowList<T> split;
            for (std::size_t i = 0; i < list.rows.size(); ++i) {
                Vector<T> row(2 * nt);
                for (std::size_t j = 0; j < nt; ++j) {
                    row[j] = list.rows[i][j];
                    row[nt + j] = -list.rows[i][j];
                }
                split.push(std::move(row), list.rhs[i], list.origins[i]);
            }
            for (std::size_t j = 0; j < 2 * nt; ++j)
                split.push(-Vector<T>::unit(2 * nt, j), T(0), {Kind::Nonneg, j});
            list = std::move(split);
            for (std::size_t j = 0; j < nt; ++j) columns.push_back({j, 1});
            for (std::size_t j = 0; j < nt; ++j) columns.push_back({j, -1});
            break;
        }
        case RawForm::IneqNonneg:
        case RawForm::EqNonneg: {
            const bool eq = raw.form == RawForm::EqNonneg;
            embedding = eq ? Embedding::EqNonneg : Embedding::Nonneg;
            for (std::size_t i = 0; i < mt; ++i) list.push(raw.A.row(i), raw.b[i], {Kind::Constraint, i});
            if (eq) {
                for (std::size_t i = 0; i < mt; ++i)
                    list.push(-raw.A.row(i), -raw.b[i], {Kind::NegatedConstraint, i});
            }
            for (std::size_t j = 0; j < nt; ++j) list.push(-Vector<T>::unit(nt, j), T(0), {Kind::Nonneg, j});
            if (auto early = detail::drop_zero_rows(list, nullptr)) return *early;
            for (std::size_t j = 0; j < nt; ++j) columns.push_back({j, 1});
            break;
        }
    }

    // Every Ã row may have vanished, leaving only the -I block (m = n). The
    // sum of the remaining rows is implied and nonzero for an invertible
    // square block.
    if (list.rows.size() <= columns.size()) {
        Vector<T> sum(columns.size());
        T bound(0);
        for (std::size_t i = 0; i < list.rows.size(); ++i) {
            sum = add(sum, list.rows[i]);
            bound += list.rhs[i];
        }
        list.push(std::move(sum), std::move(bound), {Kind::Redundant, 0});
    }

    StandardSystem<T> sys{Matrix<T>::from_rows(list.rows), Vector<T>(list.rhs), embedding,
                          list.origins, std::move(columns), nt};
    return sys;
}

}  // namespace hollowcheck
