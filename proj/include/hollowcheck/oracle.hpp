#pragma once

// Exact Fourier-Motzkin feasibility oracle over the rationals.
//
// Every derived row carries its multipliers over the input rows, so an
// infeasible run yields a Farkas certificate and a feasible run yields a
// witness by back-substitution through the stored projections.

#include "hollowcheck/matrix.hpp"
#include "hollowcheck/scalar.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace hollowcheck::oracle {

// coeffs·x <= rhs, equal to Σ multipliers[r] * (input row r).
struct FmRow {
    Vector<Rational> coeffs;
    Rational rhs;
    Vector<Rational> multipliers;
};

struct FmSystem {
    std::size_t vars = 0;
    std::size_t input_rows = 0;
    std::vector<FmRow> rows;

    static FmSystem from(const Matrix<Rational>& A, const Vector<Rational>& b);
    // No constraints at all over `vars` variables.
    static FmSystem unconstrained(std::size_t vars);
};

// How one output row of an elimination step was formed from input rows of
// that step: lower_weight * rows[lower] + upper_weight * rows[upper], or a
// pass-through of rows[lower] when upper == npos.
struct LogEntry {
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    std::size_t lower = 0;
    std::size_t upper = npos;
    Rational lower_weight{1};
    Rational upper_weight{0};
};

struct Elimination {
    FmSystem system;  // column j is identically zero
    std::vector<LogEntry> log;
};

struct FmOptions {
    std::size_t row_cap = 100000;
};

// Projects out variable j. The column is kept (all zeros) so variable indices
// stay stable. Duplicate rows are removed, and among rows with proportional
// coefficients only the tightest bound is kept.
Elimination fm_eliminate(const FmSystem& system, std::size_t j, const FmOptions& options = {});
Elimination fm_eliminate(const Matrix<Rational>& A, const Vector<Rational>& b, std::size_t j,
                         const FmOptions& options = {});

struct FMResult {
    enum class Status { Feasible, Infeasible };
    Status status = Status::Feasible;
    Vector<Rational> witness;      // Feasible: A x <= b
    Vector<Rational> certificate;  // Infeasible: y >= 0, ᵗyA = 0, ᵗyb < 0

    bool feasible() const { return status == Status::Feasible; }
};

FMResult fm_feasible(const FmSystem& system, const FmOptions& options = {});
FMResult fm_feasible(const Matrix<Rational>& A, const Vector<Rational>& b, const FmOptions& options = {});

// Residual interval for x_j in `system` given values of the other variables.
// lower/upper are unset when unbounded.
struct Residual {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    bool consistent = true;  // rows not involving x_j are satisfied

    bool nonempty() const { return consistent && (!lower || !upper || *lower <= *upper); }
};

Residual residual_interval(const FmSystem& system, std::size_t j, const Vector<Rational>& x);

}  // namespace hollowcheck::oracle
