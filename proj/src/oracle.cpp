#include "hollowcheck/oracle.hpp"

#include "hollowcheck/errors.hpp"

#include <map>
#include <string>
#include <utility>

namespace hollowcheck::oracle {

namespace {

Rational max_abs(const Vector<Rational>& v) {
    Rational m = 0;
    for (const auto& x : v) m = std::max(m, Rational(abs(x)));
    return m;
}

FmRow combine(const FmRow& p, const Rational& wp, const FmRow& q, const Rational& wq) {
    FmRow out{Vector<Rational>(p.coeffs.dim()), wp * p.rhs + wq * q.rhs, Vector<Rational>(p.multipliers.dim())};
    for (std::size_t c = 0; c < out.coeffs.dim(); ++c) out.coeffs[c] = wp * p.coeffs[c] + wq * q.coeffs[c];
    for (std::size_t r = 0; r < out.multipliers.dim(); ++r)
        out.multipliers[r] = wp * p.multipliers[r] + wq * q.multipliers[r];
    return out;
}

// Index of the trivial row 0 <= rhs with the most negative rhs, if any rhs < 0.
std::optional<std::size_t> contradiction(const FmSystem& s) {
    std::optional<std::size_t> worst;
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        const auto& row = s.rows[r];
        if (!row.coeffs.is_zero() || row.rhs >= 0) continue;
        if (!worst || row.rhs < s.rows[*worst].rhs) worst = r;
    }
    return worst;
}

}  // namespace

FmSystem FmSystem::from(const Matrix<Rational>& A, const Vector<Rational>& b) {
    if (A.rows() != b.dim()) throw DimensionMismatch("FmSystem::from");
    FmSystem s{A.cols(), A.rows(), {}};
    for (std::size_t i = 0; i < A.rows(); ++i)
        s.rows.push_back({A.row(i), b[i], Vector<Rational>::unit(A.rows(), i)});
    return s;
}

FmSystem FmSystem::unconstrained(std::size_t vars) { return FmSystem{vars, 0, {}}; }

Elimination fm_eliminate(const FmSystem& system, std::size_t j, const FmOptions& options) {
    if (j >= system.vars) throw DimensionMismatch("fm_eliminate: no variable " + std::to_string(j));
    std::vector<std::size_t> lower, upper, rest;  // coefficient < 0, > 0, = 0
    for (std::size_t r = 0; r < system.rows.size(); ++r) {
        const int s = system.rows[r].coeffs[j].sign();
        (s < 0 ? lower : s > 0 ? upper : rest).push_back(r);
    }
    const std::size_t produced = rest.size() + lower.size() * upper.size();
    if (produced > options.row_cap) {
        throw SizeExceeded(std::to_string(produced) + " rows exceed cap " + std::to_string(options.row_cap));
    }

    std::vector<FmRow> rows;
    std::vector<LogEntry> log;
    rows.reserve(produced);
    for (auto r : rest) {
        rows.push_back(system.rows[r]);
        log.push_back({r, LogEntry::npos, 1, 0});
    }
    for (auto p : upper) {
        for (auto q : lower) {
            // Scale both to unit |coefficient| on x_j so it cancels.
            const Rational wp = 1 / system.rows[p].coeffs[j];
            const Rational wq = 1 / -system.rows[q].coeffs[j];
            FmRow row = combine(system.rows[p], wp, system.rows[q], wq);
            row.coeffs[j] = 0;
            rows.push_back(std::move(row));
            log.push_back({q, p, wq, wp});
        }
    }

    // Among rows with the same normalized coefficients keep the smallest
    // normalized bound; first occurrence wins ties.
    std::map<std::vector<Rational>, std::pair<Rational, std::size_t>> best;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational scale = max_abs(rows[r].coeffs);
        const Rational div = scale == 0 ? Rational(1) : scale;
        std::vector<Rational> key;
        key.reserve(rows[r].coeffs.dim());
        for (const auto& c : rows[r].coeffs) key.push_back(c / div);
        const Rational bound = rows[r].rhs / div;
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(std::move(key), std::make_pair(bound, r));
        } else if (bound < it->second.first) {
            it->second = {bound, r};
        }
    }
    std::vector<bool> keep(rows.size(), false);
    for (const auto& [key, entry] : best) keep[entry.second] = true;

    Elimination out{FmSystem{system.vars, system.input_rows, {}}, {}};
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!keep[r]) continue;
        out.system.rows.push_back(std::move(rows[r]));
        out.log.push_back(log[r]);
    }
    return out;
}

Elimination fm_eliminate(const Matrix<Rational>& A, const Vector<Rational>& b, std::size_t j,
                         const FmOptions& options) {
    return fm_eliminate(FmSystem::from(A, b), j, options);
}

Residual residual_interval(const FmSystem& system, std::size_t j, const Vector<Rational>& x) {
    Residual res;
    for (const auto& row : system.rows) {
        Rational rest = row.rhs;
        for (std::size_t c = 0; c < system.vars; ++c)
            if (c != j) rest -= row.coeffs[c] * x[c];
        const Rational& a = row.coeffs[j];
        if (a == 0) {
            res.consistent = res.consistent && rest >= 0;
        } else if (a > 0) {
            Rational ub = rest / a;
            if (!res.upper || ub < *res.upper) res.upper = std::move(ub);
        } else {
            Rational lb = rest / a;
            if (!res.lower || lb > *res.lower) res.lower = std::move(lb);
        }
    }
    return res;
}

FMResult fm_feasible(const FmSystem& system, const FmOptions& options) {
    if (system.rows.size() > options.row_cap) throw SizeExceeded("input exceeds row cap");

    auto infeasible = [](const FmRow& row) {
        return FMResult{FMResult::Status::Infeasible, {}, row.multipliers};
    };

    // stages[j] has variables 0..j-1 projected out.
    std::vector<FmSystem> stages{system};
    if (auto bad = contradiction(stages.back())) return infeasible(stages.back().rows[*bad]);
    for (std::size_t j = 0; j < system.vars; ++j) {
        stages.push_back(fm_eliminate(stages.back(), j, options).system);
        if (auto bad = contradiction(stages.back())) return infeasible(stages.back().rows[*bad]);
    }

    Vector<Rational> x(system.vars);
    for (std::size_t step = 0; step < system.vars; ++step) {
        const std::size_t j = system.vars - 1 - step;
        const Residual res = residual_interval(stages[j], j, x);
        if (!res.nonempty()) throw Error("fm_feasible: empty residual interval during back-substitution");
        if (res.lower && res.upper) x[j] = (*res.lower + *res.upper) / 2;
        else if (res.lower) x[j] = *res.lower + 1;
        else if (res.upper) x[j] = *res.upper - 1;
        else x[j] = 0;
    }
    return FMResult{FMResult::Status::Feasible, std::move(x), {}};
}

FMResult fm_feasible(const Matrix<Rational>& A, const Vector<Rational>& b, const FmOptions& options) {
    return fm_feasible(FmSystem::from(A, b), options);
}

}  // namespace hollowcheck::oracle
