#pragma once

// Algebraic emptiness test for P(A, b) = {x : Ax <= b}.
//
// With A = (A₁ ; A₂) and A₂ invertible, set R = A₁A₂⁻¹ and G = (I | -R). The
// rows of G span the left kernel of A, so for any k the vector y = ᵗkG gives
// ᵗyA = 0, and 0 ∉ ᵗkG·𝕔 (𝕔 the box {c <= b}) is exactly a Farkas
// certificate of emptiness. The test vectors k are drawn from finite
// families: canonical vectors, a basis of the left kernel of R, bases of
// (b₁)⊥ and (Rb₂)⊥, and the pairwise eliminations k'(j,i,i').

#include "hollowcheck/certificate.hpp"
#include "hollowcheck/densemat.hpp"
#include "hollowcheck/interval.hpp"
#include "hollowcheck/matrix.hpp"
#include "hollowcheck/standardize.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace hollowcheck {

enum class Mode {
    Algorithm,  // basis families expanded to ±v and restricted to the cone 𝒢
    Theorem,    // basis families tested as-is
};

enum class TestOrder {
    Default,  // canonical, kernel, (b₁)⊥, (Rb₂)⊥, pairs
    Paper,    // (b₁)⊥, (Rb₂)⊥, kernel, canonical, pairs
};

enum class Family { Canonical = 0, Kernel, B1Perp, Rb2Perp, Pair };
inline constexpr std::size_t kFamilyCount = 5;
inline constexpr std::array<Family, kFamilyCount> kAllFamilies{Family::Canonical, Family::Kernel, Family::B1Perp,
                                                               Family::Rb2Perp, Family::Pair};

enum class Verdict { Empty, NotProvenEmpty };

std::string_view to_string(Mode m);
std::string_view to_string(TestOrder o);
std::string_view to_string(Family f);
std::string_view to_string(Verdict v);

// Worker cap from HOLLOWCHECK_THREADS, defaulting to the hardware count.
std::size_t parallelism_cap();

template <Field T>
struct Decomposition {
    std::vector<std::size_t> row_perm;  // row p of (A₁ ; A₂) is row row_perm[p] of A
    Matrix<T> A1;                       // (m-n) x n
    Matrix<T> A2;                       // n x n, invertible
    Matrix<T> A2inv;
    Matrix<T> R;  // A₁ A₂⁻¹
    Matrix<T> G;  // (I_{m-n} | -R)
    Vector<T> b1;
    Vector<T> b2;

    std::size_t m() const { return G.cols(); }
    std::size_t n() const { return A2.rows(); }
    std::size_t excess() const { return G.rows(); }  // m - n

    Matrix<T> permuted_A() const { return vstack(A1, A2); }
    Vector<T> permuted_b() const {
        Vector<T> b(m());
        for (std::size_t i = 0; i < b1.dim(); ++i) b[i] = b1[i];
        for (std::size_t i = 0; i < b2.dim(); ++i) b[b1.dim() + i] = b2[i];
        return b;
    }

    // Permuted coordinates -> original row order.
    Vector<T> unpermute(const Vector<T>& y) const {
        Vector<T> out(y.dim());
        for (std::size_t p = 0; p < y.dim(); ++p) out[row_perm[p]] = y[p];
        return out;
    }
};

template <Field T>
struct TestVector {
    Vector<T> kprime;
    Family family = Family::Canonical;
    // canonical: i; pair: (j, i, i2). Zero-based.
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t i2 = 0;

    std::string origin() const {
        switch (family) {
            case Family::Canonical: return "canonical(" + std::to_string(i) + ")";
            case Family::Pair:
                return "pair(" + std::to_string(j) + "," + std::to_string(i) + "," + std::to_string(i2) + ")";
            default: return std::string(to_string(family));
        }
    }
};

template <Field T>
struct TestOutcome {
    bool pass = true;
    Vector<T> z;  // ᵗk'G
    Interval<T> interval = Interval<T>::zero();
};

template <Field T>
struct Certificate {
    TestVector<T> test;
    Interval<T> interval;
    Vector<T> farkas_y;  // over the rows of the standard system, original order
};

struct FamilyCounts {
    std::size_t generated = 0;
    std::size_t run = 0;
    std::size_t passed = 0;

    friend bool operator==(const FamilyCounts&, const FamilyCounts&) = default;
};

template <Field T>
struct EmptinessReport {
    Verdict verdict = Verdict::NotProvenEmpty;
    Mode mode = Mode::Algorithm;
    TestOrder order = TestOrder::Default;
    std::optional<Certificate<T>> certificate;
    std::size_t tests_run = 0;
    std::array<FamilyCounts, kFamilyCount> families{};

    // True when every test passed. That is a claim of nonemptiness, not a
    // proof; only Empty is certified.
    bool paper_claims_nonempty() const { return verdict == Verdict::NotProvenEmpty; }
    const FamilyCounts& counts(Family f) const { return families[static_cast<std::size_t>(f)]; }
};

struct DecideOptions {
    Mode mode = Mode::Algorithm;
    TestOrder order = TestOrder::Default;
    std::size_t threads = 0;  // 0: parallelism_cap()
    Tolerance tol{};
};

namespace detail {

template <Field T>
T float_slack(const T& scale, Tolerance tol) {
    if constexpr (std::is_same_v<T, double>) {
        return tol.rel * (1.0 + scale);
    } else {
        return T(0);
    }
}

}  // namespace detail

// Splits A into (A₁ ; A₂) with A₂ invertible. Rows are scanned from the last
// one upward and greedily kept when independent of those already kept; the
// kept rows go last, both blocks keeping their input order. An input whose
// bottom n rows are already invertible is left unpermuted.
template <Field T>
Decomposition<T> decompose(const StandardSystem<T>& sys, Tolerance tol = {}) {
    const std::size_t m = sys.m();
    const std::size_t n = sys.n();
    if (m <= n) throw NoInvertibleSubmatrix("need m > n, got m = " + std::to_string(m) + ", n = " + std::to_string(n));
    const T scale = sys.A.max_abs();

    std::vector<Vector<T>> basis;  // reduced rows, pivots[k] is the pivot column of basis[k]
    std::vector<std::size_t> pivots;
    std::vector<bool> selected(m, false);
    std::size_t count = 0;
    for (std::size_t step = 0; step < m && count < n; ++step) {
        const std::size_t i = m - 1 - step;
        Vector<T> r = sys.A.row(i);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const T f = r[pivots[k]] / basis[k][pivots[k]];
            if (f == T(0)) continue;
            for (std::size_t c = 0; c < n; ++c) r[c] -= f * basis[k][c];
            r[pivots[k]] = T(0);
        }
        std::optional<std::size_t> pivot;
        for (std::size_t c = 0; c < n; ++c) {
            if (detail::is_zero_scaled(r[c], scale, tol)) continue;
            if constexpr (std::is_same_v<T, double>) {
                if (!pivot || std::abs(r[c]) > std::abs(r[*pivot])) pivot = c;
            } else {
                pivot = c;
                break;
            }
        }
        if (!pivot) continue;
        basis.push_back(std::move(r));
        pivots.push_back(*pivot);
        selected[i] = true;
        ++count;
    }
    if (count < n) throw NoInvertibleSubmatrix("rank " + std::to_string(count) + " < n = " + std::to_string(n));

    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < m; ++i)
        if (!selected[i]) perm.push_back(i);
    for (std::size_t i = 0; i < m; ++i)
        if (selected[i]) perm.push_back(i);

    const std::size_t excess = m - n;
    std::vector<std::size_t> top(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(excess));
    std::vector<std::size_t> bottom(perm.begin() + static_cast<std::ptrdiff_t>(excess), perm.end());
    Matrix<T> A1 = select_rows(sys.A, top);
    Matrix<T> A2 = select_rows(sys.A, bottom);
    Matrix<T> A2inv = invert(A2, tol);
    Matrix<T> R = mat_mul(A1, A2inv);
    Matrix<T> G = hstack(Matrix<T>::identity(excess), -R);
    Vector<T> b1(excess), b2(n);
    for (std::size_t p = 0; p < excess; ++p) b1[p] = sys.b[top[p]];
    for (std::size_t p = 0; p < n; ++p) b2[p] = sys.b[bottom[p]];
    return {std::move(perm), std::move(A1),         std::move(A2), std::move(A2inv),
            std::move(R),    std::move(G),          std::move(b1), std::move(b2)};
}

// U = [[I_{m-n}, -R], [0, 0]] (m x m). Its top block is G.
template <Field T>
Matrix<T> build_U(const Decomposition<T>& dec) {
    Matrix<T> U(dec.m(), dec.m());
    for (std::size_t i = 0; i < dec.excess(); ++i)
        for (std::size_t j = 0; j < dec.m(); ++j) U(i, j) = dec.G(i, j);
    return U;
}

template <Field T>
bool in_cone_G(const Vector<T>& k, const Decomposition<T>& dec, Tolerance tol = {}) {
    if (k.dim() != dec.excess()) throw DimensionMismatch("in_cone_G: k must have dim m - n");
    const Vector<T> z = vec_mat(k, dec.G);
    T scale(0);
    for (const auto& v : z) scale = std::max<T>(scale, ScalarTraits<T>::abs(v));
    const T slack = detail::float_slack(scale, tol);
    return std::all_of(z.begin(), z.end(), [&](const T& v) { return v >= -slack; });
}

template <Field T>
std::vector<TestVector<T>> family_tests(const Decomposition<T>& dec, Mode mode, TestOrder order = TestOrder::Default,
                                        Tolerance tol = {}) {
    const std::size_t e = dec.excess();
    const std::size_t n = dec.n();

    auto basis_family = [&](Family family, const std::vector<Vector<T>>& basis) {
        std::vector<TestVector<T>> out;
        for (const auto& v : basis) {
            if (mode == Mode::Theorem) {
                out.push_back({v, family});
                continue;
            }
            if (in_cone_G(v, dec, tol)) out.push_back({v, family});
            if (!v.is_zero()) {
                Vector<T> neg = -v;
                if (in_cone_G(neg, dec, tol)) out.push_back({std::move(neg), family});
            }
        }
        return out;
    };

    std::vector<TestVector<T>> canonical;
    for (std::size_t i = 0; i < e; ++i) {
        TestVector<T> t{Vector<T>::unit(e, i), Family::Canonical};
        t.i = i;
        canonical.push_back(std::move(t));
    }
    auto kernel = basis_family(Family::Kernel, left_nullspace_basis(dec.R, tol));
    auto b1perp = basis_family(Family::B1Perp, orth_complement_basis(dec.b1, tol));
    auto rb2perp = basis_family(Family::Rb2Perp, orth_complement_basis(mat_vec(dec.R, dec.b2), tol));

    std::vector<TestVector<T>> pairs;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i + 1 < e; ++i) {
            for (std::size_t i2 = i + 1; i2 < e; ++i2) {
                Vector<T> k(e);
                k[i] = -dec.R(i2, j);
                k[i2] = dec.R(i, j);
                TestVector<T> t{std::move(k), Family::Pair};
                t.j = j;
                t.i = i;
                t.i2 = i2;
                pairs.push_back(std::move(t));
            }
        }
    }

    std::vector<TestVector<T>> all;
    auto append = [&all](std::vector<TestVector<T>>& v) {
        for (auto& t : v) all.push_back(std::move(t));
    };
    if (order == TestOrder::Default) {
        append(canonical);
        append(kernel);
        append(b1perp);
        append(rb2perp);
    } else {
        append(b1perp);
        append(rb2perp);
        append(kernel);
        append(canonical);
    }
    append(pairs);
    return all;
}

// Passes iff 0 ∈ ᵗk'G·𝕔 with 𝕔 = box_below(b); b in permuted order.
template <Field T>
TestOutcome<T> run_test(const Vector<T>& kprime, const Decomposition<T>& dec, const Vector<T>& b,
                        Tolerance tol = {}) {
    Vector<T> z = vec_mat(kprime, dec.G);
    if constexpr (std::is_same_v<T, double>) {
        T scale(0);
        for (const auto& v : z) scale = std::max(scale, std::abs(v));
        for (auto& v : z)
            if (ScalarTraits<T>::is_zero(v, scale, tol)) v = 0.0;
    }
    Interval<T> interval = iv_dot(z, box_below(b));
    const bool pass = contains_zero(interval);
    return {pass, std::move(z), std::move(interval)};
}

template <Field T>
TestOutcome<T> run_test(const TestVector<T>& k, const Decomposition<T>& dec, Tolerance tol = {}) {
    return run_test(k.kprime, dec, dec.permuted_b(), tol);
}

// y = ±ᵗk'G (whichever sign is nonnegative), in the original row order.
template <Field T>
Vector<T> farkas_from(const Vector<T>& kprime, const Decomposition<T>& dec, Tolerance tol = {}) {
    Vector<T> z = vec_mat(kprime, dec.G);
    T scale(0);
    for (const auto& v : z) scale = std::max<T>(scale, ScalarTraits<T>::abs(v));
    bool nonneg = true;
    bool nonpos = true;
    for (auto& v : z) {
        const int s = ScalarTraits<T>::sign(v, scale, tol);
        if (s == 0) v = T(0);
        nonneg = nonneg && s >= 0;
        nonpos = nonpos && s <= 0;
    }
    if (!nonneg && !nonpos) throw MixedSigns("ᵗk'G has entries of both signs");
    if (!nonneg) z = -z;
    return dec.unpermute(z);
}

template <Field T>
EmptinessReport<T> decide(const StandardSystem<T>& sys, const DecideOptions& options = {}) {
    const Decomposition<T> dec = decompose(sys, options.tol);
    const std::vector<TestVector<T>> tests = family_tests(dec, options.mode, options.order, options.tol);
    const Vector<T> b = dec.permuted_b();

    EmptinessReport<T> report;
    report.mode = options.mode;
    report.order = options.order;
    for (const auto& t : tests) ++report.families[static_cast<std::size_t>(t.family)].generated;

    // Earliest failing index in the fixed order, regardless of which worker
    // finds a failure first.
    const std::size_t total = tests.size();
    std::atomic<std::size_t> first_fail{total};
    auto scan = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t idx = begin; idx < total; idx += stride) {
            if (idx > first_fail.load(std::memory_order_relaxed)) return;
            if (run_test(tests[idx].kprime, dec, b, options.tol).pass) continue;
            std::size_t cur = first_fail.load();
            while (idx < cur && !first_fail.compare_exchange_weak(cur, idx)) {
            }
            return;
        }
    };
    std::size_t workers = options.threads ? options.threads : parallelism_cap();
    if (total < 64) workers = 1;
    workers = std::max<std::size_t>(1, std::min(workers, total));
    if (workers == 1) {
        scan(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w, workers);
    }

    const std::size_t fail = first_fail.load();
    report.tests_run = fail < total ? fail + 1 : total;
    for (std::size_t idx = 0; idx < report.tests_run; ++idx) {
        auto& c = report.families[static_cast<std::size_t>(tests[idx].family)];
        ++c.run;
        if (idx != fail) ++c.passed;
    }
    if (fail < total) {
        const auto& t = tests[fail];
        auto outcome = run_test(t.kprime, dec, b, options.tol);
        report.verdict = Verdict::Empty;
        report.certificate = Certificate<T>{t, std::move(outcome.interval), farkas_from(t.kprime, dec, options.tol)};
    }
    return report;
}

}  // namespace hollowcheck
