#include "hollowcheck/harness.hpp"

#include "hollowcheck/certificate.hpp"
#include "hollowcheck/densemat.hpp"

#include <algorithm>
#include <sstream>

namespace hollowcheck::harness {

namespace {

Vector<Rational> residual(const Matrix<Rational>& M, const Vector<Rational>& c) {
    // (M - I) c
    return sub(mat_vec(M, c), c);
}

std::string vec_str(const Vector<Rational>& v) { return to_string(v); }

RSystem standard_from(const Matrix<Rational>& A, const Vector<Rational>& b) { return make_standard(A, b); }

}  // namespace

void GenSpec::validate() const {
    if (n < 1 || m <= n) throw InvalidDimension("GenSpec needs m > n >= 1, got " + str());
    if (entry_range < 1 || b_range < 1) throw InvalidDimension("GenSpec ranges must be >= 1, got " + str());
}

std::string GenSpec::str() const {
    std::ostringstream os;
    os << "seed=" << seed << " m=" << m << " n=" << n << " range=" << entry_range << " b_range=" << b_range;
    return os.str();
}

RSystem gen_random_system(const GenSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix<Rational> A(spec.m, spec.n);
        Vector<Rational> b(spec.m);
        for (std::size_t i = 0; i < spec.m; ++i) {
            for (std::size_t j = 0; j < spec.n; ++j) A(i, j) = rng.uniform(-spec.entry_range, spec.entry_range);
            b[i] = rng.uniform(-spec.b_range, spec.b_range);
        }
        if (check_assumptions(A, b).ok()) return standard_from(A, b);
    }
    throw GenerationExhausted("1000 rejections for " + spec.str());
}

RawSystem<Rational> gen_raw_system(const GenSpec& spec, RawForm form) {
    if (spec.m < 1 || spec.n < 1 || spec.entry_range < 1 || spec.b_range < 1)
        throw InvalidDimension("gen_raw_system needs m, n, ranges >= 1, got " + spec.str());
    Rng rng(spec.seed);
    Matrix<Rational> A(spec.m, spec.n);
    Vector<Rational> b(spec.m);
    for (std::size_t i = 0; i < spec.m; ++i) {
        for (std::size_t j = 0; j < spec.n; ++j) A(i, j) = rng.uniform(-spec.entry_range, spec.entry_range);
        b[i] = rng.uniform(-spec.b_range, spec.b_range);
    }
    return RawSystem<Rational>(form, std::move(A), std::move(b));
}

std::vector<GenSpec> make_specs(std::uint64_t master_seed, std::size_t count, std::size_t max_m, std::size_t max_n,
                                int range) {
    Rng rng(master_seed);
    std::vector<GenSpec> specs;
    specs.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        GenSpec spec;
        spec.n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_n)));
        spec.m = static_cast<std::size_t>(
            rng.uniform(static_cast<std::int64_t>(spec.n) + 1, static_cast<std::int64_t>(std::max(max_m, spec.n + 1))));
        spec.entry_range = range;
        spec.b_range = range;
        spec.seed = rng.next();
        specs.push_back(spec);
    }
    return specs;
}

std::string serialize(const Matrix<Rational>& A, const Vector<Rational>& b) {
    std::ostringstream os;
    os << A.rows() << ' ' << A.cols() << '\n';
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) os << A(i, j).str() << ' ';
        os << b[i].str() << '\n';
    }
    return os.str();
}

ProbeReport probe_lemma1(const RSystem& sys, std::size_t trials, std::uint64_t seed) {
    const auto dec = decompose(sys);
    const Matrix<Rational> A = dec.permuted_A();
    const Matrix<Rational> AAp = mat_mul(A, pinv_full_col_rank(A));
    const Matrix<Rational> U = build_U(dec);
    const Matrix<Rational> Rhat = vstack(dec.R, Matrix<Rational>::identity(dec.n()));
    const std::size_t m = dec.m();

    ProbeReport report{"lemma1", 1, 0, 0, 0};
    Rng rng(seed);
    auto check = [&](const Vector<Rational>& c, const char* kind) {
        const bool lhs = residual(AAp, c).is_zero();
        const bool rhs = mat_vec(U, c).is_zero();
        ++report.checks;
        if (lhs != rhs) {
            throw ProbeFailure(std::string("lemma1 (") + kind + "): (AA⁺-I)c = 0 is " + (lhs ? "true" : "false") +
                               " but Uc = 0 is " + (rhs ? "true" : "false") + "; c = " + vec_str(c) +
                               "; seed = " + std::to_string(seed) + "; instance:\n" + serialize(A, dec.permuted_b()));
        }
        if (lhs) ++report.positives;
        else ++report.negatives;
    };

    check(Vector<Rational>(m), "zero");
    for (std::size_t t = 0; t < trials; ++t) {
        const Vector<Rational> c = mat_vec(Rhat, rng.small_vector(dec.n()));
        check(c, "positive");
        Vector<Rational> perturbed = c;
        perturbed[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(m) - 1))] += 1;
        check(perturbed, "perturbed");
        check(rng.small_vector(m), "random");
    }
    return report;
}

Matrix<Rational> pinv_rank_factorization(const Matrix<Rational>& A) {
    const auto ech = rref(A);
    const std::size_t r = ech.pivots.size();
    if (r == 0) return Matrix<Rational>(A.cols(), A.rows());
    const Matrix<Rational> F = row_block(ech.reduced, 0, r);
    Matrix<Rational> C(A.rows(), r);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < r; ++k) C(i, k) = A(i, ech.pivots[k]);
    const Matrix<Rational> Ft = F.transpose();
    const Matrix<Rational> Ct = C.transpose();
    return mat_mul(mat_mul(Ft, invert(mat_mul(F, Ft))), mat_mul(invert(mat_mul(Ct, C)), Ct));
}

ProbeReport probe_lemma2(std::size_t n, std::size_t k, std::size_t trials, std::uint64_t seed) {
    if (k < 1 || k > n) throw InvalidDimension("probe_lemma2 needs 1 <= k <= n");
    Rng rng(seed);

    // Full row rank B.
    Matrix<Rational> B(k, n);
    for (int attempt = 0;; ++attempt) {
        if (attempt == 1000) throw GenerationExhausted("probe_lemma2: no full-row-rank B");
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) B(i, j) = rng.uniform(-3, 3);
        if (rank(B) == k) break;
    }
    const Matrix<Rational> Bt = B.transpose();
    const Matrix<Rational> B_pinv = mat_mul(Bt, invert(mat_mul(B, Bt)));
    Vector<Rational> w(k);
    for (auto& x : w) x = rng.uniform(-3, 3);
    const Vector<Rational> a = mat_vec(Bt, w);

    Matrix<Rational> At(1, n);
    At.set_row(0, a);
    const Matrix<Rational> Atilde = vstack(At, B);

    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << "lemma2: " << what << "; seed = " << seed << "; B = " << B << "; a = " << a;
        throw ProbeFailure(os.str());
    };

    ProbeReport report{"lemma2", 1, 0, 0, 0};
    const Matrix<Rational> P = pinv_append_row(B_pinv, B, a);
    ++report.checks;
    if (P != pinv_rank_factorization(Atilde)) fail("bordered pseudoinverse differs from the full-rank factorization");
    if (!mp_axioms_check(Atilde, P, Rational(0)).all()) fail("bordered pseudoinverse violates a Penrose axiom");
    if (k == n && P != pinv_full_col_rank(Atilde)) fail("bordered pseudoinverse differs from (ᵗÃÃ)⁻¹ᵗÃ");
    ++report.positives;

    const Vector<Rational> v = vec_mat(a, B_pinv);
    Matrix<Rational> Utilde(k + 1, k + 1);
    Utilde(0, 0) = 1;
    for (std::size_t j = 0; j < k; ++j) Utilde(0, j + 1) = -v[j];
    const Matrix<Rational> AAp = mat_mul(Atilde, P);

    auto check = [&](const Vector<Rational>& c, const char* kind) {
        const bool lhs = residual(AAp, c).is_zero();
        const bool rhs = mat_vec(Utilde, c).is_zero();
        ++report.checks;
        if (lhs != rhs) fail(std::string("Ũ equivalence (") + kind + ") fails at c = " + vec_str(c));
        if (lhs) ++report.positives;
        else ++report.negatives;
    };
    for (std::size_t t = 0; t < trials; ++t) {
        const Vector<Rational> c2 = rng.small_vector(k);
        Vector<Rational> c(k + 1);
        c[0] = dot(v, c2);
        for (std::size_t j = 0; j < k; ++j) c[j + 1] = c2[j];
        check(c, "positive");
        Vector<Rational> perturbed = c;
        perturbed[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k)))] += 1;
        check(perturbed, "perturbed");
        check(rng.small_vector(k + 1), "random");
    }
    return report;
}

ProbeReport probe_mp_axioms(const std::vector<GenSpec>& specs) {
    ProbeReport report{"mp_axioms", 0, 0, 0, 0};
    for (const auto& spec : specs) {
        const RSystem sys = gen_random_system(spec);
        const auto P = pinv_full_col_rank(sys.A);
        const auto axioms = mp_axioms_check(sys.A, P, Rational(0));
        ++report.instances;
        report.checks += 4;
        if (!axioms.all()) {
            std::ostringstream os;
            os << "mp_axioms: AXA=A " << axioms.apa_eq_a << ", XAX=X " << axioms.pap_eq_p << ", (AX)ᵗ=AX "
               << axioms.ap_symmetric << ", (XA)ᵗ=XA " << axioms.pa_symmetric << " [" << spec.str() << "]:\n"
               << serialize(sys.A, sys.b);
            throw ProbeFailure(os.str());
        }
        report.positives += 4;
    }
    return report;
}

Theorem1Check probe_theorem1(const RSystem& sys, std::size_t i) {
    const auto dec = decompose(sys);
    if (i >= dec.excess()) throw InvalidDimension("probe_theorem1: i must be < m - n");
    Theorem1Check out;
    out.i = i;
    for (std::size_t p = 0; p < dec.m(); ++p)
        if (dec.G(i, p) != 0) out.support.push_back(dec.row_perm[p]);
    std::sort(out.support.begin(), out.support.end());

    out.interval_contains_zero = run_test(Vector<Rational>::unit(dec.excess(), i), dec, dec.permuted_b()).pass;
    const Matrix<Rational> sub_A = select_rows(sys.A, out.support);
    Vector<Rational> sub_b(out.support.size());
    for (std::size_t r = 0; r < out.support.size(); ++r) sub_b[r] = sys.b[out.support[r]];
    out.subsystem_feasible = oracle::fm_feasible(sub_A, sub_b).feasible();
    return out;
}

Theorem1Stats theorem1_run(const std::vector<GenSpec>& specs) {
    Theorem1Stats stats;
    for (const auto& spec : specs) {
        const RSystem sys = gen_random_system(spec);
        ++stats.instances;
        for (std::size_t i = 0; i < sys.m() - sys.n(); ++i) {
            const auto check = probe_theorem1(sys, i);
            ++stats.checks;
            if (check.agree()) {
                ++stats.agreements;
                continue;
            }
            // Shrink while some row of U still disagrees.
            auto disagrees = [](const Matrix<Rational>& A, const Vector<Rational>& b) {
                const RSystem s = make_standard(A, b);
                for (std::size_t r = 0; r < s.m() - s.n(); ++r)
                    if (!probe_theorem1(s, r).agree()) return true;
                return false;
            };
            auto [A, b] = shrink(sys.A, sys.b, disagrees);
            std::ostringstream detail;
            detail << "i = " << i << ": 0 in interval = " << check.interval_contains_zero
                   << ", B_i subsystem feasible = " << check.subsystem_feasible;
            stats.findings.push_back({spec.str(), serialize(sys.A, sys.b), serialize(A, b), detail.str()});
        }
    }
    return stats;
}

void tally(const RSystem& sys, const std::string& spec, AgreementStats& stats) {
    DecideOptions options;
    options.mode = stats.mode;
    options.threads = 1;
    const auto report = decide(sys, options);
    const auto fm = oracle::fm_feasible(sys.A, sys.b);
    ++stats.total;

    if (report.verdict == Verdict::Empty) {
        const auto& cert = *report.certificate;
        const bool certified = check_farkas(sys.A, sys.b, cert.farkas_y).valid();
        if (fm.feasible() || !certified) {
            throw SoundnessViolation("Empty verdict " + std::string(certified ? "" : "with invalid certificate ") +
                                     "on " + (fm.feasible() ? "oracle-feasible " : "") + "instance [" + spec +
                                     "]:\n" + serialize(sys.A, sys.b));
        }
        ++stats.empty_agree;
        ++stats.family_failures[static_cast<std::size_t>(cert.test.family)];
        return;
    }
    if (fm.feasible()) {
        ++stats.notproven_and_feasible;
        return;
    }

    const Mode mode = stats.mode;
    auto still_discrepant = [mode](const Matrix<Rational>& A, const Vector<Rational>& b) {
        DecideOptions opts;
        opts.mode = mode;
        opts.threads = 1;
        return decide(make_standard(A, b), opts).verdict == Verdict::NotProvenEmpty &&
               !oracle::fm_feasible(A, b).feasible();
    };
    auto [A, b] = shrink(sys.A, sys.b, still_discrepant);
    stats.discrepancies.push_back({spec, serialize(sys.A, sys.b), serialize(A, b),
                                   "NOT-PROVEN-EMPTY but oracle infeasible"});
}

AgreementStats agreement_run(const std::vector<GenSpec>& specs, Mode mode) {
    AgreementStats stats;
    stats.mode = mode;
    for (const auto& spec : specs) tally(gen_random_system(spec), spec.str(), stats);
    std::sort(stats.discrepancies.begin(), stats.discrepancies.end(),
              [](const Finding& x, const Finding& y) { return x.spec < y.spec; });
    return stats;
}

PermutationStats permutation_sensitivity(const std::vector<GenSpec>& specs, std::size_t per_instance, Mode mode) {
    PermutationStats stats;
    DecideOptions options;
    options.mode = mode;
    options.threads = 1;
    for (const auto& spec : specs) {
        const RSystem sys = gen_random_system(spec);
        const Verdict base = decide(sys, options).verdict;
        ++stats.instances;
        Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
        for (std::size_t t = 0; t < per_instance; ++t) {
            std::vector<std::size_t> order(sys.m());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
            Vector<Rational> b(sys.m());
            for (std::size_t i = 0; i < order.size(); ++i) b[i] = sys.b[order[i]];
            const Matrix<Rational> A = select_rows(sys.A, order);
            ++stats.permutations;
            const Verdict v = decide(make_standard(A, b), options).verdict;
            if (v == base) continue;
            ++stats.changed_instances;
            stats.examples.push_back({spec.str(), serialize(sys.A, sys.b), serialize(A, b),
                                      std::string("verdict ") + std::string(to_string(base)) + " becomes " +
                                          std::string(to_string(v)) + " under the row order in `minimized`"});
            break;
        }
    }
    return stats;
}

}  // namespace hollowcheck::harness
