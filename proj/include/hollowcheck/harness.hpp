#pragma once

// Randomized probes of the algebraic identities behind the emptiness test,
// and agreement runs against the Fourier-Motzkin oracle. All probes run in
// exact rational arithmetic; every failure carries a replayable instance.

#include "hollowcheck/emptiness.hpp"
#include "hollowcheck/matrix.hpp"
#include "hollowcheck/oracle.hpp"
#include "hollowcheck/standardize.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hollowcheck::harness {

using RSystem = StandardSystem<Rational>;

struct GenSpec {
    std::uint64_t seed = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    int entry_range = 5;
    int b_range = 5;

    void validate() const;
    std::string str() const;
};

// mt19937_64 with an explicit modulo mapping, so streams are identical across
// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }
    std::uint64_t next() { return engine_(); }
    // p/q with |p| <= range, 1 <= q <= max_den.
    Rational small_rational(int range = 5, int max_den = 4) {
        return Rational(uniform(-range, range), uniform(1, max_den));
    }
    Vector<Rational> small_vector(std::size_t dim, int range = 5, int max_den = 4) {
        Vector<Rational> v(dim);
        for (auto& x : v) x = small_rational(range, max_den);
        return v;
    }

private:
    std::mt19937_64 engine_;
};

// Integer system satisfying the standard-form assumptions, by rejection.
RSystem gen_random_system(const GenSpec& spec);

// `count` specs with n in [1, max_n], m in [n+1, max_m], seeds drawn from
// master_seed.
std::vector<GenSpec> make_specs(std::uint64_t master_seed, std::size_t count, std::size_t max_m, std::size_t max_n,
                                int range);

// Integer raw system of the given form, with no shape assumptions: entries of
// Ã in [-entry_range, entry_range], b̃ in [-b_range, b_range]. m and n only
// need to be >= 1.
RawSystem<Rational> gen_raw_system(const GenSpec& spec, RawForm form);

// Instance in the CLI file format ("m n", then rows "a_i1 .. a_in b_i").
std::string serialize(const Matrix<Rational>& A, const Vector<Rational>& b);

struct ProbeReport {
    std::string name;
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::size_t positives = 0;  // checks where both sides held
    std::size_t negatives = 0;  // checks where both sides failed
};

// (A A⁺ - I) c = 0  <=>  U c = 0, for c = R̂ c₂ (positive) and perturbations
// of it, with A in the permuted (A₁ ; A₂) order. Throws ProbeFailure.
ProbeReport probe_lemma1(const RSystem& sys, std::size_t trials, std::uint64_t seed);

// For a random full-row-rank B (k x n) and a = ᵗB w: pinv_append_row(B⁺, B, a)
// equals the pseudoinverse of [ᵗa ; B] computed by full-rank factorization,
// and (Ã Ã⁺ - I) c̃ = 0  <=>  Ũ c̃ = 0. Throws ProbeFailure.
ProbeReport probe_lemma2(std::size_t n, std::size_t k, std::size_t trials, std::uint64_t seed);

// Pseudoinverse of any matrix via A = C F (C: pivot columns, F: nonzero rows
// of rref(A)), A⁺ = ᵗF (F ᵗF)⁻¹ (ᵗC C)⁻¹ ᵗC.
Matrix<Rational> pinv_rank_factorization(const Matrix<Rational>& A);

// The four Penrose axioms, exactly, for pinv_full_col_rank on each generated
// system. Throws ProbeFailure.
ProbeReport probe_mp_axioms(const std::vector<GenSpec>& specs);

struct Theorem1Check {
    std::size_t i = 0;                  // row of U (zero-based, permuted order)
    std::vector<std::size_t> support;   // B_i as rows of the input system
    bool interval_contains_zero = false;
    bool subsystem_feasible = false;

    bool agree() const { return interval_contains_zero == subsystem_feasible; }
};

// 0 ∈ u_{i,.}·𝕔  vs  ∩_{j ∈ B_i} L_j ≠ ∅ by the oracle.
Theorem1Check probe_theorem1(const RSystem& sys, std::size_t i);

struct Finding {
    std::string spec;      // generator spec, empty for hand instances
    std::string instance;  // original, serialized
    std::string minimized; // shrunk instance still showing the finding
    std::string detail;
};

struct Theorem1Stats {
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::size_t agreements = 0;
    std::vector<Finding> findings;

    double agreement_rate() const { return checks ? static_cast<double>(agreements) / static_cast<double>(checks) : 1.0; }
};

Theorem1Stats theorem1_run(const std::vector<GenSpec>& specs);

struct AgreementStats {
    Mode mode = Mode::Algorithm;
    std::size_t total = 0;
    std::size_t empty_agree = 0;
    std::size_t notproven_and_feasible = 0;
    std::vector<Finding> discrepancies;  // NotProvenEmpty on an infeasible instance
    std::array<std::size_t, kFamilyCount> family_failures{};  // family of the certifying test

    bool consistent() const { return empty_agree + notproven_and_feasible + discrepancies.size() == total; }
};

// Classifies one instance into `stats`. Throws SoundnessViolation when an
// Empty verdict is not confirmed by the oracle or its certificate fails.
void tally(const RSystem& sys, const std::string& spec, AgreementStats& stats);

AgreementStats agreement_run(const std::vector<GenSpec>& specs, Mode mode);

struct PermutationStats {
    std::size_t instances = 0;
    std::size_t permutations = 0;
    std::size_t changed_instances = 0;  // verdict differs for some row order
    std::vector<Finding> examples;       // one per changed instance
};

// Re-runs decide on `per_instance` random row orders of each generated system.
// The choice of A₂ follows the row order, so the tested vectors change; the
// verdict is compared against the unpermuted run.
PermutationStats permutation_sensitivity(const std::vector<GenSpec>& specs, std::size_t per_instance, Mode mode);

// Greedy row removal, then entry shrinking toward 0, keeping the standard-form
// assumptions and `still_failing` true at every step.
template <typename Pred>
std::pair<Matrix<Rational>, Vector<Rational>> shrink(Matrix<Rational> A, Vector<Rational> b, Pred still_failing);

}  // namespace hollowcheck::harness

#include "hollowcheck/detail/shrink.hpp"
