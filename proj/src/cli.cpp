#include "hollowcheck/cli.hpp"

#include "hollowcheck/certificate.hpp"
#include "hollowcheck/harness.hpp"
#include "hollowcheck/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hollowcheck::cli {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <Field T>
std::vector<std::string> strings(const Vector<T>& v) {
    std::vector<std::string> out;
    out.reserve(v.dim());
    for (const auto& x : v) out.push_back(ScalarTraits<T>::to_string(x));
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return out + ")";
}

template <Field T>
Vector<T> convert(const Vector<Rational>& v) {
    Vector<T> out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = from_rational<T>(v[i]);
    return out;
}

template <Field T>
Matrix<T> convert(const Matrix<Rational>& M) {
    Matrix<T> out(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = from_rational<T>(M(i, j));
    return out;
}

template <Field T>
CheckSummary check_impl(const RawSystem<Rational>& raw_q, const RunConfig& config) {
    const RawSystem<T> raw(raw_q.form, convert<T>(raw_q.A), convert<T>(raw_q.b));
    const Tolerance tol{config.tol.value_or(Tolerance{}.rel)};

    CheckSummary s;
    s.backend = std::string(ScalarTraits<T>::name);
    s.mode = config.mode;
    s.order = config.paper_order ? TestOrder::Paper : TestOrder::Default;

    auto result = standardize(raw, tol);
    if (const auto* early = std::get_if<EarlyEmpty<T>>(&result)) {
        const std::size_t rows = raw_inequalities(raw_q).first.rows();
        s.verdict = Verdict::Empty;
        s.certificate = CertificateSummary{"zero_row",
                                           "zero_row(" + row_origin_str(early->origin) + ")",
                                           std::nullopt,
                                           "-inf",
                                           ScalarTraits<T>::to_string(early->bound),
                                           strings(Vector<T>::unit(rows, early->row)),
                                           "raw"};
    } else {
        const auto& sys = std::get<StandardSystem<T>>(result);
        StandardSummary info{sys.m(), sys.n(), std::string(to_string(sys.embedding)), {}};
        for (const auto& origin : sys.rows) info.row_origins.push_back(row_origin_str(origin));
        s.standard = std::move(info);

        DecideOptions options;
        options.mode = s.mode;
        options.order = s.order;
        options.tol = tol;
        const auto report = decide(sys, options);
        s.verdict = report.verdict;
        s.tests_run = report.tests_run;
        s.families = report.families;
        if (report.certificate) {
            const auto& c = *report.certificate;
            if constexpr (std::is_same_v<T, Rational>) {
                if (!check_farkas(sys.A, sys.b, c.farkas_y).valid())
                    throw SoundnessViolation("certificate from " + c.test.origin() + " does not validate");
            }
            s.certificate = CertificateSummary{std::string(to_string(c.test.family)),
                                               c.test.origin(),
                                               strings(c.test.kprime),
                                               c.interval.lo().str(),
                                               c.interval.hi().str(),
                                               strings(c.farkas_y),
                                               "standard"};
        }
    }

    if (config.oracle_check) {
        s.oracle = oracle_summary(raw_q);
        if (s.verdict == Verdict::Empty && s.oracle->feasible)
            throw SoundnessViolation("EMPTY verdict on an instance the oracle finds feasible");
    }
    return s;
}

json families_json(const std::array<FamilyCounts, kFamilyCount>& families) {
    json j = json::object();
    for (auto f : kAllFamilies) {
        const auto& c = families[static_cast<std::size_t>(f)];
        j[std::string(to_string(f))] = {{"generated", c.generated}, {"passed", c.passed}, {"run", c.run}};
    }
    return j;
}

json oracle_json(const OracleSummary& o) {
    json j = {{"status", o.feasible ? "feasible" : "infeasible"}};
    j["witness"] = o.feasible ? json(o.witness) : json(nullptr);
    j["certificate"] = o.feasible ? json(nullptr) : json(o.certificate);
    return j;
}

json probe_json(const harness::ProbeReport& r) {
    return {{"instances", r.instances}, {"checks", r.checks}, {"positives", r.positives}, {"negatives", r.negatives}};
}

json finding_json(const harness::Finding& f) {
    return {{"spec", f.spec}, {"instance", f.instance}, {"minimized", f.minimized}, {"detail", f.detail}};
}

json theorem1_json(const harness::Theorem1Stats& s) {
    json findings = json::array();
    for (const auto& f : s.findings) findings.push_back(finding_json(f));
    std::ostringstream rate;
    rate << s.agreements << "/" << s.checks;
    return {{"instances", s.instances},
            {"checks", s.checks},
            {"agreements", s.agreements},
            {"agreement_rate", rate.str()},
            {"findings", findings}};
}

json agreement_json(const harness::AgreementStats& s) {
    json findings = json::array();
    for (const auto& f : s.discrepancies) findings.push_back(finding_json(f));
    json hist = json::object();
    for (auto f : kAllFamilies) hist[std::string(to_string(f))] = s.family_failures[static_cast<std::size_t>(f)];
    return {{"mode", std::string(to_string(s.mode))},
            {"total", s.total},
            {"empty_agree", s.empty_agree},
            {"notproven_and_feasible", s.notproven_and_feasible},
            {"discrepancy_count", s.discrepancies.size()},
            {"discrepancies", findings},
            {"certifying_family", hist}};
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_probe(const RunConfig& config, std::ostream& out) {
    const bool all = config.suite == "all";
    json suites = json::object();
    std::ostringstream text;
    const auto want = [&](const char* name) { return all || config.suite == name; };

    if (want("mp_axioms")) {
        const auto r = harness::probe_mp_axioms(harness::make_specs(config.seed, config.count, 8, 4, 5));
        suites["mp_axioms"] = probe_json(r);
        text << "mp_axioms: " << r.instances << " matrices, all four axioms exact\n";
    }
    if (want("lemma1")) {
        harness::ProbeReport total{"lemma1", 0, 0, 0, 0};
        for (const auto& spec : harness::make_specs(config.seed, config.count, 8, 4, 5)) {
            const auto r = harness::probe_lemma1(harness::gen_random_system(spec), config.trials, spec.seed);
            ++total.instances;
            total.checks += r.checks;
            total.positives += r.positives;
            total.negatives += r.negatives;
        }
        suites["lemma1"] = probe_json(total);
        text << "lemma1: " << total.checks << " checks over " << total.instances << " instances, equivalence holds\n";
    }
    if (want("lemma2")) {
        harness::Rng rng(config.seed);
        harness::ProbeReport total{"lemma2", 0, 0, 0, 0};
        for (std::size_t t = 0; t < config.count; ++t) {
            const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
            const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n)));
            const auto r = harness::probe_lemma2(n, k, config.trials, rng.next());
            ++total.instances;
            total.checks += r.checks;
            total.positives += r.positives;
            total.negatives += r.negatives;
        }
        suites["lemma2"] = probe_json(total);
        text << "lemma2: " << total.checks << " checks over " << total.instances << " instances, equivalence holds\n";
    }
    if (want("theorem1")) {
        const auto s = harness::theorem1_run(harness::make_specs(config.seed, config.count, 8, 3, 5));
        suites["theorem1"] = theorem1_json(s);
        text << "theorem1: " << s.agreements << "/" << s.checks << " rows agree, " << s.findings.size()
             << " findings\n";
    }
    if (want("agreement")) {
        const auto specs = harness::make_specs(config.seed, config.count, 8, 3, 5);
        json modes = json::object();
        for (auto mode : {Mode::Algorithm, Mode::Theorem}) {
            const auto s = harness::agreement_run(specs, mode);
            modes[std::string(to_string(mode))] = agreement_json(s);
            text << "agreement (" << to_string(mode) << "): " << s.total << " instances, " << s.empty_agree
                 << " empty (oracle-confirmed), " << s.notproven_and_feasible << " not proven empty and feasible, "
                 << s.discrepancies.size() << " discrepancies\n";
        }
        suites["agreement"] = modes;
    }
    if (want("permutation")) {
        const auto specs = harness::make_specs(config.seed, config.count, 8, 3, 5);
        const auto s = harness::permutation_sensitivity(specs, 5, Mode::Algorithm);
        json examples = json::array();
        for (const auto& f : s.examples) examples.push_back(finding_json(f));
        suites["permutation"] = {{"instances", s.instances},
                                 {"permutations", s.permutations},
                                 {"changed_instances", s.changed_instances},
                                 {"examples", examples}};
        text << "permutation: verdict depends on row order for " << s.changed_instances << " of " << s.instances
             << " instances\n";
    }
    if (suites.empty()) throw UsageError("unknown suite '" + config.suite + "'");

    if (config.json) {
        out << dump({{"seed", config.seed}, {"count", config.count}, {"trials", config.trials}, {"suites", suites}});
    } else {
        out << text.str();
    }
    return kNotProvenEmpty;
}

int run_gen(const RunConfig& config, std::ostream& out) {
    harness::GenSpec spec{config.seed, config.m, config.n, config.range, config.range};
    const auto sys = harness::gen_random_system(spec);
    const std::string text = "# " + spec.str() + "\n" + harness::serialize(sys.A, sys.b);
    if (config.output == "-") {
        out << text;
    } else {
        std::ofstream file(config.output, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + config.output + "'");
        file << text;
    }
    return kNotProvenEmpty;
}

int guarded(std::ostream& err, const auto& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const DimensionError& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const InvalidDimension& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kInternalError;
    }
}

int run_text(const RunConfig& config, std::string_view text, std::ostream& out) {
    RawSystem<Rational> raw = parse_system(text, config.form);
    if (config.subcommand == Subcommand::Oracle) {
        const auto o = oracle_summary(raw);
        out << (config.json ? to_json(o) : human(o));
        return o.feasible ? kNotProvenEmpty : kEmpty;
    }
    const auto s = config.backend == Backend::Rational ? check_impl<Rational>(raw, config) : check_impl<double>(raw, config);
    out << (config.json ? to_json(s) : human(s));
    return s.verdict == Verdict::Empty ? kEmpty : kNotProvenEmpty;
}

}  // namespace

void RunConfig::validate() const {
    if (tol && backend != Backend::Float64) throw UsageError("--tol requires --backend float64");
    if (tol && !(*tol >= 0)) throw UsageError("--tol must be >= 0");
}

RawSystem<Rational> parse_system(std::string_view text, RawForm form) {
    std::optional<std::pair<std::size_t, std::size_t>> shape;
    std::vector<std::vector<Rational>> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::pair<std::string_view, std::size_t>> tokens;  // (text, column)
        for (std::size_t i = 0; i < line.size();) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            tokens.emplace_back(line.substr(i, j - i), i + 1);
            i = j;
        }
        if (tokens.empty()) continue;

        auto where = [&](std::size_t column) {
            return "line " + std::to_string(line_no) + ", column " + std::to_string(column);
        };
        if (!shape) {
            if (tokens.size() != 2) throw ParseError(where(tokens[0].second) + ": header must be \"m n\"");
            std::size_t dims[2];
            for (int k = 0; k < 2; ++k) {
                const auto [tok, col] = tokens[static_cast<std::size_t>(k)];
                const auto value = parse_rational(tok);
                if (!value || *value < 1 || denominator(*value) != 1)
                    throw ParseError(where(col) + ": expected a positive integer, got '" + std::string(tok) + "'");
                dims[k] = numerator(*value).convert_to<std::size_t>();
            }
            shape = {dims[0], dims[1]};
            continue;
        }
        const auto [m, n] = *shape;
        if (rows.size() == m)
            throw DimensionError("line " + std::to_string(line_no) + ": more than m = " + std::to_string(m) + " rows");
        if (tokens.size() != n + 1) {
            throw DimensionError("line " + std::to_string(line_no) + ": expected " + std::to_string(n + 1) +
                                 " numbers, got " + std::to_string(tokens.size()));
        }
        std::vector<Rational> row;
        for (const auto& [tok, col] : tokens) {
            auto value = parse_rational(tok);
            if (!value) throw ParseError(where(col) + ": invalid number '" + std::string(tok) + "'");
            row.push_back(std::move(*value));
        }
        rows.push_back(std::move(row));
    }
    if (!shape) throw ParseError("line " + std::to_string(line_no) + ": missing header \"m n\"");
    const auto [m, n] = *shape;
    if (rows.size() != m)
        throw DimensionError("expected " + std::to_string(m) + " rows, got " + std::to_string(rows.size()));

    Matrix<Rational> A(m, n);
    Vector<Rational> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) A(i, j) = rows[i][j];
        b[i] = rows[i][n];
    }
    return RawSystem<Rational>(form, std::move(A), std::move(b));
}

std::string row_origin_str(const RowOrigin& origin) {
    const std::string i = std::to_string(origin.index);
    switch (origin.kind) {
        case RowOrigin::Kind::Constraint: return "row " + i;
        case RowOrigin::Kind::NegatedConstraint: return "-row " + i;
        case RowOrigin::Kind::Nonneg: return "nonneg " + i;
        case RowOrigin::Kind::Redundant: return "redundant";
    }
    return "?";
}

CheckSummary check(const RawSystem<Rational>& raw, const RunConfig& config) {
    config.validate();
    return config.backend == Backend::Rational ? check_impl<Rational>(raw, config) : check_impl<double>(raw, config);
}

OracleSummary oracle_summary(const RawSystem<Rational>& raw) {
    const auto [A, b] = raw_inequalities(raw);
    const auto result = oracle::fm_feasible(A, b);
    OracleSummary o;
    o.feasible = result.feasible();
    if (o.feasible) {
        if (!satisfies(A, b, result.witness)) throw SoundnessViolation("oracle witness violates the system");
        o.witness = strings(result.witness);
    } else {
        if (!check_farkas(A, b, result.certificate).valid())
            throw SoundnessViolation("oracle certificate does not validate");
        o.certificate = strings(result.certificate);
    }
    return o;
}

std::string to_json(const CheckSummary& s) {
    json j;
    j["verdict"] = std::string(to_string(s.verdict));
    j["mode"] = std::string(to_string(s.mode));
    j["order"] = std::string(to_string(s.order));
    j["backend"] = s.backend;
    j["tests_run"] = s.tests_run;
    j["families"] = families_json(s.families);
    j["paper_claims_nonempty"] = s.verdict == Verdict::NotProvenEmpty;
    if (s.certificate) {
        const auto& c = *s.certificate;
        j["certificate"] = {{"family", c.family},
                            {"origin", c.origin},
                            {"k_prime", c.k_prime ? json(*c.k_prime) : json(nullptr)},
                            {"interval", {c.lo, c.hi}},
                            {"farkas_y", c.farkas_y},
                            {"rows", c.rows}};
    } else {
        j["certificate"] = nullptr;
    }
    if (s.standard) {
        j["standard_form"] = {{"m", s.standard->m},
                              {"n", s.standard->n},
                              {"embedding", s.standard->embedding},
                              {"rows", s.standard->row_origins}};
    } else {
        j["standard_form"] = nullptr;
    }
    if (s.oracle) j["oracle"] = oracle_json(*s.oracle);
    return dump(j);
}

std::string to_json(const OracleSummary& s) { return dump(oracle_json(s)); }

std::string human(const CheckSummary& s) {
    std::ostringstream os;
    if (s.verdict == Verdict::Empty) {
        os << "EMPTY\n";
        const auto& c = *s.certificate;
        os << "certificate: " << c.origin;
        if (c.k_prime) os << ", k' = " << join(*c.k_prime);
        os << ", interval [" << c.lo << ", " << c.hi << "]\n";
        os << "y = " << join(c.farkas_y) << " (" << c.rows << " rows)\n";
    } else {
        os << "NOT-PROVEN-EMPTY (paper: nonempty)\n";
    }
    os << "tests run: " << s.tests_run << "\n";
    if (s.oracle) {
        os << "oracle: " << (s.oracle->feasible ? "feasible" : "infeasible");
        if (s.oracle->feasible) os << ", witness x = " << join(s.oracle->witness);
        const bool agree = s.oracle->feasible == (s.verdict == Verdict::NotProvenEmpty);
        os << (agree ? " (agrees)" : " (disagrees)") << "\n";
    }
    return os.str();
}

std::string human(const OracleSummary& s) {
    std::ostringstream os;
    if (s.feasible) os << "FEASIBLE\nx = " << join(s.witness) << "\n";
    else os << "INFEASIBLE\ny = " << join(s.certificate) << "\n";
    return os.str();
}

std::string canonical_json(std::string_view text) { return dump(json::parse(text)); }

int run_on_text(const RunConfig& config, std::string_view text, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        config.validate();
        return run_text(config, text, out);
    });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        config.validate();
        switch (config.subcommand) {
            case Subcommand::Probe: return run_probe(config, out);
            case Subcommand::Gen: return run_gen(config, out);
            default: return run_text(config, read_input(config.input), out);
        }
    });
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polyhedron emptiness by interval tests on the left kernel, with an exact Fourier-Motzkin oracle."};
    app.require_subcommand(1);
    RunConfig config;
    std::string form = "ineq";
    std::string mode = "algorithm";
    std::string backend = "rational";
    double tol = 0;

    auto* check_cmd = app.add_subcommand("check", "Decide emptiness of {x : Ax <= b}");
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact Fourier-Motzkin feasibility");
    auto* probe_cmd = app.add_subcommand("probe", "Run randomized probe suites");
    auto* gen_cmd = app.add_subcommand("gen", "Write a random standard-form instance");

    for (auto* cmd : {check_cmd, oracle_cmd}) {
        cmd->add_option("input", config.input, "Instance file, or - for stdin")->capture_default_str();
        cmd->add_option("--form", form, "Input form")
            ->check(CLI::IsMember({"ineq", "ineq-nonneg", "eq-nonneg"}))
            ->capture_default_str();
        cmd->add_flag("--json", config.json, "Print the JSON report");
    }
    check_cmd->add_option("--mode", mode, "Test-vector mode")
        ->check(CLI::IsMember({"algorithm", "theorem"}))
        ->capture_default_str();
    check_cmd->add_option("--backend", backend, "Scalar backend")
        ->check(CLI::IsMember({"rational", "float64"}))
        ->capture_default_str();
    auto* tol_opt = check_cmd->add_option("--tol", tol, "Relative zero tolerance (float64 only)");
    check_cmd->add_flag("--paper-order", config.paper_order, "Run families as (b1)perp, (Rb2)perp, kernel, canonical, pairs");
    check_cmd->add_flag("--oracle-check", config.oracle_check, "Cross-check with the oracle");

    probe_cmd->add_option("--suite", config.suite, "all, mp_axioms, lemma1, lemma2, theorem1, agreement or permutation")
        ->check(CLI::IsMember({"all", "mp_axioms", "lemma1", "lemma2", "theorem1", "agreement", "permutation"}))
        ->capture_default_str();
    probe_cmd->add_option("--count", config.count, "Instances per suite")->capture_default_str();
    probe_cmd->add_option("--trials", config.trials, "Random vectors per instance")->capture_default_str();
    probe_cmd->add_flag("--json", config.json, "Print the JSON stats report");
    for (auto* cmd : {probe_cmd, gen_cmd})
        cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();

    gen_cmd->add_option("-m", config.m, "Rows")->capture_default_str();
    gen_cmd->add_option("-n", config.n, "Columns")->capture_default_str();
    gen_cmd->add_option("--range", config.range, "Entries in [-range, range]")->capture_default_str();
    gen_cmd->add_option("-o,--output", config.output, "Output file, or - for stdout")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kInputError;
    }

    if (check_cmd->parsed()) config.subcommand = Subcommand::Check;
    if (oracle_cmd->parsed()) config.subcommand = Subcommand::Oracle;
    if (probe_cmd->parsed()) config.subcommand = Subcommand::Probe;
    if (gen_cmd->parsed()) config.subcommand = Subcommand::Gen;
    config.form = *parse_form(form);
    config.mode = mode == "theorem" ? Mode::Theorem : Mode::Algorithm;
    config.backend = backend == "float64" ? Backend::Float64 : Backend::Rational;
    if (*tol_opt) config.tol = tol;
    return run(config, out, err);
}

}  // namespace hollowcheck::cli
