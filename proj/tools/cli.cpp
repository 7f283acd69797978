#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kpt/kpt.hpp"

namespace kpt::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kResidualMaxN = 256;

json real_json(const Real& v, int digits) { return kpt::to_string(v, digits); }

json complex_json(const Complex& z, int digits) {
    return json{{"re", kpt::to_string(z.real(), digits)}, {"im", kpt::to_string(z.imag(), digits)}};
}

template <class T, class F>
json optional_json(const std::optional<T>& v, F&& f) {
    return v ? f(*v) : json(nullptr);
}

Scalar parse_r(const CliConfig& c, unsigned bits) { return Scalar::parse(c.r, bits); }

void require_range(std::size_t n, std::size_t min, const char* command) {
    if (n < min)
        throw PreconditionError(std::string(command) + " needs n >= " + std::to_string(min));
}

json matrix_json(unsigned k, std::size_t n, const Scalar& r, unsigned bits, int digits) {
    json rows = json::array();
    if (r.is_exact()) {
        const DenseMatrix<Rational> m = build_pell<Rational>(k, n, r.exact());
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (const Rational& v : m.row(i)) row.push_back(v.str());
            rows.push_back(std::move(row));
        }
        return rows;
    }
    PrecisionScope scope(bits);
    const DenseMatrix<Complex> m = build_pell<Complex>(k, n, r.to_complex(bits));
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (const Complex& v : m.row(i)) row.push_back(complex_json(v, digits));
        rows.push_back(std::move(row));
    }
    return rows;
}

json cmd_seq(const CliConfig& c) {
    const SequenceCache seq(c.k, std::max<std::size_t>(c.n, 2));
    json res{{"term", seq[c.n].str()}};
    if (c.all_terms) {
        json terms = json::array();
        for (std::size_t j = 0; j <= c.n; ++j) terms.push_back(seq[j].str());
        res["terms"] = std::move(terms);
    }
    return res;
}

json cmd_sums(const CliConfig& c) {
    const SumsReport s = sums_report(c.k, c.n);
    const SequenceCache seq(c.k, std::max<std::size_t>(c.n, 2));
    const bool agrees = s.s1 == Rational(s1_direct(seq, c.n)) && s.w1 == Rational(w1_direct(seq, c.n)) &&
                        s.s2 == Rational(s2_direct(seq, c.n)) && s.w2 == Rational(w2_direct(seq, c.n));
    return {{"s1", s.s1.str()}, {"w1", s.w1.str()}, {"s2", s.s2.str()},
            {"w2", s.w2.str()}, {"direct_agrees", agrees}};
}

json cmd_norms(const CliConfig& c, unsigned bits) {
    require_range(c.n, 2, "norms");
    const Scalar r = parse_r(c, bits);
    const NormReport rep = norm_report(c.k, c.n, r, bits, c.tol);
    const auto str = [](const Rational& q) { return json(q.str()); };
    json res{{"frobenius", real_json(rep.frobenius, c.digits)},
             {"frobenius_squared_exact", optional_json(rep.frobenius_squared_exact, str)},
             {"l1", real_json(rep.l1, c.digits)},
             {"l1_exact", optional_json(rep.l1_exact, str)},
             {"spectral_lower", real_json(rep.spectral_lower, c.digits)},
             {"spectral_upper", real_json(rep.spectral_upper, c.digits)},
             {"frobenius_direct", rep.frobenius_direct},
             {"l1_direct", rep.l1_direct},
             {"spectral_numeric", rep.spectral_numeric},
             {"row_len_norm", rep.row_len_norm},
             {"col_len_norm", rep.col_len_norm}};
    if (c.include_matrix) res["matrix"] = matrix_json(c.k, c.n, r, bits, c.digits);
    return res;
}

json cmd_bounds(const CliConfig& c, unsigned bits) {
    require_range(c.n, 2, "bounds");
    const Scalar r = parse_r(c, bits);
    const SpectralBounds b = spectral_bounds(c.k, c.n, r, bits);
    const double sigma = spectral_numeric(pell_matrix_cdouble(c.k, c.n, r), c.tol);
    const double slack = 1e-9 * std::max(1.0, sigma);
    const bool within = to_double(b.lower) <= sigma + slack && sigma <= to_double(b.upper) + slack;
    return {{"lower", real_json(b.lower, c.digits)},
            {"upper", real_json(b.upper, c.digits)},
            {"spectral_numeric", sigma},
            {"within_bounds", within}};
}

json cmd_eig(const CliConfig& c, unsigned bits) {
    require_range(c.n, 2, "eig");
    const Scalar r = parse_r(c, bits);
    if (r.is_zero()) throw ZeroR();
    PrecisionScope scope(bits);
    const EigenSpectrum direct = eigenvalues_direct(c.k, c.n, r, bits);
    std::optional<EigenSpectrum> closed;
    if (c.n >= 3) closed = eigenvalues_closed(c.k, c.n, r, bits);
    std::optional<std::vector<Real>> residuals;
    if (closed && c.n <= kResidualMaxN) residuals = eigen_residuals(c.k, *closed);

    json rows = json::array();
    Real max_rel = 0, max_res = 0;
    for (std::size_t m = 0; m < c.n; ++m) {
        json row{{"m", m}, {"rho", complex_json(direct.grid.rho[m], c.digits)}};
        row["lambda_direct"] = complex_json(direct.lambdas[m], c.digits);
        if (closed) {
            row["lambda_closed"] = complex_json(closed->lambdas[m], c.digits);
            row["branch"] = to_string(closed->branch[m]);
            const Real d = rel_diff(closed->lambdas[m], direct.lambdas[m]);
            if (d > max_rel) max_rel = d;
        } else {
            row["lambda_closed"] = nullptr;
            row["branch"] = nullptr;
        }
        if (residuals) {
            row["residual"] = real_json((*residuals)[m], 6);
            if ((*residuals)[m] > max_res) max_res = (*residuals)[m];
        } else {
            row["residual"] = nullptr;
        }
        rows.push_back(std::move(row));
    }
    return {{"eigenvalues", std::move(rows)},
            {"max_rel_diff_closed_direct", closed ? real_json(max_rel, 6) : json(nullptr)},
            {"max_residual", residuals ? real_json(max_res, 6) : json(nullptr)}};
}

json cmd_det(const CliConfig& c, unsigned bits) {
    require_range(c.n, 3, "det");
    const Scalar r = parse_r(c, bits);
    if (r.is_zero()) throw ZeroR();
    const DetReport rep = determinant_report(c.k, c.n, r, bits);
    PrecisionScope scope(bits);
    json res{{"det_closed", complex_json(rep.det_closed, c.digits)},
             {"det_oracle", complex_json(rep.det_oracle, c.digits)},
             {"det_exact", optional_json(rep.det_exact, [](const Rational& q) { return json(q.str()); })},
             {"rel_diff_closed_oracle", real_json(rel_diff(rep.det_closed, rep.det_oracle), 6)},
             {"r1", complex_json(rep.r1, c.digits)},
             {"r2", complex_json(rep.r2, c.digits)},
             {"used_generic_formula", rep.used_generic_formula}};
    if (c.include_matrix) res["matrix"] = matrix_json(c.k, c.n, r, bits, c.digits);
    return res;
}

json cmd_invert(const CliConfig& c, unsigned bits) {
    require_range(c.n, 2, "invert");
    const Scalar r = parse_r(c, bits);
    if (r.is_zero()) throw ZeroR();
    PrecisionScope scope(bits);
    json res;

    if (r.is_real()) {
        const InvertibilityVerdict v = sufficient_condition(c.k, c.n, r, bits);
        res["sufficient_condition"] = {{"status", to_string(v.status)}, {"reason", v.reason}};
    } else {
        res["sufficient_condition"] = nullptr;
    }

    std::optional<bool> gcd_invertible;
    if (r.is_exact()) {
        const InvertibilityVerdict v =
            gcd_verdict(pell_generator<Rational>(c.k, c.n), r.exact(), c.n);
        json factor = nullptr;
        if (v.witness && v.witness->gcd_factor) {
            factor = json::array();
            for (const Rational& q : v.witness->gcd_factor->coefficients()) factor.push_back(q.str());
        }
        gcd_invertible = v.status == InvertibilityStatus::GuaranteedInvertible;
        res["gcd"] = {{"status", to_string(v.status)}, {"reason", v.reason}, {"common_factor", factor}};
    } else {
        res["gcd"] = nullptr;
    }

    const EigenSpectrum s = eigenvalues_direct(c.k, c.n, r, bits);
    const MinEigen me = min_eigen_magnitude(s);
    const std::vector<Real> a = detail::pell_reals(c.k, c.n);
    const Real rho_abs = cabs(s.grid.rho[0]);
    Real scale = 0;
    for (std::size_t j = a.size(); j-- > 0;) scale = scale * rho_abs + a[j];
    const ScanVerdict spectral = classify_gap(me.value / scale, bits);
    res["min_eigenvalue"] = {{"m", me.m},
                             {"magnitude", real_json(me.value, c.digits)},
                             {"relative_gap", real_json(me.value / scale, 6)},
                             {"verdict", to_string(spectral)}};

    // The exact criterion decides when available; otherwise the spectral one.
    std::string verdict = to_string(spectral);
    if (gcd_invertible) verdict = *gcd_invertible ? "invertible" : "singular";
    res["verdict"] = verdict;
    return res;
}

std::vector<int> scan_signs(const std::string& sign) {
    if (sign == "+") return {1};
    if (sign == "-") return {-1};
    if (sign == "both") return {1, -1};
    throw PreconditionError("--sign must be +, - or both");
}

std::vector<ScanCell> scan_cells(const CliConfig& c, unsigned bits) {
    const ScanRange range{c.k_min, c.k_max, c.n_min, c.n_max};
    std::vector<ScanCell> out;
    for (int sign : scan_signs(c.sign)) {
        std::vector<ScanCell> part = counterexample_scan(range, sign, bits);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

json cmd_scan(const std::vector<ScanCell>& cells) {
    json rows = json::array();
    std::size_t counts[3] = {0, 0, 0};
    for (const ScanCell& cell : cells) {
        ++counts[static_cast<int>(cell.verdict)];
        rows.push_back({{"k", cell.k},
                        {"n", cell.n},
                        {"sign", cell.sign < 0 ? "-" : "+"},
                        {"log10_abs_r", real_json(cell.log10_abs_r, 12)},
                        {"min_abs_lambda_log10", real_json(cell.min_abs_lambda_log10, 12)},
                        {"closed_gap", real_json(cell.closed_gap, 6)},
                        {"eigen_gap", real_json(cell.eigen_gap, 6)},
                        {"argmin_m", cell.argmin_m},
                        {"verdict", to_string(cell.verdict)},
                        {"criteria_agree", cell.criteria_agree},
                        {"reported_cell", cell.reported_cell},
                        {"flags", scan_flags(cell)}});
    }
    return {{"cells", std::move(rows)},
            {"summary",
             {{"cells", cells.size()},
              {"invertible", counts[0]},
              {"singular", counts[1]},
              {"undetermined", counts[2]}}}};
}

std::vector<BenchRow> bench_rows(const CliConfig& c, unsigned bits) {
    const Scalar r = parse_r(c, bits);
    if (r.is_zero()) throw ZeroR();
    if (c.min_seconds < 0) throw PreconditionError("--min-seconds must be >= 0");
    return bench_matvec(c.sizes, c.k, r.to_cdouble(), c.min_seconds);
}

json cmd_bench(const std::vector<BenchRow>& rows) {
    json out = json::array();
    for (const BenchRow& row : rows)
        out.push_back({{"n", row.n}, {"path", row.path}, {"mean_ns", row.mean_ns}, {"rel_err", row.rel_err}});
    return {{"rows", std::move(out)}};
}

json cmd_table1(const std::vector<Table1Row>& rows) {
    json out = json::array();
    for (const Table1Row& row : rows)
        out.push_back({{"n", row.n},
                       {"r", row.r},
                       {"lower_ours", row.lower_ours},
                       {"lower_published", row.lower_published},
                       {"sigma_ours", row.sigma_ours},
                       {"sigma_published", row.sigma_published},
                       {"upper_ours", row.upper_ours},
                       {"upper_published", row.upper_published},
                       {"flags", row.flags}});
    return {{"rows", std::move(out)}};
}

json params_json(const CliConfig& c) {
    switch (c.command) {
        case Command::seq:
        case Command::sums: return {{"k", c.k}, {"n", c.n}};
        case Command::norms:
        case Command::bounds: return {{"k", c.k}, {"n", c.n}, {"r", c.r}, {"tol", c.tol}};
        case Command::eig:
        case Command::det:
        case Command::invert: return {{"k", c.k}, {"n", c.n}, {"r", c.r}};
        case Command::scan:
            return {{"k_min", c.k_min}, {"k_max", c.k_max}, {"n_min", c.n_min}, {"n_max", c.n_max}, {"sign", c.sign}};
        case Command::bench:
            return {{"k", c.k}, {"r", c.r}, {"sizes", c.sizes}, {"min_seconds", c.min_seconds}};
        case Command::table1: return {{"tol", c.tol}};
    }
    return json::object();
}

std::string leaf_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// "path value" pairs for every leaf, in document order.
void flatten(const json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (v.is_object() && !v.empty()) {
        for (const auto& [key, item] : v.items()) flatten(item, path.empty() ? key : path + "." + key, out);
    } else if (v.is_array() && !v.empty()) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(path, leaf_text(v));
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string render_pairs(const json& result, Format f) {
    std::vector<std::pair<std::string, std::string>> pairs;
    flatten(result, "", pairs);
    std::string out = f == Format::csv ? "key,value\n" : "";
    for (const auto& [key, value] : pairs)
        out += f == Format::csv ? csv_field(key) + "," + csv_field(value) + "\n" : key + " = " + value + "\n";
    return out;
}

int exit_code_for(const Error& e) {
    const std::string_view kind = e.kind();
    if (kind == "NoConvergence") return kExitNoConvergence;
    if (kind == "ParseError") return kExitParseError;
    if (kind == "ZeroR") return kExitZeroR;
    if (kind == "PrecisionExhausted") return kExitPrecisionExhausted;
    if (kind == "DegenerateCase") return kExitDegenerateCase;
    return kExitPrecondition;
}

json envelope(const CliConfig& c, unsigned bits) {
    return {{"command", command_name(c.command)},
            {"formula_version", formula_version()},
            {"precision_bits", bits}};
}

Outcome error_outcome(const CliConfig& c, unsigned bits, const char* kind, const std::string& message,
                      int code) {
    Outcome o;
    o.exit_code = code;
    o.diagnostic = "kpt " + std::string(command_name(c.command)) + ": " + kind + ": " + message;
    if (effective_format(c) == Format::json) {
        json doc = envelope(c, bits);
        doc["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
        o.text = doc.dump(2) + "\n";
    }
    return o;
}

Outcome execute(const CliConfig& c, unsigned bits) {
    if (bits < kMinPrecisionBits || bits > kMaxPrecisionBits)
        throw PreconditionError("precision_bits must be in [" + std::to_string(kMinPrecisionBits) + ", " +
                                std::to_string(kMaxPrecisionBits) + "]");
    if (c.digits < 1 || c.digits > 1000) throw PreconditionError("--digits must be in [1, 1000]");
    if (!(c.tol > 0)) throw PreconditionError("--tol must be positive");
    PrecisionScope scope(bits);
    const Format f = effective_format(c);

    // Table-shaped commands have a native CSV rendering.
    std::optional<std::string> csv;
    json result;
    switch (c.command) {
        case Command::seq: result = cmd_seq(c); break;
        case Command::sums: result = cmd_sums(c); break;
        case Command::norms: result = cmd_norms(c, bits); break;
        case Command::bounds: result = cmd_bounds(c, bits); break;
        case Command::eig: result = cmd_eig(c, bits); break;
        case Command::det: result = cmd_det(c, bits); break;
        case Command::invert: result = cmd_invert(c, bits); break;
        case Command::scan: {
            const std::vector<ScanCell> cells = scan_cells(c, bits);
            csv = scan_csv(cells);
            result = cmd_scan(cells);
            break;
        }
        case Command::bench: {
            const std::vector<BenchRow> rows = bench_rows(c, bits);
            csv = bench_csv(rows);
            result = cmd_bench(rows);
            break;
        }
        case Command::table1: {
            const std::vector<Table1Row> rows = table1_report(bits, c.tol);
            csv = table1_csv(rows);
            result = cmd_table1(rows);
            break;
        }
    }

    Outcome o;
    if (f == Format::json) {
        json doc = envelope(c, bits);
        doc["params"] = params_json(c);
        doc["result"] = std::move(result);
        o.text = doc.dump(2) + "\n";
    } else if (csv) {
        o.text = *csv;
    } else if (c.command == Command::seq && f == Format::plain && !c.all_terms) {
        o.text = result["term"].get<std::string>() + "\n";
    } else if (c.command == Command::seq && f == Format::plain) {
        for (const json& t : result["terms"]) o.text += t.get<std::string>() + "\n";
    } else {
        o.text = render_pairs(result, f);
    }
    return o;
}

std::optional<Format> parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "plain") return Format::plain;
    return std::nullopt;
}

} // namespace

std::string_view command_name(Command c) {
    switch (c) {
        case Command::seq: return "seq";
        case Command::sums: return "sums";
        case Command::norms: return "norms";
        case Command::bounds: return "bounds";
        case Command::eig: return "eig";
        case Command::det: return "det";
        case Command::invert: return "invert";
        case Command::scan: return "scan";
        case Command::bench: return "bench";
        case Command::table1: return "table1";
    }
    return "unknown";
}

unsigned effective_precision(const CliConfig& config) {
    if (config.precision_bits) return *config.precision_bits;
    return config.command == Command::scan ? kScanDefaultPrecisionBits : kDefaultPrecisionBits;
}

Format effective_format(const CliConfig& config) {
    if (config.output) return *config.output;
    switch (config.command) {
        case Command::scan:
        case Command::bench:
        case Command::table1: return Format::csv;
        default: return Format::plain;
    }
}

Outcome run(const CliConfig& config) {
    const unsigned bits = effective_precision(config);
    try {
        return execute(config, bits);
    } catch (const Error& e) {
        return error_outcome(config, bits, e.kind(), e.what(), exit_code_for(e));
    } catch (const std::exception& e) {
        return error_outcome(config, bits, "InternalError", e.what(), kExitFailure);
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"r-circulant matrices over generalized k-Pell-Tribonacci numbers", "kpt"};
    app.require_subcommand(1);
    app.set_version_flag("--version", formula_version());

    CliConfig cfg;
    unsigned precision = 0;
    std::string output, out_path;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--precision", precision, "working precision in bits [64, 4096]");
        sub->add_option("--output", output, "json, csv or plain")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
        sub->add_option("--out", out_path, "write the report to this file");
        sub->add_option("--digits", cfg.digits, "significant digits of high-precision values")
            ->capture_default_str();
    };
    const auto kn = [&](CLI::App* sub, bool need_r) {
        sub->add_option("--k", cfg.k, "sequence parameter k >= 1")->required();
        sub->add_option("--n", cfg.n, "order n")->required();
        if (need_r)
            sub->add_option("--r", cfg.r, "scalar: p/q, decimal, a+bi (use --r=-i for -i)")
                ->capture_default_str();
    };

    struct Sub {
        Command command;
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {Command::seq, "seq", "term P(n) of the sequence"},
        {Command::sums, "sums", "closed-form sums S1, W1, S2, W2 up to n"},
        {Command::norms, "norms", "Frobenius and l1 norms, spectral bounds and oracles"},
        {Command::bounds, "bounds", "spectral-norm bounds against power iteration"},
        {Command::eig, "eig", "eigenvalues, closed form against direct evaluation"},
        {Command::det, "det", "determinant, closed form against oracles"},
        {Command::invert, "invert", "invertibility verdicts"},
        {Command::scan, "scan", "singularity scan of the excluded r values"},
        {Command::bench, "bench", "dense against FFT-based matvec timings"},
        {Command::table1, "table1", "published bound table against recomputed values"},
    };
    for (const Sub& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        common(sub);
        sub->callback([&cfg, c = s.command] { cfg.command = c; });
        switch (s.command) {
            case Command::seq:
                kn(sub, false);
                sub->add_flag("--all", cfg.all_terms, "print P(0), ..., P(n)");
                break;
            case Command::sums: kn(sub, false); break;
            case Command::norms:
            case Command::bounds:
                kn(sub, true);
                sub->add_option("--tol", cfg.tol, "power-iteration tolerance")->capture_default_str();
                if (s.command == Command::norms)
                    sub->add_flag("--matrix", cfg.include_matrix, "include the matrix entries");
                break;
            case Command::det:
                kn(sub, true);
                sub->add_flag("--matrix", cfg.include_matrix, "include the matrix entries");
                break;
            case Command::eig:
            case Command::invert: kn(sub, true); break;
            case Command::scan:
                sub->add_option("--k-min", cfg.k_min)->capture_default_str();
                sub->add_option("--k-max", cfg.k_max)->capture_default_str();
                sub->add_option("--n-min", cfg.n_min)->capture_default_str();
                sub->add_option("--n-max", cfg.n_max)->capture_default_str();
                sub->add_option("--sign", cfg.sign, "+, - or both")
                    ->check(CLI::IsMember({"+", "-", "both"}))
                    ->capture_default_str();
                break;
            case Command::bench:
                sub->add_option("--k", cfg.k)->capture_default_str();
                sub->add_option("--r", cfg.r)->capture_default_str();
                sub->add_option("--sizes", cfg.sizes, "comma-separated sizes")->delimiter(',');
                sub->add_option("--min-seconds", cfg.min_seconds, "minimum time per path and size")
                    ->capture_default_str();
                break;
            case Command::table1:
                sub->add_option("--tol", cfg.tol, "power-iteration tolerance")->capture_default_str();
                break;
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitPrecondition;
    }

    if (!output.empty()) cfg.output = parse_format(output);
    if (!out_path.empty()) cfg.out_path = out_path;
    if (precision != 0) {
        cfg.precision_bits = precision;
    } else if (const char* env = std::getenv("KPT_PRECISION_BITS"); env != nullptr && *env != '\0') {
        const std::string_view text(env);
        unsigned bits = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), bits);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            err << "kpt: KPT_PRECISION_BITS is not an integer: '" << text << "'\n";
            return kExitPrecondition;
        }
        cfg.precision_bits = bits;
    }

    Outcome o = run(cfg);
    if (cfg.out_path && o.exit_code == kExitOk) {
        std::ofstream file(*cfg.out_path, std::ios::binary);
        file << o.text;
        if (!file) {
            err << "kpt: cannot write '" << *cfg.out_path << "'\n";
            return kExitFailure;
        }
    } else {
        out << o.text;
    }
    if (!o.diagnostic.empty()) err << o.diagnostic << "\n";
    return o.exit_code;
}

} // namespace kpt::cli
