#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbessel/bessel.hpp"
#include "gbessel/cylinder.hpp"
#include "gbessel/error.hpp"
#include "gbessel/turan.hpp"
#include "gbessel/zeros.hpp"

namespace gbessel::cli {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, double, long long, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct Document {
    std::string command;
    std::vector<std::pair<std::string, Cell>> params;
    std::vector<std::pair<std::string, Cell>> meta;
    Table table;
    std::optional<Table> markers;  // second block, used by `figure`
};

struct OutputOptions {
    std::string format = "csv";
    std::string path;
    int precision = 15;
};

std::string format_double(double v, int precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

// JSON numbers carry the same digits as the CSV output.
double rounded(double v, int precision) {
    if (!std::isfinite(v)) return v;
    return std::strtod(format_double(v, precision).c_str(), nullptr);
}

std::string quote_csv(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::string cell_text(const Cell& c, int precision, bool quote) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, double>) {
                return format_double(v, precision);
            } else if constexpr (std::is_same_v<T, long long>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return quote ? quote_csv(v) : v;
            }
        },
        c);
}

json cell_json(const Cell& c, int precision) {
    return std::visit(
        [&](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return nullptr;
                return rounded(v, precision);
            } else {
                return v;
            }
        },
        c);
}

void write_table_csv(std::ostream& os, const Table& t, int precision) {
    if (t.columns.empty()) return;
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i], precision, true);
        os << '\n';
    }
}

json table_json(const Table& t, int precision) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i], precision);
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_document(std::ostream& os, const Document& d, const OutputOptions& o) {
    if (o.format == "json") {
        json doc;
        json params = json::object();
        params["command"] = d.command;
        for (const auto& [k, v] : d.params) params[k] = cell_json(v, o.precision);
        doc["params"] = std::move(params);
        doc["rows"] = table_json(d.table, o.precision);
        json meta = json::object();
        for (const auto& [k, v] : d.meta) meta[k] = cell_json(v, o.precision);
        if (d.markers) meta["extrema"] = table_json(*d.markers, o.precision);
        doc["meta"] = std::move(meta);
        os << doc.dump(2) << '\n';
        return;
    }
    os << "# command=" << d.command << '\n';
    for (const auto& [k, v] : d.params) os << "# " << k << '=' << cell_text(v, o.precision, false) << '\n';
    for (const auto& [k, v] : d.meta) os << "# " << k << '=' << cell_text(v, o.precision, false) << '\n';
    write_table_csv(os, d.table, o.precision);
    if (d.markers) {
        os << "# extrema\n";
        write_table_csv(os, *d.markers, o.precision);
    }
}

double parse_fraction(const std::string& s) {
    std::size_t used = 0;
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            const double v = std::stod(s, &used);
            if (used == s.size()) return v * std::numbers::pi;
        } else {
            const std::string num = s.substr(0, slash);
            const std::string den = s.substr(slash + 1);
            std::size_t u1 = 0, u2 = 0;
            const double a = std::stod(num, &u1);
            const double b = std::stod(den, &u2);
            if (u1 == num.size() && u2 == den.size() && b != 0.0) return std::numbers::pi * a / b;
        }
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("--alpha-pi", "expected a number or a fraction p/q, got '" + s + "'");
}

void add_output(CLI::App* sub, OutputOptions& o) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--out", o.path, "Write to this file instead of standard output");
    sub->add_option("--precision", o.precision, "Significant digits")->check(CLI::Range(6, 17))->capture_default_str();
}

// Library exceptions to exit codes: domain problems are usage errors.
int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const DomainError*>(&e) != nullptr) return kUsage;
    return kComputeFailure;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
    double nu = 0.0;
    double alpha = 0.0;
    std::string alpha_pi;
    std::vector<double> xs;
};

int cmd_eval(const EvalArgs& a, Document& d, std::ostream& err) {
    const double alpha = a.alpha_pi.empty() ? a.alpha : parse_fraction(a.alpha_pi);
    const CylinderParams p = CylinderParams::make(a.nu, alpha);
    if (!(p.nu > -1.0)) throw DomainError("eval: order must be > -1");
    for (double x : a.xs) {
        if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("eval: every x must be positive and finite");
    }
    d.command = "eval";
    d.params = {{"nu", p.nu}, {"alpha", p.alpha}};
    d.table.columns = {"x", "c", "c_error", "c_prime", "j", "y", "phi", "logderiv", "status"};
    int code = kOk;
    for (double x : a.xs) {
        try {
            const FunctionValue c = c_val(p, x);
            const FunctionValue cp = c_prime(p, x);
            const BesselPair jy = bessel_jy(p.nu, x);
            const NormalizedValue phi = phi_val(p, x);
            Cell logd;
            std::string status = "ok";
            try {
                logd = log_derivative(p, x).value;
            } catch (const PoleError&) {
                status = "pole";
            }
            d.table.rows.push_back(
                {x, c.value, c.abs_error_estimate, cp.value, jy.j.value, jy.y.value, phi.value, logd, status});
        } catch (const Error& e) {
            err << "eval: x = " << x << ": " << e.what() << '\n';
            d.table.rows.push_back({x, {}, {}, {}, {}, {}, {}, {}, std::string("error: ") + e.what()});
            code = kComputeFailure;
        }
    }
    return code;
}

struct ZerosArgs {
    double nu = 0.0;
    double alpha = 0.0;
    std::string alpha_pi;
    std::optional<int> count;
    std::optional<double> x_max;
};

int cmd_zeros(const ZerosArgs& a, Document& d) {
    const double alpha = a.alpha_pi.empty() ? a.alpha : parse_fraction(a.alpha_pi);
    const CylinderParams p = CylinderParams::make(a.nu, alpha);
    if (a.count.has_value() == a.x_max.has_value()) throw DomainError("zeros: give exactly one of --count or --x-max");
    if (a.count && *a.count < 0) throw DomainError("zeros: --count must be >= 0");
    d.command = "zeros";
    d.params = {{"nu", p.nu}, {"alpha", p.alpha}};
    if (a.count) d.params.emplace_back("count", static_cast<long long>(*a.count));
    if (a.x_max) d.params.emplace_back("x_max", *a.x_max);
    d.table.columns = {"n", "abscissa", "bracket_lo", "bracket_hi", "residual"};
    const ZeroTable t = a.count ? first_zeros(p, *a.count) : zeros_up_to(p, *a.x_max);
    for (const ZeroRecord& z : t.records) {
        d.table.rows.push_back({static_cast<long long>(z.n), z.abscissa, z.bracket.first, z.bracket.second, z.residual});
    }
    return kOk;
}

struct CrossoverArgs {
    double nu = 0.0;
    double alpha = 0.0;
    std::string alpha_pi;
    bool experimental = false;
};

int cmd_crossover(const CrossoverArgs& a, Document& d) {
    const double alpha = a.alpha_pi.empty() ? a.alpha : parse_fraction(a.alpha_pi);
    CrossoverOptions opts;
    opts.experimental = a.experimental;
    const CrossoverResult r = crossover(a.nu, alpha, opts);
    d.command = "crossover";
    d.params = {{"nu", a.nu}, {"alpha", alpha}, {"experimental", a.experimental}};
    d.table.columns = {"nu",         "alpha",      "x_nu",       "bracket_lo", "bracket_hi",       "residual",
                       "sign_below", "sign_at",    "sign_above", "first_zero", "sqrt_bound",       "below_first_zero",
                       "below_sqrt_bound"};
    d.table.rows.push_back({r.nu, r.alpha, r.x_nu, r.bracket.first, r.bracket.second, r.residual,
                            static_cast<long long>(r.sign_evidence[0]), static_cast<long long>(r.sign_evidence[1]),
                            static_cast<long long>(r.sign_evidence[2]), r.first_zero, r.sqrt_bound, r.below_first_zero,
                            r.below_sqrt_bound});
    return kOk;
}

struct CertifyArgs {
    std::string which;
    std::vector<double> nus;
    std::vector<double> alphas;
    std::vector<std::string> alphas_pi;
    std::optional<int> samples;
    std::optional<double> x_max;
    bool strict = false;
    bool experimental = false;
    bool serial = false;
    bool summary = false;
};

void add_verdict_row(Table& t, InequalityId id, const Verdict& v) {
    t.rows.push_back({std::string(to_string(id)), v.nu, v.alpha, v.x, v.clause, v.margin, v.error_band,
                      std::string(to_string(v.status)), v.note});
}

int cmd_certify(const CertifyArgs& a, Document& d, std::ostream& err) {
    std::vector<InequalityId> ids;
    if (a.which == "all") {
        ids.assign(all_inequalities().begin(), all_inequalities().end());
    } else if (auto id = parse_inequality(a.which)) {
        ids.push_back(*id);
    } else {
        throw DomainError("certify: unknown inequality '" + a.which + "'");
    }
    GridSpec g;
    if (!a.nus.empty()) g.nus = a.nus;
    if (!a.alphas.empty()) g.alphas = a.alphas;
    if (!a.alphas_pi.empty()) {
        g.alphas.clear();
        for (const auto& s : a.alphas_pi) g.alphas.push_back(parse_fraction(s));
    }
    for (double al : g.alphas) (void)CylinderParams::make(1.0, al);
    if (a.samples) {
        if (*a.samples < 1) throw DomainError("certify: --samples must be >= 1");
        g.samples = *a.samples;
    }
    if (a.x_max) g.x_max = *a.x_max;
    g.experimental = a.experimental;
    g.execution = a.serial ? Execution::serial : Execution::parallel;

    d.command = "certify";
    d.params = {{"inequality", a.which}, {"strict", a.strict}, {"experimental", a.experimental}};
    d.table.columns = {"inequality", "nu", "alpha", "x", "clause", "margin", "error_band", "status", "note"};

    int code = kOk;
    std::optional<std::string> first_bad;
    for (InequalityId id : ids) {
        const CertificationReport r = certify(id, g);
        const std::string name(to_string(id));
        d.meta.emplace_back(name + ".grid", r.grid_spec);
        d.meta.emplace_back(name + ".verdicts", static_cast<long long>(r.verdicts.size()));
        d.meta.emplace_back(name + ".pass", static_cast<long long>(r.count(VerdictStatus::pass)));
        d.meta.emplace_back(name + ".fail", static_cast<long long>(r.count(VerdictStatus::fail)));
        d.meta.emplace_back(name + ".inconclusive", static_cast<long long>(r.count(VerdictStatus::inconclusive)));
        d.meta.emplace_back(name + ".skipped", static_cast<long long>(r.count(VerdictStatus::skipped)));
        d.meta.emplace_back(name + ".violations", static_cast<long long>(r.violations.size()));
        if (r.min_margin_index) {
            const Verdict& m = r.verdicts[*r.min_margin_index];
            d.meta.emplace_back(name + ".min_margin", m.margin);
            d.meta.emplace_back(name + ".min_margin_at",
                                "nu=" + format_double(m.nu, 17) + " alpha=" + format_double(m.alpha, 17) +
                                    " x=" + format_double(m.x, 17) + " clause=" + m.clause);
        } else {
            d.meta.emplace_back(name + ".min_margin", Cell{});
        }

        std::vector<bool> listed(r.verdicts.size(), false);
        for (std::size_t i : r.violations) {
            add_verdict_row(d.table, id, r.verdicts[i]);
            listed[i] = true;
        }
        for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
            const Verdict& v = r.verdicts[i];
            const bool bad = listed[i] || (a.strict && (v.status == VerdictStatus::inconclusive ||
                                                        (v.status == VerdictStatus::skipped && v.note != "pole guard")));
            if (bad) {
                code = kComputeFailure;
                if (!first_bad) {
                    first_bad = name + ": " + std::string(to_string(v.status)) + " at nu=" + format_double(v.nu, 17) +
                                " alpha=" + format_double(v.alpha, 17) + " x=" + format_double(v.x, 17) +
                                " clause=" + v.clause + " margin=" + format_double(v.margin, 17) + " band=" +
                                format_double(v.error_band, 17) + (v.note.empty() ? "" : " note=" + v.note);
                }
            }
            if (!listed[i] && !(a.summary && !bad)) add_verdict_row(d.table, id, v);
        }
    }
    if (first_bad) err << "certify: first violating point: " << *first_bad << '\n';
    return code;
}

struct SeriesArgs {
    double nu = 0.0;
    double alpha = 0.0;
    std::string alpha_pi;
    double x = 0.0;
    double rel_tol = 1e-10;
};

int cmd_series(const SeriesArgs& a, Document& d) {
    const double alpha = a.alpha_pi.empty() ? a.alpha : parse_fraction(a.alpha_pi);
    const CylinderParams p = CylinderParams::make(a.nu, alpha);
    SeriesOptions opts;
    opts.rel_tol = a.rel_tol;
    d.command = "series";
    d.params = {{"nu", p.nu}, {"alpha", p.alpha}, {"x", a.x}, {"rel_tol", a.rel_tol}};
    const SeriesEvalResult r = series_turanian(p, a.x, opts);
    d.table.columns = {"x",           "nu",          "alpha",     "partial_sum", "terms_used",
                       "tail_bound",  "landau_tail", "ratio_tail", "lhs_direct",  "leading",
                       "discrepancy", "evaluation_error"};
    d.table.rows.push_back({r.x, r.nu, r.alpha, r.partial_sum, static_cast<long long>(r.terms_used), r.tail_bound,
                            r.landau_tail_bound, r.ratio_tail_bound, r.lhs_direct, r.leading, r.discrepancy,
                            r.evaluation_error});
    return kOk;
}

struct FigureArgs {
    double nu = 1.5;
    double alpha = std::numbers::pi / 6.0;
    std::string alpha_pi;
    double x_max = 10.0;
    int samples = 1000;
};

int cmd_figure(const FigureArgs& a, Document& d) {
    const double alpha = a.alpha_pi.empty() ? a.alpha : parse_fraction(a.alpha_pi);
    const CylinderParams p = CylinderParams::make(a.nu, alpha);
    if (!(p.nu > 0.0)) throw DomainError("figure: order must be > 0");
    if (a.samples < 2) throw DomainError("figure: --samples must be >= 2");
    if (!(a.x_max > 0.0) || !std::isfinite(a.x_max)) throw DomainError("figure: --x-max must be positive");
    d.command = "figure";
    d.params = {{"nu", p.nu}, {"alpha", p.alpha}, {"x_max", a.x_max}, {"samples", static_cast<long long>(a.samples)}};
    d.table.columns = {"x", "delta", "c_prev", "c_next", "c_nu"};
    for (int k = 1; k <= a.samples; ++k) {
        const double x = a.x_max * k / a.samples;
        const CylinderStencil s = c_stencil(p, x);
        const TuranianReport t = turanian(p, x);
        d.table.rows.push_back({x, t.delta, s.prev.value, s.next.value, s.curr.value});
    }
    Table m;
    m.columns = {"kind", "k", "abscissa", "value", "c_nu", "second_derivative", "validated"};
    for (const ExtremumRecord& e : extrema_scan(p, a.x_max)) {
        m.rows.push_back({std::string(to_string(e.kind)), static_cast<long long>(e.k), e.abscissa, e.value, e.c_nu,
                          e.second_derivative_fd, e.validated});
    }
    d.markers = std::move(m);
    return kOk;
}

void add_alpha(CLI::App* sub, double& alpha, std::string& alpha_pi) {
    auto* o1 = sub->add_option("--alpha", alpha, "Mixing angle in radians, in [0, pi)");
    auto* o2 = sub->add_option("--alpha-pi", alpha_pi, "Mixing angle as a multiple of pi (number or p/q)");
    o1->excludes(o2);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"General Bessel (cylinder) functions, their zeros and Turan-type inequalities"};
    app.name("gbessel");
    app.require_subcommand(1, 1);

    OutputOptions oo;

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate C, C', J, Y, Phi and x C'/C at a list of abscissae");
    eval->add_option("--nu", ea.nu, "Order")->required();
    add_alpha(eval, ea.alpha, ea.alpha_pi);
    eval->add_option("--x", ea.xs, "Abscissae (comma separated)")->required()->delimiter(',');
    add_output(eval, oo);

    ZerosArgs za;
    auto* zeros = app.add_subcommand("zeros", "Positive zeros of C_nu");
    zeros->add_option("--nu", za.nu, "Order")->required();
    add_alpha(zeros, za.alpha, za.alpha_pi);
    zeros->add_option("--count", za.count, "Number of zeros");
    zeros->add_option("--x-max", za.x_max, "All zeros up to this abscissa");
    add_output(zeros, oo);

    CrossoverArgs ca;
    auto* cross = app.add_subcommand("crossover", "Crossover point x_nu of the Turan-type inequality");
    cross->add_option("--nu", ca.nu, "Order (> 1)")->required();
    add_alpha(cross, ca.alpha, ca.alpha_pi);
    cross->add_flag("--experimental", ca.experimental, "Allow nu in (0, 1] and alpha = 0; nothing is asserted");
    add_output(cross, oo);

    CertifyArgs ka;
    auto* cert = app.add_subcommand("certify", "Grid certification of one inequality or all of them");
    cert->add_option("inequality", ka.which, "Inequality id or 'all'")->required();
    cert->add_option("--nu", ka.nus, "Orders (comma separated)")->delimiter(',');
    auto* al = cert->add_option("--alpha", ka.alphas, "Mixing angles in radians (comma separated)")->delimiter(',');
    auto* alp = cert->add_option("--alpha-pi", ka.alphas_pi, "Mixing angles as multiples of pi")->delimiter(',');
    al->excludes(alp);
    cert->add_option("--samples", ka.samples, "Points per clause domain");
    cert->add_option("--x-max", ka.x_max, "Upper end of the x range");
    cert->add_flag("--strict", ka.strict, "Inconclusive verdicts and evaluation errors also fail the run");
    cert->add_flag("--experimental", ka.experimental, "Also try the x_nu clauses for nu in (0, 1]");
    cert->add_flag("--serial", ka.serial, "Use the serial reference sweep");
    cert->add_flag("--summary", ka.summary, "Emit only the failing rows");
    add_output(cert, oo);

    SeriesArgs sa;
    auto* series = app.add_subcommand("series", "Series representation of the Turanian");
    series->add_option("--nu", sa.nu, "Order")->required();
    add_alpha(series, sa.alpha, sa.alpha_pi);
    series->add_option("--x", sa.x, "Abscissa, beyond the first zero")->required();
    series->add_option("--rel-tol", sa.rel_tol, "Relative stopping tolerance")->capture_default_str();
    add_output(series, oo);

    FigureArgs fa;
    auto* fig = app.add_subcommand("figure", "Delta_nu, C_{nu-1}, C_{nu+1} on (0, x_max] with extrema markers");
    fig->add_option("--nu", fa.nu, "Order")->capture_default_str();
    add_alpha(fig, fa.alpha, fa.alpha_pi);
    fig->add_option("--x-max", fa.x_max, "Right end of the range")->capture_default_str();
    fig->add_option("--samples", fa.samples, "Number of abscissae")->capture_default_str();
    add_output(fig, oo);

    std::vector<std::string> storage{"gbessel"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Document doc;
    int code = kOk;
    try {
        if (eval->parsed()) code = cmd_eval(ea, doc, err);
        if (zeros->parsed()) code = cmd_zeros(za, doc);
        if (cross->parsed()) code = cmd_crossover(ca, doc);
        if (cert->parsed()) code = cmd_certify(ka, doc, err);
        if (series->parsed()) code = cmd_series(sa, doc);
        if (fig->parsed()) code = cmd_figure(fa, doc);
    } catch (const CLI::ValidationError& e) {
        err << "gbessel: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "gbessel: " << e.what() << '\n';
        const int c = exit_code_for(e);
        // flush whatever rows were completed before the failure
        if (doc.command.empty() || c == kUsage) return c;
        code = c;
    }

    if (oo.path.empty()) {
        write_document(out, doc, oo);
    } else {
        std::ofstream file(oo.path, std::ios::binary);
        if (!file) {
            err << "gbessel: cannot open " << oo.path << " for writing\n";
            return kUsage;
        }
        write_document(file, doc, oo);
    }
    return code;
}

}  // namespace gbessel::cli
