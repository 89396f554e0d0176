#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "postrig/certify.hpp"
#include "postrig/error.hpp"
#include "postrig/parallel.hpp"
#include "postrig/seqkit.hpp"
#include "postrig/specfun.hpp"
#include "report_json.hpp"

namespace postrig::cli {

namespace {

using nlohmann::json;
constexpr double pi = std::numbers::pi;

void require_n(const FamilyParams& p, const std::string& family)
{
    if (p.n < 1)
        throw DomainError("family '" + family + "' needs --n >= 1");
}

std::vector<double> tail(const std::vector<double>& v, std::size_t first, std::size_t last)
{
    return {v.begin() + static_cast<std::ptrdiff_t>(first), v.begin() + static_cast<std::ptrdiff_t>(last)};
}

TrigPolynomial cosine_of(const std::vector<double>& v)
{
    return cosine_polynomial(2.0 * v.front(), tail(v, 1, v.size()));
}

TrigPolynomial sine_of(const std::vector<double>& v)
{
    return sine_polynomial(tail(v, 1, v.size()));
}

std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    f << text;
    f.close();
    if (!f)
        throw std::ios_base::failure("write to " + path.string() + " failed");
}

void emit_json(const json& j, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    write_file(out_path, j.dump(2) + "\n");
    out << "wrote " << out_path << '\n';
}

int verdict_exit(Verdict v)
{
    switch (v) {
    case Verdict::certified_positive: return exit_ok;
    case Verdict::refuted: return exit_refuted;
    case Verdict::inconclusive: return exit_inconclusive;
    }
    return exit_inconclusive;
}

void add_family_options(CLI::App* cmd, FamilyParams& p)
{
    cmd->add_option("--n", p.n, "Degree / family size");
    cmd->add_option("--alpha", p.alpha);
    cmd->add_option("--beta", p.beta);
    cmd->add_option("--lambda", p.lambda);
    cmd->add_option("--mu", p.mu);
    cmd->add_option("--b", p.b);
    cmd->add_option("--c", p.c);
    cmd->add_option("--coeffs", p.coeffs, "Comma-separated coefficients")->delimiter(',');
}

CoefficientSequence sequence_for(const std::string& family, const FamilyParams& p)
{
    if (family == "vietoris")
        return vietoris_gamma(p.n);
    if (family == "qk")
        return qk_sequence(p.n, p.alpha, p.beta, p.lambda, p.mu);
    if (family == "ratio-qk")
        return ratio_qk_sequence(p.n, p.alpha, p.beta, p.lambda, p.mu);
    if (family == "koumandos")
        return koumandos_bk(p.n, p.alpha);
    if (family == "ck")
        return ck_sequence(p.n, p.alpha, p.b, p.c);
    if (family == "custom")
        return custom_sequence(p.coeffs);
    throw DomainError("unknown sequence family '" + family + "'");
}

} // namespace

TrigPolynomial build_family(const std::string& family, const FamilyParams& p)
{
    if (family == "raw-sine") {
        if (p.coeffs.empty())
            throw DomainError("raw-sine needs --coeffs b1,b2,...");
        return sine_polynomial(p.coeffs);
    }
    if (family == "raw-cosine") {
        if (p.coeffs.empty())
            throw DomainError("raw-cosine needs --coeffs a0,a1,...");
        return cosine_polynomial(p.coeffs.front(), tail(p.coeffs, 1, p.coeffs.size()));
    }
    if (family == "shifted-cosine" || family == "shifted-sine") {
        std::vector<double> e = p.coeffs;
        if (e.empty()) {
            require_n(p, family);
            e = pair_values(ck_sequence(p.n, p.alpha, p.b, p.c));
        }
        return family == "shifted-cosine" ? shifted_cosine(e, p.shift, p.stride)
                                          : shifted_sine(e, p.shift, p.stride);
    }

    require_n(p, family);
    if (family == "qk-sine" || family == "qk-cosine") {
        const auto q = qk_sequence(p.n, p.alpha, p.beta, p.lambda, p.mu).values;
        return family == "qk-sine" ? sine_of(q) : cosine_of(q);
    }
    if (family == "ratio-sine")
        return sine_polynomial(ratio_qk_sequence(p.n, p.alpha, p.beta, p.lambda, p.mu).values);
    if (family == "koumandos-sine" || family == "koumandos-cosine") {
        const auto v = koumandos_bk(p.n, p.alpha).values;
        if (v.size() < 2 && family == "koumandos-sine")
            throw DomainError("koumandos-sine needs --n >= 1");
        return family == "koumandos-sine" ? sine_of(v) : cosine_of(v);
    }
    if (family == "vietoris-sine" || family == "vietoris-cosine") {
        const auto v = vietoris_gamma(p.n).values;
        return family == "vietoris-sine" ? sine_of(v) : cosine_of(v);
    }
    if (family == "ck-cosine" || family == "ck-sine" || family == "ck-even-sine") {
        const auto v = ck_sequence(p.n, p.alpha, p.b, p.c).values;
        if (family == "ck-cosine")
            return cosine_of(v);
        if (family == "ck-sine")
            return sine_of(v);
        return sine_polynomial(tail(v, 1, v.size() - 1));
    }
    if (family == "thm26")
        return theorem26_negated_derivative(p.n, p.alpha, p.beta, p.lambda, p.mu);
    throw DomainError("unknown family '" + family + "'");
}

double default_hi(const std::string& family, const FamilyParams& p)
{
    if ((family == "shifted-cosine" || family == "shifted-sine") && p.stride == 1)
        return 2.0 * pi;
    return pi;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certified positivity of trigonometric and orthogonal-polynomial sums"};
    app.require_subcommand(1);

    FamilyParams fp;
    std::string family;
    CertifyOptions copts;
    copts.threads = 0;
    std::optional<double> lo, hi;
    std::string out_path;

    auto* certify = app.add_subcommand("certify", "Certify positivity of a sum on an interval");
    certify->add_option("--family", family, "Sum family")->required();
    add_family_options(certify, fp);
    certify->add_option("--shift", fp.shift);
    certify->add_option("--stride", fp.stride);
    certify->add_option("--lo", lo);
    certify->add_option("--hi", hi);
    certify->add_option("--grid", copts.grid);
    certify->add_option("--depth", copts.max_depth);
    certify->add_option("--eps", copts.boundary_eps);
    certify->add_option("--threads", copts.threads);
    certify->add_option("--out", out_path, "JSON report path (stdout when omitted)");

    std::vector<double> d_values;
    std::string const_out;
    auto* constants = app.add_subcommand("constants", "Solve the special constants");
    constants->add_option("--d", d_values, "Weight exponents for alpha0_prime")->delimiter(',');
    constants->add_option("--out", const_out);

    int figure = 1;
    std::vector<int> n_list;
    std::string kind = "both";
    std::string plot_dir = ".";
    int points = 2000;
    int plot_threads = 0;
    FamilyParams plot_p;
    plot_p.alpha = 0.2;
    plot_p.beta = 0.4;
    plot_p.lambda = 0.3;
    plot_p.mu = 0.7;
    auto* plotdata = app.add_subcommand("plotdata", "Write CSV samples of the figure sums");
    plotdata->add_option("--figure", figure)->check(CLI::IsMember({1, 2}));
    plotdata->add_option("--n", n_list, "Comma-separated degrees")->delimiter(',');
    plotdata->add_option("--alpha", plot_p.alpha);
    plotdata->add_option("--beta", plot_p.beta);
    plotdata->add_option("--lambda", plot_p.lambda);
    plotdata->add_option("--mu", plot_p.mu);
    plotdata->add_option("--kind", kind)->check(CLI::IsMember({"cosine", "sine", "both"}));
    plotdata->add_option("--points", points);
    plotdata->add_option("--threads", plot_threads);
    plotdata->add_option("--out", plot_dir, "Output directory");

    std::string zkind;
    std::vector<double> zcoeffs;
    double zlo = 0.0, zhi = 2.0 * pi;
    int zgrid = 0;
    std::string zout;
    auto* zeros = app.add_subcommand("zeros", "Bracket the zeros of p or q");
    zeros->add_option("--kind", zkind)->required()->check(CLI::IsMember({"p", "q"}));
    zeros->add_option("--coeffs", zcoeffs)->required()->delimiter(',');
    zeros->add_option("--lo", zlo);
    zeros->add_option("--hi", zhi);
    zeros->add_option("--grid", zgrid);
    zeros->add_option("--out", zout);

    std::string seq_family;
    std::string check = "belov";
    FamilyParams cp;
    std::string crit_out;
    auto* criteria = app.add_subcommand("criteria", "Check coefficient criteria");
    criteria->add_option("--family", seq_family)
        ->required()
        ->check(CLI::IsMember({"vietoris", "qk", "ratio-qk", "koumandos", "ck", "custom"}));
    criteria->add_option("--check", check)->check(CLI::IsMember({"vietoris", "belov", "chain", "cor34"}));
    add_family_options(criteria, cp);
    criteria->add_option("--out", crit_out);

    std::vector<std::string> argv_store{"postrig"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*certify) {
            const TrigPolynomial poly = build_family(family, fp);
            const double a = lo.value_or(0.0);
            const double b = hi.value_or(default_hi(family, fp));
            const PositivityReport rep = certify_positive(poly, a, b, copts);
            json j = rep;
            j["family"] = family;
            emit_json(j, out_path, out);
            if (!out_path.empty())
                out << to_string(rep.verdict) << '\n';
            return verdict_exit(rep.verdict);
        }
        if (*constants) {
            json j;
            bool failed = false;
            j["alpha0"] = alpha0();
            j["alpha0_prime"] = json::array();
            for (double d : d_values) {
                try {
                    j["alpha0_prime"].push_back({{"d", d}, {"status", "ok"}, {"constant", alpha0_prime(d)}});
                } catch (const RootOutOfRange& e) {
                    failed = true;
                    j["alpha0_prime"].push_back(
                        {{"d", d}, {"status", "root-out-of-range"}, {"message", e.what()}});
                }
            }
            const ExpansionFit fit = expansion_fit();
            j["beta0"] = fit.beta0;
            j["beta1"] = fit.beta1;
            j["expansion_constant_term"] = fit.constant_term;
            j["lambda_prime"] = lambda_prime();
            emit_json(j, const_out, out);
            if (failed) {
                err << "alpha0_prime: root out of range for at least one d\n";
                return exit_solver;
            }
            return exit_ok;
        }
        if (*plotdata) {
            if (n_list.empty()) {
                err << "plotdata: --n needs at least one degree\n";
                return exit_usage;
            }
            if (points < 2) {
                err << "plotdata: --points must be >= 2\n";
                return exit_usage;
            }
            for (int n : n_list)
                if (n < 1) {
                    err << "plotdata: degrees must be >= 1\n";
                    return exit_usage;
                }
            std::error_code ec;
            std::filesystem::create_directories(plot_dir, ec);
            if (ec) {
                err << "plotdata: cannot create " << plot_dir << ": " << ec.message() << '\n';
                return exit_io;
            }
            const int threads = resolve_threads(plot_threads);
            const auto np = static_cast<std::size_t>(points);
            for (int n : n_list) {
                const auto q = qk_sequence(n, plot_p.alpha, plot_p.beta, plot_p.lambda, plot_p.mu).values;
                if (figure == 1) {
                    for (const std::string which : {"cosine", "sine"}) {
                        if (kind != "both" && kind != which)
                            continue;
                        const TrigPolynomial poly = which == "cosine" ? cosine_of(q) : sine_of(q);
                        std::vector<std::string> rows(np);
                        parallel_for(np, threads, [&](std::size_t i) {
                            const double t = pi * static_cast<double>(i + 1) / static_cast<double>(np + 1);
                            rows[i] = format_double(t) + "," + format_double(evaluate(poly, t)) + "\n";
                        });
                        std::string text = "theta,value\n";
                        for (const auto& r : rows)
                            text += r;
                        const auto path = std::filesystem::path(plot_dir)
                                          / ("fig1_" + which + "_n" + std::to_string(n) + ".csv");
                        write_file(path, text);
                        out << "wrote " << path.string() << '\n';
                    }
                } else {
                    // sum_{k=0}^n q_k z^k on |z| = 1
                    const TrigPolynomial re = cosine_of(q);
                    const TrigPolynomial im = sine_of(q);
                    std::vector<std::string> rows(np);
                    parallel_for(np, threads, [&](std::size_t i) {
                        const double t = 2.0 * pi * static_cast<double>(i) / static_cast<double>(np);
                        rows[i] = format_double(t) + "," + format_double(evaluate(re, t)) + ","
                                  + format_double(evaluate(im, t)) + "\n";
                    });
                    std::string text = "angle,real,imag\n";
                    for (const auto& r : rows)
                        text += r;
                    const auto path = std::filesystem::path(plot_dir) / ("fig2_n" + std::to_string(n) + ".csv");
                    write_file(path, text);
                    out << "wrote " << path.string() << '\n';
                }
            }
            return exit_ok;
        }
        if (*zeros) {
            const ZeroBracketList z =
                bracket_zeros(zkind == "p" ? ZeroKind::p : ZeroKind::q, zcoeffs, zlo, zhi, zgrid);
            emit_json(z, zout, out);
            return exit_ok;
        }
        if (*criteria) {
            const CoefficientSequence seq = sequence_for(seq_family, cp);
            CriterionReport r;
            if (check == "vietoris")
                r = check_vietoris(seq);
            else if (check == "belov")
                r = check_belov(seq);
            else if (check == "chain")
                r = check_chain_condition(seq, cp.alpha, cp.beta, cp.lambda, cp.mu);
            else
                r = check_cor34_condition(seq, cp.b, cp.c, cp.alpha);
            json j = r;
            j["family"] = seq_family;
            j["check"] = check;
            emit_json(j, crit_out, out);
            return r.satisfied ? exit_ok : exit_refuted;
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const SizeError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "solver error: " << e.what() << '\n';
        return exit_solver;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << '\n';
        return exit_io;
    }
    return exit_usage;
}

} // namespace postrig::cli
