// cpn: characteristic-class and curvature verification tool.
//
//   cpn verify    [--order --nmax --smax --trials --seed --tol --format --out]
//   cpn chi       --n N --s S [--lambda L]
//   cpn classify  --n N
//   cpn genus     --kind todd|ahat|l --degree D [--n N]
//   cpn curvature --n N --lambda L [--trials T --seed S]
//   cpn blowup    --n N
//
// Exit codes: 0 success / all checks passed, 1 a check failed, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpn/cohomology.hpp"
#include "cpn/curvature.hpp"
#include "cpn/genera.hpp"
#include "cpn/hrr.hpp"
#include "cpn/report.hpp"
#include "cpn/surface.hpp"
#include "cpn/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int usage_error = 2;

struct Output {
    std::string format = "table";
    std::string out_path;

    bool json() const { return format == "json"; }

    // Writes to stdout and, if requested, to the --out file.
    void emit(const std::string &text) const
    {
        std::cout << text;
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f)
                throw std::runtime_error("cannot open " + out_path + " for writing");
            f << text;
        }
    }
};

void add_output_flags(CLI::App *cmd, Output &out)
{
    cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", out.out_path, "Also write the output to this file");
}

int run_verify(const cpn::VerifyConfig &cfg, const Output &out)
{
    const auto report = cpn::run_verification(cfg);
    out.emit(out.json() ? cpn::to_json(report).dump(2) + "\n" : cpn::to_table(report));
    return report.exit_code();
}

int run_chi(int n, std::int64_t s, std::optional<std::int64_t> lambda, const Output &out)
{
    const std::int64_t lam = lambda.value_or(n + 1);
    if (!cpn::parity_ok(n, lam)) {
        std::cerr << "error: --lambda must be congruent to n+1 mod 2\n";
        return usage_error;
    }
    const auto chi = cpn::chi_genus_route({n, lam, s});
    const char *anchor = "chi(M,L^s) = int e^{s h} e^{c_1/2} A-hat(M)";
    if (out.json()) {
        ordered_json j{{"command", "chi"}, {"n", n}, {"lambda", lam}, {"s", s}, {"chi", cpn::to_string(chi)},
                       {"paper_anchor", anchor}};
        if (lam == n + 1) {
            j["series_route"] = cpn::to_string(cpn::chi_series_route(n, s));
            j["residue_route"] = cpn::to_string(cpn::residue_route(n, s));
            j["closed_form"] = cpn::to_string(cpn::chi_closed_form(n, s));
        }
        out.emit(j.dump(2) + "\n");
    } else {
        std::string text = "chi(M, L^" + std::to_string(s) + ") with n=" + std::to_string(n) +
                           ", c_1(M)=" + std::to_string(lam) + "h: " + cpn::to_string(chi) + "\n";
        if (lam == n + 1)
            text += "  series route " + cpn::to_string(cpn::chi_series_route(n, s)) + ", residue route " +
                    cpn::to_string(cpn::residue_route(n, s)) + ", closed form " +
                    cpn::to_string(cpn::chi_closed_form(n, s)) + "\n";
        text += "  anchor: " + std::string(anchor) + "\n";
        out.emit(text);
    }
    return 0;
}

int run_classify(int n, const Output &out)
{
    const auto cls = cpn::classify_c1(n);
    const char *anchor = "n! = (s+n)...(s+1)";
    if (out.json()) {
        ordered_json j{{"command", "classify"}, {"n", n},
                       {"s", cls.twists},       {"lambda", cls.lambdas},
                       {"window", {cls.window_low, cls.window_high}},
                       {"exhaustive", cls.exhaustive()},
                       {"paper_anchor", anchor}};
        out.emit(j.dump(2) + "\n");
    } else {
        auto join = [](const std::vector<std::int64_t> &v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? ", " : "") + std::to_string(v[i]);
            return "{" + s + "}";
        };
        out.emit("n=" + std::to_string(n) + ": s in " + join(cls.twists) + ", lambda in " + join(cls.lambdas) +
                 " (search window [" + std::to_string(cls.window_low) + ", " + std::to_string(cls.window_high) +
                 "], exhaustive: " + (cls.exhaustive() ? "yes" : "NO") + ")\n  anchor: " + anchor + "\n");
    }
    return cls.exhaustive() ? 0 : 1;
}

int run_genus(const std::string &kind_name, int degree, std::optional<int> n, const Output &out)
{
    static const std::map<std::string, cpn::GenusKind> kinds{
        {"todd", cpn::GenusKind::Todd}, {"ahat", cpn::GenusKind::Ahat}, {"l", cpn::GenusKind::L}};
    const cpn::GenusKind kind = kinds.at(kind_name);
    const std::size_t order = std::max<std::size_t>(degree, n.value_or(1));
    const cpn::CharSeries q = cpn::make_char(kind, order);
    const cpn::Rational coeff = q.q.coeff(static_cast<std::size_t>(degree));
    std::optional<cpn::Rational> value;
    if (n) {
        const auto dim = static_cast<std::size_t>(*n);
        const auto total = kind == cpn::GenusKind::Todd ? cpn::chern_cpn(dim) : cpn::pontryagin_cpn(dim);
        value = cpn::integrate(cpn::genus_eval(q, total));
    }
    const char *anchor = "A-hat(M) = prod_j (sqrt(g_j)/2)/sinh(sqrt(g_j)/2)";
    const std::string var = kind == cpn::GenusKind::Todd ? "x" : "u";
    if (out.json()) {
        ordered_json j{{"command", "genus"}, {"kind", kind_name}, {"degree", degree},
                       {"coefficient", cpn::to_string(coeff)}, {"variable", var}};
        if (value) {
            j["n"] = *n;
            j["genus_cpn"] = cpn::to_string(*value);
        }
        j["paper_anchor"] = anchor;
        out.emit(j.dump(2) + "\n");
    } else {
        std::string text = kind_name + " series: coefficient of " + var + "^" + std::to_string(degree) + " = " +
                           cpn::to_string(coeff) + "\n";
        if (value)
            text += kind_name + " genus of CP^" + std::to_string(*n) + " = " + cpn::to_string(*value) + "\n";
        text += "  anchor: " + std::string(anchor) + "\n";
        out.emit(text);
    }
    return 0;
}

int run_curvature(int n, double lambda, int trials, std::uint64_t seed, double tol, const Output &out)
{
    double norm_worst = 0, contraction_worst = 0, gap_min = INFINITY, gap_max = 0;
    for (int t = 0; t < trials; ++t) {
        const auto raw = cpn::random_kahler_curvature(n, cpn::trial_seed(seed, 1, n, t));
        contraction_worst =
            std::max(contraction_worst, cpn::contraction_identity_residual(raw) / (1.0 + cpn::norm_sq_rm(raw)));
        const auto rm = cpn::make_einstein(raw, lambda);
        norm_worst = std::max(norm_worst, cpn::norm_identity_residual(rm, lambda));
        const double gap = cpn::chern_gap(rm, lambda);
        gap_min = std::min(gap_min, gap);
        gap_max = std::max(gap_max, gap);
    }
    const double model_gap =
        cpn::chern_gap(cpn::model_tensor(n, lambda / (n + 1.0)), lambda);
    const bool ok = norm_worst <= tol && contraction_worst <= tol;
    const char *anchor = "|Rm0|^2 = |Rm|^2 - 2 lambda^2 n/(n+1)";
    if (out.json()) {
        ordered_json j{{"command", "curvature"},
                       {"n", n},
                       {"lambda", lambda},
                       {"trials", trials},
                       {"seed", seed},
                       {"tolerance", tol},
                       {"norm_identity_max_residual", norm_worst},
                       {"contraction_identity_max_residual", contraction_worst},
                       {"chern_gap_min", gap_min},
                       {"chern_gap_max", gap_max},
                       {"model_chern_gap", model_gap},
                       {"passed", ok},
                       {"paper_anchor", anchor}};
        out.emit(j.dump(2) + "\n");
    } else {
        out.emit("n=" + std::to_string(n) + ", lambda=" + cpn::format_double(lambda) + ", " +
                 std::to_string(trials) + " trials\n" + "  norm identity max residual        " +
                 cpn::format_double(norm_worst) + "\n" + "  contraction identity max residual " +
                 cpn::format_double(contraction_worst) + "\n" + "  chern gap on Einstein tensors     [" +
                 cpn::format_double(gap_min) + ", " + cpn::format_double(gap_max) + "]\n" +
                 "  chern gap on constant-HSC model   " + cpn::format_double(model_gap) + "\n" +
                 "  anchor: " + anchor + "\n");
    }
    return ok ? 0 : 1;
}

int run_blowup(int n, const Output &out)
{
    const auto value = cpn::blowup_c1_top(static_cast<std::size_t>(n));
    const auto cpn_value = cpn::integrate(cpn::pow(cpn::chern_cpn(static_cast<std::size_t>(n))[1],
                                                   static_cast<unsigned>(n)));
    const char *anchor = "c_1(M~) = pi^* c_1(M) - (n-1)[E], c_1(M) = 0";
    if (out.json()) {
        ordered_json j{{"command", "blowup"},
                       {"n", n},
                       {"c1_top_blowup", cpn::to_string(value)},
                       {"c1_top_cpn", cpn::to_string(cpn_value)},
                       {"paper_anchor", anchor}};
        out.emit(j.dump(2) + "\n");
    } else {
        out.emit("int c_1^" + std::to_string(n) + " on the blowup: " + cpn::to_string(value) + " (CP^" +
                 std::to_string(n) + ": " + cpn::to_string(cpn_value) + ")\n  anchor: " + anchor + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Characteristic classes, Riemann-Roch and Kähler curvature checks for CP^n"};
    app.require_subcommand(1);

    Output out;
    cpn::VerifyConfig cfg;
    auto *verify = app.add_subcommand("verify", "Run the full verification suite");
    verify->add_option("--order", cfg.order, "Series truncation order")->check(CLI::Range(1, 200));
    verify->add_option("--nmax", cfg.nmax, "Largest dimension in exact sweeps")->check(CLI::Range(1, 24));
    verify->add_option("--smax", cfg.smax, "Largest |s| in the chi sweep")->check(CLI::Range(0, 100));
    verify->add_option("--trials", cfg.trials, "Random tensors per configuration")->check(CLI::Range(0, 100000));
    verify->add_option("--seed", cfg.seed, "Base RNG seed");
    verify->add_option("--tol", cfg.tolerance, "Tolerance for floating-point identities")
        ->check(CLI::PositiveNumber);
    add_output_flags(verify, out);

    int n = 1;
    std::int64_t s = 0;
    std::optional<std::int64_t> lambda_int;
    auto *chi = app.add_subcommand("chi", "Holomorphic Euler characteristic chi(M, L^s)");
    chi->add_option("--n", n, "Complex dimension")->required()->check(CLI::Range(1, 64));
    chi->add_option("--s", s, "Twist by L^s")->required()->check(CLI::Range(-1000, 1000));
    chi->add_option("--lambda", lambda_int, "c_1(M) = lambda h (default n+1)")->check(CLI::Range(-1000, 1000));
    add_output_flags(chi, out);

    auto *classify = app.add_subcommand("classify", "Integer solutions for c_1 with chi(M,O) = 1");
    classify->add_option("--n", n, "Complex dimension")->required()->check(CLI::Range(1, 40));
    add_output_flags(classify, out);

    std::string kind = "todd";
    int degree = 1;
    std::optional<int> genus_n;
    auto *genus = app.add_subcommand("genus", "Characteristic series coefficients and genera of CP^n");
    genus->add_option("--kind", kind, "todd | ahat | l")->check(CLI::IsMember({"todd", "ahat", "l"}));
    genus->add_option("--degree", degree, "Coefficient degree in the root variable")->check(CLI::Range(0, 64));
    genus->add_option("--n", genus_n, "Also evaluate the genus of CP^n")->check(CLI::Range(1, 24));
    add_output_flags(genus, out);

    double lambda = -1.0;
    int trials = 200;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    auto *curvature = app.add_subcommand("curvature", "Kähler-Einstein curvature identities on random tensors");
    curvature->add_option("--n", n, "Complex dimension")->required()->check(CLI::Range(2, 8));
    curvature->add_option("--lambda", lambda, "Einstein constant");
    curvature->add_option("--trials", trials, "Number of random tensors")->check(CLI::Range(1, 100000));
    curvature->add_option("--seed", seed, "Base RNG seed");
    curvature->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);
    add_output_flags(curvature, out);

    auto *blowup = app.add_subcommand("blowup", "Top power of c_1 after blowing up a point of a b_2 = 0 manifold");
    blowup->add_option("--n", n, "Complex dimension")->required()->check(CLI::Range(2, 32));
    add_output_flags(blowup, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : usage_error;
    }

    try {
        if (*verify)
            return run_verify(cfg, out);
        if (*chi)
            return run_chi(n, s, lambda_int, out);
        if (*classify)
            return run_classify(n, out);
        if (*genus)
            return run_genus(kind, degree, genus_n, out);
        if (*curvature)
            return run_curvature(n, lambda, trials, seed, tol, out);
        if (*blowup)
            return run_blowup(n, out);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return usage_error;
}
