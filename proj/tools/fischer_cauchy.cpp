#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "fcauchy/ellipticity.hpp"
#include "fcauchy/harmonic.hpp"
#include "fcauchy/identities.hpp"
#include "fcauchy/io.hpp"
#include "fcauchy/solver.hpp"

using namespace fcauchy;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNegative = 2;
constexpr int kIdentityFailure = 3;

void emit(const io::json& report, const std::string& out) {
    const std::string text = io::dump(report);
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw io::InputError(out + ": cannot write report");
    f << text;
}

Problem load_problem(const io::LoadedFile& file, std::optional<unsigned> max_degree) {
    Problem p = io::decode_problem(file.document);
    if (max_degree)
        p.max_degree = *max_degree;
    return p;
}

int cmd_solve(const std::string& path, std::optional<unsigned> max_degree, const std::string& out) {
    const auto file = io::load_json_file(path);
    const Problem p = load_problem(file, max_degree);
    const SolutionReport r = solve_series(p);
    emit(io::report_solution(r, p, file.sha256), out);
    if (r.singular_degree) {
        std::cerr << "degree " << *r.singular_degree << ": the map q -> Q(D)(P q) is singular\n";
        return kNegative;
    }
    if (!r.residual_ok) {
        std::cerr << "residual check failed\n";
        return kInputError;
    }
    if (!out.empty())
        std::cout << "solved through degree " << p.max_degree << ", exact residual zero\n";
    return kOk;
}

int cmd_wellposed(const std::string& path, std::optional<unsigned> max_degree, const std::string& out) {
    const auto file = io::load_json_file(path);
    const Problem p = load_problem(file, max_degree);
    const auto certs = check_wellposed(p);
    emit(io::report_wellposed(certs, p, file.sha256), out);
    for (const auto& c : certs)
        if (!c.invertible) {
            std::cerr << "degree " << c.m << ": singular\n";
            return kNegative;
        }
    if (!out.empty())
        std::cout << "all degree maps 0.." << p.max_degree << " invertible\n";
    return kOk;
}

int cmd_ellipticity(const std::string& path, std::optional<unsigned> resolution, const std::string& out) {
    const auto file = io::load_json_file(path);
    io::EllipticityInput in = io::decode_ellipticity(file.document);
    if (resolution)
        in.resolution = *resolution;
    EllipticityCertificate cert;
    try {
        if (in.a) {
            const Matrix b = in.b ? *in.b : Matrix::identity(in.polynomial.dimension());
            cert = b_elliptic_check(in.polynomial, b, LinearChange(*in.a), in.resolution);
        } else {
            cert = elliptic_check(in.polynomial, in.resolution);
        }
    } catch (const TransformInvalid& e) {
        throw io::InputError(std::string("A: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw io::InputError(e.what());
    }
    emit(io::report_ellipticity(cert, in.a.has_value(), file.sha256), out);
    if (!out.empty())
        std::cout << to_string(cert.verdict) << "\n";
    return cert.verdict == Verdict::elliptic ? kOk : kNegative;
}

int cmd_identities(const std::string& grid_name, std::optional<std::uint64_t> seed, const std::string& out) {
    IdentityGrid grid = IdentityGrid::named(grid_name);
    if (seed)
        grid.seed = *seed;
    const auto results = run_identity_suites(grid);
    bool all = true;
    std::cout << std::left << std::setw(24) << "suite" << std::setw(12) << "instances" << std::setw(10) << "failures"
              << "result\n";
    for (const auto& r : results) {
        std::cout << std::setw(24) << r.name << std::setw(12) << r.instances << std::setw(10) << r.failures
                  << (r.passed() ? "pass" : "FAIL") << "\n";
        if (!r.passed()) {
            all = false;
            std::cout << "  counterexample: " << *r.counterexample << "\n";
        }
    }
    if (!out.empty())
        emit(io::report_identities(results, grid_name), out);
    return all ? kOk : kIdentityFailure;
}

int cmd_survey(const std::string& path, unsigned m_max, unsigned ratio_m_max, unsigned samples,
               std::uint64_t seed, const std::string& out) {
    const auto file = io::load_json_file(path);
    const HomPoly divisor = io::decode_survey_divisor(file.document);
    const std::size_t n = divisor.dimension();
    if (divisor.degree() % 2 != 0 || divisor.degree() == 0)
        throw io::InputError("divisor: degree must be even and positive (P of degree 2p)");
    const unsigned p = divisor.degree() / 2;

    io::json report = {{"command", "survey"}, {"tool", io::kToolName}, {"version", io::kToolVersion}};
    report["input_sha256"] = file.sha256;
    report["n"] = n;
    report["p"] = p;
    report["m_max"] = m_max;
    report["samples"] = samples;
    report["seed"] = seed;
    report["prng"] = "mt19937_64, modulo mapping";
    report["divisor"] = io::report_polynomial(divisor);

    if (n == 2 || n == 3) {
        const auto cert = elliptic_check(divisor, n == 2 ? 4096 : 256);
        report["divisor_ellipticity"] = to_string(cert.verdict);
        if (cert.verdict != Verdict::elliptic)
            std::cerr << "warning: divisor is " << to_string(cert.verdict) << "; ratios may vanish\n";
    } else {
        report["divisor_ellipticity"] = "unchecked";
    }

    io::json table = io::json::array();
    for (const auto& row : divisor_constant_survey(divisor, p, m_max, samples, seed))
        table.push_back({{"m", row.m}, {"sampled_min", row.sampled_min}, {"operator_min", row.operator_min}});
    report["constant_table"] = table;

    io::json ratio = {{"p", p}, {"n", n}, {"m_max", ratio_m_max}};
    ratio["sequence"] = n >= 2 ? harmonic_ratio_sequence(p, n, ratio_m_max) : std::vector<double>{};
    ratio["one_variable"] = monomial_ratio_sequence(p, ratio_m_max);
    report["harmonic_ratio"] = ratio;

    io::json complex_rows = io::json::array();
    for (const auto& row : complex_norm_survey(p, n, m_max, samples, seed))
        complex_rows.push_back({{"m", row.m}, {"sampled_min", row.sampled_min}, {"operator_min", row.operator_min}});
    report["complex_norm"] = complex_rows;

    emit(report, out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact series solver for mixed Cauchy problems L(P q) = f with Fischer-norm diagnostics"};
    app.require_subcommand(1);

    std::string path, out, grid = "default";
    std::optional<unsigned> max_degree, resolution;
    std::optional<std::uint64_t> id_seed;
    unsigned m_max = 12, ratio_m_max = 20, samples = 8;
    std::uint64_t seed = 1;

    auto* solve = app.add_subcommand("solve", "solve L(P q) = f through the requested degree");
    solve->add_option("problem", path, "problem JSON file")->required();
    solve->add_option("--max-degree", max_degree, "override max_degree");
    solve->add_option("--out", out, "report path (default: stdout)");

    auto* wellposed = app.add_subcommand("wellposed", "check invertibility of every degree map");
    wellposed->add_option("problem", path, "problem JSON file")->required();
    wellposed->add_option("--max-degree", max_degree, "override max_degree");
    wellposed->add_option("--out", out, "report path (default: stdout)");

    auto* ellip = app.add_subcommand("ellipticity", "certify (B-)ellipticity of a polynomial");
    ellip->add_option("input", path, "ellipticity JSON file")->required();
    ellip->add_option("--resolution", resolution, "sphere grid resolution")->check(CLI::Range(8u, 10'000'000u));
    ellip->add_option("--out", out, "report path (default: stdout)");

    auto* ident = app.add_subcommand("identities", "run the exact identity suites");
    ident->add_option("--grid", grid, "small, default or full")->check(CLI::IsMember({"small", "default", "full"}));
    ident->add_option("--seed", id_seed, "seed for the random instances");
    ident->add_option("--out", out, "JSON summary path");

    auto* survey = app.add_subcommand("survey", "empirical constants for the divisor estimates");
    survey->add_option("input", path, "divisor or problem JSON file")->required();
    survey->add_option("--m-max", m_max, "largest degree in the constant tables");
    survey->add_option("--ratio-m-max", ratio_m_max, "largest degree in the harmonic ratio sequence");
    survey->add_option("--samples", samples, "random polynomials per degree");
    survey->add_option("--seed", seed, "PRNG seed");
    survey->add_option("--out", out, "report path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*solve)
            return cmd_solve(path, max_degree, out);
        if (*wellposed)
            return cmd_wellposed(path, max_degree, out);
        if (*ellip)
            return cmd_ellipticity(path, resolution, out);
        if (*ident)
            return cmd_identities(grid, id_seed, out);
        if (*survey)
            return cmd_survey(path, m_max, ratio_m_max, samples, seed, out);
    } catch (const io::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const CutoffTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
