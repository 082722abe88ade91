#include "fcauchy/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "fcauchy/harmonic.hpp"
#include "fcauchy/linalg.hpp"
#include "fcauchy/parallel.hpp"
#include "fcauchy/random.hpp"

namespace fcauchy {
namespace {

// sqrt(a / b) for positive rationals without overflowing double.
double sqrt_ratio(const BigRational& a, const BigRational& b) {
    if (sgn(a) == 0)
        return 0.0;
    const BigRational q = a / b;
    const double lq = log_abs(q);
    if (std::abs(lq) < 600)
        return std::sqrt(q.get_d());
    return std::exp(0.5 * lq);
}

double smallest_singular_value(const Eigen::MatrixXcd& b) {
    if (b.rows() == 0)
        return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b);
    return svd.singularValues().minCoeff();
}

Eigen::MatrixXcd to_eigen(const Matrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).to_complex();
    return out;
}

std::string regime_label(const OperatorSpec& op) {
    if (!op.k0())
        return "no lower-order terms";
    const unsigned twice_k0 = 2 * *op.k0();
    const unsigned k = op.order();
    if (twice_k0 < k)
        return "k0 < p";
    if (twice_k0 == k)
        return "k0 = p";
    return "k0 > p";
}

void check_cutoffs(const Problem& problem) {
    const unsigned n = problem.max_degree;
    if (problem.rhs.cutoff() < n)
        throw CutoffTooSmall("rhs series cutoff " + std::to_string(problem.rhs.cutoff()) +
                             " is below the requested degree " + std::to_string(n));
    for (const auto& term : problem.op.lower_order())
        if (term.coeff.cutoff() < n)
            throw CutoffTooSmall("coefficient series cutoff " + std::to_string(term.coeff.cutoff()) +
                                 " is below the requested degree " + std::to_string(n));
}

// sum over lower-order terms of the degree-m part of a_alpha D^alpha u.
HomPoly lower_order_part(const OperatorSpec& op, const std::function<HomPoly(unsigned)>& u_part, unsigned m) {
    const std::size_t n = op.dimension();
    HomPoly out(n, m);
    for (const auto& term : op.lower_order()) {
        const unsigned l = term.alpha.order();
        for (const auto& [i, a] : term.coeff.parts()) {
            if (i > m)
                break;
            const HomPoly u = u_part(m - i + l);
            if (u.is_zero())
                continue;
            out += a * differentiate(u, term.alpha);
        }
    }
    return out;
}

}  // namespace

OperatorSpec::OperatorSpec(HomPoly principal, std::vector<LowerOrderTerm> lower_order)
    : principal_(std::move(principal)), lower_order_(std::move(lower_order)) {
    if (principal_.is_zero())
        throw std::invalid_argument("operator principal symbol must be nonzero");
    const std::size_t n = principal_.dimension();
    for (const auto& term : lower_order_) {
        if (term.alpha.size() != n || term.coeff.dimension() != n)
            throw std::invalid_argument("lower-order term has wrong dimension");
        const unsigned l = term.alpha.order();
        if (l >= order())
            throw std::invalid_argument("lower-order term of order " + std::to_string(l) +
                                        " must be below the principal order " + std::to_string(order()));
        k0_ = std::max(k0_.value_or(0), l);
    }
}

OperatorSpec OperatorSpec::laplacian_power(std::size_t n, unsigned p, std::vector<LowerOrderTerm> lower_order) {
    return OperatorSpec(HomPoly::radial_power(n, p), std::move(lower_order));
}

HomPoly OperatorSpec::apply_part(const std::function<HomPoly(unsigned)>& u_part, unsigned m) const {
    HomPoly out = apply_symbol(principal_, u_part(m + order()));
    HomPoly result(dimension(), m);
    if (!out.is_zero())
        result += out;
    result += lower_order_part(*this, u_part, m);
    return result;
}

void Problem::validate() const {
    const std::size_t n = op.dimension();
    if (divisor.dimension() != n || rhs.dimension() != n)
        throw std::invalid_argument("problem: dimension mismatch between operator, divisor and rhs");
    if (divisor.degree() != op.order())
        throw std::invalid_argument("problem: divisor degree " + std::to_string(divisor.degree()) +
                                    " must equal the principal order " + std::to_string(op.order()));
    if (divisor.is_zero())
        throw std::invalid_argument("problem: divisor must be nonzero");
}

DegreeOperator assemble_degree_map(const HomPoly& principal, const HomPoly& divisor, unsigned m) {
    const std::size_t n = principal.dimension();
    DegreeOperator out;
    out.m = m;
    out.basis = monomial_basis(n, m);
    const std::size_t dim = out.basis.size();
    const unsigned out_degree = m + divisor.degree() - principal.degree();
    const auto out_basis = monomial_basis(n, out_degree);
    out.matrix = Matrix(out_basis.size(), dim);
    std::vector<std::vector<GaussianRational>> columns(dim);
    parallel_chunks(dim, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            const HomPoly image = apply_symbol(principal, divisor * HomPoly::monomial(out.basis[j]));
            columns[j] = image.is_zero() ? std::vector<GaussianRational>(out_basis.size()) : image.dense();
        }
    });
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < out_basis.size(); ++i)
            out.matrix(i, j) = columns[j][i];
    return out;
}

DegreeOperator assemble_degree_map(const Problem& problem, unsigned m) {
    return assemble_degree_map(problem.op.principal(), problem.divisor, m);
}

double rf_lower_ratio(const DegreeOperator& op) {
    const std::size_t dim = op.basis.size();
    if (dim == 0 || op.matrix.rows() != dim)
        return 0.0;
    // Gram matrix of the basis, scaled to unit diagonal.
    Eigen::MatrixXd gram(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            gram(i, j) = gaussian_monomial_moment((op.basis[i] + op.basis[j]).exponents()).get_d();
    Eigen::VectorXd scale(dim);
    for (std::size_t i = 0; i < dim; ++i)
        scale(i) = 1.0 / std::sqrt(gram(i, i));
    const Eigen::MatrixXd g = scale.asDiagonal() * gram * scale.asDiagonal();
    const Eigen::MatrixXcd t = scale.cwiseInverse().asDiagonal() * to_eigen(op.matrix) * scale.asDiagonal();
    const Eigen::LLT<Eigen::MatrixXd> llt(g);
    const Eigen::MatrixXd lower = llt.matrixL();
    const Eigen::MatrixXd lower_inv = lower.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(dim, dim));
    const Eigen::MatrixXcd b = lower.transpose().cast<std::complex<double>>() * t *
                               lower_inv.transpose().cast<std::complex<double>>();
    return smallest_singular_value(b);
}

double fischer_lower_ratio(const DegreeOperator& op) {
    const std::size_t dim = op.basis.size();
    if (dim == 0 || op.matrix.rows() != dim)
        return 0.0;
    Eigen::VectorXd s(dim);
    for (std::size_t i = 0; i < dim; ++i)
        s(i) = std::sqrt(op.basis[i].factorial().get_d());
    const Eigen::MatrixXcd b = s.asDiagonal() * to_eigen(op.matrix) * s.cwiseInverse().asDiagonal();
    return smallest_singular_value(b);
}

std::vector<DegreeCertificate> check_wellposed(const Problem& problem) {
    problem.validate();
    std::vector<DegreeCertificate> out;
    for (unsigned m = 0; m <= problem.max_degree; ++m) {
        const auto op = assemble_degree_map(problem, m);
        DegreeCertificate cert;
        cert.m = m;
        cert.det = determinant(op.matrix);
        cert.invertible = !cert.det.is_zero();
        cert.lower_ratio = cert.invertible ? rf_lower_ratio(op) : 0.0;
        out.push_back(std::move(cert));
    }
    return out;
}

SolutionReport solve_series(const Problem& problem) {
    problem.validate();
    check_cutoffs(problem);
    const std::size_t n = problem.op.dimension();
    const unsigned k = problem.op.order();

    SolutionReport report;
    report.regime = regime_label(problem.op);
    report.solution = GradedSeries(n, problem.max_degree);

    // u_j = P q_{j-k}, cached as degrees are solved.
    std::vector<HomPoly> product;
    auto u_part = [&](unsigned j) -> HomPoly {
        if (j < k || j - k >= product.size())
            return HomPoly(n, j);
        return product[j - k];
    };

    for (unsigned m = 0; m <= problem.max_degree; ++m) {
        HomPoly rhs = problem.rhs.part(m);
        rhs -= lower_order_part(problem.op, u_part, m);

        const auto op = assemble_degree_map(problem, m);
        const auto dense_rhs = rhs.is_zero() ? std::vector<GaussianRational>(op.basis.size()) : rhs.dense();
        auto solved = solve_exact(op.matrix, dense_rhs);

        DegreeCertificate cert;
        cert.m = m;
        cert.det = solved.determinant;
        cert.invertible = solved.invertible();
        if (!cert.invertible) {
            report.per_degree.push_back(std::move(cert));
            report.singular_degree = m;
            return report;
        }
        std::vector<GaussianRational> coeffs(op.basis.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            coeffs[i] = (*solved.solution)(i, 0);
        HomPoly qm = HomPoly::from_dense(n, m, coeffs);
        cert.rf_norm_sq_rational = norm_sq_rF(qm).rational_part;
        cert.lower_ratio = rf_lower_ratio(op);
        report.per_degree.push_back(std::move(cert));

        product.push_back(problem.divisor * qm);
        report.solution.set_part(std::move(qm));
    }

    const GradedSeries lhs = apply_to_product(problem, report.solution);
    report.residual_ok = true;
    for (unsigned m = 0; m <= problem.max_degree; ++m)
        if (!(lhs.part(m) - problem.rhs.part(m)).is_zero())
            report.residual_ok = false;
    if (problem.max_degree > 0)
        report.radius_estimate = convergence_diagnostics(report.solution);
    return report;
}

GradedSeries apply_to_product(const Problem& problem, const GradedSeries& q) {
    problem.validate();
    const std::size_t n = problem.op.dimension();
    const unsigned k = problem.op.order();
    const unsigned top = problem.max_degree;
    std::vector<HomPoly> product;
    for (unsigned j = 0; j <= top; ++j)
        product.push_back(problem.divisor * (j <= q.cutoff() ? q.part(j) : HomPoly(n, j)));
    auto u_part = [&](unsigned j) -> HomPoly {
        if (j < k || j - k > top)
            return HomPoly(n, j);
        return product[j - k];
    };
    GradedSeries out(n, top);
    for (unsigned m = 0; m <= top; ++m)
        out.set_part(problem.op.apply_part(u_part, m));
    return out;
}

std::optional<double> convergence_diagnostics(const GradedSeries& q) {
    std::vector<double> radii;
    for (const auto& [m, part] : q.parts()) {
        if (m == 0)
            continue;
        const RealFischerValue norm = norm_sq_rF(part);
        // log ||q_m||^2 including the pi^(n/2) factor
        const double log_norm = log_abs(norm.rational_part.re()) + 0.5 * q.dimension() * std::log(std::numbers::pi);
        const double log_fact = std::lgamma(static_cast<double>(m) + 1.0);
        radii.push_back(std::exp((log_fact - log_norm) / (2.0 * m)));
    }
    if (radii.size() < 6)
        return std::nullopt;
    std::vector<double> tail(radii.end() - static_cast<std::ptrdiff_t>(radii.size() / 3), radii.end());
    std::sort(tail.begin(), tail.end());
    const std::size_t h = tail.size() / 2;
    return tail.size() % 2 == 1 ? tail[h] : 0.5 * (tail[h - 1] + tail[h]);
}

std::vector<SurveyRow> divisor_constant_survey(const HomPoly& divisor, unsigned p, unsigned m_max,
                                               unsigned samples, std::uint64_t seed) {
    const std::size_t n = divisor.dimension();
    if (divisor.degree() != 2 * p)
        throw std::invalid_argument("survey: divisor degree must be 2p");
    const HomPoly principal = HomPoly::radial_power(n, p);
    Sampler sampler(seed);
    std::vector<SurveyRow> rows;
    for (unsigned m = 0; m <= m_max; ++m) {
        const BigRational e = min_eigenvalue_e(p, m, n);
        SurveyRow row;
        row.m = m;
        row.sampled_min = std::numeric_limits<double>::infinity();
        for (unsigned s = 0; s < samples; ++s) {
            const HomPoly f = sampler.random_form(n, m);
            const HomPoly image = laplacian_power(divisor * f, p);
            const double ratio =
                sqrt_ratio(norm_sq_rF(image).rational_part.re(), e * e * norm_sq_rF(f).rational_part.re());
            row.sampled_min = std::min(row.sampled_min, ratio);
        }
        if (samples == 0)
            row.sampled_min = 0;
        row.operator_min = rf_lower_ratio(assemble_degree_map(principal, divisor, m)) / e.get_d();
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> harmonic_ratio_sequence(unsigned p, std::size_t n, unsigned m_max) {
    if (n < 2)
        throw std::invalid_argument("harmonic_ratio_sequence requires n >= 2");
    std::vector<double> out;
    for (unsigned m = 0; m <= m_max; ++m) {
        const BigRational d = eigenvalue_d(p, 0, m, n);
        const BigRational growth = moment_shift_ratio(static_cast<unsigned>(2 * m + n - 1), 2 * p);
        out.push_back(sqrt_ratio(d * d, growth));
    }
    return out;
}

std::vector<double> monomial_ratio_sequence(unsigned p, unsigned m_max) {
    std::vector<double> out;
    for (unsigned m = 0; m <= m_max; ++m) {
        BigInt falling = 1;
        for (unsigned t = 1; t <= 2 * p; ++t)
            falling *= m + t;
        const BigRational d(falling);
        out.push_back(sqrt_ratio(d * d, moment_shift_ratio(2 * m, 2 * p)));
    }
    return out;
}

std::vector<ComplexNormRow> complex_norm_survey(unsigned p, std::size_t n, unsigned m_max, unsigned samples,
                                                std::uint64_t seed) {
    const HomPoly sigma_p = HomPoly::radial_power(n, p);
    Sampler sampler(seed);
    std::vector<ComplexNormRow> rows;
    for (unsigned m = 1; m <= m_max; ++m) {
        const double mp = std::pow(static_cast<double>(m), p);
        ComplexNormRow row;
        row.m = m;
        row.sampled_min = std::numeric_limits<double>::infinity();
        for (unsigned s = 0; s < samples; ++s) {
            const HomPoly q = sampler.random_form(n, m, 5, true);
            const HomPoly image = laplacian_power(sigma_p * q, p);
            row.sampled_min = std::min(row.sampled_min, sqrt_ratio(norm_sq_F(image).re(), norm_sq_F(q).re()) / mp);
        }
        if (samples == 0)
            row.sampled_min = 0;
        row.operator_min = fischer_lower_ratio(assemble_degree_map(sigma_p, sigma_p, m)) / mp;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace fcauchy
