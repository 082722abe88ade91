#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcauchy/fischer.hpp"
#include "fcauchy/matrix.hpp"
#include "fcauchy/polynomial.hpp"

namespace fcauchy {

/// One lower-order term a_alpha(x) D^alpha of the operator.
struct LowerOrderTerm {
    MultiIndex alpha;
    GradedSeries coeff;
};

/// L u = Q_k(D) u + sum_{|alpha| <= k0} a_alpha(x) D^alpha u.
class OperatorSpec {
public:
    /// Throws std::invalid_argument if the principal symbol is zero, a term has
    /// the wrong dimension, or some |alpha| >= k.
    OperatorSpec(HomPoly principal, std::vector<LowerOrderTerm> lower_order = {});

    /// Principal part Delta^p (symbol |x|^(2p)).
    static OperatorSpec laplacian_power(std::size_t n, unsigned p, std::vector<LowerOrderTerm> lower_order = {});

    std::size_t dimension() const { return principal_.dimension(); }
    const HomPoly& principal() const { return principal_; }
    unsigned order() const { return principal_.degree(); }
    const std::vector<LowerOrderTerm>& lower_order() const { return lower_order_; }
    /// Largest |alpha| among the lower-order terms; nullopt when there are none.
    std::optional<unsigned> k0() const { return k0_; }

    /// Degree-m part of L u, where u is given through its parts u_0..u_{m+k}.
    HomPoly apply_part(const std::function<HomPoly(unsigned)>& u_part, unsigned m) const;

private:
    HomPoly principal_;
    std::vector<LowerOrderTerm> lower_order_;
    std::optional<unsigned> k0_;
};

/// L(P q) = f, solved through degree max_degree.
struct Problem {
    OperatorSpec op;
    HomPoly divisor;
    GradedSeries rhs;
    unsigned max_degree = 0;

    /// Throws std::invalid_argument when deg P != deg Q_k or dimensions differ.
    void validate() const;
};

/// Thrown when the data series do not reach the requested degree.
class CutoffTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix of q_m -> Q_k(D)(P_k q_m) on the graded-lex basis of degree-m forms.
struct DegreeOperator {
    unsigned m = 0;
    std::vector<MultiIndex> basis;
    Matrix matrix;
};

/// Column j is the coefficient vector of Q_k(D)(P_k * basis_j).
/// Columns are assembled in parallel into fixed slots.
DegreeOperator assemble_degree_map(const Problem& problem, unsigned m);
DegreeOperator assemble_degree_map(const HomPoly& principal, const HomPoly& divisor, unsigned m);

/// min over q != 0 of ||T q||_rF / ||q||_rF, in double precision (diagnostic).
/// Computed as the smallest singular value of L^H T L^{-H}, with G = L L^H the
/// Cholesky factor of the Gram matrix of the basis. Returns 0 for singular T.
double rf_lower_ratio(const DegreeOperator& op);

/// Same quantity for the complex Fischer norm (diagonal Gram matrix alpha!).
double fischer_lower_ratio(const DegreeOperator& op);

struct DegreeCertificate {
    unsigned m = 0;
    bool invertible = false;
    GaussianRational det;
    /// ||q_m||_rF^2 / pi^(n/2) of the computed solution part (zero for pure
    /// well-posedness checks).
    GaussianRational rf_norm_sq_rational;
    double lower_ratio = 0;
};

/// Exact invertibility of every degree map m = 0..max_degree.
std::vector<DegreeCertificate> check_wellposed(const Problem& problem);

struct SolutionReport {
    GradedSeries solution;
    std::vector<DegreeCertificate> per_degree;
    /// First degree whose map is singular; the recursion stops there.
    std::optional<unsigned> singular_degree;
    bool residual_ok = false;
    std::optional<double> radius_estimate;
    /// "k0 < p", "k0 = p", or "k0 > p" relative to half the principal order,
    /// or "no lower-order terms".
    std::string regime;
};

/// Solves the recursion
///   Q_k(D)(P q_m) = f_m - sum_{l, |alpha| = l} sum_i a_{alpha,i} D^alpha(P q_{m+l-k-i})
/// degree by degree with exact linear solves, then recomputes L(P q) - f
/// through degree N. Throws CutoffTooSmall when rhs or coefficient series stop
/// before N. A singular degree map is reported, not thrown.
SolutionReport solve_series(const Problem& problem);

/// Degree-<=N part of L(P q) for a solution candidate q.
GradedSeries apply_to_product(const Problem& problem, const GradedSeries& q);

/// Empirical radius from r_m = (m! / ||q_m||_rF^2)^(1/(2m)) over nonzero
/// degrees m >= 1: the median of the last third. nullopt with fewer than six
/// nonzero degrees.
std::optional<double> convergence_diagnostics(const GradedSeries& q);

struct SurveyRow {
    unsigned m = 0;
    double sampled_min = 0;   ///< min over random f of ||Delta^p(P f)||_rF / (e_{p,m} ||f||_rF)
    double operator_min = 0;  ///< same ratio minimized over all f (Gram/SVD diagnostic)
};

/// Empirical lower constants for ||Delta^p(P f_m)||_rF >= C e_{p,m} ||f_m||_rF.
std::vector<SurveyRow> divisor_constant_survey(const HomPoly& divisor, unsigned p, unsigned m_max,
                                               unsigned samples, std::uint64_t seed);

/// ||Delta^p(|x|^(2p) Y_m)||_rF / || |x|^(2p) Y_m ||_rF for harmonic Y_m, m = 0..m_max:
/// d_p(0,m) / sqrt(I_{4p+2m+n-1} / I_{2m+n-1}). Requires n >= 2.
std::vector<double> harmonic_ratio_sequence(unsigned p, std::size_t n, unsigned m_max);

/// One-variable contrast: (m+2p)...(m+1) / sqrt(I_{2m+4p} / I_{2m}).
std::vector<double> monomial_ratio_sequence(unsigned p, unsigned m_max);

struct ComplexNormRow {
    unsigned m = 0;
    double sampled_min = 0;   ///< min over random q of ||Delta^p(|x|^(2p) q)||_F / (m^p ||q||_F)
    double operator_min = 0;  ///< same ratio minimized over all q
};

/// Complex Fischer norm counterpart of the standard estimate, m = 1..m_max.
std::vector<ComplexNormRow> complex_norm_survey(unsigned p, std::size_t n, unsigned m_max, unsigned samples,
                                                std::uint64_t seed);

}  // namespace fcauchy
