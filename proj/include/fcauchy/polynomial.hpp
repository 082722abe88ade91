#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fcauchy/matrix.hpp"
#include "fcauchy/numerics.hpp"

namespace fcauchy {

/// Exponent vector alpha in N_0^n.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}
    MultiIndex(std::initializer_list<unsigned> exponents) : exps_(exponents) {}

    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }
    static MultiIndex unit(std::size_t n, std::size_t j);

    std::size_t size() const { return exps_.size(); }
    unsigned operator[](std::size_t j) const { return exps_[j]; }
    unsigned& operator[](std::size_t j) { return exps_[j]; }
    const std::vector<unsigned>& exponents() const { return exps_; }

    unsigned order() const;
    /// alpha! = prod alpha_j!
    BigInt factorial() const;

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<unsigned> exps_;
};

/// Graded-lex order: lower total degree first, then larger leading exponents
/// first, so that x1^m < x1^(m-1) x2 < ... < xn^m within one degree.
struct GradedLex {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All exponent vectors of total degree m in n variables, graded-lex order.
/// The count is C(m+n-1, n-1).
std::vector<MultiIndex> monomial_basis(std::size_t n, unsigned m);

/// Homogeneous polynomial of fixed degree in n variables with
/// GaussianRational coefficients. Zero coefficients are never stored.
class HomPoly {
public:
    using Terms = std::map<MultiIndex, GaussianRational, GradedLex>;

    HomPoly() = default;
    /// The zero polynomial of the given dimension and nominal degree.
    HomPoly(std::size_t n, unsigned degree) : n_(n), degree_(degree) {}

    static HomPoly constant(std::size_t n, const GaussianRational& c);
    static HomPoly monomial(const MultiIndex& alpha, const GaussianRational& c = 1);
    static HomPoly variable(std::size_t n, std::size_t j);
    /// |x|^2 = x1^2 + ... + xn^2.
    static HomPoly sum_of_squares(std::size_t n);
    /// |x|^(2s).
    static HomPoly radial_power(std::size_t n, unsigned s);

    std::size_t dimension() const { return n_; }
    unsigned degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of x^alpha (zero when absent).
    GaussianRational coeff(const MultiIndex& alpha) const;
    /// Adds c to the coefficient of x^alpha. |alpha| must equal the degree.
    void add_term(const MultiIndex& alpha, const GaussianRational& c);

    HomPoly& operator+=(const HomPoly& g);
    HomPoly& operator-=(const HomPoly& g);
    HomPoly& operator*=(const GaussianRational& c);
    friend HomPoly operator+(HomPoly f, const HomPoly& g) { return f += g; }
    friend HomPoly operator-(HomPoly f, const HomPoly& g) { return f -= g; }
    friend HomPoly operator*(HomPoly f, const GaussianRational& c) { return f *= c; }
    friend HomPoly operator*(const GaussianRational& c, HomPoly f) { return f *= c; }
    friend HomPoly operator*(const HomPoly& f, const HomPoly& g);
    HomPoly operator-() const;

    /// Same dimension, degree and coefficients.
    friend bool operator==(const HomPoly& f, const HomPoly& g);

    /// Dense coefficient vector over monomial_basis(n, degree).
    std::vector<GaussianRational> dense() const;
    static HomPoly from_dense(std::size_t n, unsigned degree, std::span<const GaussianRational> coeffs);

    bool has_real_coefficients() const;

    GaussianRational evaluate(std::span<const GaussianRational> point) const;
    std::complex<double> evaluate_float(std::span<const double> point) const;

    /// Sum of |c_alpha| in double precision.
    double coefficient_l1_norm() const;

    /// Canonical text, terms in graded-lex order, e.g. "(1/2)*x1^2 + (-1/2)*x2^2".
    std::string to_string() const;

private:
    std::size_t n_ = 0;
    unsigned degree_ = 0;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const HomPoly& f);

HomPoly add(const HomPoly& f, const HomPoly& g);
HomPoly scale(const HomPoly& f, const GaussianRational& c);
HomPoly multiply(const HomPoly& f, const HomPoly& g);

/// D^alpha f. If |alpha| > deg f the result is the zero polynomial of degree 0.
HomPoly differentiate(const HomPoly& f, const MultiIndex& alpha);
HomPoly partial(const HomPoly& f, std::size_t j);
HomPoly laplacian(const HomPoly& f);
HomPoly laplacian_power(const HomPoly& f, unsigned p);

/// Q(D) f = sum_alpha q_alpha D^alpha f. Zero of degree 0 when deg Q > deg f.
HomPoly apply_symbol(const HomPoly& symbol, const HomPoly& f);

/// Coefficientwise complex conjugate (Q -> Q*).
HomPoly conjugate_coefficients(const HomPoly& f);

/// Invertible n x n change of variables.
class LinearChange {
public:
    /// Throws std::invalid_argument unless the matrix is square with nonzero determinant.
    explicit LinearChange(Matrix matrix);
    static LinearChange identity(std::size_t n) { return LinearChange(Matrix::identity(n)); }

    std::size_t dimension() const { return matrix_.rows(); }
    const Matrix& matrix() const { return matrix_; }
    const GaussianRational& determinant() const { return det_; }

    LinearChange inverse() const;
    LinearChange transpose() const { return LinearChange(matrix_.transpose()); }
    /// A^{-t}.
    LinearChange inverse_transpose() const { return inverse().transpose(); }

private:
    Matrix matrix_;
    GaussianRational det_;
};

/// f(A x), same degree.
HomPoly substitute_linear(const HomPoly& f, const LinearChange& a);

/// Truncated graded series: parts f_0 .. f_cutoff. Absent degrees are zero.
/// A cutoff of kExact marks an exact polynomial (every degree beyond the
/// stored parts is known to vanish).
class GradedSeries {
public:
    static constexpr unsigned kExact = std::numeric_limits<unsigned>::max();

    GradedSeries() = default;
    GradedSeries(std::size_t n, unsigned cutoff) : n_(n), cutoff_(cutoff) {}
    static GradedSeries exact(std::size_t n) { return {n, kExact}; }
    static GradedSeries from_part(const HomPoly& f, unsigned cutoff = kExact);

    std::size_t dimension() const { return n_; }
    unsigned cutoff() const { return cutoff_; }
    bool is_exact() const { return cutoff_ == kExact; }

    /// Degree-m part; zero polynomial when absent. Throws std::out_of_range past the cutoff.
    HomPoly part(unsigned m) const;
    /// Replaces the degree-m part (zero parts are dropped).
    void set_part(HomPoly f);
    const std::map<unsigned, HomPoly>& parts() const { return parts_; }

    bool is_zero() const { return parts_.empty(); }
    /// Highest stored nonzero degree, or -1 for the zero series.
    int max_stored_degree() const;

    GradedSeries truncated(unsigned cutoff) const;

    friend bool operator==(const GradedSeries& a, const GradedSeries& b);

private:
    std::size_t n_ = 0;
    unsigned cutoff_ = kExact;
    std::map<unsigned, HomPoly> parts_;
};

}  // namespace fcauchy
