#include "fcauchy/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fcauchy/linalg.hpp"

namespace fcauchy {
namespace {

void require_same_dimension(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
}

void enumerate_basis(std::size_t n, std::size_t pos, unsigned remaining, std::vector<unsigned>& current,
                     std::vector<MultiIndex>& out) {
    if (pos + 1 == n) {
        current[pos] = remaining;
        out.emplace_back(current);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        current[pos] = e;
        enumerate_basis(n, pos + 1, remaining - e, current, out);
    }
    current[pos] = 0;
}

}  // namespace

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
    MultiIndex a = zero(n);
    a[j] = 1;
    return a;
}

unsigned MultiIndex::order() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

BigInt MultiIndex::factorial() const {
    BigInt r = 1;
    for (unsigned e : exps_)
        r *= fcauchy::factorial(e);
    return r;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    require_same_dimension(a.size(), b.size(), "MultiIndex +");
    MultiIndex c = a;
    for (std::size_t j = 0; j < a.size(); ++j)
        c[j] += b[j];
    return c;
}

bool GradedLex::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const unsigned da = a.order();
    const unsigned db = b.order();
    if (da != db)
        return da < db;
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(), a.exponents().begin(),
                                        a.exponents().end());
}

std::vector<MultiIndex> monomial_basis(std::size_t n, unsigned m) {
    std::vector<MultiIndex> out;
    if (n == 0)
        return out;
    std::vector<unsigned> current(n, 0);
    enumerate_basis(n, 0, m, current, out);
    return out;
}

HomPoly HomPoly::constant(std::size_t n, const GaussianRational& c) {
    HomPoly f(n, 0);
    f.add_term(MultiIndex::zero(n), c);
    return f;
}

HomPoly HomPoly::monomial(const MultiIndex& alpha, const GaussianRational& c) {
    HomPoly f(alpha.size(), alpha.order());
    f.add_term(alpha, c);
    return f;
}

HomPoly HomPoly::variable(std::size_t n, std::size_t j) {
    return monomial(MultiIndex::unit(n, j));
}

HomPoly HomPoly::sum_of_squares(std::size_t n) {
    HomPoly f(n, 2);
    for (std::size_t j = 0; j < n; ++j) {
        MultiIndex a = MultiIndex::zero(n);
        a[j] = 2;
        f.add_term(a, 1);
    }
    return f;
}

HomPoly HomPoly::radial_power(std::size_t n, unsigned s) {
    HomPoly r = constant(n, 1);
    const HomPoly sigma = sum_of_squares(n);
    for (unsigned i = 0; i < s; ++i)
        r = r * sigma;
    return r;
}

GaussianRational HomPoly::coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void HomPoly::add_term(const MultiIndex& alpha, const GaussianRational& c) {
    require_same_dimension(alpha.size(), n_, "HomPoly::add_term");
    if (alpha.order() != degree_)
        throw std::invalid_argument("HomPoly::add_term: monomial degree " + std::to_string(alpha.order()) +
                                    " does not match polynomial degree " + std::to_string(degree_));
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

HomPoly& HomPoly::operator+=(const HomPoly& g) {
    require_same_dimension(n_, g.n_, "HomPoly +");
    if (g.is_zero())
        return *this;
    if (is_zero())
        degree_ = g.degree_;
    if (degree_ != g.degree_)
        throw std::invalid_argument("HomPoly +: degree mismatch (" + std::to_string(degree_) + " vs " +
                                    std::to_string(g.degree_) + ")");
    for (const auto& [alpha, c] : g.terms_)
        add_term(alpha, c);
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& g) {
    return *this += -g;
}

HomPoly& HomPoly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, v] : terms_)
        v *= c;
    return *this;
}

HomPoly HomPoly::operator-() const {
    HomPoly r = *this;
    for (auto& [alpha, v] : r.terms_)
        v = -v;
    return r;
}

HomPoly operator*(const HomPoly& f, const HomPoly& g) {
    require_same_dimension(f.n_, g.n_, "HomPoly *");
    HomPoly h(f.n_, f.degree_ + g.degree_);
    for (const auto& [a, ca] : f.terms_)
        for (const auto& [b, cb] : g.terms_)
            h.add_term(a + b, ca * cb);
    return h;
}

bool operator==(const HomPoly& f, const HomPoly& g) {
    return f.n_ == g.n_ && f.degree_ == g.degree_ && f.terms_ == g.terms_;
}

std::vector<GaussianRational> HomPoly::dense() const {
    const auto basis = monomial_basis(n_, degree_);
    std::vector<GaussianRational> out;
    out.reserve(basis.size());
    for (const auto& alpha : basis)
        out.push_back(coeff(alpha));
    return out;
}

HomPoly HomPoly::from_dense(std::size_t n, unsigned degree, std::span<const GaussianRational> coeffs) {
    const auto basis = monomial_basis(n, degree);
    if (basis.size() != coeffs.size())
        throw std::invalid_argument("HomPoly::from_dense: expected " + std::to_string(basis.size()) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    HomPoly f(n, degree);
    for (std::size_t i = 0; i < basis.size(); ++i)
        f.add_term(basis[i], coeffs[i]);
    return f;
}

bool HomPoly::has_real_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

GaussianRational HomPoly::evaluate(std::span<const GaussianRational> point) const {
    if (point.size() != n_)
        throw std::invalid_argument("HomPoly::evaluate: point has wrong length");
    GaussianRational sum;
    for (const auto& [alpha, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t j = 0; j < n_; ++j)
            for (unsigned e = 0; e < alpha[j]; ++e)
                t *= point[j];
        sum += t;
    }
    return sum;
}

std::complex<double> HomPoly::evaluate_float(std::span<const double> point) const {
    if (point.size() != n_)
        throw std::invalid_argument("HomPoly::evaluate_float: point has wrong length");
    std::complex<double> sum = 0;
    for (const auto& [alpha, c] : terms_) {
        double mono = 1;
        for (std::size_t j = 0; j < n_; ++j)
            for (unsigned e = 0; e < alpha[j]; ++e)
                mono *= point[j];
        sum += c.to_complex() * mono;
    }
    return sum;
}

double HomPoly::coefficient_l1_norm() const {
    double s = 0;
    for (const auto& [alpha, c] : terms_)
        s += std::abs(c.to_complex());
    return s;
}

std::string HomPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (std::size_t j = 0; j < n_; ++j) {
            if (alpha[j] == 0)
                continue;
            os << "*x" << (j + 1);
            if (alpha[j] > 1)
                os << "^" << alpha[j];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HomPoly& f) {
    return os << f.to_string();
}

HomPoly add(const HomPoly& f, const HomPoly& g) {
    return f + g;
}

HomPoly scale(const HomPoly& f, const GaussianRational& c) {
    return f * c;
}

HomPoly multiply(const HomPoly& f, const HomPoly& g) {
    return f * g;
}

HomPoly differentiate(const HomPoly& f, const MultiIndex& alpha) {
    require_same_dimension(f.dimension(), alpha.size(), "differentiate");
    const unsigned k = alpha.order();
    if (k > f.degree())
        return HomPoly(f.dimension(), 0);
    HomPoly out(f.dimension(), f.degree() - k);
    for (const auto& [beta, c] : f.terms()) {
        MultiIndex gamma = beta;
        BigInt factor = 1;
        bool vanishes = false;
        for (std::size_t j = 0; j < alpha.size() && !vanishes; ++j) {
            if (beta[j] < alpha[j]) {
                vanishes = true;
                break;
            }
            for (unsigned t = 0; t < alpha[j]; ++t)
                factor *= beta[j] - t;
            gamma[j] = beta[j] - alpha[j];
        }
        if (!vanishes)
            out.add_term(gamma, c * GaussianRational(BigRational(factor)));
    }
    return out;
}

HomPoly partial(const HomPoly& f, std::size_t j) {
    return differentiate(f, MultiIndex::unit(f.dimension(), j));
}

HomPoly laplacian(const HomPoly& f) {
    const std::size_t n = f.dimension();
    if (f.degree() < 2)
        return HomPoly(n, 0);
    HomPoly out(n, f.degree() - 2);
    for (std::size_t j = 0; j < n; ++j) {
        MultiIndex a = MultiIndex::zero(n);
        a[j] = 2;
        out += differentiate(f, a);
    }
    return out;
}

HomPoly laplacian_power(const HomPoly& f, unsigned p) {
    HomPoly g = f;
    for (unsigned i = 0; i < p; ++i)
        g = laplacian(g);
    return g;
}

HomPoly apply_symbol(const HomPoly& symbol, const HomPoly& f) {
    require_same_dimension(symbol.dimension(), f.dimension(), "apply_symbol");
    if (symbol.degree() > f.degree())
        return HomPoly(f.dimension(), 0);
    HomPoly out(f.dimension(), f.degree() - symbol.degree());
    for (const auto& [alpha, q] : symbol.terms())
        out += differentiate(f, alpha) * q;
    return out;
}

HomPoly conjugate_coefficients(const HomPoly& f) {
    HomPoly out(f.dimension(), f.degree());
    for (const auto& [alpha, c] : f.terms())
        out.add_term(alpha, c.conj());
    return out;
}

LinearChange::LinearChange(Matrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols())
        throw std::invalid_argument("LinearChange: matrix must be square");
    det_ = fcauchy::determinant(matrix_);
    if (det_.is_zero())
        throw std::invalid_argument("LinearChange: matrix is singular");
}

LinearChange LinearChange::inverse() const {
    return LinearChange(*fcauchy::inverse(matrix_));
}

HomPoly substitute_linear(const HomPoly& f, const LinearChange& a) {
    const std::size_t n = f.dimension();
    require_same_dimension(n, a.dimension(), "substitute_linear");
    // Row j of A gives the linear form replacing x_j.
    std::vector<HomPoly> forms;
    forms.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        HomPoly l(n, 1);
        for (std::size_t k = 0; k < n; ++k)
            l.add_term(MultiIndex::unit(n, k), a.matrix()(j, k));
        forms.push_back(std::move(l));
    }
    // Cache powers of each form as they are requested.
    std::vector<std::vector<HomPoly>> powers(n);
    for (std::size_t j = 0; j < n; ++j)
        powers[j].push_back(HomPoly::constant(n, 1));
    auto power = [&](std::size_t j, unsigned e) -> const HomPoly& {
        while (powers[j].size() <= e)
            powers[j].push_back(powers[j].back() * forms[j]);
        return powers[j][e];
    };
    HomPoly out(n, f.degree());
    for (const auto& [alpha, c] : f.terms()) {
        HomPoly t = HomPoly::constant(n, c);
        for (std::size_t j = 0; j < n; ++j)
            if (alpha[j] > 0)
                t = t * power(j, alpha[j]);
        out += t;
    }
    return out;
}

GradedSeries GradedSeries::from_part(const HomPoly& f, unsigned cutoff) {
    GradedSeries s(f.dimension(), cutoff);
    s.set_part(f);
    return s;
}

HomPoly GradedSeries::part(unsigned m) const {
    if (m > cutoff_)
        throw std::out_of_range("GradedSeries::part: degree " + std::to_string(m) + " beyond cutoff " +
                                std::to_string(cutoff_));
    auto it = parts_.find(m);
    return it == parts_.end() ? HomPoly(n_, m) : it->second;
}

void GradedSeries::set_part(HomPoly f) {
    require_same_dimension(n_, f.dimension(), "GradedSeries::set_part");
    if (f.degree() > cutoff_)
        throw std::out_of_range("GradedSeries::set_part: degree beyond cutoff");
    if (f.is_zero())
        parts_.erase(f.degree());
    else
        parts_[f.degree()] = std::move(f);
}

int GradedSeries::max_stored_degree() const {
    return parts_.empty() ? -1 : static_cast<int>(parts_.rbegin()->first);
}

GradedSeries GradedSeries::truncated(unsigned cutoff) const {
    GradedSeries s(n_, std::min(cutoff, cutoff_));
    for (const auto& [m, f] : parts_)
        if (m <= cutoff)
            s.parts_.emplace(m, f);
    return s;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.n_ == b.n_ && a.cutoff_ == b.cutoff_ && a.parts_ == b.parts_;
}

}  // namespace fcauchy
