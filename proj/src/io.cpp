#include "fcauchy/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <openssl/evp.h>

namespace fcauchy::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object())
        fail(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            ok = ok || key == a;
        if (!ok)
            fail(path.empty() ? key : path + "." + key, "unknown key");
    }
}

const json& require(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key))
        fail(path.empty() ? key : path + "." + key, "missing key");
    return j.at(key);
}

std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

unsigned decode_unsigned(const json& j, const std::string& path) {
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        const auto v = j.get<std::uint64_t>();
        if (v > 1'000'000)
            fail(path, "value too large");
        return static_cast<unsigned>(v);
    }
    fail(path, "expected a nonnegative integer");
}

BigInt decode_integer(const json& j, const std::string& path) {
    if (j.is_number_integer())
        return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_number_unsigned())
        return BigInt(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            fail(path, "expected an integer string, got \"" + s + "\"");
        if (s[0] == '+')
            s.erase(0, 1);
        return BigInt(s);
    }
    fail(path, "expected an integer or integer string");
}

MultiIndex decode_exps(const json& j, std::size_t n, const std::string& path) {
    if (!j.is_array() || j.size() != n)
        fail(path, "expected an array of " + std::to_string(n) + " exponents");
    std::vector<unsigned> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back(decode_unsigned(j[i], index(path, i)));
    return MultiIndex(e);
}

json encode_integer(const BigInt& z) {
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

json encode_rational(const BigRational& q) {
    return json::array({encode_integer(q.get_num()), encode_integer(q.get_den())});
}

std::string rational_text(const BigRational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

json encode_double(double v) {
    if (!std::isfinite(v))
        return nullptr;
    return v;
}

json encode_exps(const MultiIndex& a) {
    json e = json::array();
    for (std::size_t i = 0; i < a.size(); ++i)
        e.push_back(a[i]);
    return e;
}

}  // namespace

LoadedFile load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    LoadedFile out;
    out.bytes = ss.str();
    try {
        out.document = json::parse(out.bytes);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": invalid JSON (" + e.what() + ")");
    }
    out.sha256 = sha256_hex(out.bytes);
    return out;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

BigRational decode_rational(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2)
        fail(path, "expected [num, den]");
    const BigInt num = decode_integer(j[0], index(path, 0));
    const BigInt den = decode_integer(j[1], index(path, 1));
    if (den == 0)
        fail(index(path, 1), "zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

GaussianRational decode_coeff(const json& j, const std::string& path) {
    check_keys(j, path, {"re", "im"});
    const BigRational re = decode_rational(require(j, path, "re"), child(path, "re"));
    const BigRational im = j.contains("im") ? decode_rational(j.at("im"), child(path, "im")) : BigRational(0);
    return GaussianRational(re, im);
}

HomPoly decode_polynomial(const json& j, std::size_t n, std::optional<unsigned> degree, const std::string& path) {
    if (!j.is_array())
        fail(path, "expected an array of terms");
    if (j.empty()) {
        if (!degree)
            fail(path, "polynomial must be nonzero here");
        return HomPoly(n, *degree);
    }
    std::optional<unsigned> deg = degree;
    HomPoly out;
    std::set<MultiIndex, GradedLex> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string tp = index(path, i);
        check_keys(j[i], tp, {"exps", "coeff"});
        const MultiIndex alpha = decode_exps(require(j[i], tp, "exps"), n, child(tp, "exps"));
        const GaussianRational c = decode_coeff(require(j[i], tp, "coeff"), child(tp, "coeff"));
        if (!deg)
            deg = alpha.order();
        if (alpha.order() != *deg)
            fail(child(tp, "exps"), "term of degree " + std::to_string(alpha.order()) + " in a polynomial of degree " +
                                        std::to_string(*deg) + " (polynomials must be homogeneous)");
        if (!seen.insert(alpha).second)
            fail(child(tp, "exps"), "repeated monomial");
        if (i == 0)
            out = HomPoly(n, *deg);
        out.add_term(alpha, c);
    }
    return out;
}

GradedSeries decode_series(const json& j, std::size_t n, const std::string& path) {
    const json* parts = &j;
    unsigned cutoff = GradedSeries::kExact;
    std::string parts_path = path;
    if (j.is_object()) {
        check_keys(j, path, {"cutoff", "parts"});
        cutoff = decode_unsigned(require(j, path, "cutoff"), child(path, "cutoff"));
        parts = &require(j, path, "parts");
        parts_path = child(path, "parts");
    }
    if (!parts->is_array())
        fail(parts_path, "expected an array of {degree, polynomial}");
    GradedSeries out(n, cutoff);
    std::set<unsigned> seen;
    for (std::size_t i = 0; i < parts->size(); ++i) {
        const std::string tp = index(parts_path, i);
        const json& e = (*parts)[i];
        check_keys(e, tp, {"degree", "polynomial"});
        const unsigned d = decode_unsigned(require(e, tp, "degree"), child(tp, "degree"));
        if (d > cutoff)
            fail(child(tp, "degree"), "degree above the series cutoff");
        if (!seen.insert(d).second)
            fail(child(tp, "degree"), "repeated degree");
        out.set_part(decode_polynomial(require(e, tp, "polynomial"), n, d, child(tp, "polynomial")));
    }
    return out;
}

Matrix decode_matrix(const json& j, std::size_t n, const std::string& path) {
    if (!j.is_array() || j.size() != n)
        fail(path, "expected " + std::to_string(n) + " rows");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::string rp = index(path, r);
        if (!j[r].is_array() || j[r].size() != n)
            fail(rp, "expected " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = decode_coeff(j[r][c], index(rp, c));
    }
    return m;
}

namespace {

std::size_t decode_dimension(const json& j) {
    const unsigned n = decode_unsigned(require(j, "", "n"), "n");
    if (n == 0 || n > 16)
        fail("n", "dimension must be between 1 and 16");
    return n;
}

}  // namespace

Problem decode_problem(const json& j) {
    check_keys(j, "", {"n", "principal", "lower_order", "divisor", "rhs", "max_degree"});
    const std::size_t n = decode_dimension(j);

    const json& pj = require(j, "", "principal");
    check_keys(pj, "principal", {"laplacian_power", "symbol"});
    HomPoly principal;
    if (pj.contains("laplacian_power") == pj.contains("symbol"))
        fail("principal", "expected exactly one of laplacian_power or symbol");
    if (pj.contains("laplacian_power")) {
        const unsigned p = decode_unsigned(pj.at("laplacian_power"), "principal.laplacian_power");
        if (p == 0)
            fail("principal.laplacian_power", "power must be at least 1");
        principal = HomPoly::radial_power(n, p);
    } else {
        principal = decode_polynomial(pj.at("symbol"), n, std::nullopt, "principal.symbol");
    }

    std::vector<LowerOrderTerm> lower;
    if (j.contains("lower_order")) {
        const json& lj = j.at("lower_order");
        if (!lj.is_array())
            fail("lower_order", "expected an array");
        for (std::size_t i = 0; i < lj.size(); ++i) {
            const std::string tp = index("lower_order", i);
            check_keys(lj[i], tp, {"alpha", "series"});
            const MultiIndex alpha = decode_exps(require(lj[i], tp, "alpha"), n, child(tp, "alpha"));
            lower.push_back({alpha, decode_series(require(lj[i], tp, "series"), n, child(tp, "series"))});
        }
    }

    const HomPoly divisor = decode_polynomial(require(j, "", "divisor"), n, std::nullopt, "divisor");
    const GradedSeries rhs = decode_series(require(j, "", "rhs"), n, "rhs");
    const unsigned max_degree = decode_unsigned(require(j, "", "max_degree"), "max_degree");

    try {
        Problem p{OperatorSpec(principal, std::move(lower)), divisor, rhs, max_degree};
        p.validate();
        return p;
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("problem: ") + e.what());
    }
}

EllipticityInput decode_ellipticity(const json& j) {
    check_keys(j, "", {"n", "polynomial", "B", "A", "resolution"});
    const std::size_t n = decode_dimension(j);
    EllipticityInput in;
    in.polynomial = decode_polynomial(require(j, "", "polynomial"), n, std::nullopt, "polynomial");
    if (j.contains("B"))
        in.b = decode_matrix(j.at("B"), n, "B");
    if (j.contains("A"))
        in.a = decode_matrix(j.at("A"), n, "A");
    if (in.b && !in.a)
        fail("A", "missing key (required when B is given)");
    if (j.contains("resolution")) {
        in.resolution = decode_unsigned(j.at("resolution"), "resolution");
        if (in.resolution < 8)
            fail("resolution", "must be at least 8");
    }
    return in;
}

HomPoly decode_survey_divisor(const json& j) {
    if (j.is_object() && (j.contains("principal") || j.contains("rhs")))
        return decode_problem(j).divisor;
    check_keys(j, "", {"n", "divisor"});
    const std::size_t n = decode_dimension(j);
    return decode_polynomial(require(j, "", "divisor"), n, std::nullopt, "divisor");
}

json encode_coeff(const GaussianRational& c) { return {{"re", encode_rational(c.re())}, {"im", encode_rational(c.im())}}; }

json encode_polynomial(const HomPoly& f) {
    json out = json::array();
    for (const auto& [alpha, c] : f.terms())
        out.push_back({{"exps", encode_exps(alpha)}, {"coeff", encode_coeff(c)}});
    return out;
}

json encode_series(const GradedSeries& s) {
    json parts = json::array();
    for (const auto& [d, f] : s.parts())
        parts.push_back({{"degree", d}, {"polynomial", encode_polynomial(f)}});
    if (s.is_exact())
        return parts;
    return {{"cutoff", s.cutoff()}, {"parts", parts}};
}

json encode_matrix(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(encode_coeff(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json encode_problem(const Problem& p) {
    const std::size_t n = p.op.dimension();
    const unsigned k = p.op.order();
    json principal;
    if (k % 2 == 0 && p.op.principal() == HomPoly::radial_power(n, k / 2))
        principal = {{"laplacian_power", k / 2}};
    else
        principal = {{"symbol", encode_polynomial(p.op.principal())}};
    json lower = json::array();
    for (const auto& t : p.op.lower_order())
        lower.push_back({{"alpha", encode_exps(t.alpha)}, {"series", encode_series(t.coeff)}});
    return {{"n", n},
            {"principal", principal},
            {"lower_order", lower},
            {"divisor", encode_polynomial(p.divisor)},
            {"rhs", encode_series(p.rhs)},
            {"max_degree", p.max_degree}};
}

json report_coeff(const GaussianRational& c) { return {{"re", rational_text(c.re())}, {"im", rational_text(c.im())}}; }

json report_polynomial(const HomPoly& f) {
    json terms = json::array();
    for (const auto& [alpha, c] : f.terms())
        terms.push_back({{"exps", encode_exps(alpha)}, {"coeff", report_coeff(c)}});
    return {{"degree", f.degree()}, {"terms", terms}, {"text", f.to_string()}};
}

namespace {

json tool_header(const char* command) {
    return {{"command", command}, {"tool", kToolName}, {"version", kToolVersion}};
}

}  // namespace

json report_solution(const SolutionReport& r, const Problem& p, const std::string& input_sha256) {
    json out = tool_header("solve");
    out["input_sha256"] = input_sha256;
    out["n"] = p.op.dimension();
    out["order"] = p.op.order();
    out["max_degree"] = p.max_degree;
    out["regime"] = r.regime;
    out["status"] = r.singular_degree ? "singular_degree" : (r.residual_ok ? "solved" : "residual_mismatch");
    out["singular_degree"] = r.singular_degree ? json(*r.singular_degree) : json(nullptr);
    out["residual_ok"] = r.residual_ok;
    out["radius_estimate"] = r.radius_estimate ? encode_double(*r.radius_estimate) : json(nullptr);
    json per = json::array();
    for (const auto& c : r.per_degree)
        per.push_back({{"m", c.m},
                       {"invertible", c.invertible},
                       {"det", report_coeff(c.det)},
                       {"rf_norm_sq_rational", report_coeff(c.rf_norm_sq_rational)},
                       {"lower_ratio", encode_double(c.lower_ratio)}});
    out["per_degree"] = per;
    json sol = json::array();
    const unsigned solved = static_cast<unsigned>(r.per_degree.size()) - (r.singular_degree ? 1 : 0);
    for (unsigned m = 0; m < solved; ++m)
        sol.push_back(report_polynomial(r.solution.part(m)));
    out["solution"] = sol;
    return out;
}

json report_wellposed(const std::vector<DegreeCertificate>& certs, const Problem& p, const std::string& input_sha256) {
    json out = tool_header("wellposed");
    out["input_sha256"] = input_sha256;
    out["n"] = p.op.dimension();
    out["max_degree"] = p.max_degree;
    json per = json::array();
    std::optional<unsigned> first;
    for (const auto& c : certs) {
        if (!c.invertible && !first)
            first = c.m;
        per.push_back({{"m", c.m},
                       {"invertible", c.invertible},
                       {"det", report_coeff(c.det)},
                       {"lower_ratio", encode_double(c.lower_ratio)}});
    }
    out["per_degree"] = per;
    out["all_invertible"] = !first;
    out["first_singular_degree"] = first ? json(*first) : json(nullptr);
    return out;
}

json report_ellipticity(const EllipticityCertificate& c, bool transformed, const std::string& input_sha256) {
    json out = tool_header("ellipticity");
    out["input_sha256"] = input_sha256;
    out["verdict"] = to_string(c.verdict);
    out["real_on_reals"] = c.real_on_reals;
    out["delta_grid_min"] = encode_double(c.delta_grid_min);
    out["delta_lower"] = encode_double(c.delta_lower);
    out["resolution"] = c.resolution;
    json w = nullptr;
    if (c.witness) {
        w = json::array();
        for (double v : *c.witness)
            w.push_back(encode_double(v));
    }
    out["witness"] = w;
    out["note"] = c.note;
    out["transform_applied"] = transformed;
    out["polynomial_checked"] = report_polynomial(c.transformed);
    return out;
}

json report_identities(const std::vector<IdentityResult>& results, const std::string& grid) {
    json out = tool_header("identities");
    out["grid"] = grid;
    json rows = json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed();
        rows.push_back({{"name", r.name},
                        {"instances", r.instances},
                        {"failures", r.failures},
                        {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}});
    }
    out["suites"] = rows;
    out["all_passed"] = all;
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fcauchy::io
