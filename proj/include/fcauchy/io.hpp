#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcauchy/ellipticity.hpp"
#include "fcauchy/identities.hpp"
#include "fcauchy/solver.hpp"

namespace fcauchy::io {

using nlohmann::json;

inline constexpr const char* kToolName = "fischer_cauchy";
inline constexpr const char* kToolVersion = "1.0.0";

/// Malformed input. The message starts with the JSON path of the offending key.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadedFile {
    std::string bytes;
    json document;
    std::string sha256;
};

/// Reads and parses a JSON file; InputError on I/O or syntax errors.
LoadedFile load_json_file(const std::string& path);
std::string sha256_hex(const std::string& bytes);

/// Rationals in input: [num, den] with integer or decimal-string entries.
BigRational decode_rational(const json& j, const std::string& path);
/// {"re": [num, den], "im": [num, den]}; "im" may be omitted.
GaussianRational decode_coeff(const json& j, const std::string& path);
/// Array of {"exps": [...], "coeff": {...}}. The degree is required when the
/// array may be empty; otherwise it is read off the terms.
HomPoly decode_polynomial(const json& j, std::size_t n, std::optional<unsigned> degree, const std::string& path);
/// Array of {"degree", "polynomial"} (an exact polynomial), or
/// {"cutoff": c, "parts": [...]} (a series known through degree c).
GradedSeries decode_series(const json& j, std::size_t n, const std::string& path);
/// Array of n rows of n coefficients.
Matrix decode_matrix(const json& j, std::size_t n, const std::string& path);

Problem decode_problem(const json& j);

struct EllipticityInput {
    HomPoly polynomial;
    std::optional<Matrix> b;
    std::optional<Matrix> a;
    unsigned resolution = 4096;
};
EllipticityInput decode_ellipticity(const json& j);

/// {"n", "divisor"} or a full problem file (its divisor is used).
HomPoly decode_survey_divisor(const json& j);

json encode_coeff(const GaussianRational& c);
json encode_polynomial(const HomPoly& f);
json encode_series(const GradedSeries& s);
json encode_matrix(const Matrix& m);
json encode_problem(const Problem& p);

/// "num/den" for both parts.
json report_coeff(const GaussianRational& c);
/// {"terms": [...], "text": canonical rendering}
json report_polynomial(const HomPoly& f);

json report_solution(const SolutionReport& r, const Problem& p, const std::string& input_sha256);
json report_wellposed(const std::vector<DegreeCertificate>& certs, const Problem& p, const std::string& input_sha256);
json report_ellipticity(const EllipticityCertificate& c, bool transformed, const std::string& input_sha256);
json report_identities(const std::vector<IdentityResult>& results, const std::string& grid);

/// Two-space indented dump with a trailing newline; keys are sorted.
std::string dump(const json& j);

}  // namespace fcauchy::io
