#pragma once

#include <cstdint>
#include <random>

#include "fcauchy/polynomial.hpp"

namespace fcauchy {

/// Seeded generator for reproducible samples. The engine is std::mt19937_64
/// (fully specified by the standard); integers are mapped from raw engine
/// output by modulo, so streams match across standard library vendors.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Random degree-m form in n variables; coefficients are integers (or
    /// Gaussian integers) with parts in [-bound, bound]. Never zero.
    HomPoly random_form(std::size_t n, unsigned m, long bound = 5, bool complex_coeffs = false);

    /// Random nonzero harmonic form: the s = 0 Gauss component of random forms.
    /// Requires n >= 2 or m <= 1.
    HomPoly random_harmonic(std::size_t n, unsigned m, bool complex_coeffs = false);

private:
    std::mt19937_64 engine_;
};

}  // namespace fcauchy
