#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cw/moduli.hpp"

namespace cw {

struct CheckRow {
    std::string name;
    bool pass = false;
    std::string mode;  // "exact" or "float(tol)"
    std::string detail;
};

/// Full invariant suite for one parameter point. The susy row passes when the
/// computed outcome matches the locus prediction a_+ = -3 a_+', so an
/// off-locus point reports an expected negative, not a failure.
std::vector<CheckRow> run_verify_suite(const CWParams& p, double tol, std::uint64_t seed);

/// Uniform random rational with |numerator| <= max_num, denominator in
/// [1, max_den].
Rational random_rational(std::mt19937_64& rng, long max_num = 6, long max_den = 4);

/// Random parameter vector; when `generic` is set, re-draws until B is
/// nondegenerate and the four defining linear forms are pairwise distinct in
/// absolute value (so the eigenvalue blocks are exactly {1,2},{3,4},{5},{6..9}).
CWParams random_params(std::mt19937_64& rng, bool generic = true);

}  // namespace cw
