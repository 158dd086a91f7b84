#pragma once

// End-to-end certificates for pairs (r, s) with s = G(r) = 2r(1-r) and
// r = F(s), where both F and G are partition polynomials (so r and s are
// binomially equivalent) and 1/r is provably not an algebraic integer.

#include "cantorlab/algnum.hpp"
#include "cantorlab/intpoly.hpp"
#include "cantorlab/partition.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cantorlab {

struct SweepViolation {
    std::size_t m;
    PartitionForm k;
};

/// Result of checking that r_minpoly divides none of
/// D(X) = (1-X)^m - 2 K(2X(1-X)) for m <= max_m and K at level max_level.
/// Forms of lower levels are covered by their elevations to max_level.
struct SweepReport {
    std::size_t max_m = 0;
    std::size_t max_level = 0;
    std::uint64_t forms_checked = 0; // distinct K
    std::uint64_t pairs_checked = 0; // (m, K) pairs
    std::uint64_t violations = 0;
    std::vector<SweepViolation> first_violations; // at most a handful

    friend bool operator==(const SweepReport& a, const SweepReport& b)
    {
        return a.max_m == b.max_m && a.max_level == b.max_level &&
               a.forms_checked == b.forms_checked && a.violations == b.violations;
    }
};

struct Certificate {
    IntPoly f;
    PartitionForm f_form;
    IntPoly g;
    PartitionForm g_form;
    Integer p;
    IntPoly r_minpoly;  // primitive, positive leading coefficient
    IntPoly alpha_poly; // reverse of r_minpoly, sign-normalised
    EisensteinWitness eisenstein;
    RationalInterval r_interval;
    RationalInterval s_interval;
    SweepReport obstruction_sweep;
    int version = 1;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Names the pipeline stage that rejected a candidate.
class CertificationError : public Error {
public:
    CertificationError(std::string stage, const std::string& message)
        : Error(stage + ": " + message), stage_(std::move(stage))
    {
    }
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

struct FConditions {
    bool no_constant_term = false;
    bool nonzero_linear_term = false;
    bool prime_divides_exactly_once = false; // p | every coefficient, p^2 not | all of them
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Throws if p is 2 or not prime.
FConditions check_f_conditions(const IntPoly& f, const Integer& p);

struct BuildOptions {
    std::size_t max_level = 64;
    Rational width = inverse_power_of_ten(30);
    std::size_t sweep_max_m = 4;
    std::size_t sweep_max_level = 5;
};

/// First strict sign change of poly on the grid k/64, k = 1..63, or an exact
/// point if a grid value vanishes first. nullopt when neither occurs.
std::optional<RationalInterval> grid_bracket(const IntPoly& poly);

/// Throws CertificationError naming the failing stage.
Certificate build_certificate(const IntPoly& f, const Integer& p, const BuildOptions& options = {});

SweepReport obstruction_sweep(const IntPoly& r_minpoly, std::size_t max_m, std::size_t max_level);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

struct VerifyOptions {
    bool recheck_sweep = true;
};

/// Re-derives every certificate invariant from the raw data. Shares nothing
/// with the builder except the IntPoly primitives.
VerificationReport verify_certificate(const Certificate& c, const VerifyOptions& options = {});

struct SkippedCandidate {
    IntPoly f;
    std::string stage;
    std::string message;
};

struct SearchOptions {
    std::size_t max_degree = 2;
    Integer coeff_bound = 3;
    BuildOptions build;
};

struct SearchResult {
    std::vector<Certificate> certificates;
    std::vector<SkippedCandidate> skipped;
};

/// Candidate F(X) = c_1 X + ... + c_d X^d, d = 1..max_degree, c_d != 0, with
/// coefficients in [-bound, bound] enumerated in lexicographic order (c_1
/// slowest). Candidates failing the cheap filters are silently dropped;
/// those that reach build_certificate and fail are reported as skipped.
SearchResult search_family(const Integer& p, const SearchOptions& options,
                           const std::function<void(const Certificate&)>& on_certificate = {},
                           const std::function<void(const SkippedCandidate&)>& on_skip = {});

/// F = 3X(1-X)^2 + 3X^2(1-X), p = 3.
IntPoly paper_f();

} // namespace cantorlab
