#pragma once

// Certification of algebraic facts about the roots of integer polynomials:
// irreducibility (Eisenstein, or the rational-root test up to degree 3),
// failure to be an algebraic integer, isolation of real roots by exact
// bisection, and the monic beta = (1-t)/t equations that a partition identity
// would force.

#include "cantorlab/intpoly.hpp"
#include "cantorlab/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cantorlab {

class RationalInterval {
public:
    /// lo < hi, or lo == hi for an exactly known point.
    RationalInterval(Rational lo, Rational hi);
    static RationalInterval point(const Rational& x) { return {x, x}; }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool exact() const { return lo_ == hi_; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    /// Strict containment in the open interval (a, b).
    bool inside_open(const Rational& a, const Rational& b) const { return a < lo_ && hi_ < b; }

    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

private:
    Rational lo_;
    Rational hi_;
};

/// Deterministic Miller-Rabin with the first 13 prime bases. Throws for
/// arguments at or beyond 3.3e24, where that base set is no longer proven.
bool is_prime(const Integer& n);

struct EisensteinWitness {
    IntPoly poly;
    Integer prime;

    friend bool operator==(const EisensteinWitness&, const EisensteinWitness&) = default;
};

/// Witness iff p divides every non-leading coefficient, not the leading one,
/// and p^2 does not divide the constant term. Throws if deg P < 1 or p is not
/// prime.
std::optional<EisensteinWitness> eisenstein_check(const IntPoly& p, const Integer& prime);

/// Distinct rational roots, by the rational-root test on the primitive part.
/// Throws if a coefficient needed for divisor enumeration exceeds 10^12.
std::vector<Rational> rational_roots(const IntPoly& p);

/// Irreducibility over Q for degree <= 3 (no rational root); nullopt above.
std::optional<bool> irreducible_low_degree(const IntPoly& p);

enum class IrreducibilityEvidence { eisenstein, linear, no_rational_root };

struct NonIntegralityCertificate {
    IntPoly poly;
    IrreducibilityEvidence evidence;
    std::optional<EisensteinWitness> witness;
};

struct NonIntegrality {
    std::optional<NonIntegralityCertificate> certificate;
    std::string reason; // why the check was inconclusive
};

/// Certifies that no root of the primitive polynomial P is an algebraic
/// integer: P irreducible and |leading| != 1. Irreducibility comes from the
/// witness when given, else from the degree-1 or degree <= 3 shortcuts.
/// Throws if P is not primitive or the witness is for another polynomial.
NonIntegrality not_algebraic_integer(const IntPoly& p,
                                     const std::optional<EisensteinWitness>& witness);

/// -1, 0 or +1.
int sign_at(const IntPoly& p, const Rational& x);

/// Exact bisection down to width, keeping a strict sign change. Stops early
/// with an exact point interval if a midpoint is a root. Throws if P is not
/// squarefree, width <= 0, or the bracket has no strict sign change.
RationalInterval isolate_root(const IntPoly& p, const RationalInterval& bracket,
                              const Rational& width);

/// Conservative enclosure of P over I by interval Horner evaluation.
RationalInterval interval_eval(const IntPoly& p, const RationalInterval& i);

/// Exact image of I under G when G' provably keeps one sign on I. Throws
/// otherwise, asking for a narrower interval.
RationalInterval interval_image(const IntPoly& g, const RationalInterval& i);

/// Image of t in I, 0 < I, under t -> (1-t)/t.
RationalInterval beta_interval(const RationalInterval& t);

/// Monic equation in beta = (1-t)/t implied by expand(f)(t) = num/den:
/// sum_i (den*a_i - num*C(n,i)) beta^(n-i), sign-normalised. Throws when the
/// leading coefficient den*a_0 - num is not +-1.
IntPoly beta_equation(const PartitionForm& f, const Integer& num, const Integer& den);

/// Monic equation in beta = (1-r)/r implied by (1-r)^m = 2 K(2r(1-r)).
/// Writes K(2X(1-X)) in partition form (bounded by max_level), lifts both
/// sides to a common level L, divides by r^L, and fixes the sign so that the
/// beta^L coefficient 1 - 2c_0 becomes 1. Throws if no form is found.
IntPoly theorem_beta_equation(std::size_t m, const PartitionForm& k, std::size_t max_level);

/// 2X - 2X^2.
IntPoly paper_g();

} // namespace cantorlab
