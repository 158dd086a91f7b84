#pragma once

// Partition forms: P(X) = sum_i a_i X^i (1-X)^(n-i) with 0 <= a_i <= C(n, i).
//
// a_i / C(n, i) are the Bernstein coefficients of P at degree n, so a form is
// valid exactly when those coefficients lie in [0, 1]. Whether an integer
// polynomial admits a form at *some* level is only semi-decided here: every
// search takes an explicit level bound and reports "unknown" when it runs out.

#include "cantorlab/intpoly.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cantorlab {

class PartitionForm {
public:
    /// Throws unless a has n+1 entries with 0 <= a_i <= C(n, i).
    PartitionForm(std::size_t n, std::vector<Integer> a);

    std::size_t level() const { return n_; }
    std::span<const Integer> coeffs() const { return a_; }
    const Integer& operator[](std::size_t i) const { return a_[i]; }

    friend bool operator==(const PartitionForm&, const PartitionForm&) = default;

private:
    std::size_t n_;
    std::vector<Integer> a_;
};

/// True iff a has n+1 entries within [0, C(n, i)].
bool is_valid_form(std::size_t n, std::span<const Integer> a);

/// The unique coefficients of P in the basis X^i(1-X)^(n-i), with no bound
/// check: a_i = sum_{j<=i} c_j C(n-j, i-j). Throws if n < deg P.
std::vector<Integer> basis_coefficients(const IntPoly& p, std::size_t n);

/// The partition form of P at level n, or nullopt when some coefficient falls
/// outside its bound. Throws if n < deg P.
std::optional<PartitionForm> to_form(const IntPoly& p, std::size_t n);

IntPoly expand(const PartitionForm& f);

/// The same polynomial at level n+1: a'_i = a_i + a_{i-1}.
PartitionForm elevate(const PartitionForm& f);
PartitionForm elevate_to(const PartitionForm& f, std::size_t n);

/// Outcome of a bounded level search.
enum class SearchStatus {
    found,      // level holds the least level found
    impossible, // proven: no level can ever succeed
    unknown,    // nothing found up to the bound
};

struct LevelSearch {
    SearchStatus status;
    std::size_t level = 0; // meaningful when status == found
    std::string reason;    // set for impossible / unknown

    bool found() const { return status == SearchStatus::found; }
};

/// Least n <= max_level with a valid form. Level-invariant obstructions
/// (a_0 = P(0) and a_n = P(1) must lie in {0, 1}) are reported as impossible.
LevelSearch depth(const IntPoly& p, std::size_t max_level);

/// Least common level n <= max_level with forms a of P and b of Q satisfying
/// b_i <= a_i. Q(0) > P(0) or Q(1) > P(1) is a proof that none exists.
LevelSearch dominates(const IntPoly& p, const IntPoly& q, std::size_t max_level);

struct FactorOutX {
    SearchStatus status;
    std::optional<IntPoly> cofactor; // P / X, set when status == found
    std::size_t level = 0;           // depth of the cofactor when found
    std::string reason;
};

/// P is dominated by X iff P = X * P1 with P1 a partition polynomial.
FactorOutX factor_out_x(const IntPoly& p, std::size_t max_level);

/// A partition form of P(Q(X)) found by bounded search. Throws with
/// diagnostics if none exists up to max_level.
PartitionForm compose_form(const IntPoly& p, const IntPoly& q, std::size_t max_level);

/// Every valid form at level n in odometer order (a_0 slowest). Count is
/// prod_i (C(n, i) + 1).
std::vector<PartitionForm> all_forms(std::size_t n);
Integer form_count(std::size_t n);

/// 64, or the value of CANTORLAB_MAX_LEVEL when set.
std::size_t default_max_level();
/// max(2 * (deg P + deg Q), default_max_level()).
std::size_t default_pair_level(const IntPoly& p, const IntPoly& q);

std::string to_string(const PartitionForm& f);

} // namespace cantorlab
