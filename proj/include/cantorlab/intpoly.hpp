#pragma once

// Exact univariate polynomials over the integers.
//
// Coefficients are stored ascending by power (coeffs()[j] multiplies X^j) and
// are always canonical: no trailing zero coefficient is ever observable, and
// the zero polynomial has no coefficients at all.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cantorlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed input or violated preconditions. Normal mathematical
/// outcomes ("not representable", "criterion fails") are never reported this way.
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Integer binomial(std::size_t n, std::size_t k);

/// Builds a canonical rational num/den; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);
/// 10^-k.
Rational inverse_power_of_ten(unsigned k);

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly x();
    /// c * X^k
    static IntPoly monomial(const Integer& c, std::size_t k);

    std::span<const Integer> coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Empty for the zero polynomial.
    std::optional<std::size_t> degree() const;
    /// Coefficient of X^k; zero beyond the degree.
    Integer coeff(std::size_t k) const;
    const Integer& leading() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
    /// Orders by degree, then by coefficients from the top down. Used only to
    /// put polynomials into ordered containers.
    friend std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b);

private:
    void trim();
    std::vector<Integer> coeffs_;
};

IntPoly operator+(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p);
IntPoly operator*(const IntPoly& p, const IntPoly& q);
IntPoly operator*(const Integer& c, const IntPoly& p);

/// c1*P + c2*Q.
IntPoly linear_combine(const Integer& c1, const IntPoly& p, const Integer& c2, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly pow(const IntPoly& p, std::size_t e);
/// P(Q(X)), by Horner's scheme over polynomials.
IntPoly compose(const IntPoly& p, const IntPoly& q);
Rational eval(const IntPoly& p, const Rational& x);
Integer eval(const IntPoly& p, const Integer& x);
IntPoly derivative(const IntPoly& p);

/// Reverses the coefficient sequence, so that reverse(P)(1/r) = 0 whenever
/// P(r) = 0 and r != 0. Throws if P(0) = 0 (divide out X first).
IntPoly reverse(const IntPoly& p);
/// P / X^k; throws unless the k lowest coefficients vanish.
IntPoly divide_out_x(const IntPoly& p, std::size_t k);

/// Quotient Q with P = D*Q when it exists in Z[X]. Division runs over the
/// rationals; a zero remainder with a non-integral quotient is reported as
/// not dividing. For primitive D the two notions coincide (Gauss's lemma).
/// Throws if D = 0.
std::optional<IntPoly> exact_divides(const IntPoly& d, const IntPoly& p);
/// True iff D divides P in Q[X]. Throws if D = 0.
bool divides_over_rationals(const IntPoly& d, const IntPoly& p);

struct ContentSplit {
    Integer content;   // gcd of |coefficients|, > 0
    int sign;          // +1 or -1
    IntPoly primitive; // positive leading coefficient
};
/// P = sign * content * primitive. Throws on the zero polynomial.
ContentSplit content_primitive(const IntPoly& p);
bool is_primitive(const IntPoly& p);

/// Monic gcd over the rationals, scaled back to a primitive integer polynomial
/// with positive leading coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& p, const IntPoly& q);
/// True iff gcd(P, P') is constant. Throws on the zero polynomial.
bool squarefree_check(const IntPoly& p);

/// Descending powers, explicit signs, lowercase x: "12x^3 - 24x^2 + 18x - 5".
std::string to_string(const IntPoly& p);
std::string to_string(const Rational& q);

} // namespace cantorlab
