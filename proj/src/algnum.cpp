#include "cantorlab/algnum.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace cantorlab {

namespace {

const Integer& miller_rabin_limit()
{
    static const Integer limit("3317044064679887385961981");
    return limit;
}

// Positive divisors of |n|, n != 0, by trial division.
std::vector<Integer> divisors(const Integer& n)
{
    static const Integer cap("1000000000000");
    Integer v = abs(n);
    if (v > cap)
        throw Error("divisor enumeration of " + v.get_str() + " is out of range");
    std::vector<std::pair<Integer, unsigned>> factors;
    for (Integer d = 2; d * d <= v; ++d) {
        unsigned e = 0;
        while (v % d == 0) {
            v /= d;
            ++e;
        }
        if (e > 0)
            factors.emplace_back(d, e);
    }
    if (v > 1)
        factors.emplace_back(v, 1U);
    std::vector<Integer> out{1};
    for (const auto& [prime, e] : factors) {
        const std::size_t before = out.size();
        Integer power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= prime;
            for (std::size_t i = 0; i < before; ++i)
                out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RationalInterval interval_mul(const RationalInterval& a, const RationalInterval& b)
{
    std::array<Rational, 4> p{a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return {*mn, *mx};
}

} // namespace

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_ > hi_)
        throw Error("interval with lo " + lo_.get_str() + " > hi " + hi_.get_str());
}

bool is_prime(const Integer& n)
{
    if (n >= miller_rabin_limit())
        throw Error("primality of " + n.get_str() + " is beyond the deterministic range");
    if (n < 2)
        return false;
    static const std::array<unsigned long, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long b : bases) {
        if (n == b)
            return true;
        if (n % b == 0)
            return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    const Integer n_minus_1 = n - 1;
    for (unsigned long b : bases) {
        Integer x;
        const Integer base(b);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::optional<EisensteinWitness> eisenstein_check(const IntPoly& p, const Integer& prime)
{
    if (p.degree().value_or(0) < 1)
        throw Error("eisenstein_check: degree must be at least 1");
    if (!is_prime(prime))
        throw Error("eisenstein_check: " + prime.get_str() + " is not prime");
    const auto c = p.coeffs();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (c[i] % prime != 0)
            return std::nullopt;
    }
    if (c.back() % prime == 0)
        return std::nullopt;
    if (c.front() % (prime * prime) == 0)
        return std::nullopt;
    return EisensteinWitness{p, prime};
}

std::vector<Rational> rational_roots(const IntPoly& p)
{
    if (p.is_zero())
        throw Error("rational_roots: zero polynomial");
    // Strip the factor X^k first so the constant term is nonzero.
    std::size_t k = 0;
    while (p.coeff(k) == 0)
        ++k;
    const IntPoly q = content_primitive(divide_out_x(p, k)).primitive;
    std::vector<Rational> out;
    if (k > 0)
        out.emplace_back(0);
    if (q.degree().value_or(0) == 0)
        return out;
    for (const auto& num : divisors(q.coeff(0))) {
        for (const auto& den : divisors(q.leading())) {
            for (int s : {1, -1}) {
                Rational cand = make_rational(s * num, den);
                if (eval(q, cand) == 0 && std::find(out.begin(), out.end(), cand) == out.end())
                    out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<bool> irreducible_low_degree(const IntPoly& p)
{
    const std::size_t deg = p.degree().value_or(0);
    if (deg < 1)
        throw Error("irreducible_low_degree: degree must be at least 1");
    if (deg > 3)
        return std::nullopt;
    if (deg == 1)
        return true;
    return rational_roots(p).empty();
}

NonIntegrality not_algebraic_integer(const IntPoly& p,
                                     const std::optional<EisensteinWitness>& witness)
{
    if (!is_primitive(p))
        throw Error("not_algebraic_integer: polynomial must be primitive");
    if (witness && witness->poly != p)
        throw Error("not_algebraic_integer: witness is for a different polynomial");
    if (abs(p.leading()) == 1)
        return {std::nullopt, "inconclusive: leading coefficient is +-1, root may be an algebraic integer"};

    if (witness) {
        if (!eisenstein_check(p, witness->prime))
            throw Error("not_algebraic_integer: witness does not satisfy Eisenstein's criterion");
        return {NonIntegralityCertificate{p, IrreducibilityEvidence::eisenstein, witness}, {}};
    }
    const std::size_t deg = p.degree().value_or(0);
    if (deg == 1)
        return {NonIntegralityCertificate{p, IrreducibilityEvidence::linear, std::nullopt}, {}};
    auto irreducible = irreducible_low_degree(p);
    if (!irreducible)
        return {std::nullopt, "inconclusive: no Eisenstein witness and degree above 3"};
    if (!*irreducible)
        return {std::nullopt, "inconclusive: polynomial has a rational root"};
    return {NonIntegralityCertificate{p, IrreducibilityEvidence::no_rational_root, std::nullopt}, {}};
}

int sign_at(const IntPoly& p, const Rational& x)
{
    return sgn(eval(p, x));
}

RationalInterval isolate_root(const IntPoly& p, const RationalInterval& bracket,
                              const Rational& width)
{
    if (width <= 0)
        throw Error("isolate_root: width must be positive");
    if (!squarefree_check(p))
        throw Error("isolate_root: polynomial is not squarefree");
    Rational lo = bracket.lo();
    Rational hi = bracket.hi();
    const int s_lo = sign_at(p, lo);
    const int s_hi = sign_at(p, hi);
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi)
        throw Error("isolate_root: no certified sign change on [" + lo.get_str() + ", " +
                    hi.get_str() + "]");
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        const int s = sign_at(p, mid);
        if (s == 0)
            return RationalInterval::point(mid);
        if (s == s_lo)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    return {lo, hi};
}

RationalInterval interval_eval(const IntPoly& p, const RationalInterval& i)
{
    const auto c = p.coeffs();
    RationalInterval acc = RationalInterval::point(0);
    for (std::size_t k = c.size(); k-- > 0;) {
        RationalInterval prod = interval_mul(acc, i);
        acc = RationalInterval(prod.lo() + c[k], prod.hi() + c[k]);
    }
    return acc;
}

RationalInterval interval_image(const IntPoly& g, const RationalInterval& i)
{
    if (i.exact())
        return RationalInterval::point(eval(g, i.lo()));
    const IntPoly dg = derivative(g);
    if (dg.is_zero())
        return RationalInterval::point(g.coeff(0));
    const RationalInterval slope = interval_eval(dg, i);
    if (slope.lo() <= 0 && slope.hi() >= 0)
        throw Error("interval_image: monotonicity of " + to_string(g) + " not certified on [" +
                    i.lo().get_str() + ", " + i.hi().get_str() + "]; narrow the interval");
    Rational a = eval(g, i.lo());
    Rational b = eval(g, i.hi());
    if (a > b)
        std::swap(a, b);
    return {a, b};
}

RationalInterval beta_interval(const RationalInterval& t)
{
    if (t.lo() <= 0)
        throw Error("beta_interval: interval must be positive");
    Rational lo = (1 - t.hi()) / t.hi();
    Rational hi = (1 - t.lo()) / t.lo();
    return {lo, hi};
}

IntPoly beta_equation(const PartitionForm& f, const Integer& num, const Integer& den)
{
    const Rational target = make_rational(num, den);
    const Integer& q = target.get_den();
    const Integer& p = target.get_num();
    const std::size_t n = f.level();
    // Coefficient of beta^(n-i) is q*a_i - p*C(n,i).
    std::vector<Integer> beta(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        beta[n - i] = q * f[i] - p * binomial(n, i);
    const Integer lead = beta[n];
    if (abs(lead) != 1)
        throw Error("beta_equation: leading coefficient " + lead.get_str() +
                    " is not +-1, no monic equation for target " + target.get_str());
    IntPoly out(std::move(beta));
    return sgn(lead) < 0 ? -out : out;
}

IntPoly theorem_beta_equation(std::size_t m, const PartitionForm& k, std::size_t max_level)
{
    const PartitionForm composed = compose_form(expand(k), paper_g(), max_level);
    const std::size_t level = std::max(composed.level(), m);
    const PartitionForm rhs = elevate_to(composed, level);
    // (1-X)^m lifted to level L has a_i = C(L-m, i).
    std::vector<Integer> beta(level + 1);
    for (std::size_t i = 0; i <= level; ++i)
        beta[level - i] = binomial(level - m, i) - 2 * rhs[i];
    const Integer lead = beta[level];
    IntPoly out(std::move(beta));
    return sgn(lead) < 0 ? -out : out;
}

IntPoly paper_g()
{
    return IntPoly{0, 2, -2};
}

} // namespace cantorlab
