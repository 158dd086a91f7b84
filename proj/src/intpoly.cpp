#include "cantorlab/intpoly.hpp"

#include <algorithm>
#include <utility>

namespace cantorlab {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

RatPoly to_rat(const IntPoly& p)
{
    RatPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.emplace_back(c);
    return out;
}

// Long division over Q; returns {quotient, remainder}.
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den)
{
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size())
        return {RatPoly{}, std::move(num)};
    RatPoly quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        if (num[i] == 0)
            continue;
        Rational f = num[i] / den.back();
        quot[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j)
            num[i - dd + j] -= f * den[j];
    }
    trim(num);
    trim(quot);
    return {std::move(quot), std::move(num)};
}

// Scales a nonzero rational polynomial to a primitive integer polynomial with
// positive leading coefficient.
IntPoly primitive_of(const RatPoly& p)
{
    Integer lcm = 1;
    for (const auto& c : p)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> coeffs;
    coeffs.reserve(p.size());
    for (const auto& c : p) {
        Rational scaled = c * lcm;
        coeffs.push_back(scaled.get_num());
    }
    return content_primitive(IntPoly(std::move(coeffs))).primitive;
}

} // namespace

Integer binomial(std::size_t n, std::size_t k)
{
    Integer out;
    if (k > n)
        return out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational inverse_power_of_ten(unsigned k)
{
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, k);
    return make_rational(1, den);
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const Integer& c)
{
    return IntPoly(std::vector<Integer>{c});
}

IntPoly IntPoly::x()
{
    return IntPoly{0, 1};
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t k)
{
    std::vector<Integer> coeffs(k + 1);
    coeffs[k] = c;
    return IntPoly(std::move(coeffs));
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Integer IntPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

const Integer& IntPoly::leading() const
{
    if (coeffs_.empty())
        throw Error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b)
{
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0)
        return c;
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

IntPoly linear_combine(const Integer& c1, const IntPoly& p, const Integer& c2, const IntPoly& q)
{
    std::vector<Integer> out(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        out[i] += c1 * p.coeffs()[i];
    for (std::size_t i = 0; i < q.coeffs().size(); ++i)
        out[i] += c2 * q.coeffs()[i];
    return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) { return linear_combine(1, p, 1, q); }
IntPoly operator-(const IntPoly& p, const IntPoly& q) { return linear_combine(1, p, -1, q); }
IntPoly operator-(const IntPoly& p) { return linear_combine(-1, p, 0, IntPoly{}); }
IntPoly operator*(const IntPoly& p, const IntPoly& q) { return mul(p, q); }
IntPoly operator*(const Integer& c, const IntPoly& p) { return linear_combine(c, p, 0, IntPoly{}); }

IntPoly mul(const IntPoly& p, const IntPoly& q)
{
    if (p.is_zero() || q.is_zero())
        return {};
    const auto a = p.coeffs();
    const auto b = q.coeffs();
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly pow(const IntPoly& p, std::size_t e)
{
    IntPoly result = IntPoly::constant(1);
    IntPoly base = p;
    while (e > 0) {
        if (e & 1U)
            result = mul(result, base);
        e >>= 1U;
        if (e > 0)
            base = mul(base, base);
    }
    return result;
}

IntPoly compose(const IntPoly& p, const IntPoly& q)
{
    IntPoly out;
    const auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        out = mul(out, q) + IntPoly::constant(c[i]);
    return out;
}

Rational eval(const IntPoly& p, const Rational& x)
{
    Rational acc = 0;
    const auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x + c[i];
    return acc;
}

Integer eval(const IntPoly& p, const Integer& x)
{
    Integer acc = 0;
    const auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x + c[i];
    return acc;
}

IntPoly derivative(const IntPoly& p)
{
    const auto c = p.coeffs();
    if (c.size() <= 1)
        return {};
    std::vector<Integer> out(c.size() - 1);
    for (std::size_t j = 1; j < c.size(); ++j)
        out[j - 1] = c[j] * static_cast<unsigned long>(j);
    return IntPoly(std::move(out));
}

IntPoly reverse(const IntPoly& p)
{
    if (p.is_zero() || p.coeffs().front() == 0)
        throw Error("reverse: zero constant term (divide out X first)");
    std::vector<Integer> out(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(out));
}

IntPoly divide_out_x(const IntPoly& p, std::size_t k)
{
    const auto c = p.coeffs();
    for (std::size_t i = 0; i < k && i < c.size(); ++i) {
        if (c[i] != 0)
            throw Error("divide_out_x: coefficient of x^" + std::to_string(i) + " is nonzero");
    }
    if (c.size() <= k)
        return {};
    return IntPoly(std::vector<Integer>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

std::optional<IntPoly> exact_divides(const IntPoly& d, const IntPoly& p)
{
    if (d.is_zero())
        throw Error("exact_divides: zero divisor");
    auto [quot, rem] = divmod(to_rat(p), to_rat(d));
    if (!rem.empty())
        return std::nullopt;
    std::vector<Integer> coeffs;
    coeffs.reserve(quot.size());
    for (const auto& q : quot) {
        if (q.get_den() != 1)
            return std::nullopt;
        coeffs.push_back(q.get_num());
    }
    IntPoly result(std::move(coeffs));
    if (mul(d, result) != p)
        return std::nullopt;
    return result;
}

bool divides_over_rationals(const IntPoly& d, const IntPoly& p)
{
    if (d.is_zero())
        throw Error("divides_over_rationals: zero divisor");
    return divmod(to_rat(p), to_rat(d)).second.empty();
}

ContentSplit content_primitive(const IntPoly& p)
{
    if (p.is_zero())
        throw Error("content_primitive: zero polynomial");
    Integer g = 0;
    for (const auto& c : p.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    const int sign = sgn(p.leading()) < 0 ? -1 : 1;
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Integer q = c / g;
        out.push_back(sign < 0 ? Integer(-q) : q);
    }
    return {g, sign, IntPoly(std::move(out))};
}

bool is_primitive(const IntPoly& p)
{
    if (p.is_zero())
        return false;
    return content_primitive(p).content == 1;
}

IntPoly gcd(const IntPoly& p, const IntPoly& q)
{
    RatPoly a = to_rat(p);
    RatPoly b = to_rat(q);
    while (!b.empty()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty())
        return {};
    return primitive_of(a);
}

bool squarefree_check(const IntPoly& p)
{
    if (p.is_zero())
        throw Error("squarefree_check: zero polynomial");
    const IntPoly g = gcd(p, derivative(p));
    return g.degree().value_or(0) == 0;
}

std::string to_string(const IntPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    const auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0)
            continue;
        const bool negative = sgn(c[i]) < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Integer mag = abs(c[i]);
        if (mag != 1 || i == 0)
            out += mag.get_str();
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

} // namespace cantorlab
