// Independent re-check of a Certificate. Everything above the IntPoly
// primitives is recomputed here from scratch: form bounds and expansions,
// primality, Eisenstein's conditions, the sign change, the image interval and
// the obstruction sweep (via integer pseudo-remainders instead of rational
// division).

#include "cantorlab/certify.hpp"

#include <utility>

namespace cantorlab {

namespace {

bool prime_by_trial_division(const Integer& n)
{
    if (n < 2)
        return false;
    for (Integer d = 2; d * d <= n; ++d) {
        if (n % d == 0)
            return false;
    }
    return true;
}

bool form_ok(std::size_t n, std::span<const Integer> a)
{
    if (a.size() != n + 1)
        return false;
    for (std::size_t i = 0; i <= n; ++i) {
        Integer bound;
        mpz_bin_uiui(bound.get_mpz_t(), n, i);
        if (sgn(a[i]) < 0 || a[i] > bound)
            return false;
    }
    return true;
}

IntPoly sum_of_cylinders(std::size_t n, std::span<const Integer> a)
{
    const IntPoly one_minus_x{1, -1};
    IntPoly total;
    for (std::size_t i = 0; i < a.size(); ++i)
        total = total + a[i] * (pow(IntPoly::x(), i) * pow(one_minus_x, n - i));
    return total;
}

// Remainder of lead(d)^k * p modulo d, over the integers.
IntPoly pseudo_remainder(IntPoly p, const IntPoly& d)
{
    const std::size_t dd = *d.degree();
    const Integer lead = d.leading();
    while (!p.is_zero() && *p.degree() >= dd) {
        const std::size_t shift = *p.degree() - dd;
        p = linear_combine(lead, p, -p.leading(), mul(IntPoly::monomial(1, shift), d));
    }
    return p;
}

void odometer(std::vector<Integer>& a, std::size_t n, bool& done)
{
    std::size_t i = n + 1;
    while (i-- > 0) {
        Integer bound;
        mpz_bin_uiui(bound.get_mpz_t(), n, i);
        if (a[i] < bound) {
            ++a[i];
            return;
        }
        a[i] = 0;
    }
    done = true;
}

struct Recorder {
    VerificationReport& report;
    void operator()(std::string name, bool ok, std::string detail = {}) const
    {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

} // namespace

bool VerificationReport::passed() const
{
    for (const auto& c : checks) {
        if (!c.passed)
            return false;
    }
    return !checks.empty();
}

VerificationReport verify_certificate(const Certificate& c, const VerifyOptions& options)
{
    VerificationReport report;
    Recorder check{report};
    const IntPoly x = IntPoly::x();

    check("version", c.version == 1, "version " + std::to_string(c.version));
    check("G is 2x - 2x^2", c.g == IntPoly{0, 2, -2}, to_string(c.g));

    const bool f_form_ok = form_ok(c.f_form.level(), c.f_form.coeffs());
    check("F form within bounds", f_form_ok);
    check("F form expands to F",
          f_form_ok && sum_of_cylinders(c.f_form.level(), c.f_form.coeffs()) == c.f);
    const bool g_form_ok = form_ok(c.g_form.level(), c.g_form.coeffs());
    check("G form within bounds", g_form_ok);
    check("G form expands to G",
          g_form_ok && sum_of_cylinders(c.g_form.level(), c.g_form.coeffs()) == c.g);
    check("F has no constant term", c.f.coeff(0) == 0);

    const bool p_ok = c.p != 2 && prime_by_trial_division(c.p);
    check("p is an odd prime", p_ok, c.p.get_str());

    const IntPoly& r = c.r_minpoly;
    bool r_shape = !r.is_zero() && r.degree().value_or(0) >= 1 && sgn(r.leading()) > 0;
    if (r_shape) {
        Integer g = 0;
        for (const auto& coeff : r.coeffs())
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coeff.get_mpz_t());
        r_shape = g == 1;
    }
    check("r_minpoly primitive with positive leading coefficient", r_shape, to_string(r));

    // (F(G(X)) - X) / X must be a nonzero integer multiple of r_minpoly.
    bool divides = false;
    const IntPoly h = compose(c.f, c.g) - x;
    if (r_shape && h.coeff(0) == 0) {
        const IntPoly reduced = divide_out_x(h, 1);
        const auto quotient = exact_divides(r, reduced);
        divides = quotient && quotient->degree() == std::size_t{0};
    }
    check("r_minpoly divides (F(G(x)) - x)/x up to a constant", divides);

    bool reversed = false;
    if (r_shape && r.coeff(0) != 0) {
        std::vector<Integer> rev(r.coeffs().rbegin(), r.coeffs().rend());
        const IntPoly reversal(std::move(rev));
        reversed = c.alpha_poly == reversal || c.alpha_poly == -reversal;
    }
    check("alpha_poly is the reversal of r_minpoly", reversed, to_string(c.alpha_poly));

    const auto& a = c.alpha_poly;
    bool eisenstein = c.eisenstein.prime == c.p && c.eisenstein.poly == a && p_ok &&
                      a.degree().value_or(0) >= 1;
    if (eisenstein) {
        const auto coeffs = a.coeffs();
        for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
            eisenstein = eisenstein && coeffs[i] % c.p == 0;
        eisenstein = eisenstein && coeffs.back() % c.p != 0;
        eisenstein = eisenstein && coeffs.front() % (c.p * c.p) != 0;
    }
    check("Eisenstein criterion at p on alpha_poly", eisenstein);
    check("alpha_poly leading coefficient is not +-1", !a.is_zero() && abs(a.leading()) != 1,
          a.is_zero() ? "zero" : a.leading().get_str());

    const auto& ri = c.r_interval;
    const bool inside = ri.inside_open(0, 1);
    bool sign_change = false;
    if (ri.exact()) {
        sign_change = eval(r, ri.lo()) == 0;
    } else {
        const int lo = sgn(eval(r, ri.lo()));
        const int hi = sgn(eval(r, ri.hi()));
        sign_change = lo != 0 && hi != 0 && lo != hi;
    }
    check("r_interval inside (0, 1)", inside);
    check("r_minpoly changes sign on r_interval", sign_change,
          "[" + ri.lo().get_str() + ", " + ri.hi().get_str() + "]");

    // G is monotone on any interval avoiding 1/2, so its image is spanned by
    // the endpoint values.
    const Rational half(1, 2);
    const bool monotone = ri.hi() < half || ri.lo() > half;
    bool image = false;
    if (monotone) {
        Rational ga = eval(c.g, ri.lo());
        Rational gb = eval(c.g, ri.hi());
        if (ga > gb)
            std::swap(ga, gb);
        image = c.s_interval.lo() == ga && c.s_interval.hi() == gb;
    }
    check("s_interval is the image of r_interval under G", image);
    check("s_interval inside (0, 1)", c.s_interval.inside_open(0, 1));

    const auto& sweep = c.obstruction_sweep;
    check("obstruction sweep reports no violations", sweep.violations == 0,
          std::to_string(sweep.violations) + " violations over " +
              std::to_string(sweep.forms_checked) + " forms");

    if (options.recheck_sweep && r_shape) {
        std::uint64_t forms = 0;
        std::uint64_t violations = 0;
        const std::size_t n = sweep.max_level;
        std::vector<IntPoly> left;
        for (std::size_t m = 0; m <= sweep.max_m; ++m)
            left.push_back(pow(IntPoly{1, -1}, m));
        std::vector<Integer> k(n + 1);
        bool done = false;
        while (!done) {
            ++forms;
            const IntPoly kg = compose(sum_of_cylinders(n, k), c.g);
            for (const auto& l : left) {
                if (pseudo_remainder(l - Integer(2) * kg, r).is_zero())
                    ++violations;
            }
            odometer(k, n, done);
        }
        check("obstruction sweep recomputed", violations == 0 && forms == sweep.forms_checked,
              std::to_string(violations) + " violations over " + std::to_string(forms) + " forms");
    }
    return report;
}

} // namespace cantorlab
