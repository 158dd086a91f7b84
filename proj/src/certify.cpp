#include "cantorlab/certify.hpp"

#include <cassert>
#include <utility>

namespace cantorlab {

namespace {

constexpr std::size_t kept_violations = 8;

void require_odd_prime(const Integer& p)
{
    if (p == 2)
        throw Error("p must be an odd prime, got 2");
    if (!is_prime(p))
        throw Error(p.get_str() + " is not prime");
}

PartitionForm form_within(const IntPoly& poly, std::size_t max_level, const char* name)
{
    const LevelSearch d = depth(poly, max_level);
    if (!d.found())
        throw CertificationError("partition-form", std::string(name) + " = " + to_string(poly) +
                                                       " has no partition form: " + d.reason);
    return *to_form(poly, d.level);
}

} // namespace

IntPoly paper_f()
{
    // 3X(1-X)^2 + 3X^2(1-X) = 3X - 3X^2
    return IntPoly{0, 3, -3};
}

FConditions check_f_conditions(const IntPoly& f, const Integer& p)
{
    require_odd_prime(p);
    FConditions out;
    out.no_constant_term = f.coeff(0) == 0;
    if (!out.no_constant_term)
        out.failures.push_back("constant term " + f.coeff(0).get_str() + " is nonzero");
    out.nonzero_linear_term = f.coeff(1) != 0;
    if (!out.nonzero_linear_term)
        out.failures.push_back("linear term is zero");

    bool all_divisible = !f.is_zero();
    bool all_divisible_sq = true;
    const Integer p2 = p * p;
    for (const auto& c : f.coeffs()) {
        all_divisible = all_divisible && c % p == 0;
        all_divisible_sq = all_divisible_sq && c % p2 == 0;
    }
    out.prime_divides_exactly_once = all_divisible && !all_divisible_sq;
    if (!all_divisible)
        out.failures.push_back(p.get_str() + " does not divide every coefficient");
    else if (all_divisible_sq)
        out.failures.push_back(p2.get_str() + " divides every coefficient");
    return out;
}

std::optional<RationalInterval> grid_bracket(const IntPoly& poly)
{
    constexpr long steps = 64;
    int previous = 0;
    Rational previous_x;
    for (long k = 1; k < steps; ++k) {
        const Rational x = make_rational(k, steps);
        const int s = sign_at(poly, x);
        if (s == 0)
            return RationalInterval::point(x);
        if (previous != 0 && s != previous)
            return RationalInterval(previous_x, x);
        previous = s;
        previous_x = x;
    }
    return std::nullopt;
}

Certificate build_certificate(const IntPoly& f, const Integer& p, const BuildOptions& options)
{
    const FConditions conditions = check_f_conditions(f, p);
    if (!conditions.passed()) {
        std::string joined;
        for (const auto& why : conditions.failures)
            joined += (joined.empty() ? "" : "; ") + why;
        throw CertificationError("conditions", joined);
    }

    const IntPoly g = paper_g();
    PartitionForm f_form = form_within(f, options.max_level, "F");
    PartitionForm g_form = form_within(g, options.max_level, "G");

    // H = F(G(X)) - X vanishes at 0; its linear coefficient is 2 f_1 - 1, odd.
    const IntPoly h = compose(f, g) - IntPoly::x();
    assert(h.coeff(0) == 0);
    assert(h.coeff(1) != 0);
    const IntPoly reduced = divide_out_x(h, 1);
    if (reduced.degree().value_or(0) < 1)
        throw CertificationError("minimal-polynomial", "F(G(X)) - X has no nonzero root");
    IntPoly r_minpoly = content_primitive(reduced).primitive;
    IntPoly alpha_poly = content_primitive(reverse(r_minpoly)).primitive;

    auto witness = eisenstein_check(alpha_poly, p);
    if (!witness)
        throw CertificationError("eisenstein", "Eisenstein fails at " + p.get_str() + " on " +
                                                   to_string(alpha_poly) +
                                                   " despite the conditions on F");
    const NonIntegrality integrality = not_algebraic_integer(alpha_poly, witness);
    if (!integrality.certificate)
        throw CertificationError("algebraic-integer", integrality.reason);

    if (!squarefree_check(r_minpoly))
        throw CertificationError("squarefree", to_string(r_minpoly) + " has a repeated factor");

    const auto bracket = grid_bracket(r_minpoly);
    if (!bracket)
        throw CertificationError("bracket", "no sign change of " + to_string(r_minpoly) +
                                                " on the grid k/64");
    RationalInterval r_interval =
        bracket->exact() ? *bracket : isolate_root(r_minpoly, *bracket, options.width);

    const Rational half(1, 2);
    if (r_interval.contains(half))
        throw CertificationError("root-isolation", "r interval still contains 1/2");
    RationalInterval s_interval = interval_image(g, r_interval);
    if (!s_interval.inside_open(0, 1))
        throw CertificationError("root-isolation", "s interval leaves (0, 1)");

    SweepReport sweep = obstruction_sweep(r_minpoly, options.sweep_max_m, options.sweep_max_level);
    if (sweep.violations != 0)
        throw CertificationError("obstruction", std::to_string(sweep.violations) +
                                                    " forms K make the impossible identity hold");

    return Certificate{f,
                       std::move(f_form),
                       g,
                       std::move(g_form),
                       p,
                       std::move(r_minpoly),
                       std::move(alpha_poly),
                       std::move(*witness),
                       std::move(r_interval),
                       std::move(s_interval),
                       std::move(sweep),
                       1};
}

SweepReport obstruction_sweep(const IntPoly& r_minpoly, std::size_t max_m, std::size_t max_level)
{
    if (r_minpoly.degree().value_or(0) < 1 || !is_primitive(r_minpoly) ||
        sgn(r_minpoly.leading()) < 0)
        throw Error("obstruction_sweep: r_minpoly must be primitive with positive leading "
                    "coefficient and degree >= 1");

    std::vector<IntPoly> left(max_m + 1);
    for (std::size_t m = 0; m <= max_m; ++m)
        left[m] = pow(IntPoly{1, -1}, m);

    SweepReport report;
    report.max_m = max_m;
    report.max_level = max_level;
    const IntPoly g = paper_g();
    for (const PartitionForm& k : all_forms(max_level)) {
        const IntPoly twice_kg = Integer(2) * compose(expand(k), g);
        ++report.forms_checked;
        for (std::size_t m = 0; m <= max_m; ++m) {
            ++report.pairs_checked;
            if (exact_divides(r_minpoly, left[m] - twice_kg)) {
                ++report.violations;
                if (report.first_violations.size() < kept_violations)
                    report.first_violations.push_back({m, k});
            }
        }
    }
    return report;
}

SearchResult search_family(const Integer& p, const SearchOptions& options,
                           const std::function<void(const Certificate&)>& on_certificate,
                           const std::function<void(const SkippedCandidate&)>& on_skip)
{
    require_odd_prime(p);
    if (sgn(options.coeff_bound) < 0)
        throw Error("search_family: coefficient bound must be non-negative");
    SearchResult result;
    const IntPoly g = paper_g();
    const Integer& bound = options.coeff_bound;

    for (std::size_t degree = 1; degree <= options.max_degree; ++degree) {
        // coeffs[0] is c_1; odometer with c_1 slowest.
        std::vector<Integer> coeffs(degree, -bound);
        while (true) {
            if (coeffs.back() != 0) {
                std::vector<Integer> full{0};
                full.insert(full.end(), coeffs.begin(), coeffs.end());
                const IntPoly f(std::move(full));
                const bool candidate = check_f_conditions(f, p).passed() &&
                                       depth(f, options.build.max_level).found() &&
                                       grid_bracket(compose(f, g) - IntPoly::x()).has_value();
                if (candidate) {
                    try {
                        Certificate cert = build_certificate(f, p, options.build);
                        if (on_certificate)
                            on_certificate(cert);
                        result.certificates.push_back(std::move(cert));
                    } catch (const CertificationError& e) {
                        SkippedCandidate skip{f, e.stage(), e.what()};
                        if (on_skip)
                            on_skip(skip);
                        result.skipped.push_back(std::move(skip));
                    }
                }
            }
            std::size_t i = degree;
            while (i-- > 0) {
                if (coeffs[i] < bound) {
                    ++coeffs[i];
                    break;
                }
                coeffs[i] = -bound;
            }
            if (i == static_cast<std::size_t>(-1))
                break;
        }
    }
    return result;
}

} // namespace cantorlab
