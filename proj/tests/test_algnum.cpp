#include "cantorlab/algnum.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace cantorlab;

namespace {

const IntPoly r_min{-5, 18, -24, 12};
const IntPoly alpha{-12, 24, -18, 5};

Rational q(long num, long den)
{
    return make_rational(num, den);
}

// Brute-force rational roots: every num/den with num | a_0, den | a_n.
bool has_rational_root(const IntPoly& p)
{
    const long a0 = p.coeff(0).get_si();
    const long an = p.leading().get_si();
    if (a0 == 0)
        return true;
    for (long num = 1; num <= std::abs(a0); ++num) {
        if (a0 % num != 0)
            continue;
        for (long den = 1; den <= std::abs(an); ++den) {
            if (an % den != 0)
                continue;
            for (long s : {1L, -1L}) {
                if (oracle::value(p, q(s * num, den)) == 0)
                    return true;
            }
        }
    }
    return false;
}

PartitionForm form(std::size_t n, std::initializer_list<long> v)
{
    return PartitionForm(n, std::vector<Integer>(v.begin(), v.end()));
}

} // namespace

TEST_CASE("is_prime")
{
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(Integer("3215031751"))); // strong pseudoprime to 2, 3, 5, 7
    CHECK(is_prime(Integer("1000000007")));
    CHECK(is_prime(Integer("2305843009213693951"))); // 2^61 - 1
    CHECK_FALSE(is_prime(Integer("3825123056546413051")));
    CHECK_THROWS_AS(is_prime(Integer("10000000000000000000000000")), Error);
    for (long n = 0; n < 2000; ++n) {
        bool brute = n >= 2;
        for (long d = 2; d * d <= n && brute; ++d)
            brute = n % d != 0;
        CHECK(is_prime(n) == brute);
    }
}

TEST_CASE("eisenstein_check")
{
    auto w = eisenstein_check(alpha, 3);
    REQUIRE(w);
    CHECK(w->prime == 3);
    CHECK(w->poly == alpha);
    CHECK(eisenstein_check(IntPoly{-2, 0, 1}, 2));
    CHECK_FALSE(eisenstein_check(IntPoly{-1, 0, 1}, 2));
    CHECK_FALSE(eisenstein_check(alpha, 5));
    CHECK_THROWS_AS(eisenstein_check(alpha, 4), Error);
    CHECK_THROWS_AS(eisenstein_check(IntPoly{3}, 3), Error);
}

TEST_CASE("Eisenstein witnesses are irreducible")
{
    oracle::Rng rng(0xe15e);
    int witnessed = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const long p = std::vector<long>{3, 5, 7}[static_cast<std::size_t>(rng.uniform(0, 2))];
        const auto deg = static_cast<std::size_t>(rng.uniform(2, 3));
        std::vector<Integer> c(deg + 1);
        for (std::size_t i = 0; i < deg; ++i)
            c[i] = p * rng.uniform(-4, 4);
        c[deg] = rng.uniform(-9, 9);
        const IntPoly poly(std::move(c));
        if (poly.degree() != deg || poly.coeff(0) == 0)
            continue;
        if (const auto w = eisenstein_check(poly, p)) {
            ++witnessed;
            CHECK_FALSE(has_rational_root(poly));
            CHECK(irreducible_low_degree(poly) == true);
        }
    }
    CHECK(witnessed > 100);
}

TEST_CASE("rational_roots")
{
    CHECK(rational_roots(IntPoly{-1, 2}) == std::vector<Rational>{q(1, 2)});
    CHECK(rational_roots(IntPoly{0, -1, 0, 1}) == std::vector<Rational>{-1, 0, 1});
    CHECK(rational_roots(r_min).empty());
    CHECK(irreducible_low_degree(IntPoly{-1, 0, 1}) == false);
    CHECK_FALSE(irreducible_low_degree(IntPoly::monomial(1, 4)).has_value());
}

TEST_CASE("not_algebraic_integer")
{
    auto cert = not_algebraic_integer(alpha, eisenstein_check(alpha, 3));
    REQUIRE(cert.certificate);
    CHECK(cert.certificate->evidence == IrreducibilityEvidence::eisenstein);

    cert = not_algebraic_integer(IntPoly{-2, 1}, std::nullopt);
    CHECK_FALSE(cert.certificate);
    CHECK(cert.reason.find("inconclusive") != std::string::npos);

    cert = not_algebraic_integer(IntPoly{-1, 2}, std::nullopt);
    REQUIRE(cert.certificate);
    CHECK(cert.certificate->evidence == IrreducibilityEvidence::linear);

    cert = not_algebraic_integer(alpha, std::nullopt);
    REQUIRE(cert.certificate);
    CHECK(cert.certificate->evidence == IrreducibilityEvidence::no_rational_root);

    // (2X - 1)(X + 1) is reducible.
    CHECK_FALSE(not_algebraic_integer(IntPoly{-1, 1, 2}, std::nullopt).certificate);
    CHECK_THROWS_AS(not_algebraic_integer(IntPoly{-2, 4}, std::nullopt), Error);
}

TEST_CASE("isolate_root")
{
    const RationalInterval coarse = isolate_root(r_min, {q(1, 2), 1}, q(1, 100));
    CHECK(coarse.width() <= q(1, 100));
    CHECK(sign_at(r_min, coarse.lo()) < 0);
    CHECK(sign_at(r_min, coarse.hi()) > 0);

    const RationalInterval fine = isolate_root(r_min, {q(1, 2), 1}, q(1, 1000));
    CHECK(fine.inside_open(q(72, 100), q(73, 100)));
    CHECK_FALSE(fine.contains(q(1, 2)));

    // Frozen from an independent exact bisection at width 1e-12.
    const RationalInterval frozen = isolate_root(r_min, {q(1, 2), 1}, inverse_power_of_ten(12));
    CHECK(frozen.lo() == Rational(Integer("396509548437"), Integer("549755813888")));
    CHECK(frozen.hi() == Rational(Integer("793019096875"), Integer("1099511627776")));
    CHECK(coarse.contains(frozen.lo()));

    const RationalInterval exact = isolate_root(IntPoly{-1, 2}, {0, 1}, inverse_power_of_ten(6));
    CHECK(exact.exact());
    CHECK(exact.lo() == q(1, 2));

    CHECK_THROWS_AS(isolate_root(IntPoly{1, 0, 1}, {0, 1}, q(1, 10)), Error);
    CHECK_THROWS_AS(isolate_root(IntPoly{0, 0, 1}, {-1, 1}, q(1, 10)), Error);
    CHECK_THROWS_AS(isolate_root(r_min, {q(1, 2), 1}, 0), Error);
}

TEST_CASE("interval_image")
{
    const RationalInterval r = isolate_root(r_min, {q(1, 2), 1}, q(1, 1000));
    const RationalInterval s = interval_image(paper_g(), r);
    CHECK(s.inside_open(q(38, 100), q(41, 100)));
    CHECK(s.lo() == eval(paper_g(), r.hi()));
    CHECK(s.hi() == eval(paper_g(), r.lo()));

    CHECK(interval_image(IntPoly::x(), r) == r);
    CHECK_THROWS_AS(interval_image(paper_g(), {0, 1}), Error);

    oracle::Rng rng(0x1a6e);
    for (int trial = 0; trial < 1000; ++trial) {
        const Rational t = r.lo() + r.width() * q(rng.uniform(0, 1000), 1000);
        CHECK(s.contains(oracle::value(paper_g(), t)));
    }
}

TEST_CASE("beta_equation")
{
    CHECK(beta_equation(form(1, {0, 1}), 1, 2) == IntPoly{-1, 1});
    CHECK(beta_equation(form(2, {0, 1, 1}), 1, 2) == IntPoly{-1, 0, 1});
    CHECK_THROWS_AS(beta_equation(form(1, {0, 1}), 2, 3), Error);

    // M((1-t)/t) t^n = +-(den * f(t) - num) for every t, so M vanishes at
    // beta exactly when f(t) hits the target.
    oracle::Rng rng(0xbe7a);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
        std::vector<Integer> a(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            a[i] = rng.uniform(0, oracle::binom(static_cast<long>(n), static_cast<long>(i)));
        const PartitionForm f(n, a);
        const IntPoly m = beta_equation(f, 1, 2);
        CHECK(m.leading() == 1);
        CHECK(m.degree() == n);
        const Rational t = q(rng.uniform(1, 99), 100);
        const Rational beta = (1 - t) / t;
        Rational tn = 1;
        for (std::size_t i = 0; i < n; ++i)
            tn *= t;
        const Rational lhs = oracle::value(m, beta) * tn;
        const Rational rhs = 2 * oracle::cylinder_sum(n, a, t) - 1;
        CHECK((lhs == rhs || lhs == -rhs));
    }

    // The worked example's beta is not a root of the equation for (0, 1, 1).
    const RationalInterval r = isolate_root(r_min, {q(1, 2), 1}, inverse_power_of_ten(12));
    const RationalInterval value = interval_eval(beta_equation(form(2, {0, 1, 1}), 1, 2),
                                                 beta_interval(r));
    CHECK((value.lo() > 0 || value.hi() < 0));
}

TEST_CASE("theorem_beta_equation")
{
    // K = X - X^2 at level 2, m = 1; re-derive by expanding both sides.
    const PartitionForm k = form(2, {0, 1, 0});
    const IntPoly m = theorem_beta_equation(1, k, 64);
    CHECK(m.leading() == 1);
    const IntPoly d = IntPoly{1, -1} - Integer(2) * compose(IntPoly{0, 1, -1}, paper_g());
    const std::size_t level = *m.degree();
    for (const Rational t : {q(1, 3), q(2, 7), q(9, 10)}) {
        Rational tl = 1;
        for (std::size_t i = 0; i < level; ++i)
            tl *= t;
        const Rational lhs = oracle::value(m, (1 - t) / t) * tl;
        const Rational rhs = oracle::value(d, t);
        CHECK((lhs == rhs || lhs == -rhs));
    }

    oracle::Rng rng(0x7e0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(0, 4));
        std::vector<Integer> a(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            a[i] = rng.uniform(0, oracle::binom(static_cast<long>(n), static_cast<long>(i)));
        const auto mm = static_cast<std::size_t>(rng.uniform(0, 6));
        const IntPoly eq = theorem_beta_equation(mm, PartitionForm(n, a), 64);
        CHECK(eq.leading() == 1);
    }
}

TEST_CASE("beta of the worked example solves no small obstruction equation")
{
    const RationalInterval r = isolate_root(r_min, {q(1, 2), 1}, inverse_power_of_ten(30));
    const RationalInterval beta = beta_interval(r);
    std::size_t checked = 0;
    for (std::size_t level = 0; level <= 4; ++level) {
        for (const auto& k : all_forms(level)) {
            for (std::size_t m = 0; m <= 4; ++m) {
                const RationalInterval v = interval_eval(theorem_beta_equation(m, k, 64), beta);
                CHECK((v.lo() > 0 || v.hi() < 0));
                ++checked;
            }
        }
    }
    CHECK(checked == 5 * (2 + 4 + 12 + 64 + 700));
}
