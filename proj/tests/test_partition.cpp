#include "cantorlab/partition.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace cantorlab;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

PartitionForm form(std::size_t n, std::initializer_list<long> v)
{
    return PartitionForm(n, ints(v));
}

// Oracle: a form expands to P iff they agree at deg+1 distinct points.
bool same_function(const PartitionForm& f, const IntPoly& p)
{
    const std::vector<Integer> a(f.coeffs().begin(), f.coeffs().end());
    for (const auto& x : oracle::sample_points(f.level() + 2)) {
        if (oracle::cylinder_sum(f.level(), a, x) != oracle::value(p, x))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("PartitionForm enforces its bounds")
{
    CHECK_NOTHROW(form(3, {0, 3, 3, 0}));
    CHECK_THROWS_AS(form(2, {0, 3, 0}), Error);
    CHECK_THROWS_AS(form(2, {0, -1, 0}), Error);
    CHECK_THROWS_AS(form(2, {0, 1}), Error);
}

TEST_CASE("to_form")
{
    auto f = to_form(IntPoly{0, 3, -3}, 3);
    REQUIRE(f);
    CHECK(*f == form(3, {0, 3, 3, 0}));

    f = to_form(IntPoly::x(), 3);
    REQUIRE(f);
    CHECK(*f == form(3, {0, 1, 2, 1}));
    for (std::size_t i = 1; i <= 3; ++i)
        CHECK((*f)[i] == binomial(2, i - 1));

    CHECK_FALSE(to_form(IntPoly{0, 3, -3}, 2));
    CHECK(basis_coefficients(IntPoly{0, 3, -3}, 2) == ints({0, 3, 0}));
    CHECK_THROWS_AS(to_form(IntPoly{0, 3, -3}, 1), Error);
}

TEST_CASE("expand")
{
    CHECK(expand(form(3, {0, 3, 3, 0})) == IntPoly{0, 3, -3});
    for (std::size_t n = 0; n <= 8; ++n) {
        std::vector<Integer> full(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            full[i] = binomial(n, i);
        CHECK(expand(PartitionForm(n, full)) == IntPoly{1});
    }
    const PartitionForm f = form(2, {0, 2, 0});
    CHECK(expand(f) == IntPoly{0, 2, -2});
    CHECK(same_function(f, IntPoly{0, 2, -2}));
}

TEST_CASE("elevate")
{
    CHECK(elevate(form(2, {0, 1, 1})) == form(3, {0, 1, 2, 1}));
    CHECK(elevate(form(0, {1})) == form(1, {1, 1}));
    const PartitionForm up = elevate(form(2, {0, 2, 0}));
    CHECK(up == form(3, {0, 2, 2, 0}));
    CHECK(*to_form(expand(form(2, {0, 2, 0})), 3) == up);
    CHECK(elevate_to(form(0, {1}), 3) == form(3, {1, 3, 3, 1}));
}

TEST_CASE("depth")
{
    auto d = depth(IntPoly{0, 3, -3}, 64);
    REQUIRE(d.found());
    CHECK(d.level == 3);
    CHECK(depth(IntPoly::x(), 64).level == 1);
    CHECK(depth(IntPoly{0, 2, -2}, 64).level == 2);
    CHECK(depth(IntPoly{}, 64).level == 0);
    CHECK(depth(IntPoly{1}, 64).level == 0);

    // 3X is pinned at a_n = P(1) = 3 on every level.
    CHECK(depth(IntPoly{0, 3}, 64).status == SearchStatus::impossible);
    CHECK(depth(IntPoly{2}, 64).status == SearchStatus::impossible);
    // 3X - 3X^2 exists only from level 3 on.
    CHECK(depth(IntPoly{0, 3, -3}, 2).status == SearchStatus::unknown);
}

TEST_CASE("depth of X(1-X) scaled by k grows with k")
{
    // 4X(1-X) reaches 1 at X = 1/2, so its middle Bernstein coefficient
    // n/(n-1) never drops to 1.
    CHECK(depth(IntPoly{0, 4, -4}, 200).status == SearchStatus::unknown);

    // kX(1-X) needs a level n with a_i = k C(n-2, i-1) <= C(n, i) everywhere.
    for (long k = 1; k <= 3; ++k) {
        const IntPoly p{0, k, -k};
        const auto d = depth(p, 64);
        REQUIRE(d.found());
        std::size_t brute = 2;
        while (true) {
            bool ok = true;
            for (long i = 1; i + 1 <= static_cast<long>(brute); ++i)
                ok = ok && k * oracle::binom(static_cast<long>(brute) - 2, i - 1) <=
                               oracle::binom(static_cast<long>(brute), i);
            if (ok)
                break;
            ++brute;
        }
        CHECK(d.level == brute);
    }
}

TEST_CASE("dominates")
{
    auto r = dominates(IntPoly::x(), IntPoly{0, 1, -1}, 64);
    REQUIRE(r.found());
    CHECK(r.level == 2);
    CHECK(*to_form(IntPoly::x(), 2) == form(2, {0, 1, 1}));
    CHECK(*to_form(IntPoly{0, 1, -1}, 2) == form(2, {0, 1, 0}));

    for (const IntPoly& p : {IntPoly{0, 3, -3}, IntPoly{0, 2, -2}, IntPoly::x(), IntPoly{1}}) {
        const auto self = dominates(p, p, 64);
        REQUIRE(self.found());
        CHECK(self.level == depth(p, 64).level);
    }

    r = dominates(IntPoly{0, 1, -1}, IntPoly::x(), 64);
    CHECK(r.status == SearchStatus::impossible);
    CHECK(dominates(IntPoly{0, 1, -1}, IntPoly::x(), 1000).status == SearchStatus::impossible);
}

TEST_CASE("factor_out_x")
{
    auto r = factor_out_x(IntPoly{0, 2, -2}, 64);
    CHECK(r.status == SearchStatus::impossible);
    CHECK_FALSE(r.cofactor);

    r = factor_out_x(IntPoly{0, 1, -1}, 64);
    REQUIRE(r.cofactor);
    CHECK(*r.cofactor == IntPoly{1, -1});
    CHECK(*to_form(*r.cofactor, 1) == form(1, {1, 0}));

    r = factor_out_x(IntPoly::x(), 64);
    REQUIRE(r.cofactor);
    CHECK(*r.cofactor == IntPoly{1});

    CHECK(factor_out_x(IntPoly{1, -1}, 64).status == SearchStatus::impossible);
}

TEST_CASE("factor_out_x agrees with domination by X")
{
    // Every valid form at level <= 4, as polynomials.
    for (std::size_t n = 0; n <= 4; ++n) {
        for (const auto& f : all_forms(n)) {
            const IntPoly p = expand(f);
            // X * P1 with P1 at level n has a form at level n + 1.
            const auto by_x = dominates(IntPoly::x(), p, 17);
            const auto factored = factor_out_x(p, 16);
            CHECK(by_x.found() == factored.cofactor.has_value());
            if (factored.cofactor)
                CHECK(by_x.level <= factored.level + 1);
        }
    }
}

TEST_CASE("compose_form")
{
    const PartitionForm fg = compose_form(IntPoly{0, 3, -3}, IntPoly{0, 2, -2}, 64);
    CHECK(fg.level() <= 6);
    CHECK(fg == form(6, {0, 6, 12, 12, 12, 6, 0}));
    CHECK(expand(fg) == IntPoly{0, 6, -18, 24, -12});

    const IntPoly q{0, 2, -2};
    CHECK(expand(compose_form(IntPoly::x(), q, 64)) == q);
    CHECK(compose_form(IntPoly{0, 0, 1}, IntPoly{0, 0, 1}, 64) == form(4, {0, 0, 0, 0, 1}));
    CHECK_THROWS_AS(compose_form(IntPoly{0, 3}, IntPoly::x(), 64), Error);
}

TEST_CASE("all_forms")
{
    CHECK(all_forms(2).size() == 12);
    CHECK(form_count(2) == 12);
    CHECK(form_count(5) == 17424);
    CHECK(all_forms(3).front() == form(3, {0, 0, 0, 0}));
    CHECK(all_forms(3).back() == form(3, {1, 3, 3, 1}));
}

TEST_CASE("default levels")
{
    CHECK(default_pair_level(IntPoly{0, 1}, IntPoly{0, 1}) >= 64);
    CHECK(default_pair_level(IntPoly::monomial(1, 40), IntPoly::monomial(1, 10)) == 100);
}

TEST_CASE("round trip, elevation and monotone representability")
{
    oracle::Rng rng(0xbe5e);
    for (int trial = 0; trial < 1000; ++trial) {
        const IntPoly p = rng.poly(5, 12);
        const std::size_t n = p.degree().value_or(0) + static_cast<std::size_t>(rng.uniform(0, 6));
        const auto f = to_form(p, n);
        if (f) {
            CHECK(expand(*f) == p);
            CHECK(to_form(p, n + 1).has_value());
        }
        const auto a = basis_coefficients(p, n);
        // The unchecked coefficients always describe P.
        for (const auto& x : oracle::sample_points(n + 2))
            CHECK(oracle::cylinder_sum(n, a, x) == oracle::value(p, x));
    }

    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(0, 9));
        std::vector<Integer> a(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            a[i] = rng.uniform(0, oracle::binom(static_cast<long>(n), static_cast<long>(i)));
        const PartitionForm f(n, a);
        const auto back = to_form(expand(f), n);
        REQUIRE(back);
        CHECK(*back == f);
        const PartitionForm up = elevate(f); // constructor re-validates bounds
        CHECK(expand(up) == expand(f));
        CHECK(up.level() == n + 1);
        const auto d = depth(expand(f), n);
        REQUIRE(d.found());
        CHECK(d.level <= n);
        CHECK(d.level >= expand(f).degree().value_or(0));
    }
}
