#include "cantorlab/clopen.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace cantorlab;

namespace {

ClopenSet set_of(std::size_t n, std::vector<std::string> words)
{
    return ClopenSet::from_strings(n, words);
}

PartitionForm form(std::size_t n, std::initializer_list<long> v)
{
    return PartitionForm(n, std::vector<Integer>(v.begin(), v.end()));
}

// Oracle: sum of r^a (1-r)^b over the words, evaluated at r directly.
Rational measure_at(const ClopenSet& a, const Rational& r)
{
    Rational total = 0;
    for (const auto& w : a.word_strings()) {
        Rational term = 1;
        for (char c : w)
            term *= c == '1' ? r : 1 - r;
        total += term;
    }
    return total;
}

ClopenSet random_set(oracle::Rng& rng, std::size_t n)
{
    std::vector<Word> words;
    for (Word w = 0; w < (Word{1} << n); ++w) {
        if (rng.uniform(0, 1) == 1)
            words.push_back(w);
    }
    return ClopenSet(n, std::move(words));
}

} // namespace

TEST_CASE("words keep lexicographic order")
{
    const ClopenSet a = set_of(3, {"110", "001", "010", "001"});
    CHECK(a.size() == 3);
    CHECK(a.word_strings() == std::vector<std::string>{"001", "010", "110"});
    CHECK_THROWS_AS(set_of(2, {"101"}), Error);
    CHECK_THROWS_AS(set_of(2, {"1x"}), Error);
}

TEST_CASE("measure_form")
{
    const ClopenSet c = set_of(2, {"10", "01"});
    CHECK(measure_form(c) == form(2, {0, 2, 0}));
    CHECK(measure_poly(c) == IntPoly{0, 2, -2});
    CHECK(measure_form(ClopenSet::empty(2)) == form(2, {0, 0, 0}));
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(measure_poly(ClopenSet::full(n)) == IntPoly{1});
}

TEST_CASE("boolean operations refine to a common length")
{
    const ClopenSet c = set_of(2, {"10", "01"});
    CHECK(set_union(c, set_of(2, {"11"})) == set_of(2, {"01", "10", "11"}));
    CHECK(complement(c) == set_of(2, {"00", "11"}));
    CHECK(refine(set_of(1, {"1"}), 2) == set_of(2, {"10", "11"}));
    CHECK(set_intersection(set_of(1, {"1"}), c) == set_of(2, {"10"}));
    CHECK(set_difference(set_of(1, {"1"}), c) == set_of(2, {"11"}));
    CHECK(ClopenSet::coordinate(2, 3) == set_of(3, {"010", "011", "110", "111"}));
    CHECK_THROWS_AS(refine(c, 1), Error);
}

TEST_CASE("realize")
{
    CHECK(realize(form(2, {0, 2, 0})) == set_of(2, {"01", "10"}));
    for (std::size_t n = 0; n <= 5; ++n) {
        std::vector<Integer> a(n + 1);
        a[0] = 1;
        CHECK(realize(PartitionForm(n, a)) == set_of(n, {std::string(n, '0')}));
    }
    const ClopenSet six = realize(form(3, {0, 3, 3, 0}));
    CHECK(six == set_of(3, {"001", "010", "100", "011", "101", "110"}));
    CHECK(measure_form(six) == form(3, {0, 3, 3, 0}));
}

TEST_CASE("dominated_subset")
{
    const ClopenSet c = set_of(2, {"01", "10"});
    CHECK(dominated_subset(c, form(2, {0, 1, 0})) == set_of(2, {"01"}));
    CHECK(dominated_subset(c, measure_form(c)) == c);
    CHECK_THROWS_AS(dominated_subset(c, form(2, {1, 0, 0})), Error);
    CHECK_THROWS_AS(dominated_subset(c, form(3, {0, 0, 0, 0})), Error);
}

TEST_CASE("compose_witness")
{
    const ClopenSet x1 = set_of(1, {"1"});
    ClopenSet c = compose_witness(set_of(2, {"11"}), x1);
    CHECK(c == set_of(2, {"11"}));
    CHECK(measure_poly(c) == IntPoly{0, 0, 1});

    c = compose_witness(set_of(2, {"01", "10"}), x1);
    CHECK(c == set_of(2, {"01", "10"}));
    CHECK(measure_poly(c) == IntPoly{0, 2, -2});

    const ClopenSet a = set_of(2, {"01", "10"});
    c = compose_witness(set_of(1, {"1"}), a);
    CHECK(c == set_of(2, {"01", "10"}));
    const ClopenSet d = compose_witness(set_of(1, {"0"}), a);
    CHECK(d == set_of(2, {"00", "11"}));
    for (const Rational r : {Rational(1, 3), Rational(5, 7)}) {
        CHECK(measure_at(c, r) == oracle::value(IntPoly{0, 2, -2}, r));
        CHECK(measure_at(d, r) == 1 - oracle::value(IntPoly{0, 2, -2}, r));
    }
}

TEST_CASE("measure_spectrum")
{
    CHECK(measure_spectrum(0) == std::set<IntPoly>{IntPoly{}, IntPoly{1}});
    CHECK(measure_spectrum(1) ==
          std::set<IntPoly>{IntPoly{}, IntPoly::x(), IntPoly{1, -1}, IntPoly{1}});
    // 16 subsets of {00,01,10,11}, 2*3*2 = 12 distinct weight profiles.
    CHECK(measure_spectrum(2).size() == 12);
    CHECK_THROWS_AS(measure_spectrum(5), Error);
}

TEST_CASE("measure identities over random sets")
{
    oracle::Rng rng(0xc10e);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(0, 6));
        const ClopenSet a = random_set(rng, n);
        const ClopenSet b = set_difference(random_set(rng, n), a);
        const PartitionForm fa = measure_form(a);
        const PartitionForm fb = measure_form(b);

        const PartitionForm fu = measure_form(set_union(a, b));
        for (std::size_t i = 0; i <= n; ++i)
            CHECK(fu[i] == fa[i] + fb[i]);

        const PartitionForm fc = measure_form(complement(a));
        for (std::size_t i = 0; i <= n; ++i)
            CHECK(fa[i] + fc[i] == binomial(n, i));

        const auto extra = static_cast<std::size_t>(rng.uniform(0, 3));
        CHECK(measure_poly(refine(a, n + extra)) == measure_poly(a));

        CHECK(measure_form(realize(fa)) == fa);
        const Rational r = rng.rational(7);
        CHECK(measure_at(a, r) == oracle::value(measure_poly(a), r));
    }
}
