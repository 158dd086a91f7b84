#include "cantorlab/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace cantorlab {

namespace {

bool in_unit_pair(const Integer& v) { return v == 0 || v == 1; }

std::size_t start_level(const IntPoly& p)
{
    return p.degree().value_or(0);
}

} // namespace

PartitionForm::PartitionForm(std::size_t n, std::vector<Integer> a) : n_(n), a_(std::move(a))
{
    if (a_.size() != n_ + 1)
        throw Error("partition form at level " + std::to_string(n_) + " needs " +
                    std::to_string(n_ + 1) + " coefficients, got " + std::to_string(a_.size()));
    for (std::size_t i = 0; i <= n_; ++i) {
        if (sgn(a_[i]) < 0 || a_[i] > binomial(n_, i))
            throw Error("partition form coefficient a_" + std::to_string(i) + " = " +
                        a_[i].get_str() + " outside [0, C(" + std::to_string(n_) + "," +
                        std::to_string(i) + ")]");
    }
}

bool is_valid_form(std::size_t n, std::span<const Integer> a)
{
    if (a.size() != n + 1)
        return false;
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(a[i]) < 0 || a[i] > binomial(n, i))
            return false;
    }
    return true;
}

std::vector<Integer> basis_coefficients(const IntPoly& p, std::size_t n)
{
    if (p.degree() && *p.degree() > n)
        throw Error("level " + std::to_string(n) + " is below the degree " +
                    std::to_string(*p.degree()));
    // X^j = X^j (X + (1-X))^(n-j) contributes C(n-j, i-j) to a_i.
    std::vector<Integer> a(n + 1);
    const auto c = p.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0)
            continue;
        for (std::size_t i = j; i <= n; ++i)
            a[i] += c[j] * binomial(n - j, i - j);
    }
    return a;
}

std::optional<PartitionForm> to_form(const IntPoly& p, std::size_t n)
{
    auto a = basis_coefficients(p, n);
    if (!is_valid_form(n, a))
        return std::nullopt;
    return PartitionForm(n, std::move(a));
}

IntPoly expand(const PartitionForm& f)
{
    // X^i (1-X)^(n-i) = sum_k (-1)^k C(n-i, k) X^(i+k)
    const std::size_t n = f.level();
    std::vector<Integer> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i] == 0)
            continue;
        for (std::size_t k = 0; i + k <= n; ++k) {
            Integer term = f[i] * binomial(n - i, k);
            if (k % 2 == 1)
                c[i + k] -= term;
            else
                c[i + k] += term;
        }
    }
    return IntPoly(std::move(c));
}

PartitionForm elevate(const PartitionForm& f)
{
    const std::size_t n = f.level();
    std::vector<Integer> a(n + 2);
    for (std::size_t i = 0; i <= n + 1; ++i) {
        if (i <= n)
            a[i] += f[i];
        if (i >= 1)
            a[i] += f[i - 1];
    }
    return PartitionForm(n + 1, std::move(a));
}

PartitionForm elevate_to(const PartitionForm& f, std::size_t n)
{
    if (n < f.level())
        throw Error("cannot lower a form from level " + std::to_string(f.level()) + " to " +
                    std::to_string(n));
    PartitionForm out = f;
    while (out.level() < n)
        out = elevate(out);
    return out;
}

LevelSearch depth(const IntPoly& p, std::size_t max_level)
{
    const Integer at0 = p.coeff(0);
    const Integer at1 = eval(p, Integer(1));
    if (!in_unit_pair(at0))
        return {SearchStatus::impossible, 0, "a_0 = P(0) = " + at0.get_str() + " at every level"};
    if (!in_unit_pair(at1))
        return {SearchStatus::impossible, 0, "a_n = P(1) = " + at1.get_str() + " at every level"};
    for (std::size_t n = start_level(p); n <= max_level; ++n) {
        if (is_valid_form(n, basis_coefficients(p, n)))
            return {SearchStatus::found, n, {}};
    }
    return {SearchStatus::unknown, 0, "no partition form at level <= " + std::to_string(max_level)};
}

LevelSearch dominates(const IntPoly& p, const IntPoly& q, std::size_t max_level)
{
    for (const IntPoly* poly : {&p, &q}) {
        auto d = depth(*poly, 0);
        if (d.status == SearchStatus::impossible)
            return {SearchStatus::impossible, 0,
                    to_string(*poly) + " is not a partition polynomial: " + d.reason};
    }
    if (q.coeff(0) > p.coeff(0))
        return {SearchStatus::impossible, 0, "b_0 = Q(0) exceeds a_0 = P(0) at every level"};
    if (eval(q, Integer(1)) > eval(p, Integer(1)))
        return {SearchStatus::impossible, 0, "b_n = Q(1) exceeds a_n = P(1) at every level"};

    const std::size_t from = std::max(start_level(p), start_level(q));
    for (std::size_t n = from; n <= max_level; ++n) {
        const auto a = basis_coefficients(p, n);
        const auto b = basis_coefficients(q, n);
        if (!is_valid_form(n, a) || !is_valid_form(n, b))
            continue;
        bool below = true;
        for (std::size_t i = 0; i <= n && below; ++i)
            below = b[i] <= a[i];
        if (below)
            return {SearchStatus::found, n, {}};
    }
    return {SearchStatus::unknown, 0, "no common level <= " + std::to_string(max_level)};
}

FactorOutX factor_out_x(const IntPoly& p, std::size_t max_level)
{
    if (p.coeff(0) != 0)
        return {SearchStatus::impossible, std::nullopt, 0,
                "nonzero constant term: not dominated by X"};
    IntPoly cofactor = divide_out_x(p, 1);
    auto d = depth(cofactor, max_level);
    if (!d.found())
        return {d.status, std::nullopt, 0, "P/X = " + to_string(cofactor) + ": " + d.reason};
    return {SearchStatus::found, std::move(cofactor), d.level, {}};
}

PartitionForm compose_form(const IntPoly& p, const IntPoly& q, std::size_t max_level)
{
    const IntPoly composed = compose(p, q);
    auto d = depth(composed, max_level);
    if (!d.found())
        throw Error("compose_form: no form for " + to_string(composed) + " (" + d.reason +
                    "); are both inputs partition polynomials within the bound?");
    return *to_form(composed, d.level);
}

std::vector<PartitionForm> all_forms(std::size_t n)
{
    std::vector<Integer> bound(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        bound[i] = binomial(n, i);
    std::vector<PartitionForm> out;
    std::vector<Integer> a(n + 1);
    while (true) {
        out.emplace_back(n, a);
        std::size_t i = n + 1;
        while (i-- > 0) {
            if (a[i] < bound[i]) {
                ++a[i];
                break;
            }
            a[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1))
            break;
    }
    return out;
}

Integer form_count(std::size_t n)
{
    Integer count = 1;
    for (std::size_t i = 0; i <= n; ++i)
        count *= binomial(n, i) + 1;
    return count;
}

std::size_t default_max_level()
{
    const char* env = std::getenv("CANTORLAB_MAX_LEVEL");
    if (env == nullptr || *env == '\0')
        return 64;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0')
        throw Error(std::string("CANTORLAB_MAX_LEVEL is not a count: ") + env);
    return v;
}

std::size_t default_pair_level(const IntPoly& p, const IntPoly& q)
{
    const std::size_t degrees = p.degree().value_or(0) + q.degree().value_or(0);
    return std::max(2 * degrees, default_max_level());
}

std::string to_string(const PartitionForm& f)
{
    std::string out = "(";
    for (std::size_t i = 0; i <= f.level(); ++i) {
        if (i > 0)
            out += ", ";
        out += f[i].get_str();
    }
    return out + ")";
}

} // namespace cantorlab
