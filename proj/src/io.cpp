#include "cantorlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace cantorlab {

namespace {

bool is_decimal_integer(const std::string& s)
{
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    }
    return true;
}

Integer integer_from_string(const std::string& s, const std::string& context)
{
    if (!is_decimal_integer(s))
        throw ParseError(context + ": \"" + s + "\" is not a decimal integer");
    return Integer(s, 10);
}

Integer integer_from_json(const Json& j, const std::string& context)
{
    if (!j.is_string())
        throw ParseError(context + ": expected a decimal string, got " + j.dump());
    return integer_from_string(j.get<std::string>(), context);
}

std::size_t count_from_json(const Json& j, const std::string& context)
{
    if (!j.is_number_unsigned())
        throw ParseError(context + ": expected a non-negative integer, got " + j.dump());
    return j.get<std::size_t>();
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        throw ParseError(std::string("expected a JSON object with \"") + key + "\", got " +
                         j.dump());
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string quote(char c)
{
    return std::string("'") + c + "'";
}

// Recursive-descent reader for the human polynomial grammar.
class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    IntPoly parse()
    {
        std::vector<Integer> coeffs;
        skip_space();
        if (at_end())
            throw ParseError("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [c, k] = term();
            if (coeffs.size() <= k)
                coeffs.resize(k + 1);
            coeffs[k] += sign * c;
            first = false;
            skip_space();
        }
        return IntPoly(std::move(coeffs));
    }

private:
    std::pair<Integer, std::size_t> term()
    {
        Integer c = 1;
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            c = Integer(digits(), 10);
            have_coeff = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_space();
                if (at_end() || (peek() != 'x' && peek() != 'X'))
                    fail("expected 'x' after '*'");
            }
        }
        if (!at_end() && (peek() == 'x' || peek() == 'X')) {
            ++pos_;
            skip_space();
            std::size_t k = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected an exponent after '^'");
                const std::string e = digits();
                if (e.size() > 6)
                    fail("exponent too large");
                k = std::stoul(e);
            }
            return {c, k};
        }
        if (!have_coeff)
            fail("expected a coefficient or 'x'");
        return {c, 0};
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        const std::string token = at_end() ? "end of input" : quote(peek());
        throw ParseError("polynomial: unexpected " + token + " at position " +
                         std::to_string(pos_) + " (" + what + ")");
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

IntPoly parse_poly(const std::string& text)
{
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[')
        return poly_from_json(parse_json(text));
    return ExprParser(text).parse();
}

Rational parse_rational(const std::string& text)
{
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const Integer num = integer_from_string(text.substr(0, slash), "rational numerator");
        const Integer den = integer_from_string(text.substr(slash + 1), "rational denominator");
        if (den == 0)
            throw ParseError("rational \"" + text + "\" has a zero denominator");
        return make_rational(num, den);
    }
    // [-]digits[.digits][e[+-]digits]
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        negative = text[pos++] == '-';
    std::string mantissa;
    long scale = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            mantissa += ch;
            seen_digit = true;
            if (seen_point)
                --scale;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit)
        throw ParseError("rational \"" + text + "\": expected digits");
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        const std::string exponent = text.substr(pos + 1);
        if (!is_decimal_integer(exponent.empty() || exponent[0] != '+' ? exponent
                                                                       : exponent.substr(1)) ||
            exponent.size() > 6)
            throw ParseError("rational \"" + text + "\": bad exponent \"" + exponent + "\"");
        scale += std::stol(exponent);
        pos = text.size();
    }
    if (pos != text.size())
        throw ParseError("rational \"" + text + "\": unexpected " + quote(text[pos]));
    Integer num(mantissa, 10);
    Integer den = 1;
    Integer ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    if (scale < 0)
        den = ten_power;
    else
        num *= ten_power;
    if (negative)
        num = -num;
    return make_rational(num, den);
}

Json poly_to_json(const IntPoly& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs())
        out.push_back(c.get_str());
    return out;
}

IntPoly poly_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("polynomial: expected a JSON array of decimal strings, got " + j.dump());
    std::vector<Integer> coeffs;
    for (std::size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(integer_from_json(j[i], "polynomial coefficient " + std::to_string(i)));
    return IntPoly(std::move(coeffs));
}

std::string poly_to_canonical(const IntPoly& p)
{
    return poly_to_json(p).dump();
}

Json form_to_json(const PartitionForm& f)
{
    Json a = Json::array();
    for (const auto& c : f.coeffs())
        a.push_back(c.get_str());
    return Json{{"n", f.level()}, {"a", std::move(a)}};
}

PartitionForm form_from_json(const Json& j)
{
    const std::size_t n = count_from_json(field(j, "n"), "form level");
    const Json& a = field(j, "a");
    if (!a.is_array())
        throw ParseError("form: \"a\" must be an array");
    std::vector<Integer> coeffs;
    for (std::size_t i = 0; i < a.size(); ++i)
        coeffs.push_back(integer_from_json(a[i], "form coefficient a_" + std::to_string(i)));
    try {
        return PartitionForm(n, std::move(coeffs));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Json clopen_to_json(const ClopenSet& c)
{
    return Json{{"n", c.length()}, {"words", c.word_strings()}};
}

ClopenSet clopen_from_json(const Json& j)
{
    const std::size_t n = count_from_json(field(j, "n"), "clopen word length");
    const Json& words = field(j, "words");
    if (!words.is_array())
        throw ParseError("clopen: \"words\" must be an array");
    std::vector<std::string> strings;
    for (const auto& w : words) {
        if (!w.is_string())
            throw ParseError("clopen: word " + w.dump() + " is not a string");
        strings.push_back(w.get<std::string>());
    }
    try {
        return ClopenSet::from_strings(n, strings);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Json interval_to_json(const RationalInterval& i)
{
    return Json{{"lo", i.lo().get_str()}, {"hi", i.hi().get_str()}};
}

RationalInterval interval_from_json(const Json& j)
{
    auto read = [&](const char* key) {
        const Json& v = field(j, key);
        if (!v.is_string())
            throw ParseError(std::string("interval: \"") + key + "\" must be a string");
        return parse_rational(v.get<std::string>());
    };
    Rational lo = read("lo");
    Rational hi = read("hi");
    if (lo > hi)
        throw ParseError("interval: lo exceeds hi");
    return {std::move(lo), std::move(hi)};
}

Json sweep_to_json(const SweepReport& s)
{
    return Json{{"max_m", s.max_m},
                {"max_level", s.max_level},
                {"violations", s.violations},
                {"forms_checked", s.forms_checked}};
}

Json certificate_to_json(const Certificate& c)
{
    return Json{{"F", poly_to_json(c.f)},
                {"F_form", form_to_json(c.f_form)},
                {"G", poly_to_json(c.g)},
                {"G_form", form_to_json(c.g_form)},
                {"p", c.p.get_str()},
                {"r_minpoly", poly_to_json(c.r_minpoly)},
                {"alpha_poly", poly_to_json(c.alpha_poly)},
                {"eisenstein", Json{{"prime", c.eisenstein.prime.get_str()}}},
                {"r_interval", interval_to_json(c.r_interval)},
                {"s_interval", interval_to_json(c.s_interval)},
                {"obstruction_sweep", sweep_to_json(c.obstruction_sweep)},
                {"version", c.version}};
}

Certificate certificate_from_json(const Json& j)
{
    const Json& sweep_json = field(j, "obstruction_sweep");
    SweepReport sweep;
    sweep.max_m = count_from_json(field(sweep_json, "max_m"), "sweep max_m");
    sweep.max_level = count_from_json(field(sweep_json, "max_level"), "sweep max_level");
    sweep.violations = count_from_json(field(sweep_json, "violations"), "sweep violations");
    sweep.forms_checked =
        count_from_json(field(sweep_json, "forms_checked"), "sweep forms_checked");

    IntPoly alpha = poly_from_json(field(j, "alpha_poly"));
    const Integer prime = integer_from_json(field(field(j, "eisenstein"), "prime"), "eisenstein prime");
    const Json& version = field(j, "version");
    if (!version.is_number_integer())
        throw ParseError("certificate: \"version\" must be an integer");

    return Certificate{poly_from_json(field(j, "F")),
                       form_from_json(field(j, "F_form")),
                       poly_from_json(field(j, "G")),
                       form_from_json(field(j, "G_form")),
                       integer_from_json(field(j, "p"), "certificate p"),
                       poly_from_json(field(j, "r_minpoly")),
                       alpha,
                       EisensteinWitness{alpha, prime},
                       interval_from_json(field(j, "r_interval")),
                       interval_from_json(field(j, "s_interval")),
                       sweep,
                       version.get<int>()};
}

Json report_to_json(const VerificationReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json entry{{"check", c.name}, {"passed", c.passed}};
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return Json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

std::string to_decimal(const Rational& q, unsigned digits)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const Integer mag_num = abs(q.get_num()) * scale;
    const Integer scaled = mag_num / q.get_den();
    std::string body = scaled.get_str();
    if (body.size() <= digits)
        body.insert(0, digits + 1 - body.size(), '0');
    std::string out = sgn(q) < 0 ? "-" : "";
    out += body.substr(0, body.size() - digits);
    if (digits > 0)
        out += "." + body.substr(body.size() - digits);
    return out;
}

} // namespace cantorlab
