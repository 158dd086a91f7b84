#pragma once

// Text and JSON surfaces. Every integer in JSON is a decimal string.
//
//   polynomial    ["-5","18","-24","12"]           ascending powers
//                 or "12x^3 - 24x^2 + 18x - 5"      human form, x case-insensitive
//   form          {"n": 3, "a": ["0","3","3","0"]}
//   clopen set    {"n": 2, "words": ["01","10"]}    leftmost char = coordinate 1
//   interval      {"lo": "p/q", "hi": "p/q"}
//   certificate   see certificate_to_json

#include "cantorlab/algnum.hpp"
#include "cantorlab/certify.hpp"
#include "cantorlab/clopen.hpp"
#include "cantorlab/intpoly.hpp"
#include "cantorlab/partition.hpp"

#include <json.hpp>

#include <string>

namespace cantorlab {

using Json = nlohmann::ordered_json;

/// Malformed text or JSON; the message names the first offending token.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Accepts a JSON array of decimal strings or a human expression built from
/// terms c, x, x^k, c*x^k and cx^k joined by + and -.
IntPoly parse_poly(const std::string& text);
Rational parse_rational(const std::string& text);

Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);
/// Canonical one-line machine form, e.g. ["-5","18","-24","12"].
std::string poly_to_canonical(const IntPoly& p);

Json form_to_json(const PartitionForm& f);
PartitionForm form_from_json(const Json& j);

Json clopen_to_json(const ClopenSet& c);
ClopenSet clopen_from_json(const Json& j);

Json interval_to_json(const RationalInterval& i);
RationalInterval interval_from_json(const Json& j);

Json sweep_to_json(const SweepReport& s);
Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);

/// Parses text into JSON, reporting syntax errors as ParseError.
Json parse_json(const std::string& text);
std::string read_file(const std::string& path);

/// Truncated decimal rendering for display only, e.g. "0.7236067977".
std::string to_decimal(const Rational& q, unsigned digits);

} // namespace cantorlab
