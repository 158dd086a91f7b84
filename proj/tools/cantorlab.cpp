// cantorlab: command-line front end for partition polynomials, clopen sets
// and certificates of non-homeomorphic binomially equivalent measures.
//
// Exit status: 0 success, 1 mathematical failure (not representable, no
// certificate, verification failed), 2 usage or parse error.

#include "cantorlab/algnum.hpp"
#include "cantorlab/certify.hpp"
#include "cantorlab/clopen.hpp"
#include "cantorlab/intpoly.hpp"
#include "cantorlab/io.hpp"
#include "cantorlab/partition.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

using namespace cantorlab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_math = 1;
constexpr int exit_usage = 2;

bool json_mode = false;

int emit(const Json& j)
{
    std::cout << j.dump() << '\n';
    return exit_ok;
}

const char* status_name(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::impossible:
        return "impossible";
    case SearchStatus::unknown:
        return "unknown";
    }
    return "unknown";
}

Json search_to_json(const LevelSearch& s)
{
    Json j;
    j["status"] = status_name(s.status);
    if (s.found())
        j["level"] = s.level;
    else
        j["reason"] = s.reason;
    return j;
}

ClopenSet load_clopen(const std::string& path)
{
    return clopen_from_json(parse_json(read_file(path)));
}

std::string decimal(const Rational& q)
{
    return to_decimal(q, 15);
}

std::size_t level_or_default(const std::optional<std::size_t>& given)
{
    return given ? *given : default_max_level();
}

// ---- subcommands ----------------------------------------------------------

int cmd_form(const std::string& text, std::size_t n)
{
    const IntPoly p = parse_poly(text);
    const auto f = to_form(p, n);
    if (json_mode) {
        Json j;
        j["poly"] = poly_to_json(p);
        j["n"] = n;
        j["representable"] = f.has_value();
        if (f)
            j["form"] = form_to_json(*f);
        emit(j);
    } else if (f) {
        std::cout << to_string(*f) << '\n';
    } else {
        std::cout << "not representable at level " << n << '\n';
    }
    return f ? exit_ok : exit_math;
}

int cmd_depth(const std::string& text, std::optional<std::size_t> max)
{
    const IntPoly p = parse_poly(text);
    const LevelSearch d = depth(p, level_or_default(max));
    if (json_mode) {
        Json j = search_to_json(d);
        j["poly"] = poly_to_json(p);
        if (d.found())
            j["form"] = form_to_json(*to_form(p, d.level));
        emit(j);
    } else if (d.found()) {
        std::cout << d.level << '\n';
    } else {
        std::cout << status_name(d.status) << ": " << d.reason << '\n';
    }
    return d.found() ? exit_ok : exit_math;
}

int cmd_dominates(const std::string& ptext, const std::string& qtext,
                  std::optional<std::size_t> max)
{
    const IntPoly p = parse_poly(ptext);
    const IntPoly q = parse_poly(qtext);
    const LevelSearch d = dominates(p, q, max ? *max : default_pair_level(p, q));
    if (json_mode) {
        Json j = search_to_json(d);
        if (d.found()) {
            j["p_form"] = form_to_json(*to_form(p, d.level));
            j["q_form"] = form_to_json(*to_form(q, d.level));
        }
        emit(j);
    } else if (d.found()) {
        std::cout << "dominates at level " << d.level << '\n'
                  << "  P " << to_string(*to_form(p, d.level)) << '\n'
                  << "  Q " << to_string(*to_form(q, d.level)) << '\n';
    } else {
        std::cout << status_name(d.status) << ": " << d.reason << '\n';
    }
    return d.found() ? exit_ok : exit_math;
}

int cmd_factor_x(const std::string& text, std::optional<std::size_t> max)
{
    const IntPoly p = parse_poly(text);
    const FactorOutX r = factor_out_x(p, level_or_default(max));
    if (json_mode) {
        Json j;
        j["status"] = status_name(r.status);
        if (r.cofactor) {
            j["cofactor"] = poly_to_json(*r.cofactor);
            j["form"] = form_to_json(*to_form(*r.cofactor, r.level));
        } else {
            j["reason"] = r.reason;
        }
        emit(j);
    } else if (r.cofactor) {
        std::cout << "x * (" << to_string(*r.cofactor) << ")\n"
                  << "cofactor form " << to_string(*to_form(*r.cofactor, r.level)) << '\n';
    } else {
        std::cout << status_name(r.status) << ": " << r.reason << '\n';
    }
    return r.cofactor ? exit_ok : exit_math;
}

int cmd_compose(const std::string& ptext, const std::string& qtext)
{
    const IntPoly p = parse_poly(ptext);
    const IntPoly q = parse_poly(qtext);
    const IntPoly pq = compose(p, q);
    const LevelSearch d = depth(pq, default_pair_level(p, q));
    if (json_mode) {
        Json j;
        j["poly"] = poly_to_json(pq);
        j["depth"] = search_to_json(d);
        if (d.found())
            j["form"] = form_to_json(*to_form(pq, d.level));
        emit(j);
    } else {
        std::cout << to_string(pq) << '\n';
        if (d.found())
            std::cout << "form " << to_string(*to_form(pq, d.level)) << '\n';
        else
            std::cout << "no partition form: " << d.reason << '\n';
    }
    return exit_ok;
}

int cmd_measure(const std::string& path)
{
    const ClopenSet c = load_clopen(path);
    const PartitionForm f = measure_form(c);
    if (json_mode) {
        Json j;
        j["form"] = form_to_json(f);
        j["poly"] = poly_to_json(expand(f));
        return emit(j);
    }
    std::cout << "form " << to_string(f) << '\n' << to_string(expand(f)) << '\n';
    return exit_ok;
}

int cmd_realize(const std::string& path)
{
    const ClopenSet c = realize(form_from_json(parse_json(read_file(path))));
    if (json_mode)
        return emit(clopen_to_json(c));
    for (const auto& w : c.word_strings())
        std::cout << w << '\n';
    return exit_ok;
}

int cmd_witness(const std::string& bpath, const std::string& apath)
{
    const ClopenSet b = load_clopen(bpath);
    const ClopenSet a = load_clopen(apath);
    const ClopenSet c = compose_witness(b, a);
    const IntPoly got = measure_poly(c);
    const IntPoly want = compose(measure_poly(b), measure_poly(a));
    if (json_mode) {
        Json j;
        j["set"] = clopen_to_json(c);
        j["poly"] = poly_to_json(got);
        j["matches_composition"] = got == want;
        emit(j);
    } else {
        for (const auto& w : c.word_strings())
            std::cout << w << '\n';
        std::cout << "measure " << to_string(got) << '\n'
                  << (got == want ? "equals" : "DIFFERS FROM") << " P_B(P_A) = " << to_string(want)
                  << '\n';
    }
    return got == want ? exit_ok : exit_math;
}

int cmd_spectrum(std::size_t n)
{
    const auto spectrum = measure_spectrum(n);
    if (json_mode) {
        Json j;
        j["n"] = n;
        j["count"] = spectrum.size();
        j["polys"] = Json::array();
        for (const auto& p : spectrum)
            j["polys"].push_back(poly_to_json(p));
        return emit(j);
    }
    for (const auto& p : spectrum)
        std::cout << to_string(p) << '\n';
    std::cout << spectrum.size() << " distinct\n";
    return exit_ok;
}

int cmd_isolate(const std::string& text, const std::string& lo, const std::string& hi,
                const std::string& width)
{
    const IntPoly p = parse_poly(text);
    const RationalInterval r =
        isolate_root(p, RationalInterval(parse_rational(lo), parse_rational(hi)),
                     parse_rational(width));
    if (json_mode)
        return emit(interval_to_json(r));
    std::cout << "[" << to_string(r.lo()) << ", " << to_string(r.hi()) << "]\n"
              << "~ [" << decimal(r.lo()) << ", " << decimal(r.hi()) << "]\n";
    return exit_ok;
}

int cmd_eisenstein(const std::string& text, const std::string& prime)
{
    const IntPoly p = parse_poly(text);
    const auto w = eisenstein_check(p, Integer(prime));
    if (json_mode) {
        Json j;
        j["poly"] = poly_to_json(p);
        j["prime"] = prime;
        j["eisenstein"] = w.has_value();
        emit(j);
    } else {
        std::cout << (w ? "Eisenstein at " : "not Eisenstein at ") << prime << '\n';
    }
    return w ? exit_ok : exit_math;
}

int cmd_beta(const std::string& path, const std::string& target)
{
    const PartitionForm f = form_from_json(parse_json(read_file(path)));
    const Rational t = parse_rational(target);
    const IntPoly m = beta_equation(f, t.get_num(), t.get_den());
    if (json_mode) {
        Json j;
        j["beta_poly"] = poly_to_json(m);
        return emit(j);
    }
    std::cout << to_string(m) << '\n';
    return exit_ok;
}

void print_certificate_summary(const Certificate& c)
{
    std::cout << "F          " << to_string(c.f) << "   form " << to_string(c.f_form) << '\n'
              << "G          " << to_string(c.g) << "   form " << to_string(c.g_form) << '\n'
              << "p          " << c.p << '\n'
              << "r minpoly  " << to_string(c.r_minpoly) << '\n'
              << "alpha poly " << to_string(c.alpha_poly) << "   (Eisenstein at "
              << c.eisenstein.prime << ")\n"
              << "r in       [" << decimal(c.r_interval.lo()) << ", "
              << decimal(c.r_interval.hi()) << "]\n"
              << "s in       [" << decimal(c.s_interval.lo()) << ", "
              << decimal(c.s_interval.hi()) << "]\n"
              << "sweep      m <= " << c.obstruction_sweep.max_m << ", level "
              << c.obstruction_sweep.max_level << ": " << c.obstruction_sweep.forms_checked
              << " forms, " << c.obstruction_sweep.violations << " violations\n";
}

void print_report(const VerificationReport& r)
{
    for (const auto& c : r.checks) {
        std::cout << (c.passed ? "  ok    " : "  FAIL  ") << c.name;
        if (!c.detail.empty())
            std::cout << " (" << c.detail << ")";
        std::cout << '\n';
    }
    std::cout << (r.passed() ? "certificate verified" : "certificate REJECTED") << '\n';
}

void write_out(const std::optional<std::string>& out, const Json& j)
{
    if (!out)
        return;
    std::ofstream file(*out);
    if (!file)
        throw ParseError("cannot write " + *out);
    file << j.dump(2) << '\n';
}

int cmd_certify(const std::string& ftext, const std::string& prime, const BuildOptions& options,
                const std::optional<std::string>& out)
{
    const Certificate c = build_certificate(parse_poly(ftext), Integer(prime), options);
    const Json j = certificate_to_json(c);
    write_out(out, j);
    if (json_mode)
        return emit(j);
    print_certificate_summary(c);
    return exit_ok;
}

int cmd_verify(const std::string& path, bool skip_recheck)
{
    const Certificate c = certificate_from_json(parse_json(read_file(path)));
    const VerificationReport r = verify_certificate(c, {.recheck_sweep = !skip_recheck});
    if (json_mode)
        emit(report_to_json(r));
    else
        print_report(r);
    return r.passed() ? exit_ok : exit_math;
}

int cmd_search(const std::string& prime, const SearchOptions& options)
{
    std::size_t count = 0;
    const auto on_cert = [&](const Certificate& c) {
        ++count;
        if (!json_mode)
            std::cout << "certificate  F = " << to_string(c.f) << "   r minpoly "
                      << to_string(c.r_minpoly) << '\n';
    };
    const auto on_skip = [&](const SkippedCandidate& s) {
        if (!json_mode)
            std::cout << "skipped      F = " << to_string(s.f) << "   [" << s.stage << "] "
                      << s.message << '\n';
    };
    const SearchResult result = search_family(Integer(prime), options, on_cert, on_skip);
    if (json_mode) {
        Json j;
        j["certificates"] = Json::array();
        for (const auto& c : result.certificates)
            j["certificates"].push_back(certificate_to_json(c));
        j["skipped"] = Json::array();
        for (const auto& s : result.skipped)
            j["skipped"].push_back({{"F", poly_to_json(s.f)}, {"stage", s.stage}, {"message", s.message}});
        emit(j);
    } else {
        std::cout << count << " certificate(s), " << result.skipped.size() << " skipped\n";
    }
    return count > 0 ? exit_ok : exit_math;
}

int cmd_verify_paper(const BuildOptions& options)
{
    const Certificate c = build_certificate(paper_f(), 3, options);
    const VerificationReport r = verify_certificate(c);
    if (json_mode) {
        emit(certificate_to_json(c));
    } else {
        print_certificate_summary(c);
        print_report(r);
    }
    return r.passed() ? exit_ok : exit_math;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact partition polynomials, Bernoulli measures on the Cantor set, and "
                 "certificates of binomially equivalent non-homeomorphic measures"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", json_mode, "Emit exactly one JSON document on stdout");

    std::function<int()> action;
    std::string poly, poly2, path, path2, prime, lo, hi, width = "1e-30", target = "1/2";
    std::size_t n = 0;
    std::optional<std::size_t> max;
    std::optional<std::string> out;
    bool skip_recheck = false;

    BuildOptions build;
    build.max_level = default_max_level();
    std::string build_width;
    const auto add_build_options = [&](CLI::App* sub) {
        sub->add_option("--max-level", build.max_level, "Bounded partition-form search level");
        sub->add_option("--sweep-max-m", build.sweep_max_m, "Obstruction sweep bound on m");
        sub->add_option("--sweep-max-level", build.sweep_max_level,
                        "Obstruction sweep level for K");
        sub->add_option("--width", build_width, "Root interval width, e.g. 1e-30");
    };
    const auto finish_build = [&] {
        if (!build_width.empty())
            build.width = parse_rational(build_width);
    };

    auto* form = app.add_subcommand("form", "Partition form of a polynomial at level n");
    form->add_option("poly", poly, "Polynomial")->required();
    form->add_option("--n", n, "Level")->required();
    form->callback([&] { action = [&] { return cmd_form(poly, n); }; });

    auto* dep = app.add_subcommand("depth", "Least level with a partition form");
    dep->add_option("poly", poly, "Polynomial")->required();
    dep->add_option("--max", max, "Search bound (default CANTORLAB_MAX_LEVEL or 64)");
    dep->callback([&] { action = [&] { return cmd_depth(poly, max); }; });

    auto* dom = app.add_subcommand("dominates", "Least level where P's form dominates Q's");
    dom->add_option("P", poly, "Dominating polynomial")->required();
    dom->add_option("Q", poly2, "Dominated polynomial")->required();
    dom->add_option("--max", max, "Search bound");
    dom->callback([&] { action = [&] { return cmd_dominates(poly, poly2, max); }; });

    auto* fx = app.add_subcommand("factor-x", "Write P = X * P1 with P1 a partition polynomial");
    fx->add_option("poly", poly, "Polynomial")->required();
    fx->add_option("--max", max, "Search bound");
    fx->callback([&] { action = [&] { return cmd_factor_x(poly, max); }; });

    auto* comp = app.add_subcommand("compose", "P(Q(x)) and its partition form");
    comp->add_option("P", poly, "Outer polynomial")->required();
    comp->add_option("Q", poly2, "Inner polynomial")->required();
    comp->callback([&] { action = [&] { return cmd_compose(poly, poly2); }; });

    auto* meas = app.add_subcommand("measure", "Measure polynomial of a clopen set");
    meas->add_option("clopen", path, "Clopen set JSON file")->required();
    meas->callback([&] { action = [&] { return cmd_measure(path); }; });

    auto* real = app.add_subcommand("realize", "A clopen set with the given partition form");
    real->add_option("form", path, "Partition form JSON file")->required();
    real->callback([&] { action = [&] { return cmd_realize(path); }; });

    auto* wit = app.add_subcommand("witness", "Clopen set with measure P_B(P_A)");
    wit->add_option("B", path, "Outer clopen set JSON file")->required();
    wit->add_option("A", path2, "Inner clopen set JSON file")->required();
    wit->callback([&] { action = [&] { return cmd_witness(path, path2); }; });

    auto* spec = app.add_subcommand("spectrum", "Distinct measure polynomials at word length n");
    spec->add_option("--n", n, "Word length (at most 4)")->required();
    spec->callback([&] { action = [&] { return cmd_spectrum(n); }; });

    auto* iso = app.add_subcommand("isolate", "Isolate a root by exact bisection");
    iso->add_option("poly", poly, "Squarefree polynomial")->required();
    iso->add_option("--lo", lo, "Bracket lower end")->required();
    iso->add_option("--hi", hi, "Bracket upper end")->required();
    iso->add_option("--width", width, "Target width")->capture_default_str();
    iso->callback([&] { action = [&] { return cmd_isolate(poly, lo, hi, width); }; });

    auto* eis = app.add_subcommand("eisenstein", "Eisenstein criterion at a prime");
    eis->add_option("poly", poly, "Polynomial")->required();
    eis->add_option("--p", prime, "Prime")->required();
    eis->callback([&] { action = [&] { return cmd_eisenstein(poly, prime); }; });

    auto* beta = app.add_subcommand("beta", "Integer equation for beta = (1-t)/t when f(t) = target");
    beta->add_option("form", path, "Partition form JSON file")->required();
    beta->add_option("--target", target, "Target value")->capture_default_str();
    beta->callback([&] { action = [&] { return cmd_beta(path, target); }; });

    auto* cert = app.add_subcommand("certify", "Build a certificate for F and prime p");
    cert->add_option("--f", poly, "F")->required();
    cert->add_option("--p", prime, "Odd prime")->required();
    cert->add_option("--out", out, "Also write the certificate JSON here");
    add_build_options(cert);
    cert->callback([&] {
        action = [&] {
            finish_build();
            return cmd_certify(poly, prime, build, out);
        };
    });

    auto* ver = app.add_subcommand("verify", "Independently check a certificate");
    ver->add_option("cert", path, "Certificate JSON file")->required();
    ver->add_flag("--no-sweep-recheck", skip_recheck, "Trust the recorded sweep counts");
    ver->callback([&] { action = [&] { return cmd_verify(path, skip_recheck); }; });

    SearchOptions search;
    std::string bound = "3";
    auto* srch = app.add_subcommand("search", "Certify every F in a bounded family");
    srch->add_option("--p", prime, "Odd prime")->required();
    srch->add_option("--max-degree", search.max_degree, "Largest degree of F")->capture_default_str();
    srch->add_option("--coeff-bound", bound, "Coefficient bound")->capture_default_str();
    add_build_options(srch);
    srch->callback([&] {
        action = [&] {
            finish_build();
            search.coeff_bound = Integer(bound);
            search.build = build;
            return cmd_search(prime, search);
        };
    });

    auto* paper = app.add_subcommand("verify-paper", "Rebuild and verify the F = 3x - 3x^2 example");
    add_build_options(paper);
    paper->callback([&] {
        action = [&] {
            finish_build();
            return cmd_verify_paper(build);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        return action();
    } catch (const CertificationError& e) {
        std::cerr << "cantorlab: no certificate: " << e.what() << '\n';
        return exit_math;
    } catch (const Error& e) {
        std::cerr << "cantorlab: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "cantorlab: internal error: " << e.what() << '\n';
        return exit_math;
    }
}
