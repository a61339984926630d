// braidex: braid indices of alternating two-bridge and Montesinos links
// from their standard diagrams, with an exact HOMFLY cross-check.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidex/homfly.hpp"
#include "braidex/montesinos.hpp"
#include "braidex/pd_io.hpp"
#include "braidex/rational.hpp"
#include "braidex/reduction.hpp"
#include "braidex/seifert.hpp"
#include "braidex/verify.hpp"

namespace {

using nlohmann::json;
using namespace braidex;

long long parse_ll(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError(std::string("cannot parse ") + what + ": " + s);
    }
}

// "alpha/beta" with auto-reduction (and a warning) of non-coprime input.
Fraction parse_two_bridge(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        throw InputError("expected alpha/beta, got: " + text);
    long long alpha = parse_ll(text.substr(0, slash), "alpha");
    long long beta = parse_ll(text.substr(slash + 1), "beta");
    if (alpha <= 0 || beta <= 0)
        throw InputError("two-bridge fraction must be positive");
    if (beta >= alpha)
        throw InputError("two-bridge fraction needs beta < alpha");
    const long long g = std::gcd(alpha, beta);
    if (g != 1) {
        std::cerr << "warning: " << alpha << "/" << beta
                  << " is not coprime, reducing to " << alpha / g << "/"
                  << beta / g << "\n";
        alpha /= g;
        beta /= g;
    }
    return Fraction::make(alpha, beta);
}

// "b1/a1,b2/a2,...,e=N"; fractions outside (0,1) are reduced mod 1 with
// the integer parts absorbed into e; an all-negative family is normalized
// by mirroring.
MontesinosPresentation parse_montesinos(const std::string& text) {
    std::vector<std::pair<long long, long long>> raw;  // (beta, alpha)
    bool have_e = false;
    long long e = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.rfind("e=", 0) == 0) {
            if (have_e) throw InputError("duplicate e= entry");
            e = parse_ll(item.substr(2), "e");
            have_e = true;
            continue;
        }
        if (have_e) throw InputError("e= must come last");
        const auto slash = item.find('/');
        if (slash == std::string::npos)
            throw InputError("expected beta/alpha tangle entry, got: " +
                             item);
        const long long beta = parse_ll(item.substr(0, slash), "beta");
        const long long alpha = parse_ll(item.substr(slash + 1), "alpha");
        if (alpha <= 0) throw InputError("tangle alpha must be positive");
        if (beta == 0 || beta % alpha == 0)
            throw InputError("tangle fraction must not be an integer");
        raw.emplace_back(beta, alpha);
    }
    if (raw.size() < 2)
        throw InputError("a Montesinos input needs at least two tangles");

    // absorb integer parts: beta/alpha = floor + frac, e += floor
    long long e_norm = e;
    std::vector<std::pair<long long, long long>> frac;
    for (auto [beta, alpha] : raw) {
        long long q = beta / alpha;
        long long r = beta % alpha;
        if (r < 0) {
            r += alpha;
            q -= 1;
        }
        e_norm += q;
        frac.emplace_back(r, alpha);
    }
    bool mirrored = false;
    if (e_norm < 0) {
        // Negative residual twisting: pass to the mirror image, whose
        // braid index is the same. Mirroring sends each fraction x to -x,
        // i.e. to 1 - x with one unit absorbed into e.
        mirrored = true;
        for (auto& [beta, alpha] : frac) beta = alpha - beta;
        e_norm = -e_norm - static_cast<long long>(frac.size());
        if (e_norm < 0)
            throw InputError(
                "presentation is not an alternating Montesinos link in "
                "normal form (residual twisting has mixed sign)");
    }
    std::vector<Fraction> tangles;
    for (auto [beta, alpha] : frac) {
        const long long g = std::gcd(alpha, beta);
        tangles.push_back(Fraction::make(alpha / g, beta / g));
    }
    MontesinosPresentation p =
        MontesinosPresentation::make(tangles, static_cast<int>(e_norm),
                                     mirrored);
    return p;
}

json sv_json(const SignedVector& sv) {
    json j;
    j["vector"] = sv.entries;
    j["blocks"] = json::array();
    for (const auto& b : sv.blocks) {
        std::vector<int> blk(sv.entries.begin() + b.first,
                             sv.entries.begin() + b.last + 1);
        j["blocks"].push_back(blk);
    }
    return j;
}

json verify_json(const OrientedDiagram& d, long long formula_b,
                 const ReductionReport& red, int cap) {
    json v;
    v["s"] = seifert_decompose(d).circle_count;
    v["w"] = d.writhe();
    v["r_plus"] = red.r_plus;
    v["r_minus"] = red.r_minus;
    if (d.crossing_count() > cap) {
        v["mode"] = "formula-only";
        return v;
    }
    HomflyOptions opts;
    opts.crossing_cap = cap;
    HomflyEngine engine(opts);
    const Laurent2 h = engine.evaluate(d);
    morton_bounds_check(d, h);
    const AExtremes ex = a_extremes(h);
    v["mode"] = "full";
    v["homfly_E"] = ex.max_a;
    v["homfly_e"] = ex.min_a;
    v["mwf"] = mwf_lower_bound(h);
    v["base_equations_hold"] =
        ex.max_a == v["s"].get<int>() - v["w"].get<int>() - 1 -
                        2 * red.r_minus &&
        ex.min_a == -v["s"].get<int>() - v["w"].get<int>() + 1 +
                        2 * red.r_plus;
    v["agree"] = v["mwf"] == formula_b && v["base_equations_hold"];
    return v;
}

void print_human(const json& j, std::ostream& os, int indent = 0) {
    os << j.dump(2) << "\n";
    (void)indent;
}

int run_rational(const std::string& input, const std::string& orientation,
                 bool do_verify, bool json_out, int cap) {
    const Fraction f = parse_two_bridge(input);
    const auto cf = odd_continued_fraction(f);
    const FourPlatSkeleton skel = build_4plat(cf);
    const int nchoice = fourplat_orientation_count(skel);

    std::vector<int> choices;
    if (orientation == "all") {
        for (int c = 0; c < nchoice; ++c) choices.push_back(c);
    } else if (orientation == "A") {
        choices.push_back(0);
    } else if (orientation == "B") {
        if (nchoice < 2)
            throw InputError("orientation B: this two-bridge link is a "
                             "knot with a single orientation");
        choices.push_back(1);
    } else {
        throw InputError("orientation must be A, B or all");
    }

    json out;
    out["alpha"] = f.alpha;
    out["beta"] = f.beta;
    out["cf"] = cf;
    out["components"] = nchoice == 1 ? 1 : 2;
    out["signed_vectors"] = json::array();
    bool all_agree = true;
    for (int c : choices) {
        const FourPlat plat = orient_4plat(skel, c);
        const SignedVector sv = signed_vector(plat);
        const long long b = braid_index_rational(sv);
        json rec = sv_json(sv);
        rec["choice"] = std::string(1, static_cast<char>('A' + c));
        rec["braid_index"] = b;
        if (do_verify) {
            rec["verify"] =
                verify_json(plat.diagram, b, reduction_rational(sv), cap);
            if (rec["verify"]["mode"] == "full" &&
                rec["verify"]["agree"] != true)
                all_agree = false;
        }
        out["signed_vectors"].push_back(std::move(rec));
    }
    if (json_out)
        std::cout << out.dump() << "\n";
    else
        print_human(out, std::cout);
    return all_agree ? 0 : 2;
}

int run_montesinos(const std::string& input, const std::string& orientation,
                   bool do_verify, bool json_out, int cap) {
    const MontesinosPresentation p = parse_montesinos(input);
    if (p.mirrored)
        std::cerr << "note: input normalized by mirroring; braid index is "
                     "mirror-invariant\n";
    const int nchoice = montesinos_orientation_count(p);
    std::vector<int> choices;
    if (orientation == "all" || orientation.empty()) {
        for (int c = 0; c < nchoice; ++c) choices.push_back(c);
    } else {
        const long long c = parse_ll(orientation, "orientation index");
        if (c < 0 || c >= nchoice)
            throw InputError("orientation index out of range (have " +
                             std::to_string(nchoice) + " orientations)");
        choices.push_back(static_cast<int>(c));
    }

    json out;
    out["presentation"] = p.to_string();
    out["orientation_count"] = nchoice;
    out["orientations"] = json::array();
    bool all_agree = true;
    long long min_b = -1;
    for (int c : choices) {
        const MontesinosAnalysis an = analyze_montesinos(p, c);
        json rec;
        rec["choice"] = c;
        rec["class"] = to_string(an.link_class);
        rec["eta"] = an.eta;
        rec["e"] = an.presentation.e;
        rec["tangles"] = json::array();
        for (std::size_t t = 0; t < an.tangles.size(); ++t) {
            const TangleAnalysis& ta = an.tangles[t];
            json tj;
            tj["fraction"] = std::to_string(p.tangles[t].beta) + "/" +
                             std::to_string(p.tangles[t].alpha);
            tj["cf"] = ta.cf;
            tj["signed"] = sv_json(ta.sv);
            tj["parity"] = static_cast<int>(ta.parity);
            tj["delta"] = ta.delta.to_string();
            rec["tangles"].push_back(std::move(tj));
        }
        if (an.link_class == MontesinosClass::B)
            rec["delta0"] = an.delta0_value;
        rec["braid_index"] = an.braid_index;
        if (min_b < 0 || an.braid_index < min_b) min_b = an.braid_index;
        if (do_verify) {
            rec["verify"] = verify_json(an.diagram, an.braid_index,
                                        reduction_montesinos(an), cap);
            if (rec["verify"]["mode"] == "full" &&
                rec["verify"]["agree"] != true)
                all_agree = false;
        }
        out["orientations"].push_back(std::move(rec));
    }
    if (choices.size() > 1) out["min_braid_index_over_orientations"] = min_b;
    if (json_out)
        std::cout << out.dump() << "\n";
    else
        print_human(out, std::cout);
    return all_agree ? 0 : 2;
}

int run_homfly(const std::string& pd_path, bool trace, bool json_out,
               int cap) {
    const OrientedDiagram d = read_pd(load_pd_file(pd_path));
    HomflyOptions opts;
    opts.crossing_cap = cap;
    std::ostringstream trace_buf;
    if (trace) opts.trace = &trace_buf;
    HomflyEngine engine(opts);
    const Laurent2 h = engine.evaluate(d);
    const AExtremes ex = a_extremes(h);
    const MortonReport morton = morton_bounds_check(d, h);

    json out;
    out["crossings"] = d.crossing_count();
    out["components"] = d.components().count();
    out["s"] = seifert_decompose(d).circle_count;
    out["w"] = d.writhe();
    out["homfly"] = h.to_string();
    out["E"] = ex.max_a;
    out["e"] = ex.min_a;
    out["mwf"] = mwf_lower_bound(h);
    out["morton_high_slack"] = morton.high_slack;
    out["morton_low_slack"] = morton.low_slack;
    if (trace) std::cerr << trace_buf.str();
    if (json_out)
        std::cout << out.dump() << "\n";
    else
        print_human(out, std::cout);
    return 0;
}

int run_verify_cmd(const std::string& family, int max_crossings,
                   int max_tangles, int cap, int threads,
                   const std::string& out_path) {
    VerifyOptions opts;
    opts.family = family;
    opts.max_crossings = max_crossings;
    opts.max_tangles = max_tangles;
    opts.crossing_cap = cap;
    opts.threads = threads;

    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!out_path.empty() && out_path != "-") {
        out_file.open(out_path);
        if (!out_file)
            throw InputError("cannot open report file: " + out_path);
        out = &out_file;
    }
    const VerifySummary summary = run_verify(opts, *out);
    std::cerr << "verify: " << summary.records << " records, "
              << summary.disagreements << " disagreements, "
              << summary.formula_only << " formula-only, "
              << static_cast<long long>(summary.elapsed_ms) << " ms\n";
    return summary.disagreements == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid index of alternating two-bridge and Montesinos "
                 "links, with HOMFLY verification"};
    app.require_subcommand(1);

    std::string input, orientation = "all", pd_path, out_path = "-";
    std::string family;
    bool do_verify = false, json_out = false, trace = false;
    int cap = kDefaultCrossingCap;
    int max_crossings = 12, max_tangles = 4, threads = 0;

    auto* rational =
        app.add_subcommand("rational", "two-bridge link b(alpha,beta)");
    rational->add_option("fraction", input, "alpha/beta")->required();
    rational->add_option("--orientation", orientation, "A, B or all");
    rational->add_flag("--verify", do_verify, "run the HOMFLY cross-check");
    rational->add_flag("--json", json_out, "machine-readable output");
    rational->add_option("--cap", cap, "HOMFLY crossing cap");

    auto* montesinos = app.add_subcommand(
        "montesinos", "alternating Montesinos link M(b1/a1,...,e)");
    montesinos->add_option("presentation", input, "b1/a1,b2/a2,...,e=N")
        ->required();
    montesinos->add_option("--orientation", orientation,
                           "all or an orientation index");
    montesinos->add_flag("--verify", do_verify,
                         "run the HOMFLY cross-check");
    montesinos->add_flag("--json", json_out, "machine-readable output");
    montesinos->add_option("--cap", cap, "HOMFLY crossing cap");

    auto* homfly_cmd =
        app.add_subcommand("homfly", "HOMFLY polynomial of a PD-code file");
    homfly_cmd->add_option("--pd", pd_path, "PD-code JSON file")->required();
    homfly_cmd->add_flag("--trace", trace,
                         "emit the resolving tree to stderr");
    homfly_cmd->add_flag("--json", json_out, "machine-readable output");
    homfly_cmd->add_option("--cap", cap, "HOMFLY crossing cap");

    auto* verify_cmd = app.add_subcommand(
        "verify", "enumerate a family and cross-check formulas");
    verify_cmd->add_option("--family", family, "rational or montesinos")
        ->required();
    verify_cmd->add_option("--max-crossings", max_crossings,
                           "crossing budget for the enumeration");
    verify_cmd->add_option("--max-tangles", max_tangles,
                           "tangle budget (montesinos)");
    verify_cmd->add_option("--cap", cap, "HOMFLY crossing cap");
    verify_cmd->add_option("--threads", threads,
                           "worker threads (default: BRAIDEX_THREADS or "
                           "hardware)");
    verify_cmd->add_option("--out", out_path, "report file (JSON lines)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cap > kDefaultCrossingCap)
            std::cerr << "warning: crossing cap " << cap
                      << " above the default " << kDefaultCrossingCap
                      << "; large resolving trees can take minutes\n";
        if (rational->parsed())
            return run_rational(input, orientation, do_verify, json_out,
                                cap);
        if (montesinos->parsed())
            return run_montesinos(input, orientation, do_verify, json_out,
                                  cap);
        if (homfly_cmd->parsed())
            return run_homfly(pd_path, trace, json_out, cap);
        if (verify_cmd->parsed())
            return run_verify_cmd(family, max_crossings, max_tangles, cap,
                                  threads, out_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
