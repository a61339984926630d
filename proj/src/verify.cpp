#include "braidex/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "braidex/pd_io.hpp"
#include "braidex/seifert.hpp"

namespace braidex {

nlohmann::json record_json(const VerificationRecord& rec) {
    nlohmann::json j;
    j["family"] = rec.family;
    j["presentation"] = rec.presentation;
    j["orientation_choice"] = rec.orientation_choice;
    j["orientation_count"] = rec.orientation_count;
    j["crossings"] = rec.crossings;
    j["s"] = rec.s;
    j["w"] = rec.w;
    j["formula_b"] = rec.formula_b;
    j["r_plus"] = rec.r_plus;
    j["r_minus"] = rec.r_minus;
    j["mode"] = rec.oracle_ran ? "full" : "formula-only";
    if (rec.oracle_ran) {
        j["homfly_E"] = rec.homfly_max_a;
        j["homfly_e"] = rec.homfly_min_a;
        j["mwf_b"] = rec.mwf_b;
        j["base_equations_hold"] = rec.base_equations_hold;
        j["agree"] = rec.agree;
    }
    return j;
}

namespace {

void gen_compositions(int total, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (total == 0) {
        if (cur.size() % 2 == 1) out.push_back(cur);
        return;
    }
    for (int a = 1; a <= total; ++a) {
        cur.push_back(a);
        gen_compositions(total - a, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> odd_compositions(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_compositions(total, cur, out);
    return out;
}

}  // namespace

std::vector<Fraction> enumerate_rational(int max_crossings) {
    check(max_crossings >= 2, "enumerate_rational: max_crossings >= 2");
    std::vector<Fraction> out;
    for (int total = 2; total <= max_crossings; ++total)
        for (const auto& cf : odd_compositions(total))
            out.push_back(fraction_of_cf(cf));
    return out;
}

std::vector<MontesinosPresentation> enumerate_montesinos(int max_crossings,
                                                         int max_tangles) {
    check(max_crossings >= 4 && max_tangles >= 2,
          "enumerate_montesinos: need max_crossings >= 4, max_tangles >= 2");
    // fractions grouped by continued-fraction entry sum, in vector order
    std::vector<std::vector<Fraction>> by_sum(max_crossings + 1);
    for (int t = 2; t <= max_crossings; ++t)
        for (const auto& cf : odd_compositions(t))
            by_sum[t].push_back(fraction_of_cf(cf));

    std::vector<MontesinosPresentation> out;
    std::vector<Fraction> chosen;
    // tangle sums as a composition, then fraction choices per slot
    std::function<void(int, int, int, int)> pick =
        [&](int k, int slot, int remaining, int e) {
            if (slot == k) {
                if (remaining == 0)
                    out.push_back(MontesinosPresentation::make(chosen, e));
                return;
            }
            const int slots_left = k - slot;
            for (int t = 2; t <= remaining - 2 * (slots_left - 1); ++t) {
                for (const Fraction& f : by_sum[t]) {
                    chosen.push_back(f);
                    pick(k, slot + 1, remaining - t, e);
                    chosen.pop_back();
                }
            }
        };
    for (int total = 4; total <= max_crossings; ++total)
        for (int k = 2; k <= max_tangles && 2 * k <= total; ++k)
            for (int e = 0; total - e >= 2 * k; ++e)
                pick(k, 0, total - e, e);
    return out;
}

namespace {

void fill_oracle(VerificationRecord& rec, const OrientedDiagram& d,
                 long long formula_b, const ReductionReport& red,
                 HomflyEngine& engine) {
    rec.formula_b = formula_b;
    rec.r_plus = red.r_plus;
    rec.r_minus = red.r_minus;
    rec.crossings = d.crossing_count();
    rec.s = seifert_decompose(d).circle_count;
    rec.w = d.writhe();
    if (d.crossing_count() > engine.options().crossing_cap) {
        rec.oracle_ran = false;
        return;
    }
    const Laurent2 h = engine.evaluate(d);
    morton_bounds_check(d, h);  // throws on violation
    const AExtremes ex = a_extremes(h);
    rec.oracle_ran = true;
    rec.homfly_max_a = ex.max_a;
    rec.homfly_min_a = ex.min_a;
    rec.mwf_b = mwf_lower_bound(h);
    rec.base_equations_hold =
        ex.max_a == rec.s - rec.w - 1 - 2 * rec.r_minus &&
        ex.min_a == -rec.s - rec.w + 1 + 2 * rec.r_plus;
    rec.agree = rec.mwf_b == formula_b && rec.base_equations_hold &&
                rec.s - (rec.r_plus + rec.r_minus) == formula_b;
}

}  // namespace

VerificationRecord cross_check_rational(const Fraction& f, int choice,
                                        HomflyEngine& engine) {
    const auto started = std::chrono::steady_clock::now();
    const auto cf = odd_continued_fraction(f);
    const FourPlatSkeleton skel = build_4plat(cf);
    const FourPlat plat = orient_4plat(skel, choice);
    const SignedVector sv = signed_vector(plat);

    VerificationRecord rec;
    rec.family = "rational";
    rec.presentation = std::to_string(f.alpha) + "/" + std::to_string(f.beta);
    rec.orientation_choice = choice;
    rec.orientation_count = plat.orientation_count;
    fill_oracle(rec, plat.diagram, braid_index_rational(sv),
                reduction_rational(sv), engine);
    rec.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return rec;
}

VerificationRecord cross_check_montesinos(const MontesinosPresentation& p,
                                          int choice, HomflyEngine& engine) {
    const auto started = std::chrono::steady_clock::now();
    const MontesinosAnalysis an = analyze_montesinos(p, choice);

    VerificationRecord rec;
    rec.family = "montesinos";
    rec.presentation = p.to_string();
    rec.orientation_choice = choice;
    rec.orientation_count = an.orientation_count;
    fill_oracle(rec, an.diagram, an.braid_index, reduction_montesinos(an),
                engine);
    rec.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return rec;
}

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BRAIDEX_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

struct Job {
    int presentation_index = 0;
    int choice = 0;
};

void dump_disagreement(const VerificationRecord& rec,
                       const OrientedDiagram& d, int cap) {
    std::ostringstream os;
    os << "verify: DISAGREEMENT at " << rec.presentation << " orientation "
       << rec.orientation_choice << "\n"
       << "  formula_b=" << rec.formula_b << " mwf_b=" << rec.mwf_b
       << " s=" << rec.s << " r+=" << rec.r_plus << " r-=" << rec.r_minus
       << "\n  pd: " << write_pd(d).dump() << "\n";
    if (d.crossing_count() <= 12) {
        os << "  resolving tree:\n";
        HomflyOptions opts;
        opts.crossing_cap = cap;
        opts.trace = &os;
        HomflyEngine tracer(opts);
        tracer.evaluate(d);
    }
    std::cerr << os.str();
}

}  // namespace

VerifySummary run_verify(const VerifyOptions& opts, std::ostream& report) {
    const auto started = std::chrono::steady_clock::now();
    const bool rational_family = opts.family == "rational";
    if (!rational_family && opts.family != "montesinos")
        throw InputError("verify: family must be rational or montesinos");

    std::vector<Fraction> fractions;
    std::vector<MontesinosPresentation> presentations;
    std::vector<Job> jobs;
    if (rational_family) {
        fractions = enumerate_rational(opts.max_crossings);
        for (int i = 0; i < static_cast<int>(fractions.size()); ++i) {
            const auto skel = build_4plat(odd_continued_fraction(fractions[i]));
            const int n = fourplat_orientation_count(skel);
            for (int c = 0; c < n; ++c) jobs.push_back({i, c});
        }
    } else {
        presentations =
            enumerate_montesinos(opts.max_crossings, opts.max_tangles);
        for (int i = 0; i < static_cast<int>(presentations.size()); ++i) {
            const int n = montesinos_orientation_count(presentations[i]);
            for (int c = 0; c < n; ++c) jobs.push_back({i, c});
        }
    }

    std::vector<std::string> lines(jobs.size());
    std::atomic<std::size_t> next_job{0};
    std::atomic<long long> disagreements{0};
    std::atomic<long long> formula_only{0};
    std::mutex failure_mutex;
    std::string first_failure;

    const int nthreads = resolve_thread_count(opts.threads);
    auto worker = [&]() {
        HomflyOptions hopts;
        hopts.crossing_cap = opts.crossing_cap;
        HomflyEngine engine(hopts);
        for (;;) {
            const std::size_t i = next_job.fetch_add(1);
            if (i >= jobs.size()) return;
            if (disagreements.load() > 0) return;  // abort remaining work
            const Job& job = jobs[i];
            VerificationRecord rec =
                rational_family
                    ? cross_check_rational(fractions[job.presentation_index],
                                           job.choice, engine)
                    : cross_check_montesinos(
                          presentations[job.presentation_index], job.choice,
                          engine);
            lines[i] = record_json(rec).dump();
            if (!rec.oracle_ran) formula_only.fetch_add(1);
            if (rec.oracle_ran && !rec.agree) {
                disagreements.fetch_add(1);
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (first_failure.empty()) {
                    first_failure = rec.presentation;
                    const OrientedDiagram d =
                        rational_family
                            ? orient_4plat(
                                  build_4plat(odd_continued_fraction(
                                      fractions[job.presentation_index])),
                                  job.choice)
                                  .diagram
                            : analyze_montesinos(
                                  presentations[job.presentation_index],
                                  job.choice)
                                  .diagram;
                    dump_disagreement(rec, d, opts.crossing_cap);
                }
            }
        }
    };

    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    VerifySummary summary;
    for (const std::string& line : lines) {
        if (line.empty()) continue;  // job skipped after an abort
        report << line << "\n";
        ++summary.records;
    }
    summary.disagreements = disagreements.load();
    summary.formula_only = formula_only.load();
    summary.first_failure = first_failure;
    summary.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    return summary;
}

}  // namespace braidex
