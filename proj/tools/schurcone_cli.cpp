// Command-line front end: Schur expansions, extreme-generator reports,
// separating certificates, nested-set tables, and conjecture sweeps.
// All numeric output is exact; reports are byte-identical across runs
// and --jobs settings (timings go to stderr).

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurcone/cone.hpp"
#include "schurcone/json_io.hpp"
#include "schurcone/schur.hpp"
#include "schurcone/tableau.hpp"

using namespace schurcone;
using nlohmann::json;

namespace {

constexpr int kDefaultCap = 16;

struct RunConfig {
    std::string format = "table";
    std::string out_path;
    int cap = kDefaultCap;
    int jobs = 1;
};

int env_cap() {
    if (const char* env = std::getenv("SCHURCONE_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("SCHURCONE_CAP", "must be an integer");
        }
    }
    return kDefaultCap;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
    cmd->add_option("--cap", cfg.cap, "Degree guardrail for exact computations")
        ->capture_default_str();
    cmd->add_option("--jobs", cfg.jobs, "Parallel queries for independent subproblems")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + cfg.out_path);
    out << text;
}

[[noreturn]] void refuse_cap(const std::string& what, int value, int cap) {
    std::cerr << "error: " << what << " = " << value << " exceeds the cap (" << cap
              << "); raise it with --cap or SCHURCONE_CAP\n";
    std::exit(1);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// ---- expand ---------------------------------------------------------------

int cmd_expand(const RunConfig& cfg, const std::string& a_text) {
    const FactorSet A = FactorSet::parse(a_text);
    if (A.weight() > cfg.cap) refuse_cap("product degree", A.weight(), cfg.cap);
    const SchurVector v = schur_product(A);

    std::ostringstream out;
    if (cfg.format == "json") {
        out << schur_vector_to_json(v).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "partition,coeff\n";
        for (const auto& [lam, c] : v.terms())
            out << csv_quote(lam.to_string()) << "," << to_string(c) << "\n";
    } else {
        for (const auto& [lam, c] : v.terms())
            out << "s(" << lam.to_string() << "): " << to_string(c) << "\n";
    }
    emit(cfg, out.str());
    return 0;
}

// ---- extreme --------------------------------------------------------------

int cmd_extreme(const RunConfig& cfg, int N, int k) {
    if (N > cfg.cap) refuse_cap("N", N, cfg.cap);
    const ConeSpec spec{N, k};
    const auto gens = generators(spec);

    std::vector<ExtremalityResult> results(gens.size());
    {
        std::vector<size_t> idx(gens.size());
        for (size_t i = 0; i < gens.size(); ++i) idx[i] = i;
        // is_extreme is a pure query; fan out and emit in canonical order.
        const int jobs = cfg.jobs;
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= gens.size()) return;
                results[i] = is_extreme(gens[i].first, spec);
            }
        };
        if (jobs <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    std::ostringstream out;
    size_t extreme_count = 0;
    for (const auto& r : results)
        if (r.extreme) ++extreme_count;

    if (cfg.format == "json") {
        json arr = json::array();
        for (size_t i = 0; i < gens.size(); ++i) {
            json entry{{"factors", gens[i].first.to_string()}, {"extreme", results[i].extreme}};
            if (results[i].extreme)
                entry["certificate"] = certificate_to_json(*results[i].certificate);
            else
                entry["witness"] = witness_to_json(gens[i].first, results[i].witness);
            arr.push_back(std::move(entry));
        }
        json report{{"N", N}, {"k", k}, {"generators", gens.size()},
                    {"extreme", extreme_count}, {"entries", std::move(arr)}};
        out << report.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "factors,extreme\n";
        for (size_t i = 0; i < gens.size(); ++i)
            out << csv_quote(gens[i].first.to_string()) << ","
                << (results[i].extreme ? "true" : "false") << "\n";
    } else {
        for (size_t i = 0; i < gens.size(); ++i) {
            out << gens[i].first.to_string() << "\t"
                << (results[i].extreme ? "extreme" : "not-extreme");
            if (!results[i].extreme) {
                out << "\t=";
                for (const auto& [B, c] : results[i].witness)
                    out << " + " << to_string(c) << "*[" << B.to_string() << "]";
            }
            out << "\n";
        }
        out << "total: " << gens.size() << " generators, " << extreme_count << " extreme\n";
    }
    emit(cfg, out.str());
    return 0;
}

// ---- separator ------------------------------------------------------------

int cmd_separator(const RunConfig& cfg, const std::string& a_text, const std::string& interval,
                  const std::string& from_text, const std::string& to_text, bool constructive) {
    const FactorSet A = FactorSet::parse(a_text);
    if (A.weight() > cfg.cap) refuse_cap("target degree", A.weight(), cfg.cap);
    const Partition lam = phi(A);

    if (constructive) {
        const SeparationCertificate cert = distinct_parts_separator(A);
        std::ostringstream out;
        if (cfg.format == "json") {
            out << certificate_to_json(cert).dump(2) << "\n";
        } else if (cfg.format == "csv") {
            out << "partition,coeff\n";
            for (const auto& [mu, c] : cert.f.terms())
                out << csv_quote(mu.to_string()) << "," << to_string(c) << "\n";
        } else {
            out << "target: " << cert.target.to_string() << "\n"
                << "mode: " << to_string(cert.mode) << "\n"
                << "f = " << cert.f.to_string() << "\n"
                << "margin = " << to_string(cert.margin)
                << ", max_other = " << to_string(cert.max_other) << "\n";
        }
        emit(cfg, out.str());
        return 0;
    }

    SeparationMode mode = SeparationMode::global();
    Partition to;
    if (interval == "plus") {
        to = lambda_plus(lam);
        mode = SeparationMode::interval(lam, to);
    } else if (interval == "plusplus") {
        to = lambda_plusplus(lam);
        mode = SeparationMode::interval(lam, to);
    } else if (interval == "dagger") {
        const int m = lam.length();
        if (m < 2 || lam[m - 2] <= lam[m - 1]) {
            std::cerr << "error: dagger interval requires lam[m-2] > lam[m-1]\n";
            return 1;
        }
        to = lambda_dagger(lam);
        mode = SeparationMode::interval(lam, to);
    } else if (interval == "above") {
        // A support inside [lam, (N)] loses nothing for these modes.
        to = A.weight() > 0 ? Partition({A.weight()}) : Partition();
        mode = SeparationMode::from_above();
    } else if (interval == "global") {
        to = A.weight() > 0 ? Partition({A.weight()}) : Partition();
        mode = SeparationMode::global();
    } else if (interval == "explicit") {
        if (to_text.empty()) {
            std::cerr << "error: --interval explicit requires --to (and --from = phi(A))\n";
            return 1;
        }
        const Partition from = from_text.empty() ? lam : Partition::parse(from_text);
        to = Partition::parse(to_text);
        if (from != lam) {
            std::cerr << "error: --from must equal phi(A) = " << lam.to_string() << "\n";
            return 1;
        }
        mode = SeparationMode::interval(from, to);
    }

    SeparatorResult result = find_separator(A, lam, to);
    // Wider modes: the interval LP already constrains the rivals inside
    // [lam, (N)]; re-verify against the requested quantification.
    if (result.feasible() && mode.kind != SeparationKind::Interval) {
        const CheckResult check = separates_check(result.certificate->f, A, mode);
        if (check.ok) {
            result.certificate->mode = mode;
            result.certificate->margin = check.margin;
            result.certificate->max_other = check.max_other;
        } else if (mode.kind == SeparationKind::Global) {
            SchurVector lifted = lift_separator(result.certificate->f, A);
            const CheckResult lifted_check = separates_check(lifted, A, mode);
            result.certificate->f = std::move(lifted);
            result.certificate->mode = mode;
            result.certificate->margin = lifted_check.margin;
            result.certificate->max_other = lifted_check.max_other;
        }
    }

    std::ostringstream out;
    if (cfg.format == "json") {
        if (result.feasible()) {
            out << certificate_to_json(*result.certificate).dump(2) << "\n";
        } else {
            json j = witness_to_json(A, result.infeasibility);
            j["feasible"] = false;
            j["mode"] = "interval";
            j["interval"] = json::array({lam.to_string(), to.to_string()});
            out << j.dump(2) << "\n";
        }
    } else if (cfg.format == "csv") {
        if (result.feasible()) {
            out << "partition,coeff\n";
            for (const auto& [mu, c] : result.certificate->f.terms())
                out << csv_quote(mu.to_string()) << "," << to_string(c) << "\n";
        } else {
            out << "factors,coeff\n";
            for (const auto& [B, c] : result.infeasibility)
                out << csv_quote(B.to_string()) << "," << to_string(c) << "\n";
        }
    } else {
        if (result.feasible()) {
            const auto& cert = *result.certificate;
            out << "target: " << cert.target.to_string() << "\n"
                << "mode: " << to_string(cert.mode) << "\n"
                << "f = " << cert.f.to_string() << "\n"
                << "margin = " << to_string(cert.margin)
                << ", max_other = " << to_string(cert.max_other) << "\n";
        } else {
            out << "infeasible on [" << lam.to_string() << " .. " << to.to_string()
                << "]: restricted to the interval, s_A is already a non-negative combination\n";
            for (const auto& [B, c] : result.infeasibility)
                out << "  " << to_string(c) << " * [" << B.to_string() << "]\n";
        }
    }
    emit(cfg, out.str());
    return 0;
}

// ---- ssp ------------------------------------------------------------------

// Pure enumeration, no exact LP behind it, so the degree cap does not
// apply; the paper-sized tables live above the default cap.
int cmd_ssp(const RunConfig& cfg, const std::string& lambda_text, bool with_planes) {
    const Partition lam = Partition::parse(lambda_text);
    const auto sets = enumerate_ssp_lambda(lam);

    std::ostringstream out;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& A : sets) {
            json entry{{"factors", A.to_string()}};
            if (with_planes) entry["plane_partition"] = psi(A).to_string();
            arr.push_back(std::move(entry));
        }
        json report{{"lambda", lam.to_string()}, {"count", sets.size()}, {"sets", std::move(arr)}};
        out << report.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << (with_planes ? "factors,plane_partition\n" : "factors\n");
        for (const auto& A : sets) {
            out << csv_quote(A.to_string());
            if (with_planes) out << "," << csv_quote(psi(A).to_string());
            out << "\n";
        }
    } else {
        for (const auto& A : sets) {
            out << A.to_string();
            if (with_planes) out << "\t" << psi(A).to_string();
            out << "\n";
        }
        out << "total: " << sets.size() << "\n";
    }
    emit(cfg, out.str());
    return 0;
}

// ---- check ----------------------------------------------------------------

int cmd_check(const RunConfig& cfg, const std::string& conjecture, int max_n, bool direct_odd) {
    if (max_n > cfg.cap) refuse_cap("max-N", max_n, cfg.cap);

    std::ostringstream out;
    json jreport = json::array();
    bool counterexample = false;
    std::string offending;

    for (int n = 1; n <= max_n; ++n) {
        const auto started = std::chrono::steady_clock::now();
        if (conjecture == "one") {
            const Conjecture1Report rep = verify_conjecture1(n, cfg.jobs);
            if (cfg.format == "json") {
                json entry{{"N", n},
                           {"consistent", rep.consistent},
                           {"extreme", rep.extreme_set.size()},
                           {"nested", rep.nested_set.size()}};
                if (!rep.consistent) {
                    json bad = json::array();
                    for (const auto& A : rep.extreme_not_nested) bad.push_back(A.to_string());
                    entry["extreme_not_nested"] = bad;
                    json bad2 = json::array();
                    for (const auto& A : rep.nested_not_extreme) bad2.push_back(A.to_string());
                    entry["nested_not_extreme"] = bad2;
                }
                jreport.push_back(std::move(entry));
            } else {
                out << "N=" << n << " conjecture=one status="
                    << (rep.consistent ? "ok" : "COUNTEREXAMPLE")
                    << " extreme=" << rep.extreme_set.size()
                    << " nested=" << rep.nested_set.size() << "\n";
                for (const auto& A : rep.extreme_not_nested)
                    out << "  extreme but not nested: " << A.to_string() << "\n";
                for (const auto& A : rep.nested_not_extreme)
                    out << "  nested but not extreme: " << A.to_string() << "\n";
            }
            if (!rep.consistent) {
                counterexample = true;
                if (offending.empty()) {
                    if (!rep.extreme_not_nested.empty())
                        offending = rep.extreme_not_nested.front().to_string();
                    else if (!rep.nested_not_extreme.empty())
                        offending = rep.nested_not_extreme.front().to_string();
                }
            }
        } else {
            const StrongSeparationReport rep = verify_strong(n, direct_odd, cfg.jobs);
            if (cfg.format == "json") {
                json entries = json::array();
                for (const auto& e : rep.entries)
                    entries.push_back({{"A", e.A.to_string()},
                                       {"lambda", e.lam.to_string()},
                                       {"route", e.route},
                                       {"interval", json::array({e.from.to_string(), e.to.to_string()})},
                                       {"feasible", e.feasible},
                                       {"verified", e.verified}});
                jreport.push_back(
                    {{"N", n}, {"all_ok", rep.all_ok}, {"entries", std::move(entries)}});
            } else {
                out << "N=" << n << " conjecture=strong status=" << (rep.all_ok ? "ok" : "FAIL")
                    << " sets=" << rep.entries.size() << "\n";
                for (const auto& e : rep.entries) {
                    if (e.feasible && e.verified) continue;
                    out << "  unseparated: " << e.A.to_string() << " route=" << e.route << "\n";
                }
            }
            if (!rep.all_ok) {
                counterexample = true;
                for (const auto& e : rep.entries)
                    if (!(e.feasible && e.verified) && offending.empty())
                        offending = e.A.to_string();
            }
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        std::cerr << "check N=" << n << " took " << elapsed << " ms\n";
    }

    if (cfg.format == "json") out << jreport.dump(2) << "\n";
    emit(cfg, out.str());
    if (counterexample) {
        std::cerr << "counterexample: " << offending << "\n";
        return 2;
    }
    return 0;
}

// ---- lr / kostka ----------------------------------------------------------

int cmd_lr(const RunConfig& cfg, const std::string& a_text, const std::string& lambda_text,
           const std::string& pi_text) {
    const FactorSet A = FactorSet::parse(a_text);
    const Partition lam = Partition::parse(lambda_text);
    if (A.weight() > cfg.cap) refuse_cap("product degree", A.weight(), cfg.cap);
    std::vector<int> pi;
    if (!pi_text.empty()) {
        const Composition parsed = Composition::parse(pi_text);
        pi = parsed.entries();
    }
    const long long value = lr_coefficient(A.factors(), lam, pi);
    std::ostringstream out;
    if (cfg.format == "json")
        out << json{{"factors", A.to_string()}, {"lambda", lam.to_string()}, {"value", value}}.dump(2)
            << "\n";
    else if (cfg.format == "csv")
        out << "value\n" << value << "\n";
    else
        out << value << "\n";
    emit(cfg, out.str());
    return 0;
}

int cmd_kostka(const RunConfig& cfg, const std::string& lambda_text,
               const std::string& content_text) {
    const Partition lam = Partition::parse(lambda_text);
    if (lam.weight() > cfg.cap) refuse_cap("|lambda|", lam.weight(), cfg.cap);
    const Composition content = Composition::parse(content_text);
    const long long value = kostka(lam, content);
    std::ostringstream out;
    if (cfg.format == "json")
        out << json{{"lambda", lam.to_string()}, {"content", content.to_string()}, {"value", value}}
                   .dump(2)
            << "\n";
    else if (cfg.format == "csv")
        out << "value\n" << value << "\n";
    else
        out << value << "\n";
    emit(cfg, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the Schur cone and the cone of log concavity"};
    app.require_subcommand(1);

    RunConfig cfg;
    try {
        cfg.cap = env_cap();
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }

    std::string a_text, lambda_text, content_text, pi_text, from_text, to_text;
    std::string interval = "plus", conjecture = "one";
    int N = 0, k = 2, max_n = 6;
    bool with_planes = false, direct_odd = false, constructive = false;

    CLI::App* expand = app.add_subcommand("expand", "Schur expansion of a product s_A");
    expand->add_option("--A", a_text, "Factor set, e.g. \"3,1;2\"")->required();
    add_common(expand, cfg);

    CLI::App* extreme = app.add_subcommand("extreme", "Extremality report for all generators");
    extreme->add_option("--N", N, "Degree")->required();
    extreme->add_option("--k", k, "Row bound for the factors")->capture_default_str();
    add_common(extreme, cfg);

    CLI::App* separator = app.add_subcommand("separator", "Separating certificate for one product");
    separator->add_option("--A", a_text, "Factor set")->required();
    separator->add_option("--interval", interval, "Interval mode")
        ->check(CLI::IsMember({"plus", "plusplus", "dagger", "above", "global", "explicit"}))
        ->capture_default_str();
    separator->add_option("--from", from_text, "Explicit interval lower bound (= phi(A))");
    separator->add_option("--to", to_text, "Explicit interval upper bound");
    separator->add_flag("--constructive", constructive,
                        "Use the inside-out construction (distinct parts only) instead of the LP");
    add_common(separator, cfg);

    CLI::App* ssp = app.add_subcommand("ssp", "Nested factor sets with a given part multiset");
    ssp->add_option("--lambda", lambda_text, "Partition")->required();
    ssp->add_flag("--plane-partitions", with_planes, "Include the two-row plane partitions");
    add_common(ssp, cfg);

    CLI::App* check = app.add_subcommand("check", "Sweep a conjecture up to a degree bound");
    check->add_option("--conjecture", conjecture, "Which statement to check")
        ->check(CLI::IsMember({"one", "strong"}))
        ->capture_default_str();
    check->add_option("--max-N", max_n, "Check all degrees 1..max-N")->capture_default_str();
    check->add_flag("--direct", direct_odd, "Solve odd cases directly instead of the up-shift");
    add_common(check, cfg);

    CLI::App* lr = app.add_subcommand("lr", "One Littlewood-Richardson coefficient");
    lr->add_option("--A", a_text, "Factor set")->required();
    lr->add_option("--lambda", lambda_text, "Target partition")->required();
    lr->add_option("--pi", pi_text, "Optional block permutation, e.g. \"4,2,3,8,1,5,9,7,6\"");
    add_common(lr, cfg);

    CLI::App* kostka_cmd = app.add_subcommand("kostka", "One Kostka number");
    kostka_cmd->add_option("--lambda", lambda_text, "Shape")->required();
    kostka_cmd->add_option("--content", content_text, "Content composition")->required();
    add_common(kostka_cmd, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) return cmd_expand(cfg, a_text);
        if (extreme->parsed()) return cmd_extreme(cfg, N, k);
        if (separator->parsed())
            return cmd_separator(cfg, a_text, interval, from_text, to_text, constructive);
        if (ssp->parsed()) return cmd_ssp(cfg, lambda_text, with_planes);
        if (check->parsed()) return cmd_check(cfg, conjecture, max_n, direct_odd);
        if (lr->parsed()) return cmd_lr(cfg, a_text, lambda_text, pi_text);
        if (kostka_cmd->parsed()) return cmd_kostka(cfg, lambda_text, content_text);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
