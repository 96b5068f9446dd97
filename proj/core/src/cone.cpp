#include "schurcone/cone.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

#include "schurcone/simplex.hpp"
#include "schurcone/tableau.hpp"

namespace schurcone {

namespace {

using GeneratorTable = std::vector<std::pair<FactorSet, SchurVector>>;

std::shared_ptr<const GeneratorTable> generator_table(const ConeSpec& spec) {
    static std::map<std::pair<int, int>, std::shared_ptr<const GeneratorTable>> cache;
    static std::mutex cache_mutex;
    const auto key = std::make_pair(spec.N, spec.k);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto table = std::make_shared<GeneratorTable>();
    for (FactorSet& A : enumerate_sp(spec.N, spec.k)) {
        SchurVector v = schur_product(A);
        table->emplace_back(std::move(A), std::move(v));
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, table);
    return cache[key];
}

std::vector<Rational> dense_coefficients(const SchurVector& v, const std::vector<Partition>& rows) {
    std::vector<Rational> out;
    out.reserve(rows.size());
    for (const Partition& mu : rows) out.push_back(v.coefficient(mu));
    return out;
}

void run_indexed(size_t count, int jobs, const std::function<void(size_t)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= count) return;
            body(i);
        }
    };
    std::vector<std::future<void>> futures;
    const int spawn = std::min<int>(jobs, static_cast<int>(count));
    futures.reserve(static_cast<size_t>(spawn));
    for (int t = 0; t < spawn; ++t)
        futures.push_back(std::async(std::launch::async, worker));
    for (auto& f : futures) f.get();
}

}  // namespace

std::string to_string(const SeparationMode& mode) {
    switch (mode.kind) {
        case SeparationKind::Global: return "global";
        case SeparationKind::FromAbove: return "from_above";
        case SeparationKind::Interval:
            return "interval[" + mode.lam.to_string() + " .. " + mode.rho.to_string() + "]";
    }
    return "?";
}

std::vector<std::pair<FactorSet, SchurVector>> generators(const ConeSpec& spec) {
    if (spec.N < 0 || spec.k < 1) throw std::domain_error("cone requires N >= 0 and k >= 1");
    return *generator_table(spec);
}

ExtremalityResult is_extreme(const FactorSet& A, const ConeSpec& spec) {
    if (spec.N < 0 || spec.k < 1) throw std::domain_error("cone requires N >= 0 and k >= 1");
    if (A.weight() != spec.N || A.max_parts() > spec.k)
        throw std::domain_error("factor set is not a generator of this cone");

    const auto table = generator_table(spec);
    const std::vector<Partition> rows = partitions_of(spec.N);
    const SchurVector* target_vec = nullptr;
    for (const auto& [B, v] : *table)
        if (B == A) {
            target_vec = &v;
            break;
        }
    if (!target_vec) throw std::logic_error("generator enumeration missed a valid factor set");

    // Rival columns, deduplicated by exact vector equality.
    std::vector<std::vector<Rational>> columns;
    std::vector<const FactorSet*> column_sets;
    std::map<std::vector<Rational>, size_t> seen;
    for (const auto& [B, v] : *table) {
        if (B == A) continue;
        std::vector<Rational> col = dense_coefficients(v, rows);
        if (seen.emplace(col, columns.size()).second) {
            columns.push_back(std::move(col));
            column_sets.push_back(&B);
        }
    }
    const std::vector<Rational> target = dense_coefficients(*target_vec, rows);

    const ConicResult lp = conic_membership(columns, target);
    ExtremalityResult out;
    if (lp.in_cone) {
        out.extreme = false;
        for (size_t j = 0; j < columns.size(); ++j)
            if (lp.coefficients[j] != 0)
                out.witness.emplace_back(*column_sets[j], lp.coefficients[j]);
        return out;
    }

    out.extreme = true;
    SchurVector f(spec.N);
    for (size_t i = 0; i < rows.size(); ++i)
        if (lp.functional[i] != 0) f.add_term(rows[i], lp.functional[i]);
    Rational margin = inner_product(f, *target_vec);
    f *= Rational(1) / margin;  // normalize to margin exactly 1

    Rational max_other(0);
    for (size_t j = 0; j < columns.size(); ++j) {
        Rational dot(0);
        for (size_t i = 0; i < rows.size(); ++i)
            if (columns[j][i] != 0) dot += f.coefficient(rows[i]) * columns[j][i];
        max_other = std::max(max_other, dot);
    }
    if (max_other > 0) throw std::logic_error("extremality certificate fails verification");

    SeparationCertificate cert;
    cert.target = A;
    cert.f = std::move(f);
    cert.mode = SeparationMode::global();
    cert.margin = 1;
    cert.max_other = max_other;
    out.certificate = std::move(cert);
    return out;
}

SeparatorResult find_separator(const FactorSet& A, const Partition& lam, const Partition& rho) {
    if (phi(A) != lam) throw std::domain_error("find_separator requires phi(A) == lam");
    if (!dominates(rho, lam))
        throw std::domain_error("find_separator requires rho to dominate lam");

    const std::vector<Partition> interval = dominance_interval(lam, rho);
    std::vector<FactorSet> rivals;
    for (const Partition& nu : interval)
        for (FactorSet& B : enumerate_ssp_lambda(nu))
            if (B != A) rivals.push_back(std::move(B));

    std::vector<std::vector<Rational>> columns;
    columns.reserve(rivals.size());
    for (const FactorSet& B : rivals) {
        std::vector<Rational> col;
        col.reserve(interval.size());
        for (const Partition& mu : interval)
            col.push_back(Rational(lr_coefficient(B.factors(), mu)));
        columns.push_back(std::move(col));
    }
    std::vector<Rational> target;
    target.reserve(interval.size());
    for (const Partition& mu : interval)
        target.push_back(Rational(lr_coefficient(A.factors(), mu)));

    const ConicResult lp = conic_membership(columns, target);
    SeparatorResult out;
    if (lp.in_cone) {
        for (size_t j = 0; j < rivals.size(); ++j)
            if (lp.coefficients[j] != 0)
                out.infeasibility.emplace_back(rivals[j], lp.coefficients[j]);
        return out;
    }

    SchurVector f(A.weight());
    for (size_t i = 0; i < interval.size(); ++i)
        if (lp.functional[i] != 0) f.add_term(interval[i], lp.functional[i]);
    Rational margin(0);
    for (size_t i = 0; i < interval.size(); ++i) margin += lp.functional[i] * target[i];
    f *= Rational(1) / margin;

    const CheckResult check = separates_check(f, A, SeparationMode::interval(lam, rho));
    if (!check.ok) throw std::logic_error("interval separator fails verification");

    SeparationCertificate cert;
    cert.target = A;
    cert.f = std::move(f);
    cert.mode = SeparationMode::interval(lam, rho);
    cert.margin = check.margin;
    cert.max_other = check.max_other;
    out.certificate = std::move(cert);
    return out;
}

CheckResult separates_check(const SchurVector& f, const FactorSet& A, const SeparationMode& mode,
                            const CheckOptions& options) {
    CheckResult result;
    const int N = A.weight();
    if (f.degree() != N) {
        result.violations.push_back({"degree", "separator degree " + std::to_string(f.degree()) +
                                                   " does not match target weight " +
                                                   std::to_string(N)});
        return result;
    }

    std::vector<FactorSet> rivals;
    switch (mode.kind) {
        case SeparationKind::Global: {
            const std::vector<FactorSet> all =
                options.all_generators ? enumerate_sp(N, options.k) : enumerate_ssp(N);
            for (const FactorSet& B : all)
                if (B != A) rivals.push_back(B);
            break;
        }
        case SeparationKind::FromAbove: {
            const Partition lam = phi(A);
            for (const FactorSet& B : enumerate_ssp(N))
                if (B != A && dominates(phi(B), lam)) rivals.push_back(B);
            break;
        }
        case SeparationKind::Interval: {
            if (mode.lam.weight() != N || mode.rho.weight() != N) {
                result.violations.push_back({"support", "interval bounds are not partitions of " +
                                                            std::to_string(N)});
                return result;
            }
            for (const auto& [mu, c] : f.terms()) {
                if (!(dominates(mu, mode.lam) && dominates(mode.rho, mu)))
                    result.violations.push_back(
                        {"support", "s(" + mu.to_string() + ") lies outside the interval"});
            }
            for (const Partition& nu : dominance_interval(mode.lam, mode.rho))
                for (FactorSet& B : enumerate_ssp_lambda(nu))
                    if (B != A) rivals.push_back(std::move(B));
            break;
        }
    }

    result.margin = inner_with_product(f, A);
    if (result.margin <= 0)
        result.violations.push_back({"margin", "<f, s_A> = " + to_string(result.margin)});

    bool first_rival = true;
    for (const FactorSet& B : rivals) {
        const Rational v = inner_with_product(f, B);
        if (first_rival || v > result.max_other) result.max_other = v;
        first_rival = false;
        if (v > 0)
            result.violations.push_back({"rival", B.to_string() + " -> " + to_string(v)});
    }
    if (rivals.empty()) result.max_other = 0;

    result.ok = result.violations.empty();
    return result;
}

SchurVector lift_separator(const SchurVector& f, const FactorSet& A) {
    const CheckResult pre = separates_check(f, A, SeparationMode::from_above());
    if (!pre.ok)
        throw std::domain_error("lift_separator requires a separator from above");

    const Partition lam = phi(A);
    SchurVector u = f;
    // Descending lexicographic order is a linear extension of dominance,
    // so each step keeps the handled region a dual order ideal.
    for (const Partition& mu : partitions_of(A.weight())) {
        if (dominates(mu, lam)) continue;  // already covered from above
        Rational worst(0);
        bool any = false;
        for (const FactorSet& B : enumerate_ssp_lambda(mu)) {
            const Rational v = inner_with_product(u, B);
            if (!any || v > worst) worst = v;
            any = true;
        }
        if (any && worst > 0) u.add_term(mu, -worst);
    }

    const CheckResult post = separates_check(u, A, SeparationMode::global());
    if (!post.ok) throw std::logic_error("lifted separator fails the global check");
    return u;
}

Partition lambda_bracket(const Partition& lam, int i, int j) {
    if (!lam.has_distinct_parts())
        throw std::domain_error("lambda_bracket requires distinct parts");
    if (i < 0 || j <= i || j >= lam.length())
        throw std::domain_error("lambda_bracket requires indices 0 <= i < j < length");
    std::vector<int> parts = lam.parts();
    parts[static_cast<size_t>(i)] += 1;
    parts[static_cast<size_t>(j)] -= 1;
    if (parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Partition lambda_bracket(const Partition& lam, const Partition& rho) {
    if (rho.length() != 2) throw std::domain_error("lambda_bracket requires a two-part rho");
    if (!lam.has_distinct_parts())
        throw std::domain_error("lambda_bracket requires distinct parts");
    int i = -1, j = -1;
    for (int idx = 0; idx < lam.length(); ++idx) {
        if (lam[idx] == rho[0]) i = idx;
        if (lam[idx] == rho[1]) j = idx;
    }
    if (i < 0 || j < 0) throw std::domain_error("rho parts do not occur in lam");
    return lambda_bracket(lam, i, j);
}

bool lr_lemma_check(const FactorSet& A, const FactorSet& B, const Partition& rho) {
    const Partition lam = phi(A);
    if (phi(B) != lam) throw std::domain_error("lr_lemma_check requires phi(A) == phi(B)");
    if (!lam.has_distinct_parts())
        throw std::domain_error("lr_lemma_check requires distinct parts");
    if (rho.length() != 2) throw std::domain_error("lr_lemma_check requires a two-part rho");
    if (!A.contains(rho)) throw std::domain_error("rho must lie in A");
    if (B.contains(rho)) throw std::domain_error("rho must not lie in B");
    if (!agree_within(A, B, rho))
        throw std::domain_error("A and B must agree within rho");

    int i = -1, j = -1;
    for (int idx = 0; idx < lam.length(); ++idx) {
        if (lam[idx] == rho[0]) i = idx;
        if (lam[idx] == rho[1]) j = idx;
    }
    const Partition bracket = lambda_bracket(lam, i, j);
    const long long c_a = lr_coefficient(A.factors(), bracket);
    const long long c_b = lr_coefficient(B.factors(), bracket);
    bool ok = c_a + 1 == c_b;
    if (j == i + 1) ok = ok && c_a == 0 && c_b == 1;
    return ok;
}

SeparationCertificate distinct_parts_separator(const FactorSet& A) {
    const Partition lam = phi(A);
    if (!lam.has_distinct_parts())
        throw std::domain_error("distinct_parts_separator requires distinct parts");
    if (!is_nested(A))
        throw std::domain_error("distinct_parts_separator requires a nested factor set");

    const std::vector<FactorSet> ssp = enumerate_ssp_lambda(lam);
    std::set<FactorSet> y_set(ssp.begin(), ssp.end());
    SchurVector f = SchurVector::unit(lam);

    // Chain of combiner steps; the separation constant stays 1, so the
    // combiner weight is just the ceiling of the worst outside margin.
    for (const Partition& rho : inside_out_order(A)) {
        std::set<FactorSet> x_set;
        for (const FactorSet& B : y_set)
            if (B.contains(rho)) x_set.insert(B);
        if (x_set == y_set) continue;

        const Partition bracket = lambda_bracket(lam, rho);
        const long long c_a = lr_coefficient(A.factors(), bracket);
        SchurVector g(lam.weight());
        g.add_term(lam, Rational(c_a + 1));
        g.add_term(bracket, Rational(-1));

        Rational worst(0);
        for (const FactorSet& B : ssp) {
            if (y_set.count(B)) continue;
            worst = std::max(worst, inner_with_product(g, B));
        }
        const Rational b = worst > 0 ? Rational(rational_ceil(worst)) : Rational(0);

        SchurVector next = g;
        next += b * f;
        next.add_term(lam, -b);
        f = std::move(next);
        y_set = std::move(x_set);
    }
    if (!(y_set.size() == 1 && *y_set.begin() == A))
        throw std::logic_error("inside-out chain did not isolate the target");

    const Partition top = lam.length() >= 2 ? lambda_plus(lam) : lam;
    const SeparationMode mode = SeparationMode::interval(lam, top);
    const CheckResult check = separates_check(f, A, mode);
    if (!check.ok)
        throw std::logic_error("constructed separator fails the interval check");

    SeparationCertificate cert;
    cert.target = A;
    cert.f = std::move(f);
    cert.mode = mode;
    cert.margin = check.margin;
    cert.max_other = check.max_other;
    return cert;
}

Conjecture1Report verify_conjecture1(int N, int jobs) {
    Conjecture1Report report;
    report.N = N;
    const ConeSpec spec{N, 2};
    const auto table = generator_table(spec);

    std::vector<char> extreme(table->size(), 0);
    run_indexed(table->size(), jobs, [&](size_t i) {
        extreme[i] = is_extreme((*table)[i].first, spec).extreme ? 1 : 0;
    });

    std::set<FactorSet> nested;
    for (const FactorSet& A : enumerate_ssp(N)) nested.insert(A);
    report.nested_set.assign(nested.begin(), nested.end());

    for (size_t i = 0; i < table->size(); ++i) {
        const FactorSet& A = (*table)[i].first;
        const bool is_nested_a = nested.count(A) > 0;
        if (extreme[i]) report.extreme_set.push_back(A);
        if (extreme[i] && !is_nested_a) report.extreme_not_nested.push_back(A);
        if (!extreme[i] && is_nested_a) report.nested_not_extreme.push_back(A);
    }
    std::sort(report.extreme_set.begin(), report.extreme_set.end());
    report.consistent = report.extreme_not_nested.empty() && report.nested_not_extreme.empty();
    return report;
}

StrongSeparationReport verify_strong(int N, bool direct_odd, int jobs) {
    StrongSeparationReport report;
    report.N = N;
    const std::vector<FactorSet> all = enumerate_ssp(N);
    report.entries.resize(all.size());

    run_indexed(all.size(), jobs, [&](size_t idx) {
        const FactorSet& A = all[idx];
        StrongSeparationEntry entry;
        entry.A = A;
        entry.lam = phi(A);
        const Partition& lam = entry.lam;
        const int m = lam.length();

        if (m <= 1) {
            entry.route = "point";
            entry.from = lam;
            entry.to = lam;
            const SeparatorResult r = find_separator(A, lam, lam);
            entry.feasible = r.feasible();
            entry.verified = entry.feasible;
        } else if (m % 2 == 0) {
            const bool dagger_case = is_down_invertible(lam) && is_nested(down_set(A));
            entry.route = dagger_case ? "dagger" : "plusplus";
            entry.from = lam;
            entry.to = dagger_case ? lambda_dagger(lam) : lambda_plusplus(lam);
            const SeparatorResult r = find_separator(A, lam, entry.to);
            entry.feasible = r.feasible();
            entry.verified = entry.feasible;  // certificates are check-verified on construction
        } else if (direct_odd) {
            entry.route = "plusplus-direct";
            entry.from = lam;
            entry.to = lambda_plusplus(lam);
            const SeparatorResult r = find_separator(A, lam, entry.to);
            entry.feasible = r.feasible();
            entry.verified = entry.feasible;
        } else {
            // Odd lam: lift to the down-invertible up-shift, separate on
            // its dagger interval, then map the separator back down.
            entry.route = "up-dagger";
            entry.from = lam;
            entry.to = lambda_plusplus(lam);
            const FactorSet a_up = up_set(A);
            const Partition lam_up = up(lam);
            const SeparatorResult r = find_separator(a_up, lam_up, lambda_dagger(lam_up));
            entry.feasible = r.feasible();
            if (entry.feasible) {
                SchurVector f_down(N);
                for (const auto& [sigma, c] : r.certificate->f.terms())
                    f_down.add_term(down(sigma), c);
                const CheckResult check =
                    separates_check(f_down, A, SeparationMode::interval(lam, entry.to));
                entry.verified = check.ok;
            }
        }
        report.entries[idx] = std::move(entry);
    });

    report.all_ok = true;
    for (const auto& entry : report.entries)
        if (!entry.feasible || !entry.verified) report.all_ok = false;
    return report;
}

}  // namespace schurcone
