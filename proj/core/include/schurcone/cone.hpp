#ifndef SCHURCONE_CONE_HPP
#define SCHURCONE_CONE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurcone/nested.hpp"
#include "schurcone/numeric.hpp"
#include "schurcone/partition.hpp"
#include "schurcone/schur.hpp"

namespace schurcone {

/// The cone spanned by the products s_A over all factor multisets of
/// weight N with factors of at most k parts.
struct ConeSpec {
    int N = 0;
    int k = 1;
};

enum class SeparationKind { Global, FromAbove, Interval };

struct SeparationMode {
    SeparationKind kind = SeparationKind::Global;
    Partition lam, rho;  // interval bounds, Interval only

    static SeparationMode global() { return {SeparationKind::Global, {}, {}}; }
    static SeparationMode from_above() { return {SeparationKind::FromAbove, {}, {}}; }
    static SeparationMode interval(Partition lam, Partition rho) {
        return {SeparationKind::Interval, std::move(lam), std::move(rho)};
    }
    friend bool operator==(const SeparationMode&, const SeparationMode&) = default;
};

std::string to_string(const SeparationMode& mode);

/// Rival quantification for separates_check. The default follows the
/// nested-set separation definition; all_generators widens the rival
/// set to every generator of SP_N^k.
struct CheckOptions {
    bool all_generators = false;
    int k = 2;
};

struct CheckViolation {
    std::string clause;  // "degree", "support", "margin", "rival"
    std::string detail;
};

struct CheckResult {
    bool ok = false;
    Rational margin{0};     // <f, s_A>
    Rational max_other{0};  // max over tested rivals, 0 when none
    std::vector<CheckViolation> violations;
};

/// A vector f positive on the target and non-positive on every rival of
/// the mode, together with the verified margins.
struct SeparationCertificate {
    FactorSet target;
    SchurVector f;
    SeparationMode mode;
    Rational margin{0};
    Rational max_other{0};
};

struct ExtremalityResult {
    bool extreme = false;
    /// Set when extreme: exact Farkas dual with margin 1.
    std::optional<SeparationCertificate> certificate;
    /// Set when not extreme: s_target == sum coeff * s_B exactly.
    std::vector<std::pair<FactorSet, Rational>> witness;
};

struct SeparatorResult {
    std::optional<SeparationCertificate> certificate;
    /// When infeasible: a non-negative combination of rivals matching
    /// the target coefficientwise on the interval, which rules out any
    /// separator there.
    std::vector<std::pair<FactorSet, Rational>> infeasibility;
    bool feasible() const { return certificate.has_value(); }
};

/// One entry per A in SP_N^k with its Schur expansion, canonical order.
std::vector<std::pair<FactorSet, SchurVector>> generators(const ConeSpec& spec);

/// Exact Farkas decision: either a witness writing s_A as a
/// non-negative combination of the other generators, or a separating
/// certificate proving none exists.
ExtremalityResult is_extreme(const FactorSet& A, const ConeSpec& spec);

/// Exact LP over coefficients supported on [lam, rho]: margin >= 1 on A
/// and <= 0 on every nested rival with phi in the interval. Requires
/// phi(A) == lam and rho dominating lam. Infeasibility is conclusive.
SeparatorResult find_separator(const FactorSet& A, const Partition& lam, const Partition& rho);

/// Verifies every clause of the claimed separation mode by exact inner
/// products; never throws on a failing clause, it reports them.
CheckResult separates_check(const SchurVector& f, const FactorSet& A, const SeparationMode& mode,
                            const CheckOptions& options = {});

/// Grows the separator down the dominance order: subtracts
/// max(0, max_{B in SSP_mu} <u, s_B>) * s_mu while sweeping mu from the
/// top. Requires f to separate A from above; the result separates A
/// globally.
SchurVector lift_separator(const SchurVector& f, const FactorSet& A);

/// lam with part i raised and part j lowered (0-based, i < j), zeros
/// dropped. Requires distinct parts; the result lies in [lam, lam+].
Partition lambda_bracket(const Partition& lam, int i, int j);
/// Locates rho = (lam_i, lam_j) in lam first.
Partition lambda_bracket(const Partition& lam, const Partition& rho);

/// The replacement-coefficient identity c_A + 1 == c_B at lambda[rho],
/// plus c_A == 0, c_B == 1 in the adjacent case. Requires
/// phi(A) == phi(B) with distinct parts, rho in A but not B, and A, B
/// agreeing within rho.
bool lr_lemma_check(const FactorSet& A, const FactorSet& B, const Partition& rho);

/// The constructive separator for distinct-part phi(A): an inside-out
/// chain of combiner steps, no LP solve. The certificate is verified on
/// [lam, lam+] ([lam, lam] when lam has a single part).
SeparationCertificate distinct_parts_separator(const FactorSet& A);

struct Conjecture1Report {
    int N = 0;
    bool consistent = false;
    std::vector<FactorSet> extreme_set;
    std::vector<FactorSet> nested_set;
    std::vector<FactorSet> extreme_not_nested;
    std::vector<FactorSet> nested_not_extreme;
};

/// Compares {A : is_extreme} with {A : is_nested} over SP_N^2.
Conjecture1Report verify_conjecture1(int N, int jobs = 1);

struct StrongSeparationEntry {
    FactorSet A;
    Partition lam;
    std::string route;  // "dagger", "plusplus", "up-dagger", "plusplus-direct", "point"
    Partition from, to;
    bool feasible = false;
    bool verified = false;
};

struct StrongSeparationReport {
    int N = 0;
    bool all_ok = false;
    std::vector<StrongSeparationEntry> entries;
};

/// For every nested A: even phi(A) solved on [lam, dagger] when lam is
/// down-invertible with nested down_set(A), else on [lam, plusplus];
/// odd phi(A) routed through the up-shift to the dagger interval and
/// the found separator mapped back down (or solved directly when
/// direct_odd is set).
StrongSeparationReport verify_strong(int N, bool direct_odd = false, int jobs = 1);

}  // namespace schurcone

#endif  // SCHURCONE_CONE_HPP
