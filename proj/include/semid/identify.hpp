#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semid/groebner.hpp"
#include "semid/parametrize.hpp"

namespace semid {

/// Identification formula target = num/den over the covariance coordinates,
/// canonicalized: integer coefficients, joint content 1, leading coefficient
/// of the denominator positive under grevlex. The denominator is never a
/// member of the model's vanishing ideal.
struct RationalFormula {
    Polynomial num;  // in sigma_ring(m)
    Polynomial den;

    bool operator==(const RationalFormula&) const = default;
};

struct GenericallyIdentifiable {
    RationalFormula formula;
    bool operator==(const GenericallyIdentifiable&) const = default;
};

/// The target satisfies an irreducible-degree-d polynomial over the
/// covariance coordinates, d >= 2 minimal; generically at most d values of
/// the target are compatible with one covariance matrix.
struct AlgebraicallyDIdentifiable {
    int d = 2;
    Polynomial ident_poly;  // in q_sigma_ring(m), integer content 1
    bool operator==(const AlgebraicallyDIdentifiable&) const = default;
};

struct NotGenericallyIdentifiable {
    bool operator==(const NotGenericallyIdentifiable&) const = default;
};

struct Unresolved {
    std::string reason;
    bool operator==(const Unresolved&) const = default;
};

struct TriviallyConstant {
    Rat value;
    bool operator==(const TriviallyConstant&) const = default;
};

using IdentStatus = std::variant<GenericallyIdentifiable, AlgebraicallyDIdentifiable,
                                 NotGenericallyIdentifiable, Unresolved, TriviallyConstant>;

bool is_generic(const IdentStatus& s);
bool is_unresolved(const IdentStatus& s);
/// 1 for generically identifiable, d for the algebraic case, nullopt else.
std::optional<int> status_degree(const IdentStatus& s);
std::string status_brief(const IdentStatus& s);

/// Full result of one target classification.
struct TargetAnalysis {
    IdentStatus status;
    /// Reduced basis of the elimination ideal in q and sigma (t-free part of
    /// the Groebner basis), re-indexed into q_sigma_ring(m).
    std::vector<Polynomial> elim_ideal;
    double seconds = 0.0;
    GbRunStats stats;
};

/// Classifies one parameter: builds <q - target, s_ij - Sigma_ij> under the
/// block order t > q > s, reduces, and reads the lowest admissible q-degree
/// off the eliminated basis. Elements containing q count only when their
/// leading q-coefficient is not in the vanishing ideal.
TargetAnalysis classify_parameter_detail(const ParamRing& pr, const SigmaMap& sigma,
                                         const ParameterTarget& target,
                                         const Budget& budget = {});

IdentStatus classify_parameter(const MixedGraph& g, const ParameterTarget& target,
                               const Budget& budget = {});

enum class GraphVerdict {
    generically_identifiable,
    algebraically_k_identified,
    not_generically_identifiable,
    unresolved,
};

std::string verdict_string(GraphVerdict v, int k);

/// Which target kinds to classify.
struct TargetFilter {
    bool direct = true;
    bool omega = true;
    bool total = true;
    bool path = true;
    /// When nonempty, only targets whose name() matches (case-sensitive).
    std::vector<std::string> names;

    bool admits(const ParameterTarget& t) const;
};

struct ClassifyOptions {
    Budget budget;
    TargetFilter filter;
    /// When every direct effect is generically identifiable, omega entries
    /// are filled in from Omega = (I-Lambda)^T Sigma (I-Lambda) instead of
    /// running their eliminations.
    bool omega_shortcut = true;
};

struct GraphReport {
    MixedGraph graph;
    std::vector<ParameterTarget> targets;
    std::vector<IdentStatus> statuses;      // aligned with targets
    std::vector<double> target_seconds;     // aligned with targets
    std::vector<Polynomial> vanishing_ideal;  // in sigma_ring(m)
    bool vanishing_ideal_resolved = false;
    GraphVerdict verdict = GraphVerdict::unresolved;
    int k = 0;  // the k of algebraically_k_identified
    double total_seconds = 0.0;
};

/// Classifies every admitted target and aggregates the graph verdict over
/// the direct-effect and omega targets. The vanishing ideal is computed
/// once by eliminating the t-block from <s_ij - Sigma_ij>.
GraphReport classify_graph(const MixedGraph& g, const ClassifyOptions& options = {});

struct VerifyReport {
    std::string target_name;
    int trials = 0;
    int passed = 0;
    int skipped = 0;  // degenerate draws (zero denominator)
    int failed = 0;
    bool degree_confirmed = false;  // d >= 2: specialization reached degree d
    std::vector<std::string> failures;

    bool ok() const { return failed == 0; }
};

/// Independent numeric check of a classification: samples exact rational
/// parameter points (Omega diagonally dominant, hence positive definite),
/// evaluates Sigma exactly, and asserts the formula reproduces the target
/// (d = 1) or that the identification polynomial vanishes (d >= 2). Any
/// failure is an engine bug, never a statistical event.
VerifyReport verify_numeric(const MixedGraph& g, const ParameterTarget& target,
                            const IdentStatus& status, int trials, std::uint64_t seed);

}  // namespace semid
