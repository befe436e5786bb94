#pragma once

#include <map>
#include <string>
#include <vector>

#include "semid/mixed_graph.hpp"
#include "semid/polynomial.hpp"

namespace semid {

/// Polynomial ring attached to a graph's SEM parametrization. Variable
/// layout: first all l_ij (one per directed edge), then w_ii and the w_ij
/// allowed by the bidirected edges (the "t-block"), then q, then all s_ij
/// for i <= j (the "p-block"). The block structure matches the elimination
/// order t > q > s.
struct ParamRing {
    MixedGraph graph;
    Ring ring;

    int n_lambda = 0;
    int n_omega = 0;

    static ParamRing for_graph(const MixedGraph& g);

    VarId lambda_var(int i, int j) const;  // throws if i->j not an edge
    VarId omega_var(int i, int j) const;   // i == j or {i,j} bidirected
    VarId q_var() const { return n_lambda + n_omega; }
    VarId sigma_var(int i, int j) const;   // i <= j

    std::vector<VarId> t_vars() const;     // the lambda/omega block
    std::vector<VarId> sigma_vars() const;

    int nvars() const { return ring.nvars(); }
};

/// Ring [s11, ..., smm] of covariance coordinates; identification formulas
/// and vanishing ideals live here.
Ring sigma_ring(int m);
/// Ring [s11, ..., smm, q] for identification polynomials of degree >= 2.
Ring q_sigma_ring(int m);
/// Elimination order q > s on q_sigma_ring(m).
TermOrder q_sigma_order(int m);

/// The covariance parametrization: for each i <= j the entry of
/// (I - Lambda)^-T Omega (I - Lambda)^-1 as an exact polynomial in the
/// lambda/omega variables of `pr`. The inverse is expanded by nilpotency
/// as I + Lambda + ... + Lambda^(m-1).
struct SigmaMap {
    int m = 0;
    std::vector<Polynomial> entries;  // row-major upper triangle

    const Polynomial& at(int i, int j) const;  // i <= j after swap
};

SigmaMap sigma_polys(const ParamRing& pr);

/// Sum over directed paths i..j of the product of edge lambdas; 1 when
/// i == j, zero polynomial when no path exists.
Polynomial total_effect_poly(const ParamRing& pr, int i, int j);

/// One lambda-monomial per directed path i..j; their sum is the total
/// effect.
std::vector<std::pair<DirectedPath, Polynomial>> path_effect_polys(const ParamRing& pr,
                                                                   int i, int j);

enum class TargetKind { direct_effect, total_effect, path_effect, omega_entry };

/// A quantity to identify from the covariance matrix, with its defining
/// polynomial in the lambda/omega variables.
struct ParameterTarget {
    TargetKind kind = TargetKind::direct_effect;
    int i = 0;
    int j = 0;
    DirectedPath path;  // path_effect only
    Polynomial poly;    // in the ParamRing, t-block variables only

    /// Display name: "l23", "w11", "TE(2,4)", "PE(2->3->4)".
    std::string name() const;

    bool operator==(const ParameterTarget&) const = default;
};

/// Every direct effect, every omega entry allowed by the graph, every total
/// effect over a pair with at least one path, and every path effect, in
/// that deterministic order.
std::vector<ParameterTarget> all_targets(const ParamRing& pr);

/// Exact back-solve Omega = (I - Lambda)^T Sigma (I - Lambda). `sigma` must
/// be symmetric positive definite (checked via leading principal minors in
/// exact arithmetic) and `lambda` keyed by directed edges of the graph.
std::vector<std::vector<Rat>> omega_backsolve_numeric(
    const MixedGraph& g, const std::vector<std::vector<Rat>>& sigma,
    const std::map<std::pair<int, int>, Rat>& lambda);

}  // namespace semid
