#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "semid/polynomial.hpp"

namespace semid {

/// Generating set of an ideal, together with the ring and the active order.
struct IdealGens {
    Ring ring;
    TermOrder order;
    std::vector<Polynomial> gens;  // all nonzero, all in `ring`
};

/// Groebner basis; when `reduced`, elements are monic, no leading monomial
/// divides another, no trailing term lies in the initial ideal, and the list
/// is sorted ascending by leading monomial, so the representation is unique
/// for (ideal, order).
struct GroebnerBasis {
    Ring ring;
    TermOrder order;
    std::vector<Polynomial> elems;
    bool reduced = false;
};

/// Per-computation resource budget. Buchberger runs stop with an
/// "unresolved" outcome when either limit is hit; they never return a
/// wrong or partial basis.
struct Budget {
    std::chrono::milliseconds wall{std::chrono::seconds(600)};
    std::uint64_t max_pairs = 200000;
};

struct GbRunStats {
    std::uint64_t pairs_considered = 0;
    std::uint64_t pairs_skipped = 0;  // product/chain criteria
    std::uint64_t zero_reductions = 0;
    std::uint64_t basis_inserted = 0;
    double seconds = 0.0;
    bool budget_exceeded = false;
};

struct DivisionResult {
    std::vector<Polynomial> quotients;  // one per divisor
    Polynomial remainder;
};

/// Multivariate division: f = sum(q_i * d_i) + r with no term of r divisible
/// by any divisor's leading monomial. Deterministic: each step reduces by
/// the first applicable divisor.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const TermOrder& order);

/// Remainder of division by `divisors` (no quotient bookkeeping).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const TermOrder& order);

/// Buchberger's algorithm with normal pair selection (smallest lcm first),
/// the coprime-leading-monomial criterion and the chain criterion, followed
/// by minimalization and full tail reduction. Returns the reduced Groebner
/// basis, or nullopt when the budget is exhausted.
std::optional<GroebnerBasis> buchberger(const IdealGens& gens, const Budget& budget = {},
                                        GbRunStats* stats = nullptr);

/// Generators of <gens> intersected with the subring without the `drop`
/// variables, re-indexed into that smaller ring. Computed with a block
/// order putting `drop` on top (grevlex inside each block); an empty `drop`
/// returns the reduced basis of the input under its own order.
std::optional<IdealGens> eliminate(const IdealGens& gens, const std::set<VarId>& drop,
                                   const Budget& budget = {}, GbRunStats* stats = nullptr);

/// f in <gb>? Requires a reduced basis.
bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb);

/// S-polynomial of f and g under `order`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

}  // namespace semid
