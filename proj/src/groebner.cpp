#include "semid/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace semid {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExceeded {};

struct Deadline {
    Clock::time_point end;
    bool expired() const { return Clock::now() >= end; }
};

/// Exact rational division core for the public divide/normal_form surface.
/// Tracks quotients when asked; deterministic via the first applicable
/// divisor.
Polynomial reduce_exact(const Polynomial& f, const std::vector<Polynomial>& divisors,
                        const TermOrder& order, std::vector<Polynomial>* quotients) {
    std::vector<PolyTerm> dlts;
    dlts.reserve(divisors.size());
    for (const auto& d : divisors) {
        if (d.is_zero()) throw std::invalid_argument("zero divisor");
        dlts.push_back(d.leading_term(order));
    }

    Polynomial p = f;
    std::vector<PolyTerm> rem_terms;
    while (!p.is_zero()) {
        const PolyTerm lt = p.leading_term(order);
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            if (!dlts[k].mono.divides(lt.mono)) continue;
            Monomial qm = lt.mono / dlts[k].mono;
            Rat qc(lt.coef / dlts[k].coef);
            if (quotients)
                (*quotients)[k] = (*quotients)[k] + Polynomial::monomial_term(qm, qc);
            p = p - divisors[k].times_term(qm, qc);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem_terms.push_back(lt);
            p = p - Polynomial::monomial_term(lt.mono, lt.coef);
        }
    }
    return Polynomial::from_terms(std::move(rem_terms));
}

// ---- internal Buchberger engine -----------------------------------------
//
// Working representation: integer-coefficient term vectors kept sorted
// descending under the active order, reduced by fraction-free
// pseudo-division with periodic content stripping. Every inserted basis
// element is primitive with a positive leading coefficient, so the run is
// exactly the rational computation up to positive scalars and the final
// monic basis is the reduced basis.

struct ITerm {
    Monomial mono;
    mpz_class coef;
};

using IPoly = std::vector<ITerm>;

IPoly to_internal(const Polynomial& f, const TermOrder& order) {
    mpz_class den_lcm = 1;
    for (const auto& t : f.terms()) den_lcm = lcm(den_lcm, t.coef.get_den());
    IPoly p;
    p.reserve(f.terms().size());
    for (const auto& t : f.terms())
        p.push_back({t.mono, mpz_class(t.coef.get_num() * (den_lcm / t.coef.get_den()))});
    std::sort(p.begin(), p.end(),
              [&](const ITerm& a, const ITerm& b) { return order.greater(a.mono, b.mono); });
    return p;
}

Polynomial from_internal(const IPoly& p) {
    std::vector<PolyTerm> ts;
    ts.reserve(p.size());
    for (const auto& t : p) ts.push_back({t.mono, Rat(t.coef)});
    return Polynomial::from_terms(std::move(ts));
}

/// Content 1, positive leading coefficient. No-op on zero.
void make_primitive(IPoly& p) {
    if (p.empty()) return;
    mpz_class g = 0;
    for (const auto& t : p) {
        g = gcd(g, t.coef);
        if (g == 1) break;
    }
    if (sgn(p.front().coef) < 0) g = -g;
    if (g != 1)
        for (auto& t : p) t.coef /= g;
}

/// a*p - b*(x^shift * d), all sorted descending under `order`.
IPoly axpy(const IPoly& p, const mpz_class& a, const mpz_class& b, const Monomial& shift,
           const IPoly& d, const TermOrder& order) {
    IPoly out;
    out.reserve(p.size() + d.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() && j < d.size()) {
        Monomial dm = d[j].mono * shift;
        auto c = order.compare(p[i].mono, dm);
        if (c == std::strong_ordering::greater) {
            out.push_back({p[i].mono, mpz_class(a * p[i].coef)});
            ++i;
        } else if (c == std::strong_ordering::less) {
            out.push_back({std::move(dm), mpz_class(-b * d[j].coef)});
            ++j;
        } else {
            mpz_class cc(a * p[i].coef - b * d[j].coef);
            if (cc != 0) out.push_back({p[i].mono, std::move(cc)});
            ++i;
            ++j;
        }
    }
    for (; i < p.size(); ++i) out.push_back({p[i].mono, mpz_class(a * p[i].coef)});
    for (; j < d.size(); ++j)
        out.push_back({d[j].mono * shift, mpz_class(-b * d[j].coef)});
    return out;
}

/// Full normal form by fraction-free pseudo-division: scans for the largest
/// reducible term, cancels it against the first applicable divisor, and
/// strips content periodically. The result is a positive rational multiple
/// of the exact normal form. When `sugars` is given, the reduct's sugar
/// degree is tracked through every reduction step.
IPoly normal_form_int(IPoly p, const std::vector<IPoly>& divisors, const TermOrder& order,
                      const Deadline& deadline, const std::vector<std::uint64_t>* sugars = nullptr,
                      std::uint64_t* sugar_inout = nullptr) {
    std::size_t cursor = 0;
    std::uint64_t steps = 0;
    while (cursor < p.size()) {
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            const IPoly& d = divisors[k];
            if (!d.front().mono.divides(p[cursor].mono)) continue;
            if ((++steps & 63u) == 0) {
                if (deadline.expired()) throw BudgetExceeded{};
                make_primitive(p);
            }
            mpz_class g = gcd(p[cursor].coef, d.front().coef);
            mpz_class a(d.front().coef / g);
            mpz_class b(p[cursor].coef / g);
            if (sgn(a) < 0) {
                a = -a;
                b = -b;
            }
            Monomial shift = p[cursor].mono / d.front().mono;
            if (sugars && sugar_inout)
                *sugar_inout = std::max(*sugar_inout, shift.degree() + (*sugars)[k]);
            p = axpy(p, a, b, shift, d, order);
            reduced = true;
            break;
        }
        if (!reduced) ++cursor;
    }
    make_primitive(p);
    return p;
}

struct SPair {
    std::size_t i, j;  // i < j
    Monomial lcm;
    std::uint64_t sugar = 0;
};

/// Sugar selection: lowest sugar degree first, then the normal strategy's
/// smallest lcm, then indices. Sugar keeps block elimination orders from
/// drifting into high-degree regions the way a pure smallest-lcm rule does.
struct SPairLess {
    const TermOrder* order;
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        auto c = order->compare(a.lcm, b.lcm);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.exps.size(); ++k)
        if (a.exps[k] != 0 && b.exps[k] != 0) return false;
    return true;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
    const PolyTerm& lf = f.leading_term(order);
    const PolyTerm& lg = g.leading_term(order);
    Monomial L = Monomial::lcm(lf.mono, lg.mono);
    return f.times_term(L / lf.mono, Rat(1 / lf.coef)) -
           g.times_term(L / lg.mono, Rat(1 / lg.coef));
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const TermOrder& order) {
    DivisionResult res;
    res.quotients.assign(divisors.size(), Polynomial::zero());
    res.remainder = reduce_exact(f, divisors, order, &res.quotients);
    return res;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const TermOrder& order) {
    return reduce_exact(f, divisors, order, nullptr);
}

std::optional<GroebnerBasis> buchberger(const IdealGens& in, const Budget& budget,
                                        GbRunStats* stats_out) {
    const auto t0 = Clock::now();
    GbRunStats stats;
    auto finish = [&](bool exceeded) {
        stats.budget_exceeded = exceeded;
        stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (stats_out) *stats_out = stats;
    };

    if (in.gens.empty()) throw std::invalid_argument("empty generating set");
    for (const auto& g : in.gens) {
        if (g.is_zero()) throw std::invalid_argument("zero generator");
        if (g.nvars() != in.ring.nvars())
            throw std::invalid_argument("generator/ring dimension mismatch");
    }
    if (in.order.nvars() != in.ring.nvars())
        throw std::invalid_argument("order/ring dimension mismatch");

    const TermOrder& order = in.order;
    Deadline deadline{t0 + budget.wall};

    std::vector<IPoly> G;
    std::vector<std::uint64_t> sugars;
    std::set<SPair, SPairLess> queue(SPairLess{&order});

    // Gebauer-Moeller update: prune the new pairs against each other
    // (criteria M and F, with the coprime criterion applied last) and drop
    // superseded old pairs (criterion B).
    auto update = [&](IPoly h, std::uint64_t h_sugar) {
        const Monomial& hm = h.front().mono;
        const std::size_t t = G.size();

        struct Cand {
            std::size_t i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (std::size_t i = 0; i < t; ++i)
            cands.push_back(
                {i, Monomial::lcm(G[i].front().mono, hm), coprime(G[i].front().mono, hm)});

        std::vector<Cand> kept;
        for (std::size_t k = 0; k < cands.size(); ++k) {
            bool keep = cands[k].coprime;
            if (!keep) {
                keep = true;
                for (std::size_t l = k + 1; l < cands.size() && keep; ++l)
                    if (cands[l].lcm.divides(cands[k].lcm)) keep = false;
                for (const auto& u : kept)
                    if (!keep) break;
                    else if (u.lcm.divides(cands[k].lcm))
                        keep = false;
            }
            if (keep) kept.push_back(cands[k]);
        }

        for (auto it = queue.begin(); it != queue.end();) {
            const SPair& pr = *it;
            bool drop = hm.divides(pr.lcm) &&
                        Monomial::lcm(G[pr.i].front().mono, hm) != pr.lcm &&
                        Monomial::lcm(G[pr.j].front().mono, hm) != pr.lcm;
            it = drop ? queue.erase(it) : std::next(it);
        }

        for (auto& c : kept) {
            if (c.coprime) continue;
            std::uint64_t sg = std::max(
                sugars[c.i] + (c.lcm / G[c.i].front().mono).degree(),
                h_sugar + (c.lcm / hm).degree());
            queue.insert({c.i, t, std::move(c.lcm), sg});
        }
        G.push_back(std::move(h));
        sugars.push_back(h_sugar);
    };

    try {
        for (const auto& g : in.gens) {
            IPoly h = to_internal(g, order);
            make_primitive(h);
            std::uint64_t sg = 0;
            for (const auto& t : h) sg = std::max(sg, t.mono.degree());
            update(std::move(h), sg);
        }

        while (!queue.empty()) {
            if (stats.pairs_considered >= budget.max_pairs || deadline.expired()) {
                finish(true);
                return std::nullopt;
            }
            SPair pr = *queue.begin();
            queue.erase(queue.begin());
            ++stats.pairs_considered;

            // integer S-polynomial: (cj/g)*shift_i*G[i] - (ci/g)*shift_j*G[j]
            const IPoly& fi = G[pr.i];
            const IPoly& fj = G[pr.j];
            mpz_class g = gcd(fi.front().coef, fj.front().coef);
            Monomial shift_i = pr.lcm / fi.front().mono;
            mpz_class cj_over_g(fj.front().coef / g);
            IPoly s;
            s.reserve(fi.size());
            for (const auto& t : fi)
                s.push_back({t.mono * shift_i, mpz_class(cj_over_g * t.coef)});
            s = axpy(s, mpz_class(1), mpz_class(fi.front().coef / g),
                     pr.lcm / fj.front().mono, fj, order);

            std::uint64_t h_sugar = pr.sugar;
            IPoly h = normal_form_int(std::move(s), G, order, deadline, &sugars, &h_sugar);
            if (h.empty()) {
                ++stats.zero_reductions;
                continue;
            }
            update(std::move(h), h_sugar);
            ++stats.basis_inserted;
        }

        // minimalization on leading monomials, ascending with index tiebreak
        std::vector<std::size_t> idx(G.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            auto c = order.compare(G[a].front().mono, G[b].front().mono);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
            return a < b;
        });
        std::vector<std::size_t> kept;
        for (std::size_t s : idx) {
            bool dominated = false;
            for (std::size_t k : kept)
                if (G[k].front().mono.divides(G[s].front().mono)) {
                    dominated = true;
                    break;
                }
            if (!dominated) kept.push_back(s);
        }

        // full tail reduction; one sequential pass suffices because the
        // leading monomials are pairwise non-divisible and never change.
        // The lead survives normal_form_int untouched (no other leading
        // monomial divides it), scaled along with the rest of the element.
        std::vector<IPoly> basis;
        basis.reserve(kept.size());
        for (std::size_t s : kept) basis.push_back(G[s]);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis.size() == 1) break;
            std::vector<IPoly> others;
            others.reserve(basis.size() - 1);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (k != i) others.push_back(basis[k]);
            basis[i] = normal_form_int(std::move(basis[i]), others, order, deadline);
        }

        std::vector<Polynomial> out;
        out.reserve(basis.size());
        for (auto& b : basis) {
            Polynomial p = from_internal(b);
            out.push_back(p.scaled(Rat(1 / p.leading_term(order).coef)));
        }
        finish(false);
        return GroebnerBasis{in.ring, order, std::move(out), true};
    } catch (const BudgetExceeded&) {
        finish(true);
        return std::nullopt;
    }
}

std::optional<IdealGens> eliminate(const IdealGens& gens, const std::set<VarId>& drop,
                                   const Budget& budget, GbRunStats* stats) {
    const int n = gens.ring.nvars();
    for (VarId v : drop)
        if (v < 0 || v >= n) throw std::invalid_argument("drop variable out of range");

    if (drop.empty()) {
        auto gb = buchberger(gens, budget, stats);
        if (!gb) return std::nullopt;
        return IdealGens{gens.ring, gens.order, gb->elems};
    }

    std::vector<VarId> top(drop.begin(), drop.end());
    std::vector<VarId> keep;
    for (VarId v = 0; v < n; ++v)
        if (!drop.contains(v)) keep.push_back(v);

    std::vector<OrderBlock> blocks;
    blocks.push_back({top, OrderKind::grevlex});
    if (!keep.empty()) blocks.push_back({keep, OrderKind::grevlex});
    TermOrder ord = TermOrder::block(std::move(blocks));

    auto gb = buchberger(IdealGens{gens.ring, ord, gens.gens}, budget, stats);
    if (!gb) return std::nullopt;

    Ring small;
    for (VarId v : keep) small.names.push_back(gens.ring.names[static_cast<std::size_t>(v)]);

    std::vector<Polynomial> out;
    for (const auto& g : gb->elems) {
        bool free_of_drop = true;
        for (VarId v : top)
            if (g.uses_var(v)) {
                free_of_drop = false;
                break;
            }
        if (!free_of_drop) continue;
        std::vector<PolyTerm> ts;
        ts.reserve(g.terms().size());
        for (const auto& t : g.terms()) {
            Monomial m(keep.size());
            for (std::size_t i = 0; i < keep.size(); ++i)
                m.exps[i] = t.mono.exps[static_cast<std::size_t>(keep[i])];
            ts.push_back({std::move(m), t.coef});
        }
        out.push_back(Polynomial::from_terms(std::move(ts)));
    }
    return IdealGens{std::move(small), TermOrder::grevlex(static_cast<int>(keep.size())),
                     std::move(out)};
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb) {
    if (!gb.reduced) throw std::invalid_argument("ideal membership requires a reduced basis");
    if (f.is_zero()) return true;
    return normal_form(f, gb.elems, gb.order).is_zero();
}

}  // namespace semid
