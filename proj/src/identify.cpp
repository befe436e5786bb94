#include "semid/identify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

namespace semid {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return Rat(abs(b.get_num()), b.get_den());
    if (b == 0) return Rat(abs(a.get_num()), a.get_den());
    Rat r(gcd(a.get_num(), b.get_num()), lcm(a.get_den(), b.get_den()));
    r.canonicalize();
    return r;
}

/// Joint scaling of a num/den pair: the shared monomial factor cancelled,
/// integer coefficients with combined content 1, leading denominator
/// coefficient positive under grevlex.
RationalFormula canonical_formula(Polynomial num, Polynomial den, int m) {
    if (den.is_zero()) throw std::logic_error("formula with zero denominator");

    if (!num.is_zero()) {
        Monomial common = den.terms().front().mono;
        auto shrink = [&](const Polynomial& p) {
            for (const auto& t : p.terms())
                for (std::size_t v = 0; v < common.exps.size(); ++v)
                    common.exps[v] = std::min(common.exps[v], t.mono.exps[v]);
        };
        shrink(den);
        shrink(num);
        if (!common.is_one()) {
            auto strip = [&](const Polynomial& p) {
                std::vector<PolyTerm> ts;
                for (const auto& t : p.terms()) ts.push_back({t.mono / common, t.coef});
                return Polynomial::from_terms(std::move(ts));
            };
            num = strip(num);
            den = strip(den);
        }
    }

    Rat joint = rat_gcd(num.content(), den.content());
    Rat scale(1 / joint);
    TermOrder grev = TermOrder::grevlex(sigma_ring(m).nvars());
    if (Rat(den.leading_term(grev).coef * scale) < 0) scale = Rat(-scale);
    return RationalFormula{num.scaled(scale), den.scaled(scale)};
}

/// Re-index a t-free polynomial of the full parametrization ring into
/// q_sigma_ring(m): sigma coordinates first, q last.
Polynomial to_q_sigma(const ParamRing& pr, const Polynomial& f) {
    const int ns =
        pr.graph.m * (pr.graph.m + 1) / 2;  // number of sigma coordinates
    const VarId q = pr.q_var();
    std::vector<PolyTerm> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial mono(static_cast<std::size_t>(ns) + 1);
        for (VarId v = 0; v < q; ++v)
            if (t.mono.exps[static_cast<std::size_t>(v)] != 0)
                throw std::logic_error("t-variable left in eliminated polynomial");
        mono.exps[static_cast<std::size_t>(ns)] = t.mono.exps[static_cast<std::size_t>(q)];
        for (int k = 0; k < ns; ++k)
            mono.exps[static_cast<std::size_t>(k)] =
                t.mono.exps[static_cast<std::size_t>(q + 1 + k)];
        ts.push_back({std::move(mono), t.coef});
    }
    return Polynomial::from_terms(std::move(ts));
}

Polynomial q_sigma_to_sigma(const Polynomial& f, int m) {
    const int ns = m * (m + 1) / 2;
    std::vector<PolyTerm> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        if (t.mono.exps[static_cast<std::size_t>(ns)] != 0)
            throw std::logic_error("q left in a sigma-only polynomial");
        Monomial mono(static_cast<std::size_t>(ns));
        for (int k = 0; k < ns; ++k)
            mono.exps[static_cast<std::size_t>(k)] = t.mono.exps[static_cast<std::size_t>(k)];
        ts.push_back({std::move(mono), t.coef});
    }
    return Polynomial::from_terms(std::move(ts));
}

TermOrder elimination_order(const ParamRing& pr) {
    std::vector<OrderBlock> blocks;
    blocks.push_back({pr.t_vars(), OrderKind::grevlex});
    blocks.push_back({{pr.q_var()}, OrderKind::grevlex});
    blocks.push_back({pr.sigma_vars(), OrderKind::grevlex});
    return TermOrder::block(std::move(blocks));
}

std::vector<Polynomial> sigma_generators(const ParamRing& pr, const SigmaMap& sigma) {
    std::vector<Polynomial> gens;
    for (int i = 1; i <= pr.graph.m; ++i)
        for (int j = i; j <= pr.graph.m; ++j)
            gens.push_back(Polynomial::variable(pr.nvars(), pr.sigma_var(i, j)) -
                           sigma.at(i, j));
    return gens;
}

/// Rational function as a num/den pair over sigma_ring(m); no gcd
/// simplification beyond the final content scaling.
struct RatFunc {
    Polynomial num;
    Polynomial den;
};

RatFunc rf_const(int ns, const Rat& c) {
    return {Polynomial::constant(ns, c), Polynomial::constant(ns, Rat(1))};
}

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) { return {a.num * b.num, a.den * b.den}; }

}  // namespace

bool is_generic(const IdentStatus& s) {
    return std::holds_alternative<GenericallyIdentifiable>(s);
}

bool is_unresolved(const IdentStatus& s) { return std::holds_alternative<Unresolved>(s); }

std::optional<int> status_degree(const IdentStatus& s) {
    if (is_generic(s)) return 1;
    if (const auto* a = std::get_if<AlgebraicallyDIdentifiable>(&s)) return a->d;
    return std::nullopt;
}

std::string status_brief(const IdentStatus& s) {
    if (is_generic(s)) return "generically identifiable";
    if (const auto* a = std::get_if<AlgebraicallyDIdentifiable>(&s))
        return "algebraically " + std::to_string(a->d) + "-identifiable";
    if (std::holds_alternative<NotGenericallyIdentifiable>(s))
        return "not generically identifiable";
    if (const auto* u = std::get_if<Unresolved>(&s)) return "unresolved (" + u->reason + ")";
    const auto& t = std::get<TriviallyConstant>(s);
    return "identified, trivially " + t.value.get_str();
}

std::string verdict_string(GraphVerdict v, int k) {
    switch (v) {
        case GraphVerdict::generically_identifiable:
            return "generically identifiable";
        case GraphVerdict::algebraically_k_identified:
            return "algebraically " + std::to_string(k) + "-identified";
        case GraphVerdict::not_generically_identifiable:
            return "not generically identifiable";
        case GraphVerdict::unresolved:
            return "unresolved";
    }
    return "?";
}

bool TargetFilter::admits(const ParameterTarget& t) const {
    bool kind_ok = (t.kind == TargetKind::direct_effect && direct) ||
                   (t.kind == TargetKind::omega_entry && omega) ||
                   (t.kind == TargetKind::total_effect && total) ||
                   (t.kind == TargetKind::path_effect && path);
    if (!kind_ok) return false;
    if (names.empty()) return true;
    return std::find(names.begin(), names.end(), t.name()) != names.end();
}

TargetAnalysis classify_parameter_detail(const ParamRing& pr, const SigmaMap& sigma,
                                         const ParameterTarget& target, const Budget& budget) {
    const auto t0 = Clock::now();
    const int m = pr.graph.m;
    TargetAnalysis out;

    if (target.poly.is_constant()) {
        Rat value = target.poly.is_zero() ? Rat(0) : target.poly.terms().front().coef;
        out.status = TriviallyConstant{value};
        out.seconds = seconds_since(t0);
        return out;
    }

    std::vector<Polynomial> gens = sigma_generators(pr, sigma);
    gens.insert(gens.begin(),
                Polynomial::variable(pr.nvars(), pr.q_var()) - target.poly);
    IdealGens ideal{pr.ring, elimination_order(pr), std::move(gens)};

    auto gb = buchberger(ideal, budget, &out.stats);
    if (!gb) {
        out.status = Unresolved{"resource budget exhausted"};
        out.seconds = seconds_since(t0);
        return out;
    }

    // t-free part of the reduced basis = reduced basis of the elimination
    // ideal in q and sigma, in the same ascending order
    for (const auto& g : gb->elems) {
        bool t_free = true;
        for (VarId v : pr.t_vars())
            if (g.uses_var(v)) {
                t_free = false;
                break;
            }
        if (t_free) out.elim_ideal.push_back(to_q_sigma(pr, g));
    }

    const Ring qs_ring = q_sigma_ring(m);
    const TermOrder qs_order = q_sigma_order(m);
    const VarId qv = qs_ring.nvars() - 1;

    GroebnerBasis sigma_gb{qs_ring, qs_order, {}, true};
    std::vector<const Polynomial*> with_q;
    for (const auto& g : out.elim_ideal) {
        if (g.uses_var(qv))
            with_q.push_back(&g);
        else
            sigma_gb.elems.push_back(g);
    }

    if (with_q.empty()) {
        out.status = NotGenericallyIdentifiable{};
        out.seconds = seconds_since(t0);
        return out;
    }

    // lowest q-degree among elements whose leading q-coefficient stays
    // outside the vanishing ideal
    const Polynomial* chosen = nullptr;
    std::uint32_t dmin = 0;
    for (const Polynomial* g : with_q) {
        std::uint32_t d = g->degree_in(qv);
        Polynomial lead = g->coeff_of_power(qv, d);
        if (ideal_membership(lead, sigma_gb)) continue;
        if (!chosen || d < dmin) {
            chosen = g;
            dmin = d;
        }
    }
    if (!chosen)
        throw std::logic_error(
            "reduced elimination basis contains q but no admissible element");

    if (dmin == 1) {
        Polynomial A = q_sigma_to_sigma(chosen->coeff_of_power(qv, 1), m);
        Polynomial C = q_sigma_to_sigma(chosen->coeff_of_power(qv, 0), m);
        out.status = GenericallyIdentifiable{canonical_formula(-C, A, m)};
    } else {
        out.status = AlgebraicallyDIdentifiable{static_cast<int>(dmin),
                                                chosen->primitive_scaled(&qs_order)};
    }
    out.seconds = seconds_since(t0);
    return out;
}

IdentStatus classify_parameter(const MixedGraph& g, const ParameterTarget& target,
                               const Budget& budget) {
    ParamRing pr = ParamRing::for_graph(g);
    SigmaMap sigma = sigma_polys(pr);
    return classify_parameter_detail(pr, sigma, target, budget).status;
}

namespace {

/// Omega entries via Omega = (I - Lambda)^T Sigma (I - Lambda) once every
/// direct effect has a rational formula; sound because identifying all of
/// Lambda identifies Omega through that equation.
IdentStatus omega_from_lambda(const ParamRing& pr, const ParameterTarget& target,
                              const std::map<std::pair<int, int>, RationalFormula>& lambda,
                              const GroebnerBasis* vanishing) {
    const int m = pr.graph.m;
    const int ns = sigma_ring(m).nvars();
    auto entry = [&](int k, int i) -> RatFunc {  // (I - Lambda)[k][i]
        if (k == i) return rf_const(ns, Rat(1));
        if (!pr.graph.has_directed(k, i)) return rf_const(ns, Rat(0));
        const RationalFormula& f = lambda.at({k, i});
        return {-f.num, f.den};
    };
    auto sigma_var_poly = [&](int k, int l) {
        if (k > l) std::swap(k, l);
        int idx = 0;
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j, ++idx)
                if (i == k && j == l) return Polynomial::variable(ns, idx);
        throw std::logic_error("sigma index");
    };

    const int i = target.i, j = target.j;
    RatFunc acc = rf_const(ns, Rat(0));
    for (int k = 1; k <= m; ++k) {
        if (k != i && !pr.graph.has_directed(k, i)) continue;
        for (int l = 1; l <= m; ++l) {
            if (l != j && !pr.graph.has_directed(l, j)) continue;
            RatFunc term = rf_mul(entry(k, i), entry(l, j));
            term = rf_mul(term, RatFunc{sigma_var_poly(k, l), Polynomial::constant(ns, Rat(1))});
            acc = rf_add(acc, term);
        }
    }
    if (vanishing && ideal_membership(acc.den, *vanishing))
        return Unresolved{"back-substituted denominator vanishes on the model"};
    return GenericallyIdentifiable{canonical_formula(acc.num, acc.den, m)};
}

}  // namespace

GraphReport classify_graph(const MixedGraph& g, const ClassifyOptions& options) {
    const auto t0 = Clock::now();
    ParamRing pr = ParamRing::for_graph(g);
    SigmaMap sigma = sigma_polys(pr);
    const int m = g.m;

    GraphReport report;
    report.graph = pr.graph;

    // vanishing ideal of the plain parametrization, eliminated once
    std::set<VarId> drop;
    for (VarId v : pr.t_vars()) drop.insert(v);
    drop.insert(pr.q_var());
    IdealGens plain{pr.ring, elimination_order(pr), sigma_generators(pr, sigma)};
    auto vi = eliminate(plain, drop, options.budget);
    GroebnerBasis vanishing_gb{sigma_ring(m), TermOrder::grevlex(sigma_ring(m).nvars()), {},
                               true};
    if (vi) {
        report.vanishing_ideal = vi->gens;
        report.vanishing_ideal_resolved = true;
        vanishing_gb.elems = vi->gens;
    }

    auto targets = all_targets(pr);
    bool all_lambda_omega_admitted = true;
    for (const auto& t : targets) {
        if ((t.kind == TargetKind::direct_effect || t.kind == TargetKind::omega_entry) &&
            !options.filter.admits(t))
            all_lambda_omega_admitted = false;
        if (options.filter.admits(t)) report.targets.push_back(t);
    }

    report.statuses.resize(report.targets.size());
    report.target_seconds.assign(report.targets.size(), 0.0);

    // direct, total and path effects first; omega entries may take the
    // back-substitution route when every lambda is generically identifiable
    std::map<std::pair<int, int>, RationalFormula> lambda_formulas;
    bool all_lambda_generic = true;
    for (std::size_t k = 0; k < report.targets.size(); ++k) {
        const auto& t = report.targets[k];
        if (t.kind == TargetKind::omega_entry) continue;
        TargetAnalysis a = classify_parameter_detail(pr, sigma, t, options.budget);
        report.statuses[k] = a.status;
        report.target_seconds[k] = a.seconds;
        if (t.kind == TargetKind::direct_effect) {
            if (const auto* gi = std::get_if<GenericallyIdentifiable>(&a.status))
                lambda_formulas[{t.i, t.j}] = gi->formula;
            else
                all_lambda_generic = false;
        }
    }
    bool shortcut = options.omega_shortcut && all_lambda_generic &&
                    lambda_formulas.size() == pr.graph.directed.size();

    for (std::size_t k = 0; k < report.targets.size(); ++k) {
        const auto& t = report.targets[k];
        if (t.kind != TargetKind::omega_entry) continue;
        const auto tk0 = Clock::now();
        if (shortcut) {
            IdentStatus s = omega_from_lambda(
                pr, t, lambda_formulas,
                report.vanishing_ideal_resolved ? &vanishing_gb : nullptr);
            if (!is_unresolved(s)) {
                report.statuses[k] = std::move(s);
                report.target_seconds[k] = seconds_since(tk0);
                continue;
            }
        }
        TargetAnalysis a = classify_parameter_detail(pr, sigma, t, options.budget);
        report.statuses[k] = a.status;
        report.target_seconds[k] = a.seconds;
    }

    // graph verdict over the lambda and omega targets
    if (!all_lambda_omega_admitted) {
        report.verdict = GraphVerdict::unresolved;
    } else {
        bool any_unresolved = false, any_not_generic = false;
        int max_d = 1;
        for (std::size_t k = 0; k < report.targets.size(); ++k) {
            const auto& t = report.targets[k];
            if (t.kind != TargetKind::direct_effect && t.kind != TargetKind::omega_entry)
                continue;
            const IdentStatus& s = report.statuses[k];
            if (is_unresolved(s)) any_unresolved = true;
            auto d = status_degree(s);
            if (d)
                max_d = std::max(max_d, *d);
            else if (!is_unresolved(s))
                any_not_generic = true;
        }
        if (any_unresolved) {
            report.verdict = GraphVerdict::unresolved;
        } else if (any_not_generic) {
            report.verdict = GraphVerdict::not_generically_identifiable;
        } else if (max_d == 1) {
            report.verdict = GraphVerdict::generically_identifiable;
        } else {
            report.verdict = GraphVerdict::algebraically_k_identified;
            report.k = max_d;
        }
    }
    report.total_seconds = seconds_since(t0);
    return report;
}

VerifyReport verify_numeric(const MixedGraph& g, const ParameterTarget& target,
                            const IdentStatus& status, int trials, std::uint64_t seed) {
    const auto* gi = std::get_if<GenericallyIdentifiable>(&status);
    const auto* ai = std::get_if<AlgebraicallyDIdentifiable>(&status);
    if (!gi && !ai)
        throw std::invalid_argument(
            "numeric verification needs a generically or algebraically identifiable status");

    ParamRing pr = ParamRing::for_graph(g);
    SigmaMap sigma = sigma_polys(pr);
    const int m = g.m;
    const int ns = sigma_ring(m).nvars();

    VerifyReport rep;
    rep.target_name = target.name();
    rep.trials = trials;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> lambda_grid(-6, 6);   // value k/2
    std::uniform_int_distribution<int> omega_grid(-4, 4);    // value k/2
    std::uniform_int_distribution<int> diag_grid(0, 6);      // extra k/2

    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Rat> theta(static_cast<std::size_t>(pr.nvars()), Rat(0));
        for (auto [i, j] : pr.graph.directed)
            theta[static_cast<std::size_t>(pr.lambda_var(i, j))] = rat(lambda_grid(rng), 2);
        std::vector<Rat> row_sum(static_cast<std::size_t>(m) + 1, Rat(0));
        for (auto [i, j] : pr.graph.bidirected) {
            Rat w = rat(omega_grid(rng), 2);
            theta[static_cast<std::size_t>(pr.omega_var(i, j))] = w;
            Rat aw(abs(w.get_num()), w.get_den());
            aw.canonicalize();
            row_sum[static_cast<std::size_t>(i)] = Rat(row_sum[static_cast<std::size_t>(i)] + aw);
            row_sum[static_cast<std::size_t>(j)] = Rat(row_sum[static_cast<std::size_t>(j)] + aw);
        }
        // diagonally dominant, hence positive definite
        for (int i = 1; i <= m; ++i)
            theta[static_cast<std::size_t>(pr.omega_var(i, i))] =
                Rat(rat(1, 2) + rat(diag_grid(rng), 2) + row_sum[static_cast<std::size_t>(i)]);

        std::vector<Rat> sig_vals;
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j) sig_vals.push_back(sigma.at(i, j).eval(theta));
        Rat target_value = target.poly.eval(theta);

        auto dump = [&](const std::string& what) {
            std::ostringstream s;
            s << target.name() << " trial " << trial << ": " << what << "; theta = (";
            for (VarId v = 0; v < pr.q_var(); ++v) {
                if (v) s << ", ";
                s << pr.ring.names[static_cast<std::size_t>(v)] << "="
                  << theta[static_cast<std::size_t>(v)].get_str();
            }
            s << ")";
            rep.failures.push_back(s.str());
        };

        if (gi) {
            Rat den = gi->formula.den.eval(sig_vals);
            if (den == 0) {
                ++rep.skipped;
                continue;
            }
            Rat num = gi->formula.num.eval(sig_vals);
            if (Rat(num / den) == target_value) {
                ++rep.passed;
            } else {
                ++rep.failed;
                dump("formula value " + Rat(num / den).get_str() + " != target " +
                     target_value.get_str());
            }
        } else {
            std::vector<Rat> qs_vals = sig_vals;
            qs_vals.push_back(target_value);
            if (ai->ident_poly.eval(qs_vals) == 0) {
                ++rep.passed;
            } else {
                ++rep.failed;
                dump("identification polynomial does not vanish");
            }
            Polynomial lead = ai->ident_poly.coeff_of_power(ns, ai->ident_poly.degree_in(ns));
            std::vector<Rat> lead_point = sig_vals;
            lead_point.push_back(Rat(0));
            if (lead.eval(lead_point) != 0) rep.degree_confirmed = true;
        }
    }
    return rep;
}

}  // namespace semid
