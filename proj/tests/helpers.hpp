#pragma once

#include <random>
#include <string>
#include <vector>

#include "semid/polynomial.hpp"

namespace semid::testing {

inline Ring make_ring(std::vector<std::string> names) { return Ring{std::move(names)}; }

inline Polynomial P(const Ring& ring, const std::string& text) {
    return Polynomial::parse(ring, text);
}

using Rng = std::mt19937_64;

inline Monomial random_monomial(Rng& rng, int nvars, std::uint32_t max_exp) {
    Monomial m(static_cast<std::size_t>(nvars));
    std::uniform_int_distribution<std::uint32_t> d(0, max_exp);
    for (auto& e : m.exps) e = d(rng);
    return m;
}

inline Rat random_rat(Rng& rng, long span = 6) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 3);
    return rat(num(rng), den(rng));
}

inline Polynomial random_poly(Rng& rng, int nvars, int max_terms, std::uint32_t max_exp,
                              long coef_span = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::vector<PolyTerm> terms;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t)
        terms.push_back({random_monomial(rng, nvars, max_exp), random_rat(rng, coef_span)});
    return Polynomial::from_terms(std::move(terms));
}

inline Polynomial random_nonzero_poly(Rng& rng, int nvars, int max_terms, std::uint32_t max_exp,
                                      long coef_span = 6) {
    for (;;) {
        Polynomial p = random_poly(rng, nvars, max_terms, max_exp, coef_span);
        if (!p.is_zero()) return p;
    }
}

inline std::vector<Rat> random_point(Rng& rng, int nvars, long span = 5) {
    std::vector<Rat> pt;
    pt.reserve(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) pt.push_back(random_rat(rng, span));
    return pt;
}

inline Rat rat_pow_for_test(const Rat& b, int k) {
    Rat acc(1);
    for (int i = 0; i < k; ++i) acc = Rat(acc * b);
    return acc;
}

inline Ring subring_for_test(const Ring& r, const std::vector<VarId>& keep) {
    Ring s;
    for (VarId v : keep) s.names.push_back(r.names[static_cast<std::size_t>(v)]);
    return s;
}

/// A random order of each kind over nvars variables.
inline TermOrder random_order(Rng& rng, int nvars) {
    std::uniform_int_distribution<int> kind(0, 2);
    switch (kind(rng)) {
        case 0: {
            std::vector<VarId> perm(static_cast<std::size_t>(nvars));
            for (int i = 0; i < nvars; ++i) perm[static_cast<std::size_t>(i)] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            return TermOrder::lex(std::move(perm));
        }
        case 1:
            return TermOrder::grevlex(nvars);
        default: {
            std::vector<VarId> perm(static_cast<std::size_t>(nvars));
            for (int i = 0; i < nvars; ++i) perm[static_cast<std::size_t>(i)] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::uniform_int_distribution<int> cut_d(0, nvars);
            int cut = cut_d(rng);
            OrderBlock top{{perm.begin(), perm.begin() + cut}, OrderKind::grevlex};
            OrderBlock rest{{perm.begin() + cut, perm.end()}, OrderKind::grevlex};
            std::vector<OrderBlock> blocks;
            if (!top.vars.empty()) blocks.push_back(std::move(top));
            if (!rest.vars.empty()) blocks.push_back(std::move(rest));
            if (blocks.empty()) blocks.push_back(OrderBlock{{}, OrderKind::grevlex});
            return TermOrder::block(std::move(blocks));
        }
    }
}

}  // namespace semid::testing
