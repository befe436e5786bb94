#include "semid/term_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace semid {

namespace {

void check_permutation(const std::vector<VarId>& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (VarId v : perm) {
        if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[v])
            throw std::invalid_argument("lex order requires a permutation of the variables");
        seen[v] = true;
    }
}

/// Lex restricted to the listed variables, most significant first.
std::strong_ordering lex_in(const std::vector<VarId>& vars, const Monomial& a,
                            const Monomial& b) {
    for (VarId v : vars) {
        if (a.exps[v] != b.exps[v])
            return a.exps[v] < b.exps[v] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

/// Graded reverse lex restricted to the listed variables: total degree in
/// the block first; ties broken on the least significant variable, where
/// the smaller exponent wins.
std::strong_ordering grevlex_in(const std::vector<VarId>& vars, const Monomial& a,
                                const Monomial& b) {
    std::uint64_t da = 0, db = 0;
    for (VarId v : vars) {
        da += a.exps[v];
        db += b.exps[v];
    }
    if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        VarId v = *it;
        if (a.exps[v] != b.exps[v])
            return a.exps[v] > b.exps[v] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace

TermOrder TermOrder::lex(std::vector<VarId> perm) {
    check_permutation(perm);
    TermOrder o;
    o.kind_ = OrderKind::lex;
    o.nvars_ = static_cast<int>(perm.size());
    o.perm_ = std::move(perm);
    return o;
}

TermOrder TermOrder::lex_natural(int nvars) {
    std::vector<VarId> perm(nvars);
    std::iota(perm.begin(), perm.end(), 0);
    return lex(std::move(perm));
}

TermOrder TermOrder::grevlex(int nvars) {
    if (nvars < 0) throw std::invalid_argument("negative dimension");
    TermOrder o;
    o.kind_ = OrderKind::grevlex;
    o.nvars_ = nvars;
    return o;
}

TermOrder TermOrder::block(std::vector<OrderBlock> blocks) {
    std::size_t total = 0;
    for (const auto& b : blocks) {
        if (b.inner == OrderKind::block)
            throw std::invalid_argument("block orders do not nest");
        total += b.vars.size();
    }
    std::vector<VarId> flat;
    flat.reserve(total);
    for (const auto& b : blocks) flat.insert(flat.end(), b.vars.begin(), b.vars.end());
    check_permutation(flat);  // blocks must partition the variables

    TermOrder o;
    o.kind_ = OrderKind::block;
    o.nvars_ = static_cast<int>(total);
    o.blocks_ = std::move(blocks);
    return o;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (static_cast<int>(a.nvars()) != nvars_ || static_cast<int>(b.nvars()) != nvars_)
        throw std::invalid_argument("monomial/order dimension mismatch");
    switch (kind_) {
        case OrderKind::lex:
            return lex_in(perm_, a, b);
        case OrderKind::grevlex: {
            std::uint64_t da = a.degree(), db = b.degree();
            if (da != db)
                return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
            for (int v = nvars_ - 1; v >= 0; --v) {
                if (a.exps[v] != b.exps[v])
                    return a.exps[v] > b.exps[v] ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
            }
            return std::strong_ordering::equal;
        }
        case OrderKind::block:
            for (const auto& blk : blocks_) {
                auto c = blk.inner == OrderKind::lex ? lex_in(blk.vars, a, b)
                                                     : grevlex_in(blk.vars, a, b);
                if (c != std::strong_ordering::equal) return c;
            }
            return std::strong_ordering::equal;
    }
    throw std::logic_error("unreachable");
}

}  // namespace semid
