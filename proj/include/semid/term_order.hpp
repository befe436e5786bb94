#pragma once

#include <compare>
#include <vector>

#include "semid/monomial.hpp"

namespace semid {

enum class OrderKind { lex, grevlex, block };

/// One block of a block (elimination) order: the listed variables, most
/// significant first, compared by the inner order restricted to the block.
struct OrderBlock {
    std::vector<VarId> vars;
    OrderKind inner = OrderKind::grevlex;  // lex or grevlex
};

/// Total order on monomials, compatible with multiplication, with 1 minimal.
/// Kinds: lex (under a significance permutation), graded reverse lex, and
/// block orders built from an ordered partition of the variables. A block
/// order with block A first makes any monomial containing an A-variable
/// larger than every A-free monomial, which is what elimination needs.
class TermOrder {
  public:
    static TermOrder lex(std::vector<VarId> perm);
    static TermOrder lex_natural(int nvars);
    static TermOrder grevlex(int nvars);
    static TermOrder block(std::vector<OrderBlock> blocks);

    OrderKind kind() const { return kind_; }
    int nvars() const { return nvars_; }
    const std::vector<VarId>& perm() const { return perm_; }
    const std::vector<OrderBlock>& blocks() const { return blocks_; }

    /// Strict total order; throws on dimension mismatch.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    bool operator==(const TermOrder&) const = default;

  private:
    TermOrder() = default;

    OrderKind kind_ = OrderKind::grevlex;
    int nvars_ = 0;
    std::vector<VarId> perm_;         // lex only
    std::vector<OrderBlock> blocks_;  // block only
};

}  // namespace semid
