#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace semid {

/// Index into a ring's ordered variable list.
using VarId = int;

/// Exponent vector, one entry per ring variable.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t nvars() const { return exps.size(); }
    bool is_one() const;
    std::uint64_t degree() const;

    /// this | other, componentwise.
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    /// Componentwise difference; requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// Structural ordering on exponent vectors; used only for the canonical
    /// storage form of polynomials, not as a term order.
    auto operator<=>(const Monomial&) const = default;
};

}  // namespace semid
