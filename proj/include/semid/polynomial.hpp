#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semid/monomial.hpp"
#include "semid/rational.hpp"
#include "semid/term_order.hpp"

namespace semid {

/// Ring descriptor: ordered list of printable variable names. Polynomials
/// themselves carry only exponent vectors; the descriptor supplies names
/// for rendering and parsing.
struct Ring {
    std::vector<std::string> names;

    int nvars() const { return static_cast<int>(names.size()); }
    /// Index of a named variable, or -1.
    VarId var(const std::string& name) const;

    bool operator==(const Ring&) const = default;
};

struct PolyTerm {
    Monomial mono;
    Rat coef;

    bool operator==(const PolyTerm&) const = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: terms sorted descending by structural exponent-vector
/// comparison, no zero coefficients, no duplicate monomials, and the zero
/// polynomial is the empty term list (with nvars 0, so it is compatible
/// with any ring). Two equal polynomials always compare bit-equal.
class Polynomial {
  public:
    Polynomial() = default;  // zero

    static Polynomial zero() { return {}; }
    static Polynomial constant(int nvars, Rat c);
    static Polynomial variable(int nvars, VarId v);
    static Polynomial monomial_term(Monomial m, Rat c);
    /// Normalizes arbitrary term lists into canonical form.
    static Polynomial from_terms(std::vector<PolyTerm> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int nvars() const { return nvars_; }
    const std::vector<PolyTerm>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    /// this * (c * x^m).
    Polynomial times_term(const Monomial& m, const Rat& c) const;

    /// Order-maximal term; throws if zero.
    const PolyTerm& leading_term(const TermOrder& order) const;

    /// Exact evaluation with a complete assignment (size == nvars).
    Rat eval(std::span<const Rat> values) const;
    /// Exact evaluation; throws if a used variable has no assignment.
    Rat substitute(const std::map<VarId, Rat>& values) const;

    std::uint32_t degree_in(VarId v) const;
    /// Coefficient of v^k as a polynomial in the same ring (v zeroed out).
    Polynomial coeff_of_power(VarId v, std::uint32_t k) const;
    bool uses_var(VarId v) const;

    /// gcd(numerators)/lcm(denominators) of the coefficients, as a positive
    /// rational; content of the zero polynomial is 0.
    Rat content() const;
    /// Integer coefficients, content 1, leading coefficient positive under
    /// `order` (structural leading term when order is null).
    Polynomial primitive_scaled(const TermOrder* order = nullptr) const;

    /// Terms descending under `order`; coefficients as integer or
    /// integer/integer fractions, e.g. "s12*q - s13".
    std::string to_string(const Ring& ring, const TermOrder& order) const;

    /// Parses the to_string surface form; throws std::invalid_argument.
    static Polynomial parse(const Ring& ring, const std::string& text);

    bool operator==(const Polynomial&) const = default;

  private:
    int nvars_ = 0;
    std::vector<PolyTerm> terms_;  // descending structural order
};

}  // namespace semid
