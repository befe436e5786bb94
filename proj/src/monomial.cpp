#include "semid/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace semid {

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t Monomial::degree() const {
    return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
    if (exps.size() != other.exps.size())
        throw std::invalid_argument("monomial dimension mismatch");
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (exps.size() != other.exps.size())
        throw std::invalid_argument("monomial dimension mismatch");
    Monomial r(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] + other.exps[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (exps.size() != other.exps.size())
        throw std::invalid_argument("monomial dimension mismatch");
    Monomial r(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (other.exps[i] > exps[i]) throw std::invalid_argument("monomial quotient undefined");
        r.exps[i] = exps[i] - other.exps[i];
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size())
        throw std::invalid_argument("monomial dimension mismatch");
    Monomial r(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

}  // namespace semid
