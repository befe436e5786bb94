#include "semid/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace semid {

namespace {

Rat rat_pow(const Rat& base, std::uint32_t e) {
    Rat acc(1);
    Rat b = base;
    while (e > 0) {
        if (e & 1u) acc = Rat(acc * b);
        b = Rat(b * b);
        e >>= 1u;
    }
    return acc;
}

bool term_before(const PolyTerm& a, const PolyTerm& b) { return a.mono > b.mono; }

}  // namespace

VarId Ring::var(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<VarId>(it - names.begin());
}

Polynomial Polynomial::constant(int nvars, Rat c) {
    return monomial_term(Monomial(static_cast<std::size_t>(nvars)), std::move(c));
}

Polynomial Polynomial::variable(int nvars, VarId v) {
    if (v < 0 || v >= nvars) throw std::invalid_argument("variable index out of range");
    Monomial m(static_cast<std::size_t>(nvars));
    m.exps[v] = 1;
    return monomial_term(std::move(m), Rat(1));
}

Polynomial Polynomial::monomial_term(Monomial m, Rat c) {
    Polynomial p;
    if (c == 0) return p;
    p.nvars_ = static_cast<int>(m.nvars());
    p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<PolyTerm> terms) {
    std::erase_if(terms, [](const PolyTerm& t) { return t.coef == 0; });
    Polynomial p;
    if (terms.empty()) return p;
    const std::size_t n = terms.front().mono.nvars();
    for (const auto& t : terms)
        if (t.mono.nvars() != n) throw std::invalid_argument("mixed-ring term list");
    std::sort(terms.begin(), terms.end(), term_before);
    std::vector<PolyTerm> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coef = Rat(merged.back().coef + t.coef);
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const PolyTerm& t) { return t.coef == 0; });
    if (merged.empty()) return p;
    p.nvars_ = static_cast<int>(n);
    p.terms_ = std::move(merged);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

namespace {
int common_nvars(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.nvars();
    if (b.is_zero()) return a.nvars();
    if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial ring mismatch");
    return a.nvars();
}
}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    common_nvars(*this, o);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    std::vector<PolyTerm> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const auto& a = terms_[i];
        const auto& b = o.terms_[j];
        if (a.mono > b.mono) {
            out.push_back(a);
            ++i;
        } else if (b.mono > a.mono) {
            out.push_back(b);
            ++j;
        } else {
            Rat c(a.coef + b.coef);
            if (c != 0) out.push_back({a.mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial p;
    if (out.empty()) return p;
    p.nvars_ = nvars_;
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coef = Rat(-t.coef);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Monomial& m, const Rat& c) const {
    if (c == 0 || is_zero()) return {};
    Polynomial p;
    p.nvars_ = nvars_;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, Rat(t.coef * c)});
    // multiplying every exponent vector by the same monomial preserves the
    // descending structural order
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    common_nvars(*this, o);
    if (is_zero() || o.is_zero()) return {};
    std::vector<PolyTerm> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prods.push_back({a.mono * b.mono, Rat(a.coef * b.coef)});
    return from_terms(std::move(prods));
}

Polynomial Polynomial::scaled(const Rat& c) const {
    if (c == 0) return {};
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coef = Rat(t.coef * c);
    return p;
}

const PolyTerm& Polynomial::leading_term(const TermOrder& order) const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
    const PolyTerm* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Rat Polynomial::eval(std::span<const Rat> values) const {
    if (!is_zero() && static_cast<int>(values.size()) != nvars_)
        throw std::invalid_argument("evaluation point dimension mismatch");
    Rat acc(0);
    for (const auto& t : terms_) {
        Rat v = t.coef;
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i)
            if (t.mono.exps[i] > 0) v = Rat(v * rat_pow(values[i], t.mono.exps[i]));
        acc = Rat(acc + v);
    }
    return acc;
}

Rat Polynomial::substitute(const std::map<VarId, Rat>& values) const {
    std::vector<Rat> point(static_cast<std::size_t>(nvars_), Rat(0));
    std::vector<bool> have(static_cast<std::size_t>(nvars_), false);
    for (const auto& [v, val] : values) {
        if (v >= 0 && v < nvars_) {
            point[v] = val;
            have[v] = true;
        }
    }
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i)
            if (t.mono.exps[i] > 0 && !have[i])
                throw std::invalid_argument("missing assignment for a used variable");
    return eval(point);
}

std::uint32_t Polynomial::degree_in(VarId v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_)
        if (v >= 0 && v < nvars_) d = std::max(d, t.mono.exps[v]);
    return d;
}

Polynomial Polynomial::coeff_of_power(VarId v, std::uint32_t k) const {
    std::vector<PolyTerm> out;
    for (const auto& t : terms_) {
        if (t.mono.exps[v] != k) continue;
        Monomial m = t.mono;
        m.exps[v] = 0;
        out.push_back({std::move(m), t.coef});
    }
    return from_terms(std::move(out));
}

bool Polynomial::uses_var(VarId v) const {
    if (v < 0 || v >= nvars_) return false;
    return std::any_of(terms_.begin(), terms_.end(),
                       [v](const PolyTerm& t) { return t.mono.exps[v] > 0; });
}

Rat Polynomial::content() const {
    if (is_zero()) return Rat(0);
    mpz_class g = 0, l = 1;
    for (const auto& t : terms_) {
        g = gcd(g, mpz_class(abs(t.coef.get_num())));
        l = lcm(l, t.coef.get_den());
    }
    Rat c(g, l);
    c.canonicalize();
    return c;
}

Polynomial Polynomial::primitive_scaled(const TermOrder* order) const {
    if (is_zero()) return {};
    Rat scale(1 / content());
    const Rat& lead = order ? leading_term(*order).coef : terms_.front().coef;
    if (Rat(lead * scale) < 0) scale = Rat(-scale);
    return scaled(scale);
}

std::string Polynomial::to_string(const Ring& ring, const TermOrder& order) const {
    if (is_zero()) return "0";
    if (nvars_ != ring.nvars()) throw std::invalid_argument("polynomial/ring mismatch");
    std::vector<const PolyTerm*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](const PolyTerm* a, const PolyTerm* b) { return order.greater(a->mono, b->mono); });

    std::ostringstream out;
    bool first = true;
    for (const PolyTerm* t : sorted) {
        Rat c = t->coef;
        if (first) {
            if (c < 0) {
                out << "-";
                c = Rat(-c);
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = Rat(-c);
        }
        first = false;

        std::vector<std::string> factors;
        for (std::size_t v = 0; v < t->mono.exps.size(); ++v) {
            if (t->mono.exps[v] == 0) continue;
            std::string f = ring.names[v];
            if (t->mono.exps[v] > 1) f += "^" + std::to_string(t->mono.exps[v]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            for (std::size_t k = 0; k < factors.size(); ++k) {
                if (k > 0) out << "*";
                out << factors[k];
            }
        }
    }
    return out.str();
}

namespace {

struct Tokenizer {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected a number in polynomial");
        return std::string(s.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos >= s.size() || !head(s[pos]))
            throw std::invalid_argument("expected an identifier in polynomial");
        ++pos;
        while (pos < s.size() && tail(s[pos])) ++pos;
        return std::string(s.substr(start, pos - start));
    }
};

}  // namespace

Polynomial Polynomial::parse(const Ring& ring, const std::string& text) {
    Tokenizer tk{text};
    const int n = ring.nvars();
    std::vector<PolyTerm> terms;

    if (tk.done()) throw std::invalid_argument("empty polynomial text");
    bool negative = false;
    if (tk.accept('-'))
        negative = true;
    else
        tk.accept('+');

    while (true) {
        // one term: '*'-separated rational and variable-power parts
        Rat coef(negative ? -1 : 1);
        Monomial mono(static_cast<std::size_t>(n));
        bool want_part = true;
        while (want_part) {
            char c = tk.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = tk.number();
                std::string den = "1";
                if (tk.accept('/')) den = tk.number();
                coef = Rat(coef * rat(num + "/" + den));
            } else {
                std::string name = tk.ident();
                VarId v = ring.var(name);
                if (v < 0) throw std::invalid_argument("unknown variable '" + name + "'");
                std::uint32_t e = 1;
                if (tk.accept('^')) e = static_cast<std::uint32_t>(std::stoul(tk.number()));
                mono.exps[v] += e;
            }
            want_part = tk.accept('*');
        }
        terms.push_back({std::move(mono), std::move(coef)});

        if (tk.done()) break;
        if (tk.accept('+'))
            negative = false;
        else if (tk.accept('-'))
            negative = true;
        else
            throw std::invalid_argument("unexpected character in polynomial: '" +
                                        std::string(1, tk.peek()) + "'");
    }
    // "0" parses as a single constant term that from_terms folds away
    return from_terms(std::move(terms));
}

}  // namespace semid
