#include "polytc/polynomial.hpp"

#include "polytc/errors.hpp"

namespace polytc {

Polynomial::Polynomial(const Monomial& m, Integer coef) {
    if (coef != 0) terms_.emplace(m, std::move(coef));
}

void Polynomial::add_term(const Monomial& m, const Integer& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(m, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Integer& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

int Polynomial::require_homogeneous_degree() const {
    const auto d = homogeneous_degree();
    if (!d) throw input_error("polynomial is not homogeneous: " + to_string());
    return *d;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest monomial first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Integer a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        const std::string ms = m.to_string();
        if (a == 1 && ms != "1") s += ms;
        else if (ms == "1") s += a.get_str();
        else s += a.get_str() + "*" + ms;
    }
    return s;
}

}  // namespace polytc
