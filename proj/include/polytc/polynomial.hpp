#pragma once

#include <map>
#include <optional>
#include <string>

#include "polytc/monomial.hpp"
#include "polytc/rational.hpp"

namespace polytc {

// Integer-coefficient element of the free normalized monomial algebra.
// Zero coefficients are never stored; the zero polynomial is the empty
// term map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Integer, MonomialOrder>;

    Polynomial() = default;
    explicit Polynomial(const Monomial& m, Integer coef = 1);

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial one() { return Polynomial{Monomial::one()}; }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, const Integer& coef);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Integer& c) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

    // Common degree of all terms if homogeneous (nullopt for 0 or mixed).
    std::optional<int> homogeneous_degree() const;

    // Degree assuming homogeneity; input_error if terms mix degrees or
    // the polynomial is zero.
    int require_homogeneous_degree() const;

    // Canonical printing, highest monomial first: "2*R^2*V1*V3 - V2".
    std::string to_string() const;

private:
    TermMap terms_;
};

}  // namespace polytc
