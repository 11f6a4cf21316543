#pragma once

#include <map>
#include <string>
#include <utility>

#include "polytc/presentation.hpp"

namespace polytc {

// Integer-coefficient element of the tensor square of the monomial
// algebra, bigraded by the degrees of the two sides. Both sides are kept
// in normal form and reduced by the active presentation's annihilators.
class TensorPolynomial {
public:
    struct PairOrder {
        bool operator()(const std::pair<Monomial, Monomial>& a,
                        const std::pair<Monomial, Monomial>& b) const;
    };
    using TermMap = std::map<std::pair<Monomial, Monomial>, Integer, PairOrder>;

    TensorPolynomial() = default;

    static TensorPolynomial zero() { return {}; }
    static TensorPolynomial one();

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& left, const Monomial& right, const Integer& coef);

    TensorPolynomial& operator+=(const TensorPolynomial& o);
    TensorPolynomial operator+(const TensorPolynomial& o) const;
    TensorPolynomial operator-(const TensorPolynomial& o) const;
    TensorPolynomial operator*(const Integer& c) const;

    bool operator==(const TensorPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorPolynomial& o) const { return terms_ != o.terms_; }

    // Terms of bidegree exactly (d1, d2).
    TensorPolynomial bidegree_part(int d1, int d2) const;

    std::string to_string() const;

private:
    TermMap terms_;
};

// y (x) 1 - 1 (x) y for homogeneous y.
TensorPolynomial zero_divisor(const Polynomial& y);

// Componentwise ring product. Terms are dropped when either side is
// annihilated or exceeds degree n-3: past the top degree of the manifold
// nothing can return to the window that matters.
TensorPolynomial tensor_multiply(const TensorPolynomial& a, const TensorPolynomial& b,
                                 const Presentation& pres);

}  // namespace polytc
