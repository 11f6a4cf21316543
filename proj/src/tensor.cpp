#include "polytc/tensor.hpp"

#include "polytc/errors.hpp"

namespace polytc {

bool TensorPolynomial::PairOrder::operator()(const std::pair<Monomial, Monomial>& a,
                                             const std::pair<Monomial, Monomial>& b) const {
    MonomialOrder less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
}

TensorPolynomial TensorPolynomial::one() {
    TensorPolynomial t;
    t.add_term(Monomial::one(), Monomial::one(), 1);
    return t;
}

void TensorPolynomial::add_term(const Monomial& left, const Monomial& right,
                                const Integer& coef) {
    if (coef == 0) return;
    auto key = std::make_pair(left, right);
    auto [it, inserted] = terms_.emplace(std::move(key), coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorPolynomial& TensorPolynomial::operator+=(const TensorPolynomial& o) {
    for (const auto& [pair, c] : o.terms_) add_term(pair.first, pair.second, c);
    return *this;
}

TensorPolynomial TensorPolynomial::operator+(const TensorPolynomial& o) const {
    TensorPolynomial out = *this;
    out += o;
    return out;
}

TensorPolynomial TensorPolynomial::operator-(const TensorPolynomial& o) const {
    TensorPolynomial out = *this;
    for (const auto& [pair, c] : o.terms_) out.add_term(pair.first, pair.second, -c);
    return out;
}

TensorPolynomial TensorPolynomial::operator*(const Integer& c) const {
    TensorPolynomial out;
    if (c == 0) return out;
    for (const auto& [pair, coef] : terms_) out.terms_.emplace(pair, coef * c);
    return out;
}

TensorPolynomial TensorPolynomial::bidegree_part(int d1, int d2) const {
    TensorPolynomial out;
    for (const auto& [pair, c] : terms_)
        if (pair.first.degree() == d1 && pair.second.degree() == d2)
            out.terms_.emplace(pair, c);
    return out;
}

std::string TensorPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [pair, c] = *it;
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
        if (a != 1) s += a.get_str() + "*";
        s += "(" + pair.first.to_string() + ")x(" + pair.second.to_string() + ")";
    }
    return s;
}

TensorPolynomial zero_divisor(const Polynomial& y) {
    if (!y.is_zero()) y.require_homogeneous_degree();
    TensorPolynomial out;
    for (const auto& [m, c] : y.terms()) {
        out.add_term(m, Monomial::one(), c);
        out.add_term(Monomial::one(), m, -c);
    }
    return out;
}

TensorPolynomial tensor_multiply(const TensorPolynomial& a, const TensorPolynomial& b,
                                 const Presentation& pres) {
    const int cap = pres.top_degree();
    TensorPolynomial out;
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) {
            const Monomial left = mono_mul(pa.first, pb.first);
            if (left.degree() > cap || pres.is_annihilated(left.support)) continue;
            const Monomial right = mono_mul(pa.second, pb.second);
            if (right.degree() > cap || pres.is_annihilated(right.support)) continue;
            out.add_term(left, right, ca * cb);
        }
    return out;
}

}  // namespace polytc
