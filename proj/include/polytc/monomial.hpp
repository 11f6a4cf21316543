#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polytc/subset.hpp"

namespace polytc {

// A normal-form monomial R^a * prod_{i in S} V_i over the degree-2
// generators R, V_1..V_{n-1}. The V-part is squarefree: the rewrite
// V_i^k -> R^(k-1) V_i (k >= 2) runs at construction, so no exponent
// above 1 ever survives. Cohomological degree is 2*(a + |S|); we grade
// by d = a + |S| throughout.
struct Monomial {
    int r_exp = 0;        // exponent of R
    SubsetMask support;   // squarefree V-part, subset of {1,...,n-1}

    int degree() const { return r_exp + support.size(); }

    static Monomial one() { return Monomial{}; }
    static Monomial r_power(int a) { return Monomial{a, SubsetMask::empty()}; }
    static Monomial v(int i) { return Monomial{0, SubsetMask::single(i)}; }

    bool operator==(const Monomial& o) const {
        return r_exp == o.r_exp && support == o.support;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string to_string() const;  // "R^2*V1*V3", "R", "1"
};

// Canonical monomial order: (degree, |support|, lexicographic support,
// r_exp). Deterministic bases and reproducible certificates depend on it.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Product of two normal-form monomials. Overlapping V's rewrite away:
// each index in both supports contributes one extra R.
Monomial mono_mul(const Monomial& a, const Monomial& b);

// Generator symbols for words fed to normalize(): R or V_i.
struct GeneratorSymbol {
    bool is_r = true;
    int v_index = 0;  // meaningful when !is_r

    static GeneratorSymbol r() { return {true, 0}; }
    static GeneratorSymbol v(int i) { return {false, i}; }
};

// Parses "R" or "V<k>"; anything else is an input error. n bounds the
// V indices: V_n and beyond are not generators.
GeneratorSymbol parse_generator(const std::string& text, int n);

// A word is a product of symbol^exponent factors, in any order.
using GeneratorWord = std::vector<std::pair<GeneratorSymbol, int>>;

// Rewrites a word to its unique normal form: V_i^k collapses to
// R^(k-1) V_i. Exponents must be nonnegative; V indices must lie in
// 1..n-1. Annihilator reduction is the presentation's business, not
// this function's.
Monomial rewrite_word(const GeneratorWord& word, int n);

}  // namespace polytc
