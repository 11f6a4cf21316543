#include "polytc/monomial.hpp"

#include <cctype>

#include "polytc/errors.hpp"

namespace polytc {

std::string Monomial::to_string() const {
    std::string s;
    if (r_exp == 1) s = "R";
    else if (r_exp > 1) s = "R^" + std::to_string(r_exp);
    for (int i : support.indices()) {
        if (!s.empty()) s += "*";
        s += "V" + std::to_string(i);
    }
    return s.empty() ? "1" : s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    if (a.support != b.support) return canonical_less(a.support, b.support);
    return a.r_exp < b.r_exp;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    // V_i^2 = R V_i: each shared support index trades one V for one R.
    const int overlap = a.support.intersect(b.support).size();
    return Monomial{a.r_exp + b.r_exp + overlap, a.support.union_with(b.support)};
}

GeneratorSymbol parse_generator(const std::string& text, int n) {
    if (text == "R") return GeneratorSymbol::r();
    if (text.size() >= 2 && text[0] == 'V') {
        for (std::size_t k = 1; k < text.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(text[k])))
                throw input_error("unknown generator symbol '" + text + "'");
        const int i = std::stoi(text.substr(1));
        if (i < 1 || i > n - 1)
            throw input_error("generator V" + std::to_string(i) + " is out of range for n=" +
                              std::to_string(n) + " (generators are R, V1..V" +
                              std::to_string(n - 1) + ")");
        return GeneratorSymbol::v(i);
    }
    throw input_error("unknown generator symbol '" + text + "'");
}

Monomial rewrite_word(const GeneratorWord& word, int n) {
    int r_exp = 0;
    SubsetMask support;
    for (const auto& [sym, exp] : word) {
        if (exp < 0) throw input_error("negative exponent in generator word");
        if (exp == 0) continue;
        if (sym.is_r) {
            r_exp += exp;
        } else {
            const int i = sym.v_index;
            if (i < 1 || i > n - 1)
                throw input_error("generator V" + std::to_string(i) +
                                  " is out of range for n=" + std::to_string(n));
            // V_i^k -> R^(k-1) V_i, and another R for each V_i already seen.
            r_exp += exp - 1 + (support.contains(i) ? 1 : 0);
            support = support.with(i);
        }
    }
    return Monomial{r_exp, support};
}

}  // namespace polytc
