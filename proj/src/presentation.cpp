#include "polytc/presentation.hpp"

#include <algorithm>

#include "polytc/errors.hpp"

namespace polytc {

namespace {

// Keep only the minimal sets of the family; membership in the upward
// closure is then "contains one of these".
std::vector<SubsetMask> minimal_antichain(std::vector<SubsetMask> sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<SubsetMask> out;
    for (const SubsetMask& s : sets) {
        bool dominated = false;
        for (const SubsetMask& kept : out)
            if (kept.subset_of(s)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    return out;
}

}  // namespace

Presentation::Presentation(int n, int max_degree, std::vector<SubsetMask> annihilators,
                           std::vector<Polynomial> linear_relations)
    : n_(n),
      max_degree_(max_degree),
      annihilators_(minimal_antichain(std::move(annihilators))),
      linear_relations_(std::move(linear_relations)) {
    if (n_ < 3) throw input_error("presentation needs n >= 3");
    if (max_degree_ < 0) throw input_error("presentation max_degree must be >= 0");
    // Out-of-range supports are representable (the generator check of the
    // validation suite flags them); homogeneity is a hard type invariant.
    for (const Polynomial& rel : linear_relations_) {
        if (rel.is_zero()) throw input_error("zero polynomial listed as a relation");
        if (!rel.homogeneous_degree())
            throw input_error("relation mixes degrees: " + rel.to_string());
    }
}

bool Presentation::uses_only_generators() const {
    const SubsetMask allowed = SubsetMask::full(n_ - 1);
    for (const SubsetMask& a : annihilators_)
        if (!a.subset_of(allowed)) return false;
    for (const Polynomial& rel : linear_relations_)
        for (const auto& [m, c] : rel.terms())
            if (!m.support.subset_of(allowed)) return false;
    return true;
}

Presentation Presentation::free_algebra(int n, int max_degree) {
    return Presentation(n, max_degree, {}, {});
}

bool Presentation::is_annihilated(SubsetMask support) const {
    for (const SubsetMask& a : annihilators_)
        if (a.subset_of(support)) return true;
    return false;
}

Polynomial Presentation::reduce(const Polynomial& p) const {
    Polynomial out;
    for (const auto& [m, c] : p.terms())
        if (!is_annihilated(m.support)) out.add_term(m, c);
    return out;
}

Presentation Presentation::with_max_degree(int max_degree) const {
    return Presentation(n_, max_degree, annihilators_, linear_relations_);
}

Polynomial normalize(const GeneratorWord& word, const Presentation& pres) {
    const Monomial m = rewrite_word(word, pres.n());
    if (pres.is_annihilated(m.support)) return Polynomial::zero();
    return Polynomial(m);
}

Polynomial multiply(const Polynomial& p, const Polynomial& q, const Presentation& pres) {
    Polynomial out;
    for (const auto& [mp, cp] : p.terms()) {
        if (pres.is_annihilated(mp.support)) continue;
        for (const auto& [mq, cq] : q.terms()) {
            const Monomial m = mono_mul(mp, mq);
            if (pres.is_annihilated(m.support)) continue;
            out.add_term(m, cp * cq);
        }
    }
    return out;
}

}  // namespace polytc
