#pragma once

#include <string>
#include <vector>

#include "polytc/polynomial.hpp"

namespace polytc {

// A presentation of the cohomology ring H*(N(ell)) up to a stated
// degree: generators R, V_1..V_{n-1} are implicit, the rewrite
// V_i^2 = R V_i is built into monomial arithmetic, annihilators declare
// monomial supports that vanish, and linear_relations are homogeneous
// integer combinations declared zero.
//
// The annihilated family is the upward closure of the stored supports
// (any support containing an annihilated one is annihilated), so the
// up-closedness invariant holds by construction; construction keeps only
// the minimal antichain.
class Presentation {
public:
    Presentation(int n, int max_degree, std::vector<SubsetMask> annihilators,
                 std::vector<Polynomial> linear_relations);

    // The free normalized monomial algebra on R, V_1..V_{n-1}: no
    // annihilators, no relations. Used by the abstract expansion oracle.
    static Presentation free_algebra(int n, int max_degree);

    int n() const { return n_; }
    int max_degree() const { return max_degree_; }
    int top_degree() const { return n_ - 3; }

    // Minimal annihilator supports, canonically sorted.
    const std::vector<SubsetMask>& annihilators() const { return annihilators_; }
    const std::vector<Polynomial>& linear_relations() const { return linear_relations_; }

    bool is_annihilated(SubsetMask support) const;

    // True when every annihilator and relation term stays within
    // R, V_1..V_{n-1}. Validation reports a failure instead of refusing
    // to construct, so malformed rings are inspectable.
    bool uses_only_generators() const;

    // Drops annihilated terms.
    Polynomial reduce(const Polynomial& p) const;

    // Copy with a different asserted completeness degree. Used by tests
    // that force an under-related presentation through the full checks.
    Presentation with_max_degree(int max_degree) const;

    // Canonical JSON text of the presentation (schema documented in the
    // README). Stable byte-for-byte; also the basis of content hashing.
    std::string to_json() const;

private:
    int n_;
    int max_degree_;
    std::vector<SubsetMask> annihilators_;       // minimal antichain
    std::vector<Polynomial> linear_relations_;   // each homogeneous
};

// Rewrites a word and reduces by the presentation's annihilators:
// a single normal-form monomial with coefficient 1, or zero.
Polynomial normalize(const GeneratorWord& word, const Presentation& pres);

// Ring product: distribute, rewrite, kill annihilated supports, collect.
// Generators sit in even cohomological degree, so the ring is honestly
// commutative and no signs appear.
Polynomial multiply(const Polynomial& p, const Polynomial& q, const Presentation& pres);

}  // namespace polytc
