#pragma once

#include <string>
#include <vector>

#include "polytc/component.hpp"
#include "polytc/length_vector.hpp"
#include "polytc/presentation.hpp"

namespace polytc {

// Base presentation derived from the length vector alone: the rewrite
// rule plus the annihilators prod_{i in S} V_i = 0 for every S such that
// S u {n} is long, no linear relations, max_degree 0. Base presentations
// deliberately under-relate: they are for constraint checking, never for
// certification, and the max_degree marking enforces that.
Presentation build_base(const LengthVector& ell);

// Reads a presentation from the JSON fixture format:
//   { "n": int, "max_degree": int, "annihilators": [[int,...],...],
//     "linear_relations": [ { "terms": [ {"coef": int, "r_exp": int,
//                                         "support": [int,...]} ] } ] }
// Rejects malformed files, inhomogeneous relations, and supports that
// touch index n, with the offending location in the message.
Presentation load_fixture(const std::string& path);
Presentation parse_presentation_json(const std::string& text, const std::string& where);

enum class CheckStatus { pass, fail };

struct ValidationCheck {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    bool mandatory = true;
    std::string witness;  // failing monomial / degree / detail, empty on pass

    bool passed() const { return status == CheckStatus::pass; }
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool full_suite = false;  // whether the degree-dependent checks could run
    bool accepted = false;    // all mandatory checks ran and passed

    const ValidationCheck* find(const std::string& name) const;
    std::string to_json() const;
    std::string to_text() const;
};

// Runs every property the presentation must satisfy, in a fixed order:
//   compatible  - pres.n matches ell.n
//   generators  - only R, V_1..V_{n-1} appear
//   vanishing   - every product of n-2 distinct V_i's reduces to 0
//   shuffle     - all exponent splittings of R^{e0} prod V_i^{e_i} with a
//                 common support and degree d <= n-3 normalize identically
//   connected   - betti(0) = 1
//   top_class   - betti(n-3) = 1 with no torsion
//   symmetry    - betti(d) = betti(n-3-d) for all d
//   existence   - some degree-(n-3) monomial is nonzero
// plus two optional, informational checks that never affect acceptance:
//   middle_pairing       - unimodular cup pairing in the middle degree
//                          (only when n-3 is even)
//   chamber_annihilators - every S with S u {n} long vanishes in pres
// Failures are report entries, not exceptions. When max_degree < n-3
// only the structural subset runs and the presentation is not accepted.
ValidationReport validate(const Presentation& pres, const LengthVector& ell);

}  // namespace polytc
