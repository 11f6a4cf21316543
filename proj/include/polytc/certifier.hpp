#pragma once

#include <string>
#include <vector>

#include "polytc/hk_presentation.hpp"
#include "polytc/tensor.hpp"

namespace polytc {

struct MinimalTopMonomial {
    int r = 0;            // minimal support size
    SubsetMask support;   // lexicographically least support of that size
};

// Scans r = 0..n-3 and, within each r, supports in lexicographic order,
// returning the first S whose top monomial R^(n-3-r) V_S is nonzero.
// Exhaustive search, so minimality is a postcondition, not a heuristic.
// Requires a presentation the validator accepted.
MinimalTopMonomial minimal_top_monomial(const Presentation& pres);

// Every support of the minimal size whose top monomial is nonzero
// (uniqueness of the witness is not asserted anywhere, so callers can
// ask for all of them).
std::vector<SubsetMask> all_minimal_supports(const Presentation& pres);

enum class ExpansionPath { brute_force, middle_term_shortcut };

// Coordinate of the bidegree-(n-3, n-3) component of
//   (R(x)1 - 1(x)R)^(2n-6-2r) * prod_{i in S} (V_i(x)1 - 1(x)V_i)^2
// as an integer multiple of M (x) M, where M = R^(n-3-r) V_S is the
// minimal nonzero top monomial. Brute force distributes all 2n-6
// factors; the shortcut keeps only the middle term of each squared
// V-factor, which is exactly the minimality argument, so running both
// turns that argument into a test.
Integer certificate_coefficient(const Presentation& pres, int r, SubsetMask support,
                                ExpansionPath path = ExpansionPath::brute_force);

// Closed form (-1)^(n-3) * C(2n-6-2r, n-3-r) * 2^r.
Integer expected_coefficient(int n, int r);

// Fixture-free check of the expansion combinatorics: the ring is the
// free normalized monomial algebra and an oracle kills exactly the
// top-degree monomials with support size < r. Returns the brute-force
// and shortcut coefficients for support {1..r}, plus whether the two
// reduced tensor polynomials were identical term by term.
struct OracleExpansion {
    int n = 0;
    int r = 0;
    Integer brute_force;
    Integer shortcut;
    Integer closed_form;
    bool tensors_identical = false;

    bool all_agree() const {
        return brute_force == closed_form && shortcut == closed_form && tensors_identical;
    }
};
OracleExpansion oracle_expansion(int n, int r);

// The assembled audit trail. tc_lower comes from the (2n-6)-fold nonzero
// zero-divisor product, tc_upper from the dimension bound for simply
// connected closed manifolds; both land on 2n-5 (non-reduced convention,
// recorded so nobody relitigates off-by-ones).
struct TCCertificate {
    int n = 0;
    std::vector<Rational> lengths;
    bool generic = false;
    bool nondegenerate = false;
    int r = 0;
    SubsetMask support;
    Integer coefficient;
    Integer expected;
    int tc_lower = 0;
    int tc_upper = 0;
    int tc = 0;
    std::string presentation_id;
    bool valid = false;
    std::vector<SubsetMask> witnesses;  // filled only on request

    std::string to_json(bool include_witnesses = false) const;
    std::string to_text() const;
};

// Full pipeline: refuses non-generic or degenerate lengths (with the
// reason), requires an accepted presentation, locates the minimal top
// monomial, computes the expansion coefficient on the chosen path, and
// marks the certificate valid iff the coefficient is nonzero and equals
// the closed form.
TCCertificate certify(const LengthVector& ell, const Presentation& pres,
                      const std::string& presentation_id,
                      ExpansionPath path = ExpansionPath::brute_force,
                      bool collect_witnesses = false);

// True iff the m-fold product of the zero divisors of the given
// degree-1 classes is nonzero in the tensor square. classes must have
// exactly m entries; m must not exceed twice max_degree. The zero test
// is torsion-aware in every bidegree.
bool cup_length_lower_bound(const Presentation& pres, const std::vector<Polynomial>& classes,
                            int m);

}  // namespace polytc
