#pragma once

#include <vector>

#include "polytc/presentation.hpp"
#include "polytc/snf.hpp"

namespace polytc {

// One graded piece of a presented ring: the degree-d monomial basis
// (annihilated supports excluded), the integer lattice spanned by all
// degree-d consequences of the linear relations, and its Smith data.
// Everything is exact over the integers so torsion is detected, not
// rationalized away.
class GradedComponent {
public:
    int degree() const { return degree_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    const IntMatrix& relation_matrix() const { return relation_matrix_; }
    int rank() const { return snf_.rank; }

    // Invariant factors > 1 (torsion coefficients of the quotient).
    std::vector<Integer> torsion() const;

    int betti() const { return static_cast<int>(basis_.size()) - snf_.rank; }

    // Coordinates of a degree-d polynomial in the monomial basis.
    // Annihilated terms must already be gone (reduce() first).
    IntRow coordinates(const Polynomial& p) const;

    // Class test: true iff p does not lie in the relation lattice.
    bool is_nonzero_class(const Polynomial& p) const;

    // Tensor-square zero test in this_component (x) other: decides
    // whether sum_k c_k (a_k (x) b_k) vanishes, honestly handling
    // torsion in either factor.
    struct ClassVector {
        // SNF coordinates y = x * C split at rank: entries below rank are
        // torsion coordinates (mod d_i), entries from rank on are free.
        IntRow coords;
    };
    ClassVector class_vector(const Polynomial& p) const;

    const SmithNormalForm& snf() const { return snf_; }

    friend GradedComponent component(const Presentation& pres, int d);

private:
    int degree_ = 0;
    std::vector<Monomial> basis_;
    IntMatrix relation_matrix_;
    SmithNormalForm snf_;
};

// Builds the degree-d component. Relation rows are every linear relation
// of degree d' <= d multiplied by every non-annihilated normal monomial
// of degree d - d'. Throws incomplete_presentation_error past
// pres.max_degree().
GradedComponent component(const Presentation& pres, int d);

// All normal-form monomials of degree d over {1..n-1} with
// non-annihilated support, in canonical order.
std::vector<Monomial> monomial_basis(const Presentation& pres, int d);

// True iff the homogeneous polynomial p is nonzero in the presented
// ring. Lattice membership over the integers, not the rationals.
bool is_nonzero(const Presentation& pres, const Polynomial& p);

// Coordinate of a degree-(n-3) polynomial with respect to the fixed
// generator of the top component. Requires betti 1 and no torsion there
// (validation_error otherwise). The generator is pinned deterministically:
// the sign is chosen so the first basis monomial with nonzero class gets
// a positive coordinate.
Integer top_coordinate(const Presentation& pres, const Polynomial& p);

// Precomputed variant: functional phi on basis coordinates with the sign
// convention above.
class TopForm {
public:
    explicit TopForm(const Presentation& pres);

    Integer operator()(const Polynomial& p) const;
    Integer on_monomial(const Monomial& m) const;
    const GradedComponent& component() const { return comp_; }

private:
    GradedComponent comp_;
    IntRow phi_;  // one integer per basis monomial
};

}  // namespace polytc
