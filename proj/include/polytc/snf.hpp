#pragma once

#include <vector>

#include "polytc/rational.hpp"

namespace polytc {

// Dense integer matrix, row-major. Sizes here stay in the low thousands,
// so plain vectors of arbitrary-precision integers are fine.
using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

// Smith normal form of an m x k matrix M: U M C = D with U, C unimodular
// and D diagonal, d_1 | d_2 | ... | d_rank, all nonnegative. U is not
// needed by any caller and is not tracked.
//
// col_transform is C (k x k) and col_transform_inv its inverse; for a row
// vector x, y = x * C expresses x in the coordinates where the row
// lattice of M is spanned by d_i * e_i. Membership of x in the lattice
// is then d_i | y_i for i < rank and y_i == 0 for i >= rank.
struct SmithNormalForm {
    int rank = 0;
    std::vector<Integer> divisors;   // d_1..d_rank, positive
    IntMatrix col_transform;         // k x k
    IntMatrix col_transform_inv;     // k x k
};

SmithNormalForm smith_normal_form(IntMatrix m, int cols);

// y = x * C for a row vector x (size = rows of C).
IntRow apply_col_transform(const IntRow& x, const IntMatrix& c);

}  // namespace polytc
