#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polytc/rational.hpp"
#include "polytc/subset.hpp"

namespace polytc {

// An n-tuple of exact positive rational side lengths. Input order is
// preserved: index n plays a distinguished role in the ring presentation,
// so permutation is not free.
class LengthVector {
public:
    explicit LengthVector(std::vector<Rational> entries);

    // Parses comma-separated rational literals, e.g. "1,1,1/2,2".
    static LengthVector parse(const std::string& text);

    int n() const { return static_cast<int>(entries_.size()); }
    const Rational& entry(int i) const;  // 1-based
    const std::vector<Rational>& entries() const { return entries_; }
    const Rational& total() const { return total_; }

    std::string to_string() const;  // "1,1,1/2,2"

private:
    std::vector<Rational> entries_;
    Rational total_;
};

// Sum of the entries indexed by s, exactly. Throws input_error if s has
// bits past n.
Rational subset_sum(const LengthVector& ell, SubsetMask s);

// s is short when its sum is strictly below the complementary sum, long
// when strictly above. On a wall (equal split) both are false.
bool is_short(const LengthVector& ell, SubsetMask s);
bool is_long(const LengthVector& ell, SubsetMask s);

// No subset splits the total evenly. Decided by exhaustive enumeration;
// by complement symmetry only the 2^(n-1) masks avoiding index n are
// checked.
bool is_generic(const LengthVector& ell);

// A subset witnessing non-genericity (2*sum == total), if any.
std::optional<SubsetMask> find_splitting_subset(const LengthVector& ell);

// Every single side is shorter than all the others combined.
bool is_nondegenerate(const LengthVector& ell);

}  // namespace polytc
