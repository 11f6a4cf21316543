#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polytc/errors.hpp"

namespace polytc {

// A subset of the 1-based index set {1,...,n}, stored as a bitmask with
// bit k-1 standing for index k. n never exceeds kMaxIndices.
class SubsetMask {
public:
    static constexpr int kMaxIndices = 31;

    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

    static SubsetMask empty() { return SubsetMask{}; }

    // Full set {1,...,n}.
    static SubsetMask full(int n);

    // Singleton {i}.
    static SubsetMask single(int i);

    static SubsetMask from_indices(const std::vector<int>& indices);

    bool contains(int i) const { return i >= 1 && i <= kMaxIndices && (bits_ >> (i - 1)) & 1u; }
    int size() const { return __builtin_popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }
    std::uint32_t bits() const { return bits_; }

    SubsetMask with(int i) const;
    SubsetMask without(int i) const;

    SubsetMask union_with(SubsetMask o) const { return SubsetMask{bits_ | o.bits_}; }
    SubsetMask intersect(SubsetMask o) const { return SubsetMask{bits_ & o.bits_}; }
    SubsetMask complement_in(int n) const;

    bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }

    // Ascending list of member indices.
    std::vector<int> indices() const;

    bool operator==(const SubsetMask& o) const { return bits_ == o.bits_; }
    bool operator!=(const SubsetMask& o) const { return bits_ != o.bits_; }

    std::string to_string() const;  // "{1,3,4}"

private:
    std::uint32_t bits_ = 0;
};

// Canonical subset order: by size, then lexicographically on the sorted
// index sequences. Total, and deterministic across platforms.
bool canonical_less(SubsetMask a, SubsetMask b);

// All subsets of {1,...,n}, ascending by raw bits (includes the empty set).
std::vector<SubsetMask> all_subsets(int n);

// All size-k subsets of {1,...,n} in canonical (lexicographic) order.
std::vector<SubsetMask> subsets_of_size(int n, int k);

}  // namespace polytc
