#include "polytc/subset.hpp"

#include <algorithm>

namespace polytc {

SubsetMask SubsetMask::full(int n) {
    if (n < 0 || n > kMaxIndices) throw input_error("subset universe out of range");
    return SubsetMask{n == 0 ? 0u : (n == 32 ? ~0u : ((1u << n) - 1u))};
}

SubsetMask SubsetMask::single(int i) {
    if (i < 1 || i > kMaxIndices) throw input_error("subset index out of range");
    return SubsetMask{1u << (i - 1)};
}

SubsetMask SubsetMask::from_indices(const std::vector<int>& indices) {
    SubsetMask m;
    for (int i : indices) m = m.with(i);
    return m;
}

SubsetMask SubsetMask::with(int i) const {
    if (i < 1 || i > kMaxIndices) throw input_error("subset index out of range");
    return SubsetMask{bits_ | (1u << (i - 1))};
}

SubsetMask SubsetMask::without(int i) const {
    if (i < 1 || i > kMaxIndices) throw input_error("subset index out of range");
    return SubsetMask{bits_ & ~(1u << (i - 1))};
}

SubsetMask SubsetMask::complement_in(int n) const { return SubsetMask{full(n).bits() & ~bits_}; }

std::vector<int> SubsetMask::indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctz(b) + 1);
    return out;
}

std::string SubsetMask::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

bool canonical_less(SubsetMask a, SubsetMask b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a == b) return false;
    // Equal sizes: the set owning the lowest differing index is the
    // lexicographically smaller index sequence.
    const std::uint32_t diff = a.bits() ^ b.bits();
    const std::uint32_t low = diff & (~diff + 1u);
    return (a.bits() & low) != 0;
}

std::vector<SubsetMask> all_subsets(int n) {
    const std::uint32_t full = SubsetMask::full(n).bits();
    std::vector<SubsetMask> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t b = 0;; ++b) {
        out.push_back(SubsetMask{b});
        if (b == full) break;
    }
    return out;
}

std::vector<SubsetMask> subsets_of_size(int n, int k) {
    std::vector<SubsetMask> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        out.push_back(SubsetMask::from_indices(idx));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace polytc
