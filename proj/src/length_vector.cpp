#include "polytc/length_vector.hpp"

#include "polytc/errors.hpp"

namespace polytc {

LengthVector::LengthVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 3) throw input_error("a length vector needs at least 3 sides");
    if (entries_.size() > SubsetMask::kMaxIndices)
        throw input_error("length vectors beyond " + std::to_string(SubsetMask::kMaxIndices) +
                          " sides are not supported");
    total_ = 0;
    for (const Rational& e : entries_) {
        if (e <= 0) throw input_error("side lengths must be strictly positive");
        total_ += e;
    }
}

LengthVector LengthVector::parse(const std::string& text) {
    return LengthVector(parse_rational_list(text));
}

const Rational& LengthVector::entry(int i) const {
    if (i < 1 || i > n()) throw input_error("side index out of range");
    return entries_[static_cast<std::size_t>(i - 1)];
}

std::string LengthVector::to_string() const {
    std::string s;
    for (int i = 1; i <= n(); ++i) {
        if (i > 1) s += ",";
        s += polytc::to_string(entry(i));
    }
    return s;
}

Rational subset_sum(const LengthVector& ell, SubsetMask s) {
    if (!s.subset_of(SubsetMask::full(ell.n())))
        throw input_error("subset " + s.to_string() + " has indices past n=" +
                          std::to_string(ell.n()));
    Rational sum = 0;
    for (int i : s.indices()) sum += ell.entry(i);
    return sum;
}

bool is_short(const LengthVector& ell, SubsetMask s) {
    return 2 * subset_sum(ell, s) < ell.total();
}

bool is_long(const LengthVector& ell, SubsetMask s) {
    return 2 * subset_sum(ell, s) > ell.total();
}

std::optional<SubsetMask> find_splitting_subset(const LengthVector& ell) {
    const int n = ell.n();
    // Gray-code walk over the masks avoiding index n, one entry flipped
    // per step, a single running sum. S and its complement split
    // together and one of the two avoids index n, so this covers every
    // subset in 2^(n-1) steps with constant memory.
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    Rational sum = 0;
    std::uint32_t gray = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
        const std::uint32_t next = static_cast<std::uint32_t>(k ^ (k >> 1));
        const std::uint32_t flipped = gray ^ next;
        const int i = __builtin_ctz(flipped) + 1;
        if (next & flipped) sum += ell.entry(i);
        else sum -= ell.entry(i);
        gray = next;
        if (2 * sum == ell.total()) return SubsetMask{gray};
    }
    return std::nullopt;
}

bool is_generic(const LengthVector& ell) { return !find_splitting_subset(ell).has_value(); }

bool is_nondegenerate(const LengthVector& ell) {
    Rational max = ell.entry(1);
    for (int i = 2; i <= ell.n(); ++i)
        if (ell.entry(i) > max) max = ell.entry(i);
    return 2 * max < ell.total();
}

}  // namespace polytc
