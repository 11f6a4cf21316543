#include "polytc/chamber.hpp"

#include <algorithm>
#include <map>

#include "polytc/errors.hpp"

namespace polytc {

bool ChamberSignature::operator<(const ChamberSignature& o) const {
    return std::lexicographical_compare(short_sets.begin(), short_sets.end(),
                                        o.short_sets.begin(), o.short_sets.end(),
                                        canonical_less);
}

std::string ChamberSignature::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < short_sets.size(); ++k) {
        if (k) s += ",";
        s += "[";
        const auto idx = short_sets[k].indices();
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(idx[j]);
        }
        s += "]";
    }
    return s + "]";
}

ChamberSignature chamber_signature(const LengthVector& ell) {
    if (auto wall = find_splitting_subset(ell))
        throw hypothesis_error("chamber signature undefined on walls: subset " +
                               wall->to_string() + " splits the total evenly");
    const int n = ell.n();
    ChamberSignature sig;
    for (std::uint32_t t = 0, limit = SubsetMask::full(n - 1).bits();; ++t) {
        const SubsetMask s = SubsetMask{t}.with(n);
        if (is_short(ell, s)) sig.short_sets.push_back(s);
        if (t == limit) break;
    }
    std::sort(sig.short_sets.begin(), sig.short_sets.end(), canonical_less);
    return sig;
}

std::vector<Chamber> enumerate_chambers(int n, int bound) {
    if (n < 3) throw input_error("chamber enumeration needs n >= 3");
    if (bound < 1) throw input_error("chamber enumeration needs bound >= 1");

    std::map<ChamberSignature, LengthVector> reps;
    std::vector<int> lengths(static_cast<std::size_t>(n), 1);
    // Lexicographic scan keeps the smallest representative per signature
    // without any dependence on partitioning.
    while (true) {
        std::vector<Rational> entries(lengths.begin(), lengths.end());
        LengthVector ell(std::move(entries));
        if (is_generic(ell) && is_nondegenerate(ell)) {
            ChamberSignature sig = chamber_signature(ell);
            reps.try_emplace(std::move(sig), std::move(ell));
        }
        int pos = n - 1;
        while (pos >= 0 && lengths[static_cast<std::size_t>(pos)] == bound) --pos;
        if (pos < 0) break;
        ++lengths[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < n; ++j) lengths[static_cast<std::size_t>(j)] = 1;
    }

    std::vector<Chamber> out;
    out.reserve(reps.size());
    for (auto& [sig, rep] : reps) out.push_back(Chamber{sig, rep});
    return out;
}

}  // namespace polytc
