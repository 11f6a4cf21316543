#pragma once

#include <string>
#include <vector>

#include "polytc/length_vector.hpp"

namespace polytc {

// The canonical signature of a chamber: all short subsets containing
// index n, sorted canonically. Two generic vectors get equal signatures
// iff they agree on the shortness of every subset (the complement rule
// recovers the subsets not containing n).
struct ChamberSignature {
    std::vector<SubsetMask> short_sets;  // each contains n; canonical order

    bool operator==(const ChamberSignature& o) const { return short_sets == o.short_sets; }
    bool operator!=(const ChamberSignature& o) const { return !(*this == o); }
    bool operator<(const ChamberSignature& o) const;

    std::string to_string() const;  // "[[4],[1,4]]"
};

// Requires is_generic(ell); throws hypothesis_error on walls, where the
// signature is undefined.
ChamberSignature chamber_signature(const LengthVector& ell);

struct Chamber {
    ChamberSignature signature;
    LengthVector representative;
};

// Brute-force scan of integer vectors with entries in [1, bound]: keeps
// the generic nondegenerate ones, deduplicates by signature, and returns
// one representative per signature (the lexicographically smallest
// vector encountered). Sorted by signature, so the result is
// deterministic however the scan is partitioned. Completeness relative
// to all real chambers is not claimed; callers should report the bound.
std::vector<Chamber> enumerate_chambers(int n, int bound);

}  // namespace polytc
