#pragma once

#include <stdexcept>
#include <string>

namespace polytc {

// Bad user-supplied data: unparseable rationals, out-of-range indices,
// malformed fixture files, inhomogeneous polynomials where homogeneous
// ones are required.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A query past the degree through which a presentation asserts its
// relation ideal complete. Queries beyond max_degree fail loudly
// instead of returning data from an under-related ring.
class incomplete_presentation_error : public std::domain_error {
public:
    explicit incomplete_presentation_error(const std::string& what)
        : std::domain_error(what) {}
};

// A presentation failed a structural requirement (e.g. the top graded
// component is not infinite cyclic), or an operation was asked to run
// on a presentation that validation rejected.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Hypothesis failure on the input lengths: certification refuses
// non-generic or degenerate vectors rather than computing on walls.
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polytc
