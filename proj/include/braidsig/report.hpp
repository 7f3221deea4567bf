#pragma once

#include <string>

#include "braidsig/braid.hpp"
#include "braidsig/exact_forms.hpp"

namespace braidsig {

/// Invariants of one closure, as computed by one (or both) pipelines.
/// det is the link determinant (absolute value); it is 0 for split unions.
struct InvariantReport {
    std::string word;
    int strands = 0;
    int b1 = 0;
    long long sigma = 0;
    Int det = 0;
    int nullity = 0;
    int components = 0;
    std::string method;
};

/// ceil(|sigma|/2): a topological slice genus lower bound for knots.
inline long long genus_lower_bound(const InvariantReport& r) {
    const long long a = r.sigma < 0 ? -r.sigma : r.sigma;
    return (a + 1) / 2;
}

} // namespace braidsig
