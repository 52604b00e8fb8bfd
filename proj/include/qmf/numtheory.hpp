#pragma once

#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

// All partitions of `target` into integer parts >= 2.
//
// Canonical order: within each partition the parts are sorted descending;
// the partitions themselves are listed in descending lexicographic order
// (so [6] precedes [4,2] precedes [3,3] precedes [2,2,2]). Matrix row
// order, and hence elimination output, inherits this order.
struct PartitionSet {
    long target = 0;
    std::vector<std::vector<int>> parts;

    std::size_t count() const { return parts.size(); }
};

// Bernoulli number B_m for even m >= 0 (B_0 = 1, B_2 = 1/6, ...).
// Odd m > 1 is rejected rather than silently returning 0.
Rational bernoulli(long m);

// Generalized divisor sum sigma_alpha(n) = sum over d|n of d^alpha.
Integer sigma(long n, long alpha);

int moebius(long n);
long euler_phi(long n);

std::vector<long> divisors(long n);
std::vector<long> prime_factors(long n);
bool is_square_free(long n);

PartitionSet partitions_ge2(long n);

// Unrestricted partition count p(n).
Integer partition_count(long n);
// |partitions_ge2(n)| = p(n) - p(n-1), without enumerating.
Integer count_partitions_ge2(long n);

}  // namespace qmf
