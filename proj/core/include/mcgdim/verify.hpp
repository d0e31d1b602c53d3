#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcgdim/rational.hpp"

namespace mcgdim {

// All (a, b) with 1 <= a <= a_max, 2 <= b <= b_max that violate
//   a + b/2 <= b*(a - epsilon) - 1
// under exact rational comparison, sorted.
std::set<std::pair<int, int>> verify_lemma_ab(const Rational& epsilon, int a_max,
                                              int b_max);

// Symbolic handling of the a = 1 column, where the inequality reduces to
// b*(1/2 - epsilon) >= 2: returns the smallest b >= 2 from which the column
// holds for every larger b, or nullopt when the whole column violates.
std::optional<std::int64_t> lemma_ab_column_one_threshold(const Rational& epsilon);

struct DeficiencyResult {
    Rational minimum;  // least positive 1 - 1/q - 1/r - 1/s
    std::vector<std::array<std::int64_t, 3>> witnesses;  // attaining (q, r, s)
};

// Minimizes k = 1 - 1/q - 1/r - 1/s over 2 <= q <= r <= s subject to k > 0,
// optionally restricted to triples with at least two equal entries. q and r
// range up to `bound` (>= 8); for each pair the unique candidate s is computed
// directly, so the result covers the unbounded triple space: k grows with s,
// hence only the smallest s with k > 0 can attain the minimum.
DeficiencyResult min_positive_deficiency(std::int64_t bound, bool require_two_equal);

struct LambdaCounterexample {
    std::string group;
    std::int64_t order = 0;
    int lambda = 0;
};

// Audits lambda_exact(G) <= |G|/2 and 2^lambda_exact(G) <= |G| over the
// constructor family: cyclic n <= 64, dihedral n <= 32, symmetric degree <= 5,
// and pairwise direct products of those seeds. Groups of order above `cap`
// are excluded. Returns every violating group; the contract is an empty list.
std::vector<LambdaCounterexample> verify_lambda_bounds(std::int64_t cap);

} // namespace mcgdim
