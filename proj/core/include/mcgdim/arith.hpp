#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mcgdim {

// Prime factorization by trial division, ascending primes. n >= 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Number of prime factors counted with multiplicity; 0 for n = 1.
int prime_factor_count(std::int64_t n);

// floor(log2 n) for n >= 1.
int floor_log2(std::int64_t n);

// All positive divisors of n, ascending. n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

// All divisors d of n^2 with d <= n, ascending. Computed from the
// factorization of n so n^2 itself never needs to fit in 64 bits.
std::vector<std::int64_t> square_divisors_up_to(std::int64_t n);

} // namespace mcgdim
