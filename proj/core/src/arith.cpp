#include "mcgdim/arith.hpp"

#include <algorithm>

#include "mcgdim/errors.hpp"

namespace mcgdim {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw domain_error("factorize requires n >= 1");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int prime_factor_count(std::int64_t n) {
    int total = 0;
    for (const auto& [p, e] : factorize(n)) total += e;
    return total;
}

int floor_log2(std::int64_t n) {
    if (n < 1) throw domain_error("floor_log2 requires n >= 1");
    int k = 0;
    while (n >= 2) {
        n >>= 1;
        ++k;
    }
    return k;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    auto fac = factorize(n);
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> square_divisors_up_to(std::int64_t n) {
    auto fac = factorize(n);
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = out.size();
        __int128 pk = 1;
        for (int k = 1; k <= 2 * e; ++k) {
            pk *= p;
            if (pk > n) break;
            for (std::size_t i = 0; i < base; ++i) {
                __int128 v = static_cast<__int128>(out[i]) * static_cast<std::int64_t>(pk);
                if (v <= n) out.push_back(static_cast<std::int64_t>(v));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mcgdim
