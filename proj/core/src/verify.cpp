#include "mcgdim/verify.hpp"

#include <algorithm>

#include "mcgdim/errors.hpp"
#include "mcgdim/groups.hpp"

namespace mcgdim {

namespace {

bool pair_inequality_holds(int a, int b, const Rational& epsilon) {
    Rational lhs = Rational(a) + Rational(b, 2);
    Rational rhs = Rational(b) * (Rational(a) - epsilon) - Rational(1);
    return lhs <= rhs;
}

} // namespace

std::set<std::pair<int, int>> verify_lemma_ab(const Rational& epsilon, int a_max,
                                              int b_max) {
    if (a_max < 5 || b_max < 5) throw domain_error("window must be at least 5 x 5");
    std::set<std::pair<int, int>> exceptions;
    for (int a = 1; a <= a_max; ++a)
        for (int b = 2; b <= b_max; ++b)
            if (!pair_inequality_holds(a, b, epsilon)) exceptions.emplace(a, b);
    return exceptions;
}

std::optional<std::int64_t> lemma_ab_column_one_threshold(const Rational& epsilon) {
    // a = 1: a + b/2 <= b*(1 - epsilon) - 1  <=>  b*(1/2 - epsilon) >= 2.
    Rational coeff = Rational(1, 2) - epsilon;
    if (!coeff.is_positive()) return std::nullopt;
    Rational need = Rational(2) / coeff;
    std::int64_t b = std::max<std::int64_t>(2, need.ceil());
    return b;
}

DeficiencyResult min_positive_deficiency(std::int64_t bound, bool require_two_equal) {
    if (bound < 8) throw domain_error("bound must be >= 8");

    std::optional<Rational> best;
    std::set<std::array<std::int64_t, 3>> attaining;
    auto offer = [&](std::int64_t q, std::int64_t r, std::int64_t s, const Rational& k) {
        if (!best || k < *best) {
            best = k;
            attaining.clear();
        }
        if (k == *best) attaining.insert({q, r, s});
    };

    // For fixed q <= r the deficiency grows with s, so the smallest s > 1/d
    // with s >= r is the only candidate from that pair.
    auto offer_pair = [&](std::int64_t q, std::int64_t r) {
        Rational d = Rational(1) - Rational(1, q) - Rational(1, r);
        if (!d.is_positive()) return;
        std::int64_t s = std::max(r, (Rational(1) / d).floor() + 1);
        offer(q, r, s, d - Rational(1, s));
    };
    // Two equal entries in front: (q, q, s) via offer_pair(q, q). Two equal
    // entries in back: (q, r, r), where for fixed q the smallest r > 2/(1-1/q)
    // with r >= q is the only candidate.
    auto offer_tail_equal = [&](std::int64_t q) {
        Rational d = Rational(1) - Rational(1, q);
        std::int64_t r = std::max(q, (Rational(2) / d).floor() + 1);
        offer(q, r, r, d - Rational(2, r));
    };

    if (require_two_equal) {
        for (std::int64_t q = 2; q <= bound; ++q) {
            offer_pair(q, q);
            offer_tail_equal(q);
        }
    } else {
        for (std::int64_t q = 2; q <= bound; ++q)
            for (std::int64_t r = q; r <= bound; ++r) offer_pair(q, r);
    }

    DeficiencyResult res;
    res.minimum = *best;
    res.witnesses.assign(attaining.begin(), attaining.end());
    return res;
}

std::vector<LambdaCounterexample> verify_lambda_bounds(std::int64_t cap) {
    if (cap < 1) throw domain_error("cap must be >= 1");

    std::vector<FiniteGroup> seeds;
    for (int n = 1; n <= 64; ++n) seeds.push_back(FiniteGroup::cyclic(n));
    for (int n = 1; n <= 32; ++n) seeds.push_back(FiniteGroup::dihedral(n));
    for (int d = 1; d <= 5; ++d) seeds.push_back(FiniteGroup::symmetric(d));

    std::vector<LambdaCounterexample> violations;
    auto audit = [&](const FiniteGroup& g) {
        const int lam = lambda_exact(g);
        const bool half_ok = Rational(lam) <= Rational(g.order(), 2);
        const bool log_ok = (std::int64_t{1} << lam) <= g.order();
        if (!half_ok || !log_ok) violations.push_back({g.name(), g.order(), lam});
    };

    for (const FiniteGroup& g : seeds)
        if (g.order() <= cap) audit(g);
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i; j < seeds.size(); ++j) {
            // A trivial factor leaves the Cayley table unchanged; the seed
            // pass already covers those products.
            if (seeds[i].order() == 1 || seeds[j].order() == 1) continue;
            const std::int64_t order =
                std::int64_t{seeds[i].order()} * seeds[j].order();
            if (order <= cap) audit(FiniteGroup::direct_product(seeds[i], seeds[j]));
        }
    return violations;
}

} // namespace mcgdim
