#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mcgdim/enumerate.hpp"
#include "mcgdim/rational.hpp"
#include "mcgdim/sigio.hpp"

namespace mcgdim {

enum class CriterionMode { PureRH, Database };

// One finite-subgroup candidate attaining the reported maximum.
// rh_only marks candidates backed only by Euler-characteristic arithmetic,
// with no verified action behind them.
struct Witness {
    std::int64_t order = 1;
    OrbifoldSignature signature;
    int vcd_weyl = 0;
    int lambda_bound = 0;
    bool rh_only = false;
};

struct CriterionReport {
    int genus = 0;
    CriterionMode mode = CriterionMode::PureRH;
    int m_star = 0;      // max of vcd_weyl + lambda_bound over the examined set
    int vcd_target = 0;  // 2g - 5
    std::vector<Witness> witnesses;
    int cd_upper = 0;  // = m_star
    int gd_upper = 0;  // = max(3, m_star)
    bool equal = false;
    std::int64_t max_order = 1;  // enumeration ceiling, or largest row order
    bool ceiling_hit = false;    // some witness sits exactly at the ceiling
};

// Bounds the proper cohomological dimension of the genus-g mapping class
// group by maximizing vcd_weyl + lambda_bound over finite-subgroup
// candidates. PureRH mode ranges over all Euler-compatible (order, shape)
// pairs up to the ceiling with lambda bounded by the prime factor count;
// Database mode ranges over ingested action rows (lambda additionally capped
// by the row's lambda_max). The trivial subgroup is always included.
CriterionReport check_criterion(int genus, CriterionMode mode,
                                const std::vector<ActionRow>* actions = nullptr,
                                std::optional<std::int64_t> max_order = std::nullopt);

// Exact evaluation of vcd_wf + order/2 <= order * (vcd_wf - epsilon) - 1.
bool check_pair_inequality(int vcd_wf, std::int64_t order, const Rational& epsilon,
                           int genus);

// Final dimension statement for genus g. bounds are [lower, upper].
struct Conclusion {
    int vcd = 0;
    std::array<int, 2> cd_bounds{0, 0};
    std::array<int, 2> gd_bounds{0, 0};
    bool equal = true;
};

// g = 1, 2: all dimensions 0 (finite group). g = 3: all 1 (virtually free).
// g >= 4 requires a report for the same genus and combines it with the vcd.
Conclusion conclude(int genus, const CriterionReport* report = nullptr);

} // namespace mcgdim
