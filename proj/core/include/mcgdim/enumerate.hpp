#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mcgdim/orbifolds.hpp"

namespace mcgdim {

// Default ceiling for orders of finite actions on a genus-g surface,
// 84*(g-2). Configurable at every call site that uses it.
std::int64_t default_order_ceiling(int genus);

// Everything the normalizer-quotient vcd depends on: slot counts of a
// signature without the actual orders.
struct SignatureShape {
    bool orientable = true;
    int genus = 0;
    int elliptic = 0;
    int corners = 0;
    int mirror_boundaries = 0;
    int cornered_boundaries = 0;
};

int vcd_weyl(const SignatureShape& shape);

// Streams every canonical signature with order * chi_orb = 2 - genus, in
// generation order (not sorted). genus >= 3, order >= 2.
void enumerate_visit(int genus, std::int64_t order,
                     const std::function<void(const OrbifoldSignature&)>& sink);

// Collected and canonically sorted (orientability, quotient genus, boundary
// count, rendered text) list of enumerate_visit's output.
// Warning: for corner-rich inputs (small order, genus >= 6) the complete
// list is astronomically large; see README for the supported envelope.
std::vector<OrbifoldSignature> enumerate_signatures(int genus, std::int64_t order);

// Ascending concatenation of enumerate_signatures over orders 2..max_order.
// max_order defaults to default_order_ceiling(genus).
std::vector<std::pair<std::int64_t, OrbifoldSignature>> enumerate_all(
    int genus, std::optional<std::int64_t> max_order = std::nullopt);

// Visits every shape compatible with (genus, order). want() runs first; when
// it returns true, a single-witness existence search runs and found() is
// called with one signature of that shape if any exists. A shape is reported
// through found() exactly when enumerate_visit would emit at least one
// signature with that shape, so emptiness of a shape family is decidable
// here without full expansion.
void scan_shapes(
    int genus, std::int64_t order,
    const std::function<bool(const SignatureShape&)>& want,
    const std::function<void(const SignatureShape&, const OrbifoldSignature&)>& found);

} // namespace mcgdim
