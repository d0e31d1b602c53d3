#include "mcgdim/surfaces.hpp"

#include <algorithm>

namespace mcgdim {

void validate(const Surface& s) {
    if (s.genus < 0) throw domain_error("genus must be non-negative");
    if (s.punctures < 0) throw domain_error("punctures must be non-negative");
    if (s.boundaries < 0) throw domain_error("boundaries must be non-negative");
    if (s.kind == SurfaceKind::NonOrientable && s.genus == 0)
        throw domain_error("non-orientable surfaces require genus >= 1");
}

int euler_characteristic(const Surface& s) {
    validate(s);
    int closed = s.kind == SurfaceKind::Orientable ? 2 - 2 * s.genus : 2 - s.genus;
    return closed - s.punctures - s.boundaries;
}

bool is_hyperbolic(const Surface& s) {
    return euler_characteristic(s) < 0;
}

int vcd_mcg(const Surface& s) {
    validate(s);
    const int g = s.genus;
    const int n = s.punctures;
    const int b = s.boundaries;
    const int marks = n + b;
    if (s.kind == SurfaceKind::Orientable) {
        if (g == 0) return marks <= 3 ? b : n + 2 * b - 3;
        if (g == 1) return marks == 0 ? 1 : n + 2 * b;
        return marks == 0 ? 4 * g - 5 : 4 * g + n + 2 * b - 4;
    }
    if (g == 1) return marks <= 2 ? b : n + 2 * b - 2;
    if (g == 2) return n + 2 * b;
    return marks == 0 ? 2 * g - 5 : 2 * g + n + 2 * b - 4;
}

int vcd_pure_mcg(const Surface& s) {
    return vcd_mcg(s);
}

DimensionBounds known_dimension_bounds(const Surface& s) {
    const int v = vcd_mcg(s);
    DimensionBounds out{v, v, true};
    if (s.kind == SurfaceKind::NonOrientable && s.boundaries == 0) {
        if (s.genus == 4) out = {v, v + 3, false};
        if (s.genus == 5) out = {v, v + 1, false};
    }
    return out;
}

} // namespace mcgdim
