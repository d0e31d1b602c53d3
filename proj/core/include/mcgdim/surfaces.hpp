#pragma once

#include "mcgdim/errors.hpp"

namespace mcgdim {

enum class SurfaceKind { Orientable, NonOrientable };

// Compact surface, possibly with punctures and boundary components.
// genus counts handles (orientable) or crosscaps (non-orientable);
// non-orientable surfaces require genus >= 1.
struct Surface {
    SurfaceKind kind = SurfaceKind::Orientable;
    int genus = 0;
    int punctures = 0;
    int boundaries = 0;
};

// Throws domain_error on invalid data (negative counts, non-orientable genus 0).
void validate(const Surface& s);

// chi of the underlying compact surface with punctures treated as removed points.
int euler_characteristic(const Surface& s);

// True when chi < 0.
bool is_hyperbolic(const Surface& s);

// Virtual cohomological dimension of the mapping class group.
int vcd_mcg(const Surface& s);

// Same for the pure mapping class group (punctures fixed pointwise);
// equals vcd_mcg because a finite-index subgroup shares the vcd.
int vcd_pure_mcg(const Surface& s);

// Best known lower/upper bounds for the proper geometric dimension of the
// mapping class group, with a flag for exact agreement.
struct DimensionBounds {
    int lower = 0;
    int upper = 0;
    bool equal = true;
};

DimensionBounds known_dimension_bounds(const Surface& s);

} // namespace mcgdim
