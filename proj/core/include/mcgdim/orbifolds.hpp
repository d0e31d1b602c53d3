#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcgdim/rational.hpp"
#include "mcgdim/surfaces.hpp"

namespace mcgdim {

// One boundary circle of a 2-orbifold. An empty corner list is a mirror
// boundary; a non-empty list gives the corner-reflector orders (each >= 2)
// read around the circle. Corner tuples are kept in bracelet-canonical form:
// lexicographically least over all rotations and reflections.
struct BoundaryComponent {
    std::vector<std::int64_t> corner_orders;

    bool is_mirror() const { return corner_orders.empty(); }
};

// Signature of a compact 2-orbifold: underlying genus/orientability, cone
// point orders (each >= 2), and boundary circles. Canonical storage: elliptic
// orders ascending, each boundary bracelet-canonical, boundaries sorted by
// (corner count, lex).
struct OrbifoldSignature {
    bool orientable = true;
    int genus = 0;
    std::vector<std::int64_t> elliptic_orders;
    std::vector<BoundaryComponent> boundaries;
};

// Throws domain_error on invalid data (orders < 2, non-orientable genus 0 is
// allowed here only as orientable=false with genus >= 1).
void validate(const OrbifoldSignature& o);

// Lexicographically least rotation/reflection of a corner tuple.
std::vector<std::int64_t> bracelet_canonical(std::vector<std::int64_t> tuple);

// Canonical copy: sorted elliptic orders, bracelet-canonical corner tuples,
// boundaries sorted by (size, lex). validate() runs first.
OrbifoldSignature canonical(const OrbifoldSignature& o);

bool signature_equal(const OrbifoldSignature& a, const OrbifoldSignature& b);
bool signature_less(const OrbifoldSignature& a, const OrbifoldSignature& b);

int elliptic_count(const OrbifoldSignature& o);
int corner_count(const OrbifoldSignature& o);
int mirror_boundary_count(const OrbifoldSignature& o);
int cornered_boundary_count(const OrbifoldSignature& o);

// (E, C): E = sum(1 - 1/q) over cone points, C = sum(1 - 1/p) over corners.
std::pair<Rational, Rational> ef_cf(const OrbifoldSignature& o);

// Orbifold Euler characteristic: chi(underlying with boundary) - E - C/2.
Rational orbifold_euler(const OrbifoldSignature& o);

// Order of a group acting on the closed non-orientable surface of the given
// genus with this quotient, from |G| * chi_orb = 2 - genus. nullopt when the
// division is not a positive integer (no compatible action order).
std::optional<std::int64_t> rh_order(const OrbifoldSignature& o, int genus);

// Surface whose mapping class group contains the relevant normalizer quotient:
// punctures = cone points + mirror boundaries, boundaries = cornered ones.
Surface underlying_surface(const OrbifoldSignature& o);

// vcd of the normalizer quotient (Weyl group) attached to this quotient type.
int vcd_weyl(const OrbifoldSignature& o);

// Per-point order constraints 1/2 <= 1 - 1/q < 1 for cone points and corners.
bool validate_inequalities(const OrbifoldSignature& o);

} // namespace mcgdim
