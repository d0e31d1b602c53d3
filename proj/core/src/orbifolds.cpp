#include "mcgdim/orbifolds.hpp"

#include <algorithm>
#include <tuple>

namespace mcgdim {

std::vector<std::int64_t> bracelet_canonical(std::vector<std::int64_t> v) {
    if (v.size() <= 1) return v;
    std::vector<std::int64_t> best = v;
    const std::size_t n = v.size();
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::int64_t> rot(n);
            for (std::size_t i = 0; i < n; ++i) rot[i] = v[(s + i) % n];
            if (rot < best) best = rot;
        }
        std::reverse(v.begin(), v.end());
    }
    return best;
}

namespace {

bool boundary_less(const BoundaryComponent& a, const BoundaryComponent& b) {
    if (a.corner_orders.size() != b.corner_orders.size())
        return a.corner_orders.size() < b.corner_orders.size();
    return a.corner_orders < b.corner_orders;
}

std::tuple<int, int, std::vector<std::int64_t>, std::vector<std::vector<std::int64_t>>>
key_of(const OrbifoldSignature& o) {
    std::vector<std::vector<std::int64_t>> bs;
    bs.reserve(o.boundaries.size());
    for (const auto& b : o.boundaries) bs.push_back(b.corner_orders);
    return {o.orientable ? 0 : 1, o.genus, o.elliptic_orders, bs};
}

} // namespace

void validate(const OrbifoldSignature& o) {
    if (o.genus < 0) throw domain_error("orbifold genus must be non-negative");
    if (!o.orientable && o.genus == 0)
        throw domain_error("non-orientable orbifolds require genus >= 1");
    for (auto q : o.elliptic_orders)
        if (q < 2) throw domain_error("elliptic orders must be >= 2");
    for (const auto& b : o.boundaries)
        for (auto p : b.corner_orders)
            if (p < 2) throw domain_error("corner orders must be >= 2");
}

OrbifoldSignature canonical(const OrbifoldSignature& o) {
    validate(o);
    OrbifoldSignature c = o;
    std::sort(c.elliptic_orders.begin(), c.elliptic_orders.end());
    for (auto& b : c.boundaries) b.corner_orders = bracelet_canonical(b.corner_orders);
    std::sort(c.boundaries.begin(), c.boundaries.end(), boundary_less);
    return c;
}

bool signature_equal(const OrbifoldSignature& a, const OrbifoldSignature& b) {
    return key_of(canonical(a)) == key_of(canonical(b));
}

bool signature_less(const OrbifoldSignature& a, const OrbifoldSignature& b) {
    return key_of(canonical(a)) < key_of(canonical(b));
}

int elliptic_count(const OrbifoldSignature& o) {
    return static_cast<int>(o.elliptic_orders.size());
}

int corner_count(const OrbifoldSignature& o) {
    int c = 0;
    for (const auto& b : o.boundaries) c += static_cast<int>(b.corner_orders.size());
    return c;
}

int mirror_boundary_count(const OrbifoldSignature& o) {
    int m = 0;
    for (const auto& b : o.boundaries) m += b.is_mirror() ? 1 : 0;
    return m;
}

int cornered_boundary_count(const OrbifoldSignature& o) {
    return static_cast<int>(o.boundaries.size()) - mirror_boundary_count(o);
}

std::pair<Rational, Rational> ef_cf(const OrbifoldSignature& o) {
    validate(o);
    Rational e(0), c(0);
    for (auto q : o.elliptic_orders) e += Rational(q - 1, q);
    for (const auto& b : o.boundaries)
        for (auto p : b.corner_orders) c += Rational(p - 1, p);
    return {e, c};
}

Rational orbifold_euler(const OrbifoldSignature& o) {
    auto [e, c] = ef_cf(o);
    int base = o.orientable ? 2 - 2 * o.genus : 2 - o.genus;
    int chi_x = base - static_cast<int>(o.boundaries.size());
    return Rational(chi_x) - e - c / Rational(2);
}

std::optional<std::int64_t> rh_order(const OrbifoldSignature& o, int genus) {
    if (genus < 1) throw domain_error("genus must be >= 1");
    Rational chi = orbifold_euler(o);
    if (chi.is_zero()) return std::nullopt;
    Rational order = Rational(2 - genus) / chi;
    if (!order.is_integer() || order.numerator() <= 0) return std::nullopt;
    return order.numerator();
}

Surface underlying_surface(const OrbifoldSignature& o) {
    validate(o);
    Surface s;
    s.kind = o.orientable ? SurfaceKind::Orientable : SurfaceKind::NonOrientable;
    s.genus = o.genus;
    s.punctures = elliptic_count(o) + mirror_boundary_count(o);
    s.boundaries = cornered_boundary_count(o);
    return s;
}

int vcd_weyl(const OrbifoldSignature& o) {
    return vcd_mcg(underlying_surface(o));
}

bool validate_inequalities(const OrbifoldSignature& o) {
    validate(o);
    const Rational half(1, 2), one(1);
    for (auto q : o.elliptic_orders) {
        Rational t(q - 1, q);
        if (t < half || t >= one) return false;
    }
    for (const auto& b : o.boundaries)
        for (auto p : b.corner_orders) {
            Rational t(p - 1, p);
            if (t < half || t >= one) return false;
        }
    return true;
}

} // namespace mcgdim
