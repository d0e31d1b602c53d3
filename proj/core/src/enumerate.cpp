#include "mcgdim/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "mcgdim/arith.hpp"
#include "mcgdim/sigio.hpp"

namespace mcgdim {

namespace {

// One multiset solution of sum(1/q_i) + sum(1/(2 p_j)) = T with e elliptic
// slots q_i and c corner slots p_j, all orders >= 2.
struct SlotSolution {
    std::vector<std::int64_t> elliptic;
    std::vector<std::int64_t> corners;
};

// All integer pairs 2 <= x <= y with 1/x + 1/y = s, via the divisor
// factorization (s.num*x - s.den)(s.num*y - s.den) = s.den^2.
std::vector<std::pair<std::int64_t, std::int64_t>> unit_fraction_pairs(const Rational& s) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (!s.is_positive()) return out;
    const std::int64_t a = s.numerator();
    const std::int64_t b = s.denominator();
    for (std::int64_t d1 : square_divisors_up_to(b)) {
        if ((b + d1) % a != 0) continue;
        __int128 d2 = static_cast<__int128>(b) * b / d1;
        __int128 y = (static_cast<__int128>(b) + d2);
        if (y % a != 0) continue;
        y /= a;
        std::int64_t x = (b + d1) / a;
        if (x < 2) continue;
        if (y > INT64_MAX)
            throw arithmetic_overflow("order exceeds 64-bit range in exact pair solve");
        out.emplace_back(x, static_cast<std::int64_t>(y));
    }
    return out;
}

// Depth-first search over contribution values in non-increasing order (with
// elliptic slots before corner slots at equal value, making each multiset
// pair correspond to exactly one search path). The last two slots are solved
// exactly by unit_fraction_pairs instead of iteration.
class SlotSearch {
public:
    explicit SlotSearch(bool first_only) : first_only_(first_only) {}

    std::vector<SlotSolution> run(int e, int c, const Rational& target) {
        out_.clear();
        qs_.clear();
        ps_.clear();
        done_ = false;
        dfs(e, c, target, Rational(1, 2), true);
        return std::move(out_);
    }

private:
    void emit(std::initializer_list<std::int64_t> qs_extra,
              std::initializer_list<std::int64_t> ps_extra) {
        SlotSolution s;
        s.elliptic = qs_;
        s.elliptic.insert(s.elliptic.end(), qs_extra);
        s.corners = ps_;
        s.corners.insert(s.corners.end(), ps_extra);
        if (!std::is_sorted(s.elliptic.begin(), s.elliptic.end()) ||
            !std::is_sorted(s.corners.begin(), s.corners.end()))
            throw std::logic_error("slot search produced unsorted orders");
        out_.push_back(std::move(s));
        if (first_only_) done_ = true;
    }

    void dfs(int me, int mc, const Rational& t, const Rational& vmax, bool e_ok) {
        if (done_) return;
        const int m = me + mc;
        if (m == 0) {
            if (t.is_zero()) emit({}, {});
            return;
        }
        if (!t.is_positive()) return;
        const Rational ecap = std::min(vmax, Rational(1, 2));
        const Rational ccap = std::min(vmax, Rational(1, 4));
        if (Rational(me) * ecap + Rational(mc) * ccap < t) return;
        if (m == 1) {
            solve_single(me, t, vmax, ecap, ccap, e_ok);
            return;
        }
        if (m == 2) {
            solve_pair(me, mc, t, vmax, ecap, ccap, e_ok);
            return;
        }
        if (me > 0) {
            std::int64_t lo = std::max<std::int64_t>(
                {2, (Rational(1) / ecap).ceil(), (Rational(1) / t).floor() + 1});
            std::int64_t hi = (Rational(m) / t).floor();
            for (std::int64_t q = lo; q <= hi && !done_; ++q) {
                Rational v(1, q);
                if (v == vmax && !e_ok) continue;
                qs_.push_back(q);
                dfs(me - 1, mc, t - v, v, true);
                qs_.pop_back();
            }
        }
        if (mc > 0) {
            std::int64_t lo = std::max<std::int64_t>(
                {2, (Rational(1) / (Rational(2) * ccap)).ceil(),
                 (Rational(1) / (Rational(2) * t)).floor() + 1});
            std::int64_t hi = (Rational(m) / (Rational(2) * t)).floor();
            for (std::int64_t p = lo; p <= hi && !done_; ++p) {
                Rational v(1, 2 * p);
                ps_.push_back(p);
                dfs(me, mc - 1, t - v, v, false);
                ps_.pop_back();
            }
        }
    }

    void solve_single(int me, const Rational& t, const Rational& vmax, const Rational& ecap,
                      const Rational& ccap, bool e_ok) {
        if (t.numerator() != 1) return;
        if (me == 1) {
            if (t <= ecap && (t != vmax || e_ok)) emit({t.denominator()}, {});
        } else {
            if (t.denominator() % 2 == 0 && t.denominator() / 2 >= 2 && t <= ccap)
                emit({}, {t.denominator() / 2});
        }
    }

    void solve_pair(int me, int mc, const Rational& t, const Rational& vmax,
                    const Rational& ecap, const Rational& ccap, bool e_ok) {
        if (me == 2) {
            for (auto [x, y] : unit_fraction_pairs(t)) {
                if (done_) return;
                Rational vx(1, x);
                if (vx > ecap) continue;
                if (vx == vmax && !e_ok) continue;
                emit({x, y}, {});
            }
        } else if (me == 1 && mc == 1) {
            for (auto [x, y] : unit_fraction_pairs(t)) {
                if (done_) return;
                if (y % 2 == 0 && y / 2 >= 2) {
                    Rational vq(1, x), vc(1, y);
                    if (vq <= ecap && (vq != vmax || e_ok) && vc <= ccap) emit({x}, {y / 2});
                }
                if (done_) return;
                // Corner takes the strictly larger value; elliptic follows.
                if (x != y && x % 2 == 0 && x / 2 >= 2) {
                    Rational vq(1, y), vc(1, x);
                    if (vc <= ccap && vq <= ecap && (vq != vmax || e_ok)) emit({y}, {x / 2});
                }
            }
        } else {
            for (auto [x, y] : unit_fraction_pairs(Rational(2) * t)) {
                if (done_) return;
                Rational vx(1, 2 * x);
                if (vx > ccap) continue;
                emit({}, {x, y});
            }
        }
    }

    bool first_only_;
    bool done_ = false;
    std::vector<std::int64_t> qs_, ps_;
    std::vector<SlotSolution> out_;
};

// Iterates the finitely many (orientability, quotient genus, boundary count)
// cells whose closed-part Euler characteristic can still reach the target.
// D = chi(X) - target is the exact budget for elliptic/corner contributions.
void for_each_cell(int genus, std::int64_t order,
                   const std::function<void(bool, int, int, const Rational&)>& fn) {
    const Rational t(2 - genus, order);
    for (bool orientable : {true, false}) {
        const int alpha = orientable ? 2 : 1;
        for (int gf = orientable ? 0 : 1; Rational(2 - alpha * gf) >= t; ++gf) {
            const std::int64_t bmax = (Rational(2 - alpha * gf) - t).floor();
            for (int b = 0; b <= bmax; ++b) {
                Rational d = Rational(2 - alpha * gf - b) - t;
                fn(orientable, gf, b, d);
            }
        }
    }
}

OrbifoldSignature assemble(bool orientable, int gf, std::vector<std::int64_t> elliptic,
                           std::vector<BoundaryComponent> boundaries) {
    OrbifoldSignature sig;
    sig.orientable = orientable;
    sig.genus = gf;
    sig.elliptic_orders = std::move(elliptic);
    sig.boundaries = std::move(boundaries);
    return canonical(sig);
}

// All partitions of the sorted corner multiset into exactly parts_count
// non-empty unordered parts.
std::set<std::vector<std::vector<std::int64_t>>> corner_partitions(
    const std::vector<std::int64_t>& corners, int parts_count) {
    std::set<std::vector<std::vector<std::int64_t>>> out;
    std::vector<std::vector<std::int64_t>> parts(parts_count);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == corners.size()) {
            for (const auto& p : parts)
                if (p.empty()) return;
            auto key = parts;
            std::sort(key.begin(), key.end(), [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
            });
            out.insert(std::move(key));
            return;
        }
        for (int j = 0; j < parts_count; ++j) {
            if (j > 0 && parts[j - 1].empty()) break;
            parts[j].push_back(corners[i]);
            self(self, i + 1);
            parts[j].pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Distinct circular arrangements (up to rotation and reflection) of one
// part, each in bracelet-canonical form, ascending.
std::vector<std::vector<std::int64_t>> bracelet_arrangements(std::vector<std::int64_t> part) {
    std::vector<std::vector<std::int64_t>> out;
    std::sort(part.begin(), part.end());
    do {
        if (part == bracelet_canonical(part)) out.push_back(part);
    } while (std::next_permutation(part.begin(), part.end()));
    return out;
}

// Expands one slot solution attached to (orientable, gf, b) into signatures:
// pick how many boundaries carry corners, split the corner multiset, and
// arrange each boundary circle up to dihedral symmetry. Equal parts take
// non-decreasing arrangement choices so no boundary multiset repeats.
void expand_solution(bool orientable, int gf, int b, const SlotSolution& sol,
                     const std::function<void(const OrbifoldSignature&)>& sink) {
    if (sol.corners.empty()) {
        sink(assemble(orientable, gf, sol.elliptic,
                      std::vector<BoundaryComponent>(b)));
        return;
    }
    const int c = static_cast<int>(sol.corners.size());
    for (int bc = 1; bc <= std::min(b, c); ++bc) {
        for (const auto& parts : corner_partitions(sol.corners, bc)) {
            std::vector<std::vector<std::vector<std::int64_t>>> choices;
            choices.reserve(parts.size());
            for (const auto& part : parts) choices.push_back(bracelet_arrangements(part));
            std::vector<BoundaryComponent> bds(b - bc);
            auto rec = [&](auto&& self, std::size_t k, std::size_t min_idx) -> void {
                if (k == parts.size()) {
                    sink(assemble(orientable, gf, sol.elliptic, bds));
                    return;
                }
                bool same_as_prev = k > 0 && parts[k] == parts[k - 1];
                for (std::size_t idx = same_as_prev ? min_idx : 0;
                     idx < choices[k].size(); ++idx) {
                    bds.push_back({choices[k][idx]});
                    self(self, k + 1, idx);
                    bds.pop_back();
                }
            };
            rec(rec, 0, 0);
        }
    }
}

} // namespace

std::int64_t default_order_ceiling(int genus) {
    if (genus < 3) throw domain_error("order ceiling defined for genus >= 3");
    return 84 * (static_cast<std::int64_t>(genus) - 2);
}

int vcd_weyl(const SignatureShape& shape) {
    Surface s;
    s.kind = shape.orientable ? SurfaceKind::Orientable : SurfaceKind::NonOrientable;
    s.genus = shape.genus;
    s.punctures = shape.elliptic + shape.mirror_boundaries;
    s.boundaries = shape.cornered_boundaries;
    return vcd_mcg(s);
}

void enumerate_visit(int genus, std::int64_t order,
                     const std::function<void(const OrbifoldSignature&)>& sink) {
    if (genus < 3) throw domain_error("enumeration requires genus >= 3");
    if (order < 2) throw domain_error("enumeration requires order >= 2");
    SlotSearch search(false);
    for_each_cell(genus, order, [&](bool orientable, int gf, int b, const Rational& d) {
        const std::int64_t e_hi = (Rational(2) * d).floor();
        for (int e = 0; e <= e_hi; ++e) {
            const std::int64_t c_hi = b > 0 ? (Rational(4) * d - Rational(2 * e)).floor() : 0;
            for (int c = 0; c <= c_hi; ++c) {
                if (e == 0 && c == 0) {
                    if (d.is_zero())
                        sink(assemble(orientable, gf, {},
                                      std::vector<BoundaryComponent>(b)));
                    continue;
                }
                Rational target = Rational(e) + Rational(c, 2) - d;
                if (!target.is_positive()) continue;
                for (const auto& sol : search.run(e, c, target))
                    expand_solution(orientable, gf, b, sol, sink);
            }
        }
    });
}

std::vector<OrbifoldSignature> enumerate_signatures(int genus, std::int64_t order) {
    std::vector<std::pair<std::tuple<int, int, int, std::string>, OrbifoldSignature>> decorated;
    enumerate_visit(genus, order, [&](const OrbifoldSignature& sig) {
        decorated.emplace_back(std::make_tuple(sig.orientable ? 0 : 1, sig.genus,
                                               static_cast<int>(sig.boundaries.size()),
                                               render_signature(sig)),
                               sig);
    });
    std::sort(decorated.begin(), decorated.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<OrbifoldSignature> out;
    out.reserve(decorated.size());
    for (auto& [key, sig] : decorated) out.push_back(std::move(sig));
    return out;
}

std::vector<std::pair<std::int64_t, OrbifoldSignature>> enumerate_all(
    int genus, std::optional<std::int64_t> max_order) {
    const std::int64_t ceiling = max_order.value_or(default_order_ceiling(genus));
    std::vector<std::pair<std::int64_t, OrbifoldSignature>> out;
    for (std::int64_t order = 2; order <= ceiling; ++order)
        for (auto& sig : enumerate_signatures(genus, order)) out.emplace_back(order, sig);
    return out;
}

void scan_shapes(
    int genus, std::int64_t order,
    const std::function<bool(const SignatureShape&)>& want,
    const std::function<void(const SignatureShape&, const OrbifoldSignature&)>& found) {
    if (genus < 3) throw domain_error("shape scan requires genus >= 3");
    if (order < 2) throw domain_error("shape scan requires order >= 2");
    SlotSearch search(true);
    // Existence of a slot solution depends only on (e, c, target).
    std::map<std::tuple<int, int, std::int64_t, std::int64_t>, std::optional<SlotSolution>>
        memo;
    for_each_cell(genus, order, [&](bool orientable, int gf, int b, const Rational& d) {
        const std::int64_t e_hi = (Rational(2) * d).floor();
        for (int e = 0; e <= e_hi; ++e) {
            const std::int64_t c_hi = b > 0 ? (Rational(4) * d - Rational(2 * e)).floor() : 0;
            for (int c = 0; c <= c_hi; ++c) {
                const int bc_lo = c == 0 ? 0 : 1;
                const int bc_hi = c == 0 ? 0 : std::min(b, c);
                for (int bc = bc_lo; bc <= bc_hi; ++bc) {
                    SignatureShape shape{orientable, gf, e, c, b - bc, bc};
                    if (!want(shape)) continue;
                    if (e == 0 && c == 0) {
                        if (d.is_zero())
                            found(shape, assemble(orientable, gf, {},
                                                  std::vector<BoundaryComponent>(b)));
                        continue;
                    }
                    Rational target = Rational(e) + Rational(c, 2) - d;
                    if (!target.is_positive()) continue;
                    auto key = std::make_tuple(e, c, target.numerator(),
                                               target.denominator());
                    auto it = memo.find(key);
                    if (it == memo.end()) {
                        auto sols = search.run(e, c, target);
                        it = memo.emplace(key, sols.empty()
                                                   ? std::optional<SlotSolution>{}
                                                   : std::optional<SlotSolution>{sols.front()})
                                 .first;
                    }
                    if (!it->second) continue;
                    const SlotSolution& sol = *it->second;
                    std::vector<BoundaryComponent> bds(b - bc);
                    std::size_t taken = 0;
                    for (int part = 0; part < bc; ++part) {
                        std::size_t size = part == 0 ? sol.corners.size() - (bc - 1) : 1;
                        bds.push_back({{sol.corners.begin() + taken,
                                        sol.corners.begin() + taken + size}});
                        taken += size;
                    }
                    found(shape, assemble(orientable, gf, sol.elliptic, bds));
                }
            }
        }
    });
}

} // namespace mcgdim
