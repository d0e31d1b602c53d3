#include "mcgdim/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "mcgdim/arith.hpp"
#include "mcgdim/errors.hpp"

namespace mcgdim {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
    return r;
}

Perm parse_cycles(const std::string& word, int degree) {
    Perm perm(degree);
    for (int i = 0; i < degree; ++i) perm[i] = i;
    std::vector<bool> used(degree, false);

    std::size_t i = 0;
    auto skip = [&] {
        while (i < word.size() &&
               (std::isspace(static_cast<unsigned char>(word[i])) || word[i] == ','))
            ++i;
    };
    skip();
    while (i < word.size()) {
        if (word[i] != '(')
            throw domain_error("cycle notation: expected '(' in \"" + word + "\"");
        ++i;
        std::vector<int> cycle;
        skip();
        while (i < word.size() && word[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(word[i])))
                throw domain_error("cycle notation: expected point in \"" + word + "\"");
            int v = 0;
            while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) {
                v = v * 10 + (word[i] - '0');
                if (v > degree) throw domain_error("cycle point exceeds degree");
                ++i;
            }
            if (v < 1) throw domain_error("cycle points are 1-based");
            if (used[v - 1]) throw domain_error("cycle point repeated in one permutation");
            used[v - 1] = true;
            cycle.push_back(v - 1);
            skip();
        }
        if (i >= word.size()) throw domain_error("cycle notation: unterminated cycle");
        ++i;
        skip();
        for (std::size_t j = 0; j < cycle.size(); ++j)
            perm[cycle[j]] = cycle[(j + 1) % cycle.size()];
    }
    return perm;
}

using Bits = std::vector<std::uint64_t>;

Bits empty_bits(int n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool test_bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }

bool is_subset(const Bits& a, const Bits& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

// Subgroup generated by a closed base plus extra elements, as
// (sorted elements, bitset). Products inside the base are skipped. A partial
// closure larger than half the group is the whole group (its size divides
// the group order), so the caller may pass `full` to bail out early.
std::pair<std::vector<int>, Bits> closure_extend(
    const FiniteGroup& g, const std::vector<int>& base, const std::vector<int>& extra,
    const std::pair<std::vector<int>, Bits>* full = nullptr) {
    const std::size_t half = static_cast<std::size_t>(g.order()) / 2;
    Bits bits = empty_bits(g.order());
    std::vector<int> elems = base;
    for (int x : base) set_bit(bits, x);
    for (int x : extra)
        if (!test_bit(bits, x)) {
            set_bit(bits, x);
            elems.push_back(x);
        }
    for (std::size_t i = base.size(); i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
            for (int prod : {g.mul(elems[i], elems[j]), g.mul(elems[j], elems[i])}) {
                if (!test_bit(bits, prod)) {
                    set_bit(bits, prod);
                    elems.push_back(prod);
                }
            }
        }
        if (full && elems.size() > half) return *full;
    }
    std::sort(elems.begin(), elems.end());
    return {elems, bits};
}

} // namespace

FiniteGroup::FiniteGroup(int n, std::vector<int> table, std::string name)
    : n_(n), table_(std::move(table)), inv_(n, -1), name_(std::move(name)) {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) inv_[a] = b;
    for (int a = 0; a < n_; ++a)
        if (inv_[a] < 0) throw domain_error("element without inverse in group table");
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw domain_error("cyclic groups require n >= 1");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return FiniteGroup(n, std::move(table), "cyclic(" + std::to_string(n) + ")");
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1) throw domain_error("dihedral groups require n >= 1");
    const int order = 2 * n;
    // Element eps*n + k stands for s^eps r^k with r^k s = s r^(-k).
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    for (int e1 = 0; e1 < 2; ++e1)
        for (int k1 = 0; k1 < n; ++k1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int k2 = 0; k2 < n; ++k2) {
                    int e = e1 ^ e2;
                    int k = (((e2 ? -k1 : k1) + k2) % n + n) % n;
                    table[static_cast<std::size_t>(e1 * n + k1) * order + (e2 * n + k2)] =
                        e * n + k;
                }
    return FiniteGroup(order, std::move(table), "dihedral(" + std::to_string(n) + ")");
}

FiniteGroup FiniteGroup::symmetric(int degree) {
    if (degree < 1 || degree > 6)
        throw domain_error("symmetric groups supported for degree 1..6");
    std::vector<Perm> perms;
    Perm p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    const int n = static_cast<int>(perms.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] = index.at(compose(perms[a], perms[b]));
    return FiniteGroup(n, std::move(table), "symmetric(" + std::to_string(degree) + ")");
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::int64_t order = std::int64_t{a.order()} * b.order();
    if (order > 2048) throw domain_error("direct product order exceeds 2048");
    const int n = static_cast<int>(order);
    const int nb = b.order();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int left = a.mul(i / nb, j / nb);
            int right = b.mul(i % nb, j % nb);
            table[static_cast<std::size_t>(i) * n + j] = left * nb + right;
        }
    return FiniteGroup(n, std::move(table), a.name() + " x " + b.name());
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::string>& cycle_words,
                                           int degree, int max_order) {
    if (degree < 1) throw domain_error("degree must be >= 1");
    if (max_order < 1) throw domain_error("max_order must be >= 1");
    std::vector<Perm> gens;
    gens.reserve(cycle_words.size());
    for (const auto& w : cycle_words) gens.push_back(parse_cycles(w, degree));

    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            Perm p = compose(elems[e], g);
            if (index.emplace(p, static_cast<int>(elems.size())).second) {
                elems.push_back(p);
                queue.push_back(static_cast<int>(elems.size()) - 1);
                if (static_cast<int>(elems.size()) > max_order)
                    throw domain_error("generated group order exceeds " +
                                       std::to_string(max_order));
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
    return FiniteGroup(n, std::move(table), "perm(degree=" + std::to_string(degree) + ")");
}

std::vector<std::vector<int>> subgroup_lattice(const FiniteGroup& g) {
    const int n = g.order();

    // One generator per distinct cyclic subgroup.
    std::map<Bits, std::pair<std::vector<int>, int>> cyclic_subs;
    for (int x = 1; x < n; ++x) {
        Bits bits = empty_bits(n);
        std::vector<int> elems;
        int p = 0;
        do {
            set_bit(bits, p);
            elems.push_back(p);
            p = g.mul(p, x);
        } while (p != 0);
        std::sort(elems.begin(), elems.end());
        cyclic_subs.emplace(std::move(bits), std::make_pair(std::move(elems), x));
    }

    // Every subgroup is generated by its elements of prime-power order, so
    // extending by the prime-power cyclic subgroups alone reaches everything.
    struct Gen { const Bits* bits; int gen; };
    std::vector<Gen> gens;
    for (const auto& [bits, sub] : cyclic_subs)
        if (factorize(static_cast<std::int64_t>(sub.first.size())).size() == 1)
            gens.push_back({&bits, sub.second});

    // Smallest proper overgroup size allowed by Lagrange; n maps to 0.
    const std::vector<std::int64_t> divs = divisors(n);
    std::vector<int> next_size(n + 1, 0);
    for (std::int64_t h : divs)
        for (std::int64_t d : divs)
            if (d > h && d % h == 0) {
                next_size[h] = static_cast<int>(d);
                break;
            }

    std::pair<std::vector<int>, Bits> full{std::vector<int>(n), empty_bits(n)};
    for (int x = 0; x < n; ++x) {
        full.first[x] = x;
        set_bit(full.second, x);
    }

    std::map<Bits, std::vector<int>> known;
    Bits triv_bits = empty_bits(n);
    set_bit(triv_bits, 0);
    known.emplace(triv_bits, std::vector<int>{0});
    std::deque<Bits> work{triv_bits};
    for (const auto& [bits, sub] : cyclic_subs)
        if (known.emplace(bits, sub.first).second) work.push_back(bits);
    while (!work.empty()) {
        Bits hb = work.front();
        work.pop_front();
        std::vector<int> helems = known.at(hb);
        // When the only Lagrange-admissible proper overgroup size is n
        // itself, every extension closes to the whole group.
        if (next_size[helems.size()] == n) {
            if (known.emplace(full.second, full.first).second) work.push_back(full.second);
            continue;
        }
        for (const auto& [cb, gen] : gens) {
            if (is_subset(*cb, hb)) continue;
            auto [kelems, kbits] = closure_extend(g, helems, {gen}, &full);
            if (known.emplace(kbits, kelems).second) work.push_back(kbits);
        }
    }

    std::vector<std::vector<int>> out;
    out.reserve(known.size());
    for (auto& [bits, elems] : known) out.push_back(elems);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

int lambda_exact(const FiniteGroup& g) { return lambda_exact(g, subgroup_lattice(g)); }

int lambda_exact(const FiniteGroup& g, const std::vector<std::vector<int>>& lattice) {
    const int n = g.order();
    std::vector<Bits> bits;
    bits.reserve(lattice.size());
    for (const auto& elems : lattice) {
        Bits b = empty_bits(n);
        for (int x : elems) set_bit(b, x);
        bits.push_back(std::move(b));
    }
    // lattice is sorted by size, so proper subgroups precede their overgroups.
    std::vector<int> depth(lattice.size(), 0);
    int best_full = 0;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (lattice[j].size() < lattice[i].size() && is_subset(bits[j], bits[i]))
                depth[i] = std::max(depth[i], depth[j] + 1);
        }
        if (lattice[i].size() == static_cast<std::size_t>(n)) best_full = depth[i];
    }
    return best_full;
}

LambdaBounds lambda_bounds(std::int64_t order) {
    if (order < 1) throw domain_error("order must be >= 1");
    return {Rational(order, 2), floor_log2(order), prime_factor_count(order)};
}

} // namespace mcgdim
