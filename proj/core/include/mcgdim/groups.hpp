#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcgdim/rational.hpp"

namespace mcgdim {

// Finite group as a Cayley table over element indices 0..order-1 with
// identity 0. Construction guarantees closure and associativity.
class FiniteGroup {
public:
    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inverse(int a) const { return inv_[a]; }
    const std::string& name() const { return name_; }

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    // Dihedral group of order 2n (n >= 1).
    static FiniteGroup dihedral(int n);
    // Symmetric group on `degree` letters; degree <= 6 (table size limit).
    static FiniteGroup symmetric(int degree);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    // Group generated by permutations in cycle notation, e.g.
    // {"(1 2 3)(4 5)", "(1 2)"}. Points are 1-based and bounded by degree.
    // Generation aborts once the order exceeds max_order.
    static FiniteGroup from_permutations(const std::vector<std::string>& cycle_words,
                                         int degree, int max_order = 400);

private:
    FiniteGroup(int n, std::vector<int> table, std::string name);

    int n_;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::string name_;
};

// All subgroups as sorted element-index lists, ordered by (size, elements).
// First entry is {0}, last is the whole group.
std::vector<std::vector<int>> subgroup_lattice(const FiniteGroup& g);

// Length of the longest strictly increasing chain of subgroups from the
// trivial group to the whole group (number of proper inclusions).
int lambda_exact(const FiniteGroup& g);
int lambda_exact(const FiniteGroup& g, const std::vector<std::vector<int>>& lattice);

// Upper bounds for the chain length of any group of the given order.
struct LambdaBounds {
    Rational half;  // order / 2
    int log2;       // floor(log2 order)
    int omega;      // prime factors with multiplicity
};

LambdaBounds lambda_bounds(std::int64_t order);

} // namespace mcgdim
