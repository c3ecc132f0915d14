#pragma once

#include <string>
#include <vector>

#include "errors.hpp"

namespace xprod {

// Finite group as a validated multiplication table. The identity is always
// index 0; operator layouts downstream depend on this convention.
struct GroupTable {
    int n = 1;
    std::vector<std::vector<int>> table; // table[g][h] = g*h
    std::vector<int> inv;

    int mul(int g, int h) const { return table[g][h]; }
    bool is_cyclic_standard() const; // table[g][h] == (g+h) mod n
    bool is_abelian() const;
};

// Empty string when every axiom holds, otherwise names the first violated
// axiom (latin/identity/inverse/associativity).
std::string group_axiom_violation(const GroupTable& g);

GroupTable make_cyclic(int n);

// Validates the table; if the identity sits at an index other than 0 the
// elements are relabeled so it lands at 0.
GroupTable make_from_table(const std::vector<std::vector<int>>& table);

// Componentwise product on pairs, ordered as (a, b) -> a*n2 + b.
GroupTable direct_product(const GroupTable& g1, const GroupTable& g2);

// S_3 with elements ordered e, (12), (13), (23), (123), (132).
GroupTable symmetric_3();

// Order of element g (smallest k >= 1 with g^k = e).
int element_order(const GroupTable& g, int elem);

} // namespace xprod
