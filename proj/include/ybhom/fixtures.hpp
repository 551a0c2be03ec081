#ifndef YBHOM_FIXTURES_HPP
#define YBHOM_FIXTURES_HPP

#include <string>
#include <vector>

#include "ybhom/structures.hpp"

namespace ybhom {

CycleSet trivial_cycle_set(int n);                    // x.y = y
CycleSet shift_cycle_set(int n);                      // x.y = y+1 mod n
CycleSet permutation_cycle_set(const Perm& theta);    // x.y = theta(y)

Shelf dihedral_quandle(int n);  // a <| b = 2b - a mod n
Shelf trivial_shelf(int n);     // a <| b = a
Shelf cyclic_rack(int n);       // a <| b = a+1 mod n

Table cyclic_group_table(int n);
BraidedSet flip_braiding(int n);

struct NamedBraidedSet {
    std::string name;
    BraidedSet B;
};
struct NamedCycleSet {
    std::string name;
    CycleSet C;
};

/// The built-in fixture library: all cycle sets of size <= 3 up to
/// isomorphism, the size-4 doubling of the trivial pair, the dihedral and
/// trivial quandles, the cyclic rack, group braidings, and flips.
std::vector<NamedCycleSet> fixture_cycle_sets(int max_size = 4);
std::vector<NamedBraidedSet> fixture_braided_sets(int max_size = 4);

}  // namespace ybhom

#endif
