#include "ybhom/fixtures.hpp"

#include "ybhom/multipermutation.hpp"

namespace ybhom {

CycleSet trivial_cycle_set(int n) {
    Table t = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t(a, b) = b;
    return validate_cycle_set(t);
}

CycleSet shift_cycle_set(int n) {
    Table t = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t(a, b) = (b + 1) % n;
    return validate_cycle_set(t);
}

CycleSet permutation_cycle_set(const Perm& theta) {
    const int n = static_cast<int>(theta.size());
    Table t = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t(a, b) = theta[b];
    return validate_cycle_set(t);
}

Shelf dihedral_quandle(int n) {
    Table t = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t(a, b) = ((2 * b - a) % n + n) % n;
    return validate_shelf(t);
}

Shelf trivial_shelf(int n) {
    Table t = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t(a, b) = a;
    return validate_shelf(t);
}

Shelf cyclic_rack(int n) {
    Table t = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t(a, b) = (a + 1) % n;
    return validate_shelf(t);
}

Table cyclic_group_table(int n) {
    Table t = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t(a, b) = (a + b) % n;
    return t;
}

BraidedSet flip_braiding(int n) {
    Table left = Table::square(n), right = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            left(a, b) = b;
            right(a, b) = a;
        }
    return validate_braided_set(left, right);
}

std::vector<NamedCycleSet> fixture_cycle_sets(int max_size) {
    std::vector<NamedCycleSet> out;
    for (int n = 1; n <= std::min(3, max_size); ++n) {
        EnumerationConfig cfg;
        cfg.size = n;
        cfg.up_to_iso = true;
        int idx = 0;
        for (const CycleSet& C : enumerate_cycle_sets(cfg))
            out.push_back({"cs" + std::to_string(n) + "#" + std::to_string(idx++), C});
    }
    if (max_size >= 4)
        out.push_back({"doubling4", doubling_extension(trivial_cycle_set(2))});
    return out;
}

std::vector<NamedBraidedSet> fixture_braided_sets(int max_size) {
    std::vector<NamedBraidedSet> out;
    for (int n = 1; n <= std::min(4, max_size); ++n)
        out.push_back({"flip" + std::to_string(n), flip_braiding(n)});
    for (const NamedCycleSet& c : fixture_cycle_sets(max_size))
        out.push_back({"sigma(" + c.name + ")", from_cycle_set(c.C)});
    if (max_size >= 3) {
        out.push_back({"dihedral3", from_shelf(dihedral_quandle(3))});
        out.push_back({"cyclic-rack3", from_shelf(cyclic_rack(3))});
        out.push_back({"mirror-trivial-shelf3", from_shelf(trivial_shelf(3), ShelfVariant::mirror)});
    }
    if (max_size >= 2) out.push_back({"group-Z2", from_group(cyclic_group_table(2), 0)});
    if (max_size >= 3) out.push_back({"group-Z3", from_group(cyclic_group_table(3), 0)});
    return out;
}

}  // namespace ybhom
