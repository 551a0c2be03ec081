#include <doctest.h>

#include "ybhom/fixtures.hpp"
#include "ybhom/guitar.hpp"

using namespace ybhom;

namespace {

bool next_tuple(Tuple& t, int n) {
    for (int j = static_cast<int>(t.size()) - 1; j >= 0; --j) {
        if (++t[j] < n) return true;
        t[j] = 0;
    }
    return false;
}

}  // namespace

TEST_CASE("guitar map on the flip is the identity") {
    BraidedSet flip = flip_braiding(3);
    Tuple x = {2, 0, 1, 1};
    CHECK(guitar(flip, x) == x);
    CHECK(guitar(flip, Tuple{}) == Tuple{});
    CHECK(guitar(flip, Tuple{2}) == Tuple{2});
}

TEST_CASE("guitar map examples") {
    BraidedSet shift = from_cycle_set(shift_cycle_set(2));
    CHECK(guitar(shift, Tuple{0, 0}) == Tuple{1, 0});
    CHECK(guitar_inverse(shift, Tuple{1, 0}) == Tuple{0, 0});

    BraidedSet r3 = from_shelf(dihedral_quandle(3));
    CHECK(guitar(r3, Tuple{0, 1}) == Tuple{2, 1});
}

TEST_CASE("guitar round trip on all short tuples of every LND fixture") {
    for (const auto& [name, B] : fixture_braided_sets(4)) {
        if (!B.lnd()) continue;
        for (int k = 0; k <= 4; ++k) {
            Tuple x(k, 0);
            do {
                CHECK(guitar_inverse(B, guitar(B, x)) == x);
                CHECK(guitar(B, guitar_inverse(B, x)) == x);
            } while (next_tuple(x, B.n));
        }
    }
}

TEST_CASE("chi agrees with chi-prime") {
    for (const auto& [name, B] : fixture_braided_sets(4)) {
        if (!B.lnd()) continue;
        for (int k = 1; k <= 4; ++k) {
            Tuple y(k, 0);
            do {
                for (int i = 1; i <= k; ++i) CHECK(chi(B, i, y) == chi_prime(B, i, y));
            } while (next_tuple(y, B.n));
        }
    }
}

TEST_CASE("chi simplifications") {
    // chi_1 = first slot of the inverse guitar map.
    BraidedSet r3 = from_shelf(dihedral_quandle(3));
    for (int k = 1; k <= 3; ++k) {
        Tuple y(k, 0);
        do {
            CHECK(chi(r3, 1, y) == guitar_inverse(r3, y)[0]);
        } while (next_tuple(y, 3));
    }

    // Cycle sets: chi_i(y) = J^{-1}_1(y_i, y_1, ..., without i ..., y_k).
    BraidedSet cs = from_cycle_set(shift_cycle_set(3));
    for (int k = 1; k <= 3; ++k) {
        Tuple y(k, 0);
        do {
            for (int i = 1; i <= k; ++i) {
                Tuple arg = {y[i - 1]};
                for (int j = 1; j <= k; ++j)
                    if (j != i) arg.push_back(y[j - 1]);
                CHECK(chi(cs, i, y) == guitar_inverse(cs, arg)[0]);
            }
        } while (next_tuple(y, 3));
    }

    // Racks: chi_i(y) = ((y_i ~<| y_{i+1}) ~<| ...) ~<| y_k, with ~<| the
    // inverse right translation (self-inverse for the dihedral quandle).
    for (int k = 1; k <= 3; ++k) {
        Tuple y(k, 0);
        do {
            for (int i = 1; i <= k; ++i) {
                int v = y[i - 1];
                for (int j = i + 1; j <= k; ++j) v = ((2 * y[j - 1] - v) % 3 + 3) % 3;
                CHECK(chi(r3, i, y) == v);
            }
        } while (next_tuple(y, 3));
    }
}

TEST_CASE("entwining J sigma_i = sigma'_i J") {
    for (const auto& [name, B] : fixture_braided_sets(3)) {
        if (!B.lnd()) continue;
        EntwineReport rep = check_entwine(B, 4);
        CHECK(rep.pass);
    }
}

TEST_CASE("guitar cocycle identities") {
    BraidedSet r3 = from_shelf(dihedral_quandle(3));
    // Empty b: both sides reduce to J(a).
    CHECK(check_guitar_cocycle(r3, Tuple{1, 2}, Tuple{}));
    for (int la = 0; la <= 2; ++la)
        for (int lb = 0; lb <= 2; ++lb) {
            Tuple a(la, 0);
            do {
                Tuple b(lb, 0);
                do {
                    CHECK(check_guitar_cocycle(r3, a, b));
                } while (next_tuple(b, 3));
            } while (next_tuple(a, 3));
        }
}

TEST_CASE("barJ identities on small fixtures") {
    CHECK(barJ_identities(flip_braiding(1)).pass);
    CHECK(barJ_identities(from_shelf(dihedral_quandle(3))).pass);
    CHECK(barJ_identities(from_shelf(trivial_shelf(2))).pass);
    CHECK(barJ_identities(from_cycle_set(shift_cycle_set(2))).pass);
    CHECK_THROWS_AS(barJ_identities(from_group(cyclic_group_table(2), 0)), PreconditionFailed);
}
