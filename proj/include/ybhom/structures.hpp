#ifndef YBHOM_STRUCTURES_HPP
#define YBHOM_STRUCTURES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ybhom/table.hpp"

namespace ybhom {

/// A finite set {0,...,n-1} with a braiding sigma(a,b) = (left(a,b), right(a,b))
/// satisfying the Yang-Baxter equation. Validation is eager: a constructed
/// object has passed the exhaustive YBE check on all n^3 triples.
///
/// When the braiding is left non-degenerate (every a -> a^b bijective), the
/// inverse right translations are precomputed and the sideways operations
/// dot(a,b) = a.b and wdot(b,a) = b -o a are available.
struct BraidedSet {
    int n = 0;
    Table left;   // left(a,b)  = the left output of sigma(a,b)
    Table right;  // right(a,b) = the right output of sigma(a,b)

    // rt_inv(b,a) is the inverse of a -> right(a,b); present iff left non-degenerate.
    std::optional<Table> rt_inv;

    int l(int a, int b) const { return left(a, b); }
    int r(int a, int b) const { return right(a, b); }
    std::pair<int, int> sigma(int a, int b) const { return {left(a, b), right(a, b)}; }

    bool lnd() const { return rt_inv.has_value(); }

    /// b -o a = a^{~b}: inverse right translation by b applied to a.
    int wdot(int b, int a) const { return (*rt_inv)(b, a); }
    /// a . b = ^{(b -o a)} b.
    int dot(int a, int b) const { return left(wdot(b, a), b); }
};

struct PropertyReport {
    bool left_nondegenerate = false;
    bool right_nondegenerate = false;
    bool invertible = false;
    bool involutive = false;
    bool weakly_ri_compatible = false;
    bool ri_compatible = false;
    std::optional<Perm> t_map;  // present iff weakly_ri_compatible
};

/// A finite cycle set: operation table dot with bijective left translations
/// and the cycle property, together with the derived inverse table star
/// (a * (a . b) = b = a . (a * b)).
struct CycleSet {
    int n = 0;
    Table dot;
    Table star;
};

struct Shelf {
    int n = 0;
    Table op;  // op(a,b) = a <| b, self-distributive
    bool is_rack = false;
    bool is_spindle = false;
};

/// Right braided module: action(p,a) = p.a with (p.a).b = (p.^ab).(a^b).
/// Solid modules act by bijections; their inverse actions are precomputed.
struct RightBraidedModule {
    int carrier = 0;
    int n = 0;
    Table action;  // carrier x n
    bool solid = false;
    std::optional<Table> inv_action;

    int act(int p, int a) const { return action(p, a); }
    int act_inv(int p, int a) const { return (*inv_action)(p, a); }
};

/// Left braided module: action(a,q) = a.q with a.(b.q) = ^ab.((a^b).q).
struct LeftBraidedModule {
    int carrier = 0;
    int n = 0;
    Table action;  // n x carrier
    int act(int a, int q) const { return action(a, q); }
};

struct SignedElement {
    int index = 0;
    int sign = +1;  // +1 or -1
    bool operator==(const SignedElement&) const = default;
};

/// Index of a signed element in the double: positives first, then negatives.
inline int signed_index(SignedElement e, int n) { return e.sign > 0 ? e.index : n + e.index; }
inline SignedElement signed_decode(int idx, int n) {
    return idx < n ? SignedElement{idx, +1} : SignedElement{idx - n, -1};
}

BraidedSet validate_braided_set(const Table& left, const Table& right);

PropertyReport classify(const BraidedSet& B);

/// Returns (a.b, b -o a); requires left non-degeneracy. The pair satisfies
/// sigma(b -o a, b) = (a.b, a).
std::pair<int, int> sideways(const BraidedSet& B, int a, int b);

/// a <| b = (b.a)^b; requires LND. The four equivalences (rack ~ invertible,
/// trivial ~ involutive, spindle ~ weak RI-compatibility) are asserted.
Shelf associated_shelf(const BraidedSet& B);

CycleSet validate_cycle_set(const Table& dot);

/// sigma(a,b) = ((b*a).b, b*a); always involutive and LND.
BraidedSet from_cycle_set(const CycleSet& C);

enum class ShelfVariant { primal, mirror };

/// primal: sigma(a,b) = (b, a<|b);  mirror: sigma(a,b) = (b<|a, a).
BraidedSet from_shelf(const Shelf& S, ShelfVariant variant = ShelfVariant::primal);

Shelf validate_shelf(const Table& op);

/// sigma(a,b) = (unit, a*b) for an associative mult with two-sided unit.
BraidedSet from_group(const Table& mult, int unit);

/// The double of a non-degenerate invertible RI-compatible braided set:
/// the braiding on 2n signed elements defined by the four sign cases.
BraidedSet double_braided_set(const BraidedSet& B);

/// Toss map: fixes positives, applies t to the index of negatives.
std::vector<SignedElement> toss(const std::vector<SignedElement>& tuple, const Perm& t);

struct SidewaysReport {
    bool pass = true;
    // first failing identity (1..3) and witness triple, when pass is false
    int identity = 0;
    int a = 0, b = 0, c = 0;
};

/// Checks the three sideways identities equivalent to the YBE for LND maps.
SidewaysReport check_sideways_identities(const BraidedSet& B);

RightBraidedModule validate_right_module(const BraidedSet& B, const Table& action);
LeftBraidedModule validate_left_module(const BraidedSet& B, const Table& action);

RightBraidedModule trivial_right_module(const BraidedSet& B);
LeftBraidedModule trivial_left_module(const BraidedSet& B);
/// p.a = p^a; solid iff B is left non-degenerate.
RightBraidedModule adjoint_right_module(const BraidedSet& B);
/// a.q = ^aq.
LeftBraidedModule adjoint_left_module(const BraidedSet& B);
/// a.q = dot(a,q), the sideways left action; requires LND.
LeftBraidedModule sideways_left_module(const BraidedSet& B);

}  // namespace ybhom

#endif
