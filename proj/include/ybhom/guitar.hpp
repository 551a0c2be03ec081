#ifndef YBHOM_GUITAR_HPP
#define YBHOM_GUITAR_HPP

#include <vector>

#include "ybhom/structures.hpp"

namespace ybhom {

using Tuple = std::vector<int>;

/// J_i(x) = x_i^{x_{i+1} ... x_k}, the left-to-right fold of right actions.
/// Identity on empty and singleton tuples.
Tuple guitar(const BraidedSet& B, const Tuple& x);

/// Inverse of the guitar map, computed back to front with the inverse right
/// translations. Requires left non-degeneracy.
Tuple guitar_inverse(const BraidedSet& B, const Tuple& y);

/// a^{b_1 ... b_m}: iterated right action of a tuple on a single element.
int right_action_fold(const BraidedSet& B, int a, const Tuple& b);

/// ^{(a_1,...,a_m)} b = ^{a_1}( ... (^{a_m} b) ... ): left action of a tuple.
int left_action_fold(const BraidedSet& B, const Tuple& a, int b);

/// Adjoint right action of the tuple b on the tuple a (the whole bundle of a
/// passes under b, one strand of b at a time, left to right).
Tuple adjoint_right_action(const BraidedSet& B, Tuple a, const Tuple& b);

/// Componentwise action (a_1,...,a_k) -> (a_1^{b}, ..., a_k^{b}).
Tuple pointwise_right_action(const BraidedSet& B, Tuple a, const Tuple& b);

/// chi_i(y) = J^{-1}_1((y_i <| y_{i-1}) ... <| y_1, y_1,...,y_{i-1},
/// y_{i+1},...,y_k) with <| the associated shelf. Positions are 1-based.
int chi(const BraidedSet& B, int i, const Tuple& y);

/// chi'_i(y) = ^{x_1...x_{i-1}} x_i with x = J^{-1}(y); coincides with chi_i.
int chi_prime(const BraidedSet& B, int i, const Tuple& y);

struct EntwineReport {
    bool pass = true;
    int k = 0, i = 0;        // failing tuple length and position, if any
    Tuple witness;           // failing tuple
};

/// Verifies J o sigma_i = sigma'_i o J on all tuples of length <= max_k,
/// where sigma' is the mirror braiding of the associated shelf.
EntwineReport check_entwine(const BraidedSet& B, int max_k);

/// Checks J(ab) = (J(a) acted by b) ++ J(b) and J(a^b) = J(a) acted by b,
/// where the action is the componentwise full right action.
bool check_guitar_cocycle(const BraidedSet& B, const Tuple& a, const Tuple& b);

struct BarJReport {
    bool pass = true;
    std::string detail;  // first failing identity, when pass is false
};

/// Finite fragment of the structure-group cocycle statement: on the double
/// with the toss map, oJ = K o J fixes the inverse pairs up to t, and the
/// adjoint action by (b+,b-) or (b-,b+) is trivial on short tuples.
BarJReport barJ_identities(const BraidedSet& B);

}  // namespace ybhom

#endif
