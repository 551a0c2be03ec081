#ifndef YBHOM_EXTENSIONS_HPP
#define YBHOM_EXTENSIONS_HPP

#include <optional>
#include <vector>

#include "ybhom/homology.hpp"
#include "ybhom/structures.hpp"

namespace ybhom {

/// A 2-cochain f : X x X -> A; values are stored as mixed-radix ranks of
/// elements of A.
struct Cochain2 {
    int base = 0;
    FiniteAbelianGroup group;
    Table values;  // base x base, entries are element ranks

    long v(int x, int y) const { return values(x, y); }
};

Cochain2 make_cochain(int base, FiniteAbelianGroup group, Table values);
Cochain2 zero_cochain(int base, const FiniteAbelianGroup& group);

/// f(x,z) + f(x.y, x.z) = f(y,z) + f(y.x, y.z) on all triples.
bool is_2cocycle(const CycleSet& C, const Cochain2& f);

/// LND version: f(x,z) + f(x.y, x.z) = f(y,z) + f(y -o x, y.z).
bool is_lnd_2cocycle(const BraidedSet& B, const Cochain2& f);
/// Star version: f(x,z) + f(x -o y, x -o z) = f(y,z) + f(y.x, y -o z).
bool is_star_2cocycle(const BraidedSet& B, const Cochain2& f);
/// f(x,z) + f*(x.y, x.z) = f*(y,z) + f(y -o x, y -o z).
bool compatible_pair(const BraidedSet& B, const Cochain2& f, const Cochain2& fstar);

/// d^1 gamma (x,y) = gamma(y) - gamma(x.y); gamma given by element ranks.
Cochain2 coboundary(const CycleSet& C, const std::vector<long>& gamma,
                    const FiniteAbelianGroup& A);
/// Star flavor of the same convention: gamma(y) - gamma(x -o y).
Cochain2 star_coboundary(const BraidedSet& B, const std::vector<long>& gamma,
                         const FiniteAbelianGroup& A);

/// The abelian extension A x_f X with its bookkeeping: total cycle set on
/// |A|*n elements (index = rank(alpha)*n + x), the projection, and the
/// regular A-action on fibers.
struct ExtensionDescriptor {
    CycleSet base;
    FiniteAbelianGroup group;
    Cochain2 cocycle;
    CycleSet total;
    std::vector<int> projection;  // total index -> base index

    int act(long alpha_rank, int total_index) const;
};

/// Total-set operation table (beta + f(x,y), x.y) without the cocycle check.
Table extension_table(const CycleSet& C, const FiniteAbelianGroup& A, const Cochain2& f);

/// Builds and fully validates the extension; throws NotACocycle when f is
/// not a 2-cocycle.
ExtensionDescriptor extend(const CycleSet& C, const FiniteAbelianGroup& A, const Cochain2& f);

/// The 2-cocycle induced by a set-theoretic section s (given as a map
/// base index -> total index).
Cochain2 section_cocycle(const ExtensionDescriptor& E, const std::vector<int>& section);

/// True iff g - f is a coboundary gamma(x.y) - gamma(y). Exhaustive search
/// when |A|^n is small, linear solve per cyclic factor otherwise.
bool extensions_equivalent(const CycleSet& C, const FiniteAbelianGroup& A, const Cochain2& f,
                           const Cochain2& g);

/// Number of equivalence classes of extensions of C by A, by enumerating
/// Z^2 and partitioning by cohomology class. Throws TooLarge past budget.
long count_extension_classes(const CycleSet& C, const FiniteAbelianGroup& A,
                             long long budget = 1 << 22);

/// The LND braiding on A x X built from a compatible pair (f, f*); the
/// reconstruction inverts the sideways translations. Throws NotCompatible
/// naming the failing condition.
BraidedSet extend_braided(const BraidedSet& B, const FiniteAbelianGroup& A, const Cochain2& f,
                          const Cochain2& fstar);

/// Unchecked variant used to probe the converse direction: returns the
/// reconstructed braiding if it validates, nullopt otherwise.
std::optional<BraidedSet> extend_braided_unchecked(const BraidedSet& B,
                                                   const FiniteAbelianGroup& A,
                                                   const Cochain2& f, const Cochain2& fstar);

/// (gamma . a)(b) = gamma(a -o b); gamma as a vector of element ranks.
std::vector<long> fun_module_action(const BraidedSet& B, const std::vector<long>& gamma, int a,
                                    const FiniteAbelianGroup& A);

/// Generator actions are invertible and respect the defining relation
/// (x -o y) x = (y.x) y on every function.
bool fun_module_relation_check(const BraidedSet& B, const FiniteAbelianGroup& A);

/// The semidirect-product relation for iota_f(x) = (x, f(x,-)); equivalent
/// to f being a star 2-cocycle.
bool nu_relation_check(const BraidedSet& B, const Cochain2& f);

/// omega maps group 1-coboundaries onto star 2-coboundaries: the function
/// (x,y) -> (gamma - gamma.x)(y) equals the star coboundary of gamma.
bool omega_coboundary_check(const BraidedSet& B, const std::vector<long>& gamma,
                            const FiniteAbelianGroup& A);

}  // namespace ybhom

#endif
