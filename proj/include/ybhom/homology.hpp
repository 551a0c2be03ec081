#ifndef YBHOM_HOMOLOGY_HPP
#define YBHOM_HOMOLOGY_HPP

#include <tuple>
#include <vector>

#include "ybhom/intmatrix.hpp"
#include "ybhom/smith.hpp"
#include "ybhom/structures.hpp"

namespace ybhom {

/// A bounded chain complex of free Z-modules. differentials[k] is the matrix
/// of d_k : C_k -> C_{k-1} for 1 <= k <= max_degree; index 0 is unused.
struct ChainComplex {
    std::vector<EIndex> dims;              // dims[k] = rank of C_k
    std::vector<IntMatrix> differentials;  // differentials[k]: dims[k-1] x dims[k]
    int max_degree() const { return static_cast<int>(dims.size()) - 1; }
};

/// Throws NotAComplex unless d_k d_{k+1} = 0 for all k in range.
void verify_complex(const ChainComplex& c);

struct HomologyResult {
    int degree = 0;
    EIndex betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility chain
};

/// H_k = ker d_k / im d_{k+1} via Smith normal form.
HomologyResult homology_at(const ChainComplex& c, int k);

/// Finest partition of [0,n) closed under x ~ y.x.
std::vector<std::vector<int>> orbits(const CycleSet& C);

/// (beta_n, (#orbits)^n, beta_n >= (#orbits)^n).
std::tuple<EIndex, Int, bool> betti_bound_check(const CycleSet& C, int n);

/// A finite abelian group presented as a product of cyclic groups Z/k_i,
/// with elements encoded as residue tuples or as mixed-radix ranks.
struct FiniteAbelianGroup {
    std::vector<long> moduli;  // each >= 2

    using Elem = std::vector<long>;

    long order() const {
        long o = 1;
        for (long m : moduli) o *= m;
        return o;
    }
    Elem zero() const { return Elem(moduli.size(), 0); }
    Elem add(const Elem& a, const Elem& b) const {
        Elem c(moduli.size());
        for (size_t i = 0; i < moduli.size(); ++i) c[i] = (a[i] + b[i]) % moduli[i];
        return c;
    }
    Elem neg(const Elem& a) const {
        Elem c(moduli.size());
        for (size_t i = 0; i < moduli.size(); ++i) c[i] = (moduli[i] - a[i]) % moduli[i];
        return c;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

    long rank_of(const Elem& a) const {
        long r = 0;
        for (size_t i = 0; i < moduli.size(); ++i) r = r * moduli[i] + a[i];
        return r;
    }
    Elem from_rank(long r) const {
        Elem a(moduli.size());
        for (size_t i = moduli.size(); i-- > 0;) {
            a[i] = r % moduli[i];
            r /= moduli[i];
        }
        return a;
    }
};

FiniteAbelianGroup make_group(std::vector<long> moduli);

struct CohomologyResult {
    Int z_order, b_order;
    std::vector<Int> invariants;  // invariant factors of H^n (>1), chain
    Int h_order() const {
        Int h = 1;
        for (const Int& d : invariants) h *= d;
        return h;
    }
};

/// Cohomology of the cycle-set cochain complex in degree 1 or 2, computed
/// per cyclic factor of A by exact integer normal forms and combined as a
/// direct product.
CohomologyResult cohomology_groups(const CycleSet& C, int degree, const FiniteAbelianGroup& A);

/// Same computation on an arbitrary cochain complex given by the chain
/// complex it dualizes (degree n uses d_{n+1} and d_n).
CohomologyResult cochain_cohomology(const ChainComplex& c, int degree,
                                    const FiniteAbelianGroup& A);

/// Elementary-divisor (prime power) form of a torsion list, for comparing
/// direct sums of torsion groups.
std::vector<Int> elementary_divisors(const std::vector<Int>& invariant_factors);

}  // namespace ybhom

#endif
