#ifndef YBHOM_COMPLEXES_HPP
#define YBHOM_COMPLEXES_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ybhom/guitar.hpp"
#include "ybhom/homology.hpp"
#include "ybhom/structures.hpp"

namespace ybhom {

enum class Flavor { pre_cubical, semi_strong_skew_cubical, cubical };

/// A basis element of C_k = M x X^k x N.
struct ModelElement {
    int m = 0;
    Tuple xs;
    int nq = 0;
    bool operator==(const ModelElement&) const = default;
};

/// A degree-indexed family of basis-to-basis boundary maps d+_i, d-_i and
/// optional degeneracies s_i on the sets M x X^k x N, together with the
/// relation suite its flavor declares. Construction verifies the declared
/// relations exhaustively up to the configured maximal degree.
class BasisChainModel {
  public:
    using BoundaryFn = std::function<ModelElement(int k, int i, const ModelElement&)>;

    BasisChainModel(BraidedSet B, RightBraidedModule M, LeftBraidedModule N, int max_degree,
                    Flavor flavor, std::string name, BoundaryFn dplus, BoundaryFn dminus,
                    BoundaryFn s = nullptr);

    int max_degree() const { return max_degree_; }
    long dim(int k) const;
    Flavor flavor() const { return flavor_; }
    const std::string& family_name() const { return name_; }
    bool has_degeneracies() const { return static_cast<bool>(s_); }

    const BraidedSet& braided() const { return B_; }
    const RightBraidedModule& right_coeff() const { return M_; }
    const LeftBraidedModule& left_coeff() const { return N_; }

    ModelElement decode(int k, long idx) const;
    long encode(const ModelElement& e) const;

    /// 1-based position i; maps C_k -> C_{k-1}.
    long d_plus(int k, int i, long idx) const;
    long d_minus(int k, int i, long idx) const;
    /// 1-based position i <= k; maps C_k -> C_{k+1}.
    long s_map(int k, int i, long idx) const;

    ModelElement d_plus_e(int k, int i, const ModelElement& e) const { return dplus_(k, i, e); }
    ModelElement d_minus_e(int k, int i, const ModelElement& e) const { return dminus_(k, i, e); }
    ModelElement s_e(int k, int i, const ModelElement& e) const { return s_(k, i, e); }

  private:
    BraidedSet B_;
    RightBraidedModule M_;
    LeftBraidedModule N_;
    int max_degree_;
    Flavor flavor_;
    std::string name_;
    BoundaryFn dplus_, dminus_, s_;
};

struct RelationReport {
    bool pass = true;
    std::string detail;
};

/// d^e_i d^z_j = d^z_{j-1} d^e_i for i < j, all four sign combinations.
RelationReport verify_pre_cubical(const BasisChainModel& model);
/// Pre-cubical plus the degeneracy relations with the identity upgrade on
/// the plus boundaries only.
RelationReport verify_semi_strong_skew(const BasisChainModel& model);
/// Classical cubical conventions: d^e_i s_i = Id and d^e_{i+1} s_i = s_i d^e_i.
RelationReport verify_classical_cubical(const BasisChainModel& model);

enum class SignChoice { lplus_rminus, lminus_rminus, lplus_rplus, lminus_rplus };

/// Boundary family of the braided homology: d+ is the rho-side map, d- the
/// lambda-side map, with + or - crossings chosen per slot. Choices using
/// inverse crossings require an invertible braiding.
BasisChainModel braided_family(const BraidedSet& B, const RightBraidedModule& M,
                               const LeftBraidedModule& N,
                               SignChoice sc = SignChoice::lplus_rminus, int max_degree = 4);

/// The sideways-operation family: d-_i acts by y_i on the other entries and
/// on the N component, d+_i deletes y_i and twists the M component by chi_i.
BasisChainModel birack_family(const BraidedSet& B, const RightBraidedModule& M,
                              const LeftBraidedModule& N, int max_degree = 4);

/// Star variant (dot and wdot exchanged), trivial coefficients.
BasisChainModel birack_star_family(const BraidedSet& B, int max_degree = 4);

/// Adds the degeneracies s_i(m,y,n) = (m.t(chi_i(y))^{-1}, ..., y_i, y_i, ...)
/// to the sideways family; needs weak RI-compatibility and a solid M.
BasisChainModel degeneracies_coeff(const BraidedSet& B, const RightBraidedModule& M,
                                   const LeftBraidedModule& N, int max_degree = 4);

/// Plain diagonal doubling on the trivial-coefficient family (star or not);
/// needs a.a = a -o a for all a.
BasisChainModel degeneracies_plain(const BraidedSet& B, bool star = false, int max_degree = 4);

struct AlphaBeta {
    int alpha = 1;
    int beta = -1;
};

/// Matrix of alpha*sum (-1)^{i-1} d+_i + beta*sum (-1)^{i-1} d-_i in the
/// enumerated bases.
IntMatrix differential_matrix(const BasisChainModel& model, int k, AlphaBeta ab);

IntMatrix d_plus_matrix(const BasisChainModel& model, int k, int i);
IntMatrix d_minus_matrix(const BasisChainModel& model, int k, int i);
IntMatrix s_matrix(const BasisChainModel& model, int k, int i);  // C_k -> C_{k+1}

/// eta_k = (Id - s_1 d+_2)...(Id - s_{k-1} d+_k); identity for k = 1.
IntMatrix eta_projector(const BasisChainModel& model, int k);

struct SplitResult {
    IntMatrix degenerate_gens;  // columns generate C^D_k
    IntMatrix eta;              // normalized projector; columns generate C^N_k
    EIndex rank_degenerate = 0;
    EIndex rank_normalized = 0;
};

/// Certifies C_k = C^D_k (+) C^N_k over Z (rank additivity, unit invariant
/// factors of the combined generator matrix) and the invariance of both
/// summands under the differentials for every requested (alpha,beta).
/// Throws SplittingFailure with a witness description otherwise.
SplitResult split(const BasisChainModel& model, int k, const std::vector<AlphaBeta>& abs);

struct ConjugationReport {
    bool pass = true;
    int degree = 0;
    std::string detail;
};

/// Verifies J o d^{r,-}_i = d_i o J and J o d^{l,+}_i = d'_i o J on all basis
/// elements up to max_degree (J extended by identity on M and N).
ConjugationReport conjugate_by_guitar(const BraidedSet& B, const RightBraidedModule& M,
                                      const LeftBraidedModule& N, int max_degree = 4);

/// The chain complex of a cycle set: C_n = Z X^n, with the boundary
/// dropping or acting by x_i, and d_1 = 0.
ChainComplex cycle_set_complex(const CycleSet& C, int max_degree = 4);

/// Same complex for a general LND braided set (star = true swaps the two
/// sideways operations); specializes to cycle_set_complex on cycle sets.
ChainComplex lnd_chain_complex(const BraidedSet& B, int max_degree = 4, bool star = false);

/// The chain complex of a model for a fixed (alpha,beta).
ChainComplex model_complex(const BasisChainModel& model, AlphaBeta ab);

}  // namespace ybhom

#endif
