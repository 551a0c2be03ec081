#include "ybhom/complexes.hpp"

#include <algorithm>

namespace ybhom {

namespace {

long pow_long(int n, int k) {
    long p = 1;
    while (k-- > 0) p *= n;
    return p;
}

// Iterate over all values of a ModelElement of degree k.
template <class F>
void for_each_element(const BasisChainModel& model, int k, F&& f) {
    const long d = model.dim(k);
    for (long idx = 0; idx < d; ++idx) f(model.decode(k, idx));
}

// Shelf operation table of the associated shelf, without revalidation.
Table associated_op_table(const BraidedSet& B) {
    Table op = Table::square(B.n);
    for (int a = 0; a < B.n; ++a)
        for (int b = 0; b < B.n; ++b) op(a, b) = B.r(B.dot(b, a), b);
    return op;
}

// chi_i with a precomputed shelf table (1-based i).
int chi_local(const BraidedSet& B, const Table& op, int i, const Tuple& y) {
    const int k = static_cast<int>(y.size());
    Tuple arg;
    arg.reserve(k);
    int head = y[i - 1];
    for (int j = i - 1; j >= 1; --j) head = op(head, y[j - 1]);
    arg.push_back(head);
    for (int j = 1; j <= i - 1; ++j) arg.push_back(y[j - 1]);
    for (int j = i + 1; j <= k; ++j) arg.push_back(y[j - 1]);
    return guitar_inverse(B, arg)[0];
}

struct InversePair {
    Table l, r;  // sigma^{-1}(u,v) = (l(u,v), r(u,v))
};

InversePair inverse_braiding(const BraidedSet& B) {
    InversePair P{Table::square(B.n, -1), Table::square(B.n, -1)};
    for (int a = 0; a < B.n; ++a)
        for (int b = 0; b < B.n; ++b) {
            auto [u, v] = B.sigma(a, b);
            if (P.l(u, v) != -1) throw NotInvertible();
            P.l(u, v) = a;
            P.r(u, v) = b;
        }
    for (int u = 0; u < B.n; ++u)
        for (int v = 0; v < B.n; ++v)
            if (P.l(u, v) == -1) throw NotInvertible();
    return P;
}

}  // namespace

BasisChainModel::BasisChainModel(BraidedSet B, RightBraidedModule M, LeftBraidedModule N,
                                 int max_degree, Flavor flavor, std::string name,
                                 BoundaryFn dplus, BoundaryFn dminus, BoundaryFn s)
    : B_(std::move(B)),
      M_(std::move(M)),
      N_(std::move(N)),
      max_degree_(max_degree),
      flavor_(flavor),
      name_(std::move(name)),
      dplus_(std::move(dplus)),
      dminus_(std::move(dminus)),
      s_(std::move(s)) {
    RelationReport rep;
    switch (flavor_) {
        case Flavor::pre_cubical: rep = verify_pre_cubical(*this); break;
        case Flavor::semi_strong_skew_cubical: rep = verify_semi_strong_skew(*this); break;
        case Flavor::cubical: rep = verify_classical_cubical(*this); break;
    }
    if (!rep.pass) throw RelationViolation(name_ + ": " + rep.detail);
}

long BasisChainModel::dim(int k) const {
    if (k < 0 || k > max_degree_) throw DegreeOutOfRange("degree " + std::to_string(k));
    return static_cast<long>(M_.carrier) * pow_long(B_.n, k) * N_.carrier;
}

ModelElement BasisChainModel::decode(int k, long idx) const {
    ModelElement e;
    e.nq = static_cast<int>(idx % N_.carrier);
    idx /= N_.carrier;
    e.xs.resize(k);
    for (int j = k - 1; j >= 0; --j) {
        e.xs[j] = static_cast<int>(idx % B_.n);
        idx /= B_.n;
    }
    e.m = static_cast<int>(idx);
    return e;
}

long BasisChainModel::encode(const ModelElement& e) const {
    long idx = e.m;
    for (int x : e.xs) idx = idx * B_.n + x;
    return idx * N_.carrier + e.nq;
}

long BasisChainModel::d_plus(int k, int i, long idx) const {
    return encode(dplus_(k, i, decode(k, idx)));
}
long BasisChainModel::d_minus(int k, int i, long idx) const {
    return encode(dminus_(k, i, decode(k, idx)));
}
long BasisChainModel::s_map(int k, int i, long idx) const {
    if (!s_) throw NoDegeneracies();
    return encode(s_(k, i, decode(k, idx)));
}

RelationReport verify_pre_cubical(const BasisChainModel& model) {
    for (int k = 2; k <= model.max_degree(); ++k) {
        RelationReport bad;
        for_each_element(model, k, [&](const ModelElement& e) {
            if (!bad.pass) return;
            for (int i = 1; i < k; ++i)
                for (int j = i + 1; j <= k; ++j)
                    for (int eps = 0; eps < 2; ++eps)
                        for (int zeta = 0; zeta < 2; ++zeta) {
                            auto dE = [&](int kk, int ii, const ModelElement& x) {
                                return eps ? model.d_plus_e(kk, ii, x)
                                           : model.d_minus_e(kk, ii, x);
                            };
                            auto dZ = [&](int kk, int ii, const ModelElement& x) {
                                return zeta ? model.d_plus_e(kk, ii, x)
                                            : model.d_minus_e(kk, ii, x);
                            };
                            ModelElement lhs = dE(k - 1, i, dZ(k, j, e));
                            ModelElement rhs = dZ(k - 1, j - 1, dE(k, i, e));
                            if (!(lhs == rhs))
                                bad = {false, "pre-cubical relation fails at k=" +
                                                  std::to_string(k) + " i=" + std::to_string(i) +
                                                  " j=" + std::to_string(j)};
                        }
        });
        if (!bad.pass) return bad;
    }
    return {};
}

RelationReport verify_semi_strong_skew(const BasisChainModel& model) {
    RelationReport rep = verify_pre_cubical(model);
    if (!rep.pass) return rep;
    if (!model.has_degeneracies()) return {false, "no degeneracies declared"};

    for (int k = 1; k < model.max_degree(); ++k) {
        RelationReport bad;
        for_each_element(model, k, [&](const ModelElement& e) {
            if (!bad.pass) return;
            auto fail = [&](const std::string& what, int i, int j) {
                bad = {false, what + " fails at k=" + std::to_string(k) + " i=" +
                                  std::to_string(i) + " j=" + std::to_string(j)};
            };
            for (int j = 1; j <= k; ++j) {
                ModelElement sj = model.s_e(k, j, e);
                for (int eps = 0; eps < 2; ++eps) {
                    auto d = [&](int kk, int ii, const ModelElement& x) {
                        return eps ? model.d_plus_e(kk, ii, x) : model.d_minus_e(kk, ii, x);
                    };
                    for (int i = 1; i <= k + 1; ++i) {
                        if (i < j) {
                            if (!(d(k + 1, i, sj) == model.s_e(k - 1, j - 1, d(k, i, e))))
                                return fail("d_i s_j = s_{j-1} d_i", i, j);
                        } else if (i > j + 1) {
                            if (!(d(k + 1, i, sj) == model.s_e(k, j, d(k, i - 1, e))))
                                return fail("d_i s_j = s_j d_{i-1}", i, j);
                        } else if (i == j) {
                            if (eps) {
                                if (!(d(k + 1, j, sj) == e)) return fail("d+_i s_i = Id", i, j);
                            } else {
                                if (!(d(k + 1, j, sj) == d(k + 1, j + 1, sj)))
                                    return fail("d-_i s_i = d-_{i+1} s_i", i, j);
                            }
                        } else {  // i == j + 1
                            if (eps && !(d(k + 1, j + 1, sj) == e))
                                return fail("d+_{i+1} s_i = Id", i, j);
                        }
                    }
                }
                // s_i s_j = s_{j+1} s_i for i <= j.
                if (k + 2 <= model.max_degree()) {
                    for (int i = 1; i <= j; ++i) {
                        if (!(model.s_e(k + 1, i, sj) ==
                              model.s_e(k + 1, j + 1, model.s_e(k, i, e))))
                            return fail("s_i s_j = s_{j+1} s_i", i, j);
                    }
                }
            }
        });
        if (!bad.pass) return bad;
    }
    return {};
}

RelationReport verify_classical_cubical(const BasisChainModel& model) {
    RelationReport rep = verify_pre_cubical(model);
    if (!rep.pass) return rep;
    if (!model.has_degeneracies()) return {false, "no degeneracies declared"};

    for (int k = 1; k < model.max_degree(); ++k) {
        RelationReport bad;
        for_each_element(model, k, [&](const ModelElement& e) {
            if (!bad.pass) return;
            auto fail = [&](const std::string& what, int i, int j) {
                bad = {false, what + " fails at k=" + std::to_string(k) + " i=" +
                                  std::to_string(i) + " j=" + std::to_string(j)};
            };
            for (int j = 1; j <= k; ++j) {
                ModelElement sj = model.s_e(k, j, e);
                for (int eps = 0; eps < 2; ++eps) {
                    auto d = [&](int kk, int ii, const ModelElement& x) {
                        return eps ? model.d_plus_e(kk, ii, x) : model.d_minus_e(kk, ii, x);
                    };
                    if (!(d(k + 1, j, sj) == e)) return fail("d_i s_i = Id", j, j);
                    if (j <= k - 1 &&
                        !(d(k + 1, j + 1, sj) == model.s_e(k - 1, j, d(k, j, e))))
                        return fail("d_{i+1} s_i = s_i d_i", j + 1, j);
                    for (int i = 1; i <= k + 1; ++i) {
                        if (i < j && !(d(k + 1, i, sj) == model.s_e(k - 1, j - 1, d(k, i, e))))
                            return fail("d_i s_j = s_{j-1} d_i", i, j);
                        if (i > j + 1 && !(d(k + 1, i, sj) == model.s_e(k, j, d(k, i - 1, e))))
                            return fail("d_i s_j = s_j d_{i-1}", i, j);
                    }
                }
            }
        });
        if (!bad.pass) return bad;
    }
    return {};
}

BasisChainModel braided_family(const BraidedSet& B, const RightBraidedModule& M,
                               const LeftBraidedModule& N, SignChoice sc, int max_degree) {
    const bool l_minus = (sc == SignChoice::lminus_rminus || sc == SignChoice::lminus_rplus);
    const bool r_plus = (sc == SignChoice::lplus_rplus || sc == SignChoice::lminus_rplus);

    std::shared_ptr<InversePair> inv;
    if (l_minus || r_plus) inv = std::make_shared<InversePair>(inverse_braiding(B));

    BraidedSet Bc = B;
    RightBraidedModule Mc = M;
    LeftBraidedModule Nc = N;

    auto apply = [Bc, inv](Tuple& xs, int pos0, bool inverse) {
        int u = xs[pos0], v = xs[pos0 + 1];
        if (inverse) {
            xs[pos0] = inv->l(u, v);
            xs[pos0 + 1] = inv->r(u, v);
        } else {
            xs[pos0] = Bc.l(u, v);
            xs[pos0 + 1] = Bc.r(u, v);
        }
    };

    auto dplus = [Bc, Mc, apply, l_minus](int, int i, const ModelElement& e) {
        ModelElement out = e;
        for (int j = i - 1; j >= 1; --j) apply(out.xs, j - 1, l_minus);
        out.m = Mc.act(out.m, out.xs.front());
        out.xs.erase(out.xs.begin());
        return out;
    };
    auto dminus = [Nc, apply, r_plus](int k, int i, const ModelElement& e) {
        ModelElement out = e;
        for (int j = i; j <= k - 1; ++j) apply(out.xs, j - 1, r_plus);
        out.nq = Nc.act(out.xs.back(), out.nq);
        out.xs.pop_back();
        return out;
    };

    std::string name = std::string("braided(") + (l_minus ? "l-" : "l+") + "," +
                       (r_plus ? "r+" : "r-") + ")";
    return BasisChainModel(B, M, N, max_degree, Flavor::pre_cubical, name, dplus, dminus);
}

namespace {

BasisChainModel::BoundaryFn sideways_dminus(const BraidedSet& B, const LeftBraidedModule& N,
                                            bool star) {
    BraidedSet Bc = B;
    LeftBraidedModule Nc = N;
    return [Bc, Nc, star](int k, int i, const ModelElement& e) {
        ModelElement out;
        out.m = e.m;
        out.xs.reserve(k - 1);
        const int yi = e.xs[i - 1];
        for (int j = 1; j <= k; ++j) {
            if (j == i) continue;
            int yj = e.xs[j - 1];
            bool before = j < i;
            int val = (before != star) ? Bc.wdot(yi, yj) : Bc.dot(yi, yj);
            out.xs.push_back(val);
        }
        out.nq = Nc.act(yi, e.nq);
        return out;
    };
}

BasisChainModel::BoundaryFn sideways_dplus(const BraidedSet& B, const RightBraidedModule& M) {
    BraidedSet Bc = B;
    RightBraidedModule Mc = M;
    Table op = associated_op_table(B);
    return [Bc, Mc, op](int k, int i, const ModelElement& e) {
        ModelElement out;
        out.m = Mc.carrier == 1 ? 0 : Mc.act(e.m, chi_local(Bc, op, i, e.xs));
        out.xs = e.xs;
        out.xs.erase(out.xs.begin() + (i - 1));
        out.nq = e.nq;
        (void)k;
        return out;
    };
}

BasisChainModel::BoundaryFn doubling_s(const BraidedSet& B, const RightBraidedModule& M,
                                       const Perm& t) {
    BraidedSet Bc = B;
    RightBraidedModule Mc = M;
    Perm tc = t;
    Table op = associated_op_table(B);
    return [Bc, Mc, tc, op](int, int i, const ModelElement& e) {
        ModelElement out = e;
        if (Mc.carrier > 1) out.m = Mc.act_inv(e.m, tc[chi_local(Bc, op, i, e.xs)]);
        out.xs.insert(out.xs.begin() + (i - 1), e.xs[i - 1]);
        return out;
    };
}

}  // namespace

BasisChainModel birack_family(const BraidedSet& B, const RightBraidedModule& M,
                              const LeftBraidedModule& N, int max_degree) {
    if (!B.lnd()) throw NotLeftNondegenerate();
    return BasisChainModel(B, M, N, max_degree, Flavor::pre_cubical, "birack",
                           sideways_dplus(B, M), sideways_dminus(B, N, false));
}

BasisChainModel birack_star_family(const BraidedSet& B, int max_degree) {
    if (!B.lnd()) throw NotLeftNondegenerate();
    RightBraidedModule M = trivial_right_module(B);
    LeftBraidedModule N = trivial_left_module(B);
    return BasisChainModel(B, M, N, max_degree, Flavor::pre_cubical, "birack-star",
                           sideways_dplus(B, M), sideways_dminus(B, N, true));
}

BasisChainModel degeneracies_coeff(const BraidedSet& B, const RightBraidedModule& M,
                                   const LeftBraidedModule& N, int max_degree) {
    if (!B.lnd()) throw PreconditionFailed("left non-degeneracy");
    for (int a = 0; a < B.n; ++a)
        if (B.dot(a, a) != B.wdot(a, a)) throw PreconditionFailed("weak RI-compatibility");
    if (!M.solid) throw PreconditionFailed("solid right module");
    Perm t(B.n);
    for (int a = 0; a < B.n; ++a) t[a] = B.dot(a, a);
    return BasisChainModel(B, M, N, max_degree, Flavor::semi_strong_skew_cubical,
                           "birack+degeneracies", sideways_dplus(B, M),
                           sideways_dminus(B, N, false), doubling_s(B, M, t));
}

BasisChainModel degeneracies_plain(const BraidedSet& B, bool star, int max_degree) {
    if (!B.lnd()) throw PreconditionFailed("left non-degeneracy");
    for (int a = 0; a < B.n; ++a)
        if (B.dot(a, a) != B.wdot(a, a)) throw PreconditionFailed("a.a = a -o a");
    RightBraidedModule M = trivial_right_module(B);
    LeftBraidedModule N = trivial_left_module(B);
    Perm t(B.n);
    for (int a = 0; a < B.n; ++a) t[a] = B.dot(a, a);
    return BasisChainModel(B, M, N, max_degree, Flavor::semi_strong_skew_cubical,
                           star ? "star+diagonal" : "birack+diagonal", sideways_dplus(B, M),
                           sideways_dminus(B, N, star), doubling_s(B, M, t));
}

IntMatrix differential_matrix(const BasisChainModel& model, int k, AlphaBeta ab) {
    if (k < 1 || k > model.max_degree())
        throw DegreeOutOfRange("differential degree " + std::to_string(k));
    IntMatrix D = IntMatrix::Zero(model.dim(k - 1), model.dim(k));
    const long cols = model.dim(k);
    for (long idx = 0; idx < cols; ++idx) {
        int sign = 1;
        for (int i = 1; i <= k; ++i) {
            if (ab.alpha != 0) D(model.d_plus(k, i, idx), idx) += sign * ab.alpha;
            if (ab.beta != 0) D(model.d_minus(k, i, idx), idx) += sign * ab.beta;
            sign = -sign;
        }
    }
    return D;
}

namespace {

IntMatrix basis_map_matrix(long rows, long cols, const std::function<long(long)>& f) {
    IntMatrix M = IntMatrix::Zero(rows, cols);
    for (long j = 0; j < cols; ++j) M(f(j), j) += 1;
    return M;
}

}  // namespace

IntMatrix d_plus_matrix(const BasisChainModel& model, int k, int i) {
    return basis_map_matrix(model.dim(k - 1), model.dim(k),
                            [&](long j) { return model.d_plus(k, i, j); });
}

IntMatrix d_minus_matrix(const BasisChainModel& model, int k, int i) {
    return basis_map_matrix(model.dim(k - 1), model.dim(k),
                            [&](long j) { return model.d_minus(k, i, j); });
}

IntMatrix s_matrix(const BasisChainModel& model, int k, int i) {
    return basis_map_matrix(model.dim(k + 1), model.dim(k),
                            [&](long j) { return model.s_map(k, i, j); });
}

IntMatrix eta_projector(const BasisChainModel& model, int k) {
    if (!model.has_degeneracies()) throw NoDegeneracies();
    if (k < 0 || k > model.max_degree()) throw DegreeOutOfRange("eta degree");
    const long d = model.dim(k);
    IntMatrix eta = IntMatrix::Identity(d, d);
    for (int i = 1; i <= k - 1; ++i) {
        IntMatrix p = IntMatrix::Identity(d, d) - s_matrix(model, k - 1, i) *
                                                      d_plus_matrix(model, k, i + 1);
        eta = eta * p;
    }
    return eta;
}

namespace {

IntMatrix degenerate_generators(const BasisChainModel& model, int k) {
    const long d = model.dim(k);
    if (k < 2) return IntMatrix::Zero(d, 0);
    const long dprev = model.dim(k - 1);
    IntMatrix G(d, (k - 1) * dprev);
    for (int i = 1; i <= k - 1; ++i)
        G.block(0, (i - 1) * dprev, d, dprev) = s_matrix(model, k - 1, i);
    return G;
}

}  // namespace

SplitResult split(const BasisChainModel& model, int k, const std::vector<AlphaBeta>& abs) {
    if (!model.has_degeneracies()) throw NoDegeneracies();
    if (model.flavor() != Flavor::semi_strong_skew_cubical)
        throw PreconditionFailed("semi-strong skew cubical model");
    if (k < 1 || k > model.max_degree()) throw DegreeOutOfRange("split degree");

    SplitResult res;
    res.degenerate_gens = degenerate_generators(model, k);
    res.eta = eta_projector(model, k);

    ColumnSpan spanD(res.degenerate_gens), spanN(res.eta);
    res.rank_degenerate = spanD.rank();
    res.rank_normalized = spanN.rank();
    const long d = model.dim(k);
    if (res.rank_degenerate + res.rank_normalized != d)
        throw SplittingFailure("rank additivity fails at degree " + std::to_string(k));

    // eta vanishes on the degenerate part, and Id - eta lands inside it.
    if (res.degenerate_gens.cols() > 0 && !is_zero_matrix(res.eta * res.degenerate_gens))
        throw SplittingFailure("eta does not vanish on Im s_i");
    {
        IntMatrix complement = IntMatrix::Identity(d, d) - res.eta;
        for (EIndex j = 0; j < complement.cols(); ++j)
            if (!spanD.contains(complement.col(j)))
                throw SplittingFailure("Id - eta leaves the degenerate span");
    }

    // The two parts generate everything over Z.
    IntMatrix combined(d, res.degenerate_gens.cols() + res.eta.cols());
    combined << res.degenerate_gens, res.eta;
    ColumnSpan all(combined);
    if (all.rank() != d || !all.unit_factors())
        throw SplittingFailure("summands do not span C_k over Z");

    // Differential invariance of both summands.
    ColumnSpan spanD_prev(degenerate_generators(model, k - 1));
    ColumnSpan spanN_prev(eta_projector(model, k - 1));
    for (const AlphaBeta& ab : abs) {
        IntMatrix D = differential_matrix(model, k, ab);
        IntMatrix imgD = D * res.degenerate_gens;
        for (EIndex j = 0; j < imgD.cols(); ++j)
            if (!spanD_prev.contains(imgD.col(j)))
                throw SplittingFailure("degenerate part not d-invariant for (alpha,beta)=(" +
                                       std::to_string(ab.alpha) + "," + std::to_string(ab.beta) +
                                       ")");
        IntMatrix imgN = D * res.eta;
        for (EIndex j = 0; j < imgN.cols(); ++j)
            if (!spanN_prev.contains(imgN.col(j)))
                throw SplittingFailure("normalized part not d-invariant for (alpha,beta)=(" +
                                       std::to_string(ab.alpha) + "," + std::to_string(ab.beta) +
                                       ")");
    }
    return res;
}

ConjugationReport conjugate_by_guitar(const BraidedSet& B, const RightBraidedModule& M,
                                      const LeftBraidedModule& N, int max_degree) {
    if (!B.lnd()) throw NotLeftNondegenerate();
    BasisChainModel br = braided_family(B, M, N, SignChoice::lplus_rminus, max_degree);
    BasisChainModel bi = birack_family(B, M, N, max_degree);

    auto J = [&](const ModelElement& e) {
        ModelElement out = e;
        out.xs = guitar(B, e.xs);
        return out;
    };
    for (int k = 1; k <= max_degree; ++k) {
        const long d = br.dim(k);
        for (long idx = 0; idx < d; ++idx) {
            ModelElement e = br.decode(k, idx);
            ModelElement je = J(e);
            for (int i = 1; i <= k; ++i) {
                if (!(J(br.d_minus_e(k, i, e)) == bi.d_minus_e(k, i, je)))
                    return {false, k, "J d^{r,-}_" + std::to_string(i) + " != d_i J"};
                if (!(J(br.d_plus_e(k, i, e)) == bi.d_plus_e(k, i, je)))
                    return {false, k, "J d^{l,+}_" + std::to_string(i) + " != d'_i J"};
            }
        }
    }
    return {true, max_degree, ""};
}

namespace {

ChainComplex lnd_complex_impl(const BraidedSet& B, int max_degree, bool star) {
    if (!B.lnd()) throw NotLeftNondegenerate();
    const int n = B.n;
    ChainComplex c;
    c.dims.resize(max_degree + 1);
    c.differentials.resize(max_degree + 1);
    for (int k = 0; k <= max_degree; ++k) c.dims[k] = pow_long(n, k);

    for (int k = 1; k <= max_degree; ++k) {
        IntMatrix D = IntMatrix::Zero(c.dims[k - 1], c.dims[k]);
        Tuple x(k, 0);
        long col = 0;
        for (;;) {
            int sign = -1;  // (-1)^i starting at i = 1
            for (int i = 1; i <= k - 1; ++i) {
                long del = 0, act = 0;
                for (int j = 1; j <= k; ++j) {
                    if (j == i) continue;
                    del = del * n + x[j - 1];
                    bool before = j < i;
                    int val = (before != star) ? B.wdot(x[i - 1], x[j - 1])
                                               : B.dot(x[i - 1], x[j - 1]);
                    act = act * n + val;
                }
                D(del, col) += sign;
                D(act, col) -= sign;
                sign = -sign;
            }
            ++col;
            int j = k - 1;
            for (; j >= 0; --j) {
                if (++x[j] < n) break;
                x[j] = 0;
            }
            if (j < 0) break;
        }
        c.differentials[k] = std::move(D);
    }
    verify_complex(c);
    return c;
}

}  // namespace

ChainComplex lnd_chain_complex(const BraidedSet& B, int max_degree, bool star) {
    return lnd_complex_impl(B, max_degree, star);
}

ChainComplex cycle_set_complex(const CycleSet& C, int max_degree) {
    return lnd_complex_impl(from_cycle_set(C), max_degree, false);
}

ChainComplex model_complex(const BasisChainModel& model, AlphaBeta ab) {
    ChainComplex c;
    const int md = model.max_degree();
    c.dims.resize(md + 1);
    c.differentials.resize(md + 1);
    for (int k = 0; k <= md; ++k) c.dims[k] = model.dim(k);
    for (int k = 1; k <= md; ++k) c.differentials[k] = differential_matrix(model, k, ab);
    return c;
}

}  // namespace ybhom
