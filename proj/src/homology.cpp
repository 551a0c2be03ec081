#include "ybhom/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ybhom/complexes.hpp"

namespace ybhom {

void verify_complex(const ChainComplex& c) {
    for (int k = 1; k + 1 <= c.max_degree(); ++k) {
        if (c.differentials[k].cols() != c.dims[k] ||
            c.differentials[k].rows() != c.dims[k - 1])
            throw NotAComplex("differential dimensions inconsistent at degree " +
                              std::to_string(k));
        if (!is_zero_matrix(c.differentials[k] * c.differentials[k + 1]))
            throw NotAComplex("d_" + std::to_string(k) + " d_" + std::to_string(k + 1) +
                              " != 0");
    }
}

HomologyResult homology_at(const ChainComplex& c, int k) {
    if (k < 0 || k + 1 > c.max_degree())
        throw DegreeOutOfRange("homology degree " + std::to_string(k) +
                               " needs differentials at " + std::to_string(k) + " and " +
                               std::to_string(k + 1));
    const IntMatrix& dnext = c.differentials[k + 1];
    EIndex rank_k = 0;
    if (k >= 1) {
        if (!is_zero_matrix(c.differentials[k] * dnext))
            throw NotAComplex("dd != 0 at degree " + std::to_string(k));
        rank_k = rank_z(c.differentials[k]);
    }
    std::vector<Int> diag = smith_diagonal(dnext);
    HomologyResult res;
    res.degree = k;
    res.betti = c.dims[k] - rank_k - static_cast<EIndex>(diag.size());
    for (const Int& d : diag)
        if (d > 1) res.torsion.push_back(d);
    return res;
}

std::vector<std::vector<int>> orbits(const CycleSet& C) {
    const int n = C.n;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            int a = find(x), b = find(C.dot(y, x));
            if (a != b) parent[a] = b;
        }
    std::map<int, std::vector<int>> buckets;
    for (int x = 0; x < n; ++x) buckets[find(x)].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : buckets) out.push_back(std::move(members));
    return out;
}

std::tuple<EIndex, Int, bool> betti_bound_check(const CycleSet& C, int n) {
    ChainComplex c = cycle_set_complex(C, n + 1);
    HomologyResult h = homology_at(c, n);
    Int bound = 1;
    const Int m = static_cast<long>(orbits(C).size());
    for (int i = 0; i < n; ++i) bound *= m;
    return {h.betti, bound, Int(h.betti) >= bound};
}

FiniteAbelianGroup make_group(std::vector<long> moduli) {
    for (long m : moduli)
        if (m < 2) throw RangeError("cyclic moduli must be >= 2");
    return FiniteAbelianGroup{std::move(moduli)};
}

namespace {

std::vector<std::pair<Int, int>> factorize(Int v) {
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            int e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

std::vector<Int> invariants_from_elementary(std::vector<Int> divisors) {
    // Group prime powers by prime, then stack the largest together.
    std::map<Int, std::vector<int>> by_prime;
    for (const Int& d : divisors)
        for (auto& [p, e] : factorize(d)) by_prime[p].push_back(e);
    size_t layers = 0;
    for (auto& [p, es] : by_prime) {
        std::sort(es.rbegin(), es.rend());
        layers = std::max(layers, es.size());
    }
    std::vector<Int> inv(layers, 1);
    for (auto& [p, es] : by_prime)
        for (size_t j = 0; j < es.size(); ++j) {
            Int pw = 1;
            for (int i = 0; i < es[j]; ++i) pw *= p;
            inv[j] *= pw;
        }
    std::sort(inv.begin(), inv.end());  // ascending divisibility chain
    return inv;
}

// Cohomology of (dual of) the chain complex in degree nn with Z/q
// coefficients, by exact lattice arithmetic.
CohomologyResult cyclic_cohomology(const ChainComplex& c, int nn, long q) {
    const EIndex cn = c.dims[nn];
    IntMatrix Tn = c.differentials[nn + 1].transpose();          // delta^n : C^n -> C^{n+1}
    IntMatrix Tprev = nn >= 1 ? IntMatrix(c.differentials[nn].transpose())
                              : IntMatrix::Zero(cn, 0);          // delta^{n-1}

    SmithResult snf = smith_normal_form(Tn);
    std::vector<Int> mult(cn, 1);
    Int z_order = 1;
    for (EIndex i = 0; i < cn; ++i) {
        if (i < snf.rank) {
            Int g = boost::multiprecision::gcd(snf.D(i, i), Int(q));
            mult[i] = q / g;
            z_order *= g;
        } else {
            z_order *= q;
        }
    }

    // Generators of im(delta^{n-1}) + q Z^{c_n}, written in the basis of the
    // cocycle lattice L = V * diag(mult).
    IntMatrix gens(cn, Tprev.cols() + cn);
    if (Tprev.cols() > 0) gens.block(0, 0, cn, Tprev.cols()) = Tprev;
    gens.block(0, Tprev.cols(), cn, cn) = IntMatrix::Identity(cn, cn) * Int(q);

    IntMatrix X = snf.Vinv * gens;
    for (EIndex i = 0; i < cn; ++i) {
        for (EIndex j = 0; j < X.cols(); ++j) {
            if (X(i, j) % mult[i] != 0)
                throw RelationViolation("coboundary lattice escapes the cocycle lattice");
            X(i, j) /= mult[i];
        }
    }

    CohomologyResult res;
    res.z_order = z_order;
    std::vector<Int> diag = smith_diagonal(std::move(X));
    if (static_cast<EIndex>(diag.size()) != cn)
        throw RelationViolation("cohomology quotient is not finite");
    for (const Int& d : diag)
        if (d > 1) res.invariants.push_back(d);
    res.b_order = res.z_order / res.h_order();
    return res;
}

}  // namespace

CohomologyResult cochain_cohomology(const ChainComplex& c, int degree,
                                    const FiniteAbelianGroup& A) {
    if (degree < 1 || degree + 1 > c.max_degree())
        throw UnsupportedDegree(degree);
    CohomologyResult total;
    total.z_order = 1;
    total.b_order = 1;
    std::vector<Int> eldivs;
    for (long q : A.moduli) {
        CohomologyResult part = cyclic_cohomology(c, degree, q);
        total.z_order *= part.z_order;
        total.b_order *= part.b_order;
        std::vector<Int> e = elementary_divisors(part.invariants);
        eldivs.insert(eldivs.end(), e.begin(), e.end());
    }
    total.invariants = invariants_from_elementary(std::move(eldivs));
    return total;
}

CohomologyResult cohomology_groups(const CycleSet& C, int degree, const FiniteAbelianGroup& A) {
    if (degree != 1 && degree != 2) throw UnsupportedDegree(degree);
    ChainComplex c = cycle_set_complex(C, degree + 1);
    CohomologyResult res = cochain_cohomology(c, degree, A);
    if (degree == 1) {
        // H^1 consists of the maps constant on orbits.
        Int expected = 1;
        const size_t m = orbits(C).size();
        for (size_t i = 0; i < m; ++i) expected *= static_cast<long>(A.order());
        if (res.h_order() != expected)
            throw RelationViolation("H^1 does not match the orbit count");
    }
    return res;
}

std::vector<Int> elementary_divisors(const std::vector<Int>& invariant_factors) {
    std::vector<Int> out;
    for (const Int& d : invariant_factors)
        for (auto& [p, e] : factorize(d)) {
            Int pw = 1;
            for (int i = 0; i < e; ++i) pw *= p;
            out.push_back(pw);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ybhom
