#include "ybhom/structures.hpp"

#include <algorithm>
#include <array>

namespace ybhom {

namespace {

// Applies sigma to positions (i, i+1) of a tuple, 0-based.
inline void apply_sigma(const BraidedSet& B, std::array<int, 3>& t, int i) {
    auto [u, v] = B.sigma(t[i], t[i + 1]);
    t[i] = u;
    t[i + 1] = v;
}

// Inverse right translations, or nullopt if some a -> a^b is not bijective.
std::optional<Table> right_translation_inverses(int n, const Table& right) {
    Table inv = Table::square(n, -1);
    for (int b = 0; b < n; ++b) {
        std::vector<char> seen(n, 0);
        for (int a = 0; a < n; ++a) {
            int img = right(a, b);
            if (seen[img]) return std::nullopt;
            seen[img] = 1;
            inv(b, img) = a;
        }
    }
    return inv;
}

bool rows_are_permutations(const Table& t) {
    for (int r = 0; r < t.rows(); ++r) {
        std::vector<char> seen(t.cols(), 0);
        for (int c = 0; c < t.cols(); ++c) {
            int x = t(r, c);
            if (seen[x]) return false;
            seen[x] = 1;
        }
    }
    return true;
}

}  // namespace

BraidedSet validate_braided_set(const Table& left, const Table& right) {
    const int n = left.rows();
    if (n <= 0 || left.cols() != n || right.rows() != n || right.cols() != n)
        throw RangeError("braided set tables must be square and of equal size");
    check_entries_in_range(left, n);
    check_entries_in_range(right, n);

    BraidedSet B;
    B.n = n;
    B.left = left;
    B.right = right;

    // YBE on all triples: (sigma x Id)(Id x sigma)(sigma x Id) =
    // (Id x sigma)(sigma x Id)(Id x sigma).
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::array<int, 3> lhs = {a, b, c};
                apply_sigma(B, lhs, 0);
                apply_sigma(B, lhs, 1);
                apply_sigma(B, lhs, 0);
                std::array<int, 3> rhs = {a, b, c};
                apply_sigma(B, rhs, 1);
                apply_sigma(B, rhs, 0);
                apply_sigma(B, rhs, 1);
                if (lhs != rhs) throw YbeViolation(a, b, c);
            }

    B.rt_inv = right_translation_inverses(n, right);
    return B;
}

PropertyReport classify(const BraidedSet& B) {
    const int n = B.n;
    PropertyReport rep;
    rep.left_nondegenerate = B.lnd();

    rep.right_nondegenerate = true;
    for (int b = 0; b < n && rep.right_nondegenerate; ++b) {
        std::vector<char> seen(n, 0);
        for (int a = 0; a < n; ++a) {
            int img = B.l(b, a);  // a -> ^b a
            if (seen[img]) { rep.right_nondegenerate = false; break; }
            seen[img] = 1;
        }
    }

    // Invertibility: sigma is a bijection on pairs.
    {
        std::vector<char> seen(static_cast<size_t>(n) * n, 0);
        rep.invertible = true;
        for (int a = 0; a < n && rep.invertible; ++a)
            for (int b = 0; b < n; ++b) {
                auto [u, v] = B.sigma(a, b);
                size_t code = static_cast<size_t>(u) * n + v;
                if (seen[code]) { rep.invertible = false; break; }
                seen[code] = 1;
            }
    }

    rep.involutive = true;
    for (int a = 0; a < n && rep.involutive; ++a)
        for (int b = 0; b < n; ++b) {
            auto [u, v] = B.sigma(a, b);
            if (B.sigma(u, v) != std::make_pair(a, b)) { rep.involutive = false; break; }
        }

    // Weak RI-compatibility: for each a, candidates u with sigma(u,a) = (u,a).
    std::vector<std::vector<int>> candidates(n);
    for (int a = 0; a < n; ++a)
        for (int u = 0; u < n; ++u)
            if (B.sigma(u, a) == std::make_pair(u, a)) candidates[a].push_back(u);

    rep.weakly_ri_compatible =
        std::all_of(candidates.begin(), candidates.end(),
                    [](const std::vector<int>& s) { return !s.empty(); });

    if (rep.weakly_ri_compatible) {
        Perm t(n);
        if (B.lnd()) {
            // t is forced: t(a) = a.a (= a -o a).
            for (int a = 0; a < n; ++a) t[a] = B.dot(a, a);
        } else {
            for (int a = 0; a < n; ++a) t[a] = candidates[a].front();
        }
        rep.t_map = t;

        // RI-compatibility needs a bijective t; search for a system of
        // distinct representatives over the candidate sets.
        std::vector<int> chosen(n, -1);
        std::vector<char> used(n, 0);
        auto sdr = [&](auto&& self, int a) -> bool {
            if (a == n) return true;
            for (int u : candidates[a]) {
                if (used[u]) continue;
                used[u] = 1;
                chosen[a] = u;
                if (self(self, a + 1)) return true;
                used[u] = 0;
            }
            return false;
        };
        rep.ri_compatible = sdr(sdr, 0);
        if (rep.ri_compatible && !B.lnd()) rep.t_map = Perm(chosen.begin(), chosen.end());
    }
    return rep;
}

std::pair<int, int> sideways(const BraidedSet& B, int a, int b) {
    if (!B.lnd()) throw NotLeftNondegenerate();
    if (a < 0 || a >= B.n || b < 0 || b >= B.n) throw IndexOutOfRange("sideways element");
    return {B.dot(a, b), B.wdot(b, a)};
}

Shelf validate_shelf(const Table& op) {
    const int n = op.rows();
    if (n <= 0 || op.cols() != n) throw RangeError("shelf table must be square");
    check_entries_in_range(op, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(op(a, c), op(b, c)))
                    throw SelfDistributivityViolation(a, b, c);

    Shelf S;
    S.n = n;
    S.op = op;
    S.is_rack = true;
    for (int b = 0; b < n && S.is_rack; ++b) {
        std::vector<char> seen(n, 0);
        for (int a = 0; a < n; ++a) {
            int img = op(a, b);
            if (seen[img]) { S.is_rack = false; break; }
            seen[img] = 1;
        }
    }
    S.is_spindle = true;
    for (int a = 0; a < n; ++a)
        if (op(a, a) != a) { S.is_spindle = false; break; }
    return S;
}

Shelf associated_shelf(const BraidedSet& B) {
    if (!B.lnd()) throw NotLeftNondegenerate();
    const int n = B.n;
    Table op = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) op(a, b) = B.r(B.dot(b, a), b);  // (b.a)^b

    Shelf S = validate_shelf(op);

    // The four equivalences of the associated-shelf construction.
    PropertyReport rep = classify(B);
    bool trivial = true;
    for (int a = 0; a < n && trivial; ++a)
        for (int b = 0; b < n; ++b)
            if (op(a, b) != a) { trivial = false; break; }
    if (S.is_rack != rep.invertible)
        throw RelationViolation("associated shelf: rack <-> invertible failed");
    if (trivial != rep.involutive)
        throw RelationViolation("associated shelf: trivial <-> involutive failed");
    if (S.is_spindle != rep.weakly_ri_compatible)
        throw RelationViolation("associated shelf: spindle <-> weak RI failed");
    return S;
}

CycleSet validate_cycle_set(const Table& dot) {
    const int n = dot.rows();
    if (n <= 0 || dot.cols() != n) throw RangeError("cycle set table must be square");
    check_entries_in_range(dot, n);
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen(n, 0);
        for (int b = 0; b < n; ++b) {
            int x = dot(a, b);
            if (seen[x]) throw RowNotPermutation(a);
            seen[x] = 1;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (dot(dot(a, b), dot(a, c)) != dot(dot(b, a), dot(b, c)))
                    throw CycleViolation(a, b, c);

    CycleSet C;
    C.n = n;
    C.dot = dot;
    C.star = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) C.star(a, dot(a, b)) = b;
    return C;
}

BraidedSet from_cycle_set(const CycleSet& C) {
    const int n = C.n;
    Table left = Table::square(n), right = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int u = C.star(b, a);         // b * a
            left(a, b) = C.dot(u, b);     // (b*a).b
            right(a, b) = u;
        }
    return validate_braided_set(left, right);
}

BraidedSet from_shelf(const Shelf& S, ShelfVariant variant) {
    const int n = S.n;
    Table left = Table::square(n), right = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (variant == ShelfVariant::primal) {
                left(a, b) = b;
                right(a, b) = S.op(a, b);
            } else {
                left(a, b) = S.op(b, a);
                right(a, b) = a;
            }
        }
    return validate_braided_set(left, right);
}

BraidedSet from_group(const Table& mult, int unit) {
    const int n = mult.rows();
    if (n <= 0 || mult.cols() != n) throw RangeError("multiplication table must be square");
    check_entries_in_range(mult, n);
    if (unit < 0 || unit >= n) throw NotUnit();
    for (int a = 0; a < n; ++a)
        if (mult(unit, a) != a || mult(a, unit) != a) throw NotUnit();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mult(mult(a, b), c) != mult(a, mult(b, c))) throw NotAssociative();

    Table left = Table::square(n, unit), right = Table::square(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) right(a, b) = mult(a, b);
    BraidedSet B = validate_braided_set(left, right);

    // sigma is idempotent for monoid braidings.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto [u, v] = B.sigma(a, b);
            if (B.sigma(u, v) != std::make_pair(u, v))
                throw RelationViolation("monoid braiding is not idempotent");
        }
    return B;
}

BraidedSet double_braided_set(const BraidedSet& B) {
    PropertyReport rep = classify(B);
    if (!rep.left_nondegenerate || !rep.right_nondegenerate)
        throw PreconditionFailed("non-degeneracy");
    if (!rep.invertible) throw PreconditionFailed("invertibility");
    if (!rep.ri_compatible) throw PreconditionFailed("RI-compatibility");

    const int n = B.n;
    const Perm& t = *rep.t_map;

    // sigma^{-1} as a pair table.
    Table inv_l = Table::square(n, -1), inv_r = Table::square(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto [u, v] = B.sigma(a, b);
            inv_l(u, v) = a;
            inv_r(u, v) = b;
        }
    // Inverse left translations: lt_inv(a, c) = the b with ^a b = c.
    Table lt_inv = Table::square(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) lt_inv(a, B.l(a, b)) = b;

    const int N = 2 * n;
    Table left(N, N), right(N, N);
    for (int ia = 0; ia < N; ++ia)
        for (int ib = 0; ib < N; ++ib) {
            SignedElement ea = signed_decode(ia, n), eb = signed_decode(ib, n);
            int a = ea.index, b = eb.index;
            SignedElement oc, od;
            if (ea.sign > 0 && eb.sign > 0) {
                auto [c, d] = B.sigma(a, b);
                oc = {c, +1}; od = {d, +1};
            } else if (ea.sign < 0 && eb.sign < 0) {
                // sigma(d,c) = (b,a)
                int d = inv_l(b, a), c = inv_r(b, a);
                oc = {c, -1}; od = {d, -1};
            } else if (ea.sign > 0 && eb.sign < 0) {
                // sigma(d,b) = (c,a): d = a^{~b}, c = ^d b
                int d = B.wdot(b, a);
                int c = B.l(d, b);
                oc = {c, -1}; od = {d, +1};
            } else {
                // sigma(a,c) = (b,d): c with ^a c = b, then d = a^c
                int c = lt_inv(a, b);
                int d = B.r(a, c);
                oc = {c, +1}; od = {d, -1};
            }
            left(ia, ib) = signed_index(oc, n);
            right(ia, ib) = signed_index(od, n);
        }

    BraidedSet D = validate_braided_set(left, right);

    // The double inherits non-degeneracy, invertibility, and RI-compatibility,
    // with t(a+) = t(a)+ and t(a-) = (t^{-1}(a))-.
    PropertyReport drep = classify(D);
    if (!drep.left_nondegenerate || !drep.right_nondegenerate || !drep.invertible ||
        !drep.ri_compatible)
        throw RelationViolation("double lost a structural property");
    Perm tinv = inverse_perm(t);
    for (int a = 0; a < n; ++a) {
        if ((*drep.t_map)[a] != t[a] || (*drep.t_map)[n + a] != n + tinv[a])
            throw RelationViolation("double t-map differs from the sign-case formula");
    }
    return D;
}

std::vector<SignedElement> toss(const std::vector<SignedElement>& tuple, const Perm& t) {
    if (!is_permutation_vec(t)) throw RangeError("toss requires a bijective t");
    std::vector<SignedElement> out = tuple;
    for (auto& e : out)
        if (e.sign < 0) e.index = t[e.index];
    return out;
}

SidewaysReport check_sideways_identities(const BraidedSet& B) {
    if (!B.lnd()) throw NotLeftNondegenerate();
    SidewaysReport rep;
    const int n = B.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (B.dot(B.wdot(a, b), B.dot(a, c)) != B.dot(B.dot(b, a), B.dot(b, c)))
                    return {false, 1, a, b, c};
                if (B.wdot(B.dot(a, b), B.wdot(a, c)) != B.wdot(B.wdot(b, a), B.wdot(b, c)))
                    return {false, 2, a, b, c};
                if (B.dot(B.wdot(a, b), B.wdot(a, c)) != B.wdot(B.dot(b, a), B.dot(b, c)))
                    return {false, 3, a, b, c};
            }
    return rep;
}

RightBraidedModule validate_right_module(const BraidedSet& B, const Table& action) {
    const int m = action.rows();
    if (m <= 0 || action.cols() != B.n) throw RangeError("right module action must be carrier x n");
    check_entries_in_range(action, m);
    for (int p = 0; p < m; ++p)
        for (int a = 0; a < B.n; ++a)
            for (int b = 0; b < B.n; ++b)
                if (action(action(p, a), b) != action(action(p, B.l(a, b)), B.r(a, b)))
                    throw ModuleViolation("right module compatibility fails at (p,a,b)=(" +
                                          std::to_string(p) + "," + std::to_string(a) + "," +
                                          std::to_string(b) + ")");

    RightBraidedModule M;
    M.carrier = m;
    M.n = B.n;
    M.action = action;
    M.solid = true;
    Table inv(m, B.n, -1);
    for (int a = 0; a < B.n && M.solid; ++a) {
        std::vector<char> seen(m, 0);
        for (int p = 0; p < m; ++p) {
            int img = action(p, a);
            if (seen[img]) { M.solid = false; break; }
            seen[img] = 1;
            inv(img, a) = p;
        }
    }
    if (M.solid) M.inv_action = inv;
    return M;
}

LeftBraidedModule validate_left_module(const BraidedSet& B, const Table& action) {
    const int m = action.cols();
    if (m <= 0 || action.rows() != B.n) throw RangeError("left module action must be n x carrier");
    check_entries_in_range(action, m);
    for (int a = 0; a < B.n; ++a)
        for (int b = 0; b < B.n; ++b)
            for (int q = 0; q < m; ++q)
                if (action(a, action(b, q)) != action(B.l(a, b), action(B.r(a, b), q)))
                    throw ModuleViolation("left module compatibility fails at (a,b,q)=(" +
                                          std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(q) + ")");
    LeftBraidedModule N;
    N.carrier = m;
    N.n = B.n;
    N.action = action;
    return N;
}

RightBraidedModule trivial_right_module(const BraidedSet& B) {
    return validate_right_module(B, Table(1, B.n, 0));
}

LeftBraidedModule trivial_left_module(const BraidedSet& B) {
    return validate_left_module(B, Table(B.n, 1, 0));
}

RightBraidedModule adjoint_right_module(const BraidedSet& B) {
    Table action(B.n, B.n);
    for (int p = 0; p < B.n; ++p)
        for (int a = 0; a < B.n; ++a) action(p, a) = B.r(p, a);
    return validate_right_module(B, action);
}

LeftBraidedModule adjoint_left_module(const BraidedSet& B) {
    Table action(B.n, B.n);
    for (int a = 0; a < B.n; ++a)
        for (int q = 0; q < B.n; ++q) action(a, q) = B.l(a, q);
    return validate_left_module(B, action);
}

LeftBraidedModule sideways_left_module(const BraidedSet& B) {
    if (!B.lnd()) throw NotLeftNondegenerate();
    Table action(B.n, B.n);
    for (int a = 0; a < B.n; ++a)
        for (int q = 0; q < B.n; ++q) action(a, q) = B.dot(a, q);
    return validate_left_module(B, action);
}

}  // namespace ybhom
