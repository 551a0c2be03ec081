#include "ybhom/multipermutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ybhom/extensions.hpp"

namespace ybhom {

bool is_square_free(const CycleSet& C) {
    for (int a = 0; a < C.n; ++a)
        if (C.dot(a, a) != a) return false;
    return true;
}

bool is_nondegenerate_cs(const CycleSet& C) {
    std::vector<char> seen(C.n, 0);
    for (int a = 0; a < C.n; ++a) {
        int s = C.dot(a, a);
        if (seen[s]) return false;
        seen[s] = 1;
    }
    return true;
}

Retraction retract(const CycleSet& C) {
    if (!is_nondegenerate_cs(C)) throw Degenerate();
    const int n = C.n;
    std::vector<int> cls(n, -1);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        for (size_t c = 0; c < reps.size(); ++c) {
            bool same = true;
            for (int b = 0; b < n; ++b)
                if (C.dot(a, b) != C.dot(reps[c], b)) { same = false; break; }
            if (same) { cls[a] = static_cast<int>(c); break; }
        }
        if (cls[a] < 0) {
            cls[a] = static_cast<int>(reps.size());
            reps.push_back(a);
        }
    }
    const int m = static_cast<int>(reps.size());
    Table q = Table::square(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) q(i, j) = cls[C.dot(reps[i], reps[j])];
    // Well-definedness against all representatives.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (q(cls[a], cls[b]) != cls[C.dot(a, b)])
                throw RelationViolation("retraction operation is not well defined");
    Retraction R{validate_cycle_set(q), cls};
    if (!is_nondegenerate_cs(R.quotient))
        throw RelationViolation("retraction lost non-degeneracy");
    return R;
}

MpReport mp_level(const CycleSet& C) {
    MpReport rep;
    CycleSet cur = C;
    rep.levels.push_back(cur.n);
    int steps = 0;
    for (;;) {
        if (cur.n == 1) {
            rep.level = steps;
            return rep;
        }
        CycleSet next = retract(cur).quotient;
        if (next.n == cur.n) return rep;  // stabilized above a point: not MP
        rep.levels.push_back(next.n);
        cur = std::move(next);
        ++steps;
    }
}

CycleSet doubling_extension(const CycleSet& C) {
    if (!is_square_free(C)) throw NotSquareFree();
    FiniteAbelianGroup z2 = make_group({2});
    Table vals = Table::square(C.n, 1);
    for (int x = 0; x < C.n; ++x) vals(x, x) = 0;
    ExtensionDescriptor E = extend(C, z2, Cochain2{C.n, z2, vals});
    if (!is_square_free(E.total))
        throw RelationViolation("doubling extension is not square-free");

    // Retraction classes are exactly the fibers of (alpha,x) -> x, so the
    // retraction is isomorphic to the base via that projection.
    Retraction R = retract(E.total);
    if (R.quotient.n != C.n)
        throw RelationViolation("doubling retraction has the wrong size");
    std::vector<int> class_to_base(C.n, -1);
    for (int idx = 0; idx < E.total.n; ++idx) {
        int& slot = class_to_base[R.projection[idx]];
        if (slot < 0) slot = E.projection[idx];
        else if (slot != E.projection[idx])
            throw RelationViolation("doubling retraction classes are not fibers");
    }
    for (int i = 0; i < C.n; ++i)
        for (int j = 0; j < C.n; ++j)
            if (class_to_base[R.quotient.dot(i, j)] !=
                C.dot(class_to_base[i], class_to_base[j]))
                throw RelationViolation("doubling retraction is not isomorphic to the base");
    return E.total;
}

namespace {

struct Enumerator {
    int n;
    bool square_free;
    bool up_to_iso;
    long long budget;
    const std::function<bool(const CycleSet&)>& sink;

    Table dot;
    long long nodes = 0;
    long long emitted = 0;
    bool stopped = false;
    std::vector<std::vector<Perm>> candidates;  // per row

    Enumerator(const EnumerationConfig& cfg, const std::function<bool(const CycleSet&)>& s)
        : n(cfg.size),
          square_free(cfg.square_free),
          up_to_iso(cfg.up_to_iso),
          budget(cfg.budget),
          sink(s),
          dot(Table::square(cfg.size, -1)),
          candidates(cfg.size) {
        Perm p(n);
        std::iota(p.begin(), p.end(), 0);
        std::vector<Perm> all;
        do all.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        for (int a = 0; a < n; ++a)
            for (const Perm& q : all)
                if (!square_free || q[a] == a) candidates[a].push_back(q);
    }

    // Checks every cycle-property instance whose last dependency is row r.
    bool consistent_after(int r) {
        for (int a = 0; a <= r; ++a)
            for (int b = 0; b <= r; ++b) {
                int ab = dot(a, b), ba = dot(b, a);
                if (ab > r || ba > r) continue;
                if (a != r && b != r && ab != r && ba != r) continue;
                for (int c = 0; c < n; ++c)
                    if (dot(ab, dot(a, c)) != dot(ba, dot(b, c))) return false;
            }
        return true;
    }

    void run(int r) {
        if (stopped) return;
        if (r == n) {
            CycleSet C = validate_cycle_set(dot);
            if (up_to_iso && !(canonical_form(C).dot == C.dot)) return;
            ++emitted;
            if (!sink(C)) stopped = true;
            return;
        }
        for (const Perm& p : candidates[r]) {
            if (stopped) return;
            if (++nodes > budget) throw BudgetExceeded(nodes);
            for (int b = 0; b < n; ++b) dot(r, b) = p[b];
            if (consistent_after(r)) run(r + 1);
        }
        for (int b = 0; b < n; ++b) dot(r, b) = -1;
    }
};

}  // namespace

EnumerationStats enumerate_cycle_sets(const EnumerationConfig& cfg,
                                      const std::function<bool(const CycleSet&)>& sink) {
    if (cfg.size < 1) throw RangeError("enumeration size must be >= 1");
    if (cfg.budget <= 0) throw RangeError("enumeration budget must be positive");
    Enumerator e(cfg, sink);
    e.run(0);
    return {e.nodes, e.emitted, !e.stopped};
}

std::vector<CycleSet> enumerate_cycle_sets(const EnumerationConfig& cfg) {
    std::vector<CycleSet> out;
    enumerate_cycle_sets(cfg, [&](const CycleSet& C) {
        out.push_back(C);
        return true;
    });
    return out;
}

CycleSet canonical_form(const CycleSet& C) {
    const int n = C.n;
    if (n > 8) throw TooLarge("canonical form guarded at n <= 8");
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> best = C.dot.flat();
    std::vector<int> cand(static_cast<size_t>(n) * n);
    while (std::next_permutation(p.begin(), p.end())) {
        Perm pinv = inverse_perm(p);
        bool better = false, worse = false;
        for (int i = 0; i < n && !worse; ++i)
            for (int j = 0; j < n; ++j) {
                int v = p[C.dot(pinv[i], pinv[j])];
                cand[static_cast<size_t>(i) * n + j] = v;
                int cur = best[static_cast<size_t>(i) * n + j];
                if (!better) {
                    if (v > cur) { worse = true; break; }
                    if (v < cur) better = true;
                }
            }
        if (better && !worse) best = cand;
    }
    Table t = Table::square(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = best[static_cast<size_t>(i) * n + j];
    return validate_cycle_set(t);
}

long automorphism_count(const CycleSet& C) {
    const int n = C.n;
    if (n > 8) throw TooLarge("automorphism count guarded at n <= 8");
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    long count = 0;
    do {
        bool fixes = true;
        for (int i = 0; i < n && fixes; ++i)
            for (int j = 0; j < n; ++j)
                if (p[C.dot(i, j)] != C.dot(p[i], p[j])) { fixes = false; break; }
        if (fixes) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

NmTable nm_table(int max_m, int max_size, long long budget) {
    if (max_m < 0) throw RangeError("max_m must be >= 0");
    NmTable out;
    out.minimal_size.assign(max_m + 1, -1);
    long long nodes_left = budget;

    for (int N = 1; N <= max_size; ++N) {
        bool unresolved = false;
        for (int v : out.minimal_size)
            if (v < 0) unresolved = true;
        if (!unresolved) break;

        EnumerationConfig cfg;
        cfg.size = N;
        cfg.square_free = true;
        // Iso-dedup is a speed knob only: levels are isomorphism invariants,
        // so existence per size is what matters. The canonical-form filter
        // pays off below the n! blow-up threshold.
        cfg.up_to_iso = (N <= 6);
        cfg.budget = nodes_left;
        EnumerationStats st = enumerate_cycle_sets(cfg, [&](const CycleSet& C) {
            MpReport rep = mp_level(C);
            if (rep.level && *rep.level <= max_m && out.minimal_size[*rep.level] < 0)
                out.minimal_size[*rep.level] = N;
            for (int v : out.minimal_size)
                if (v < 0) return true;
            return false;  // all requested levels resolved
        });
        nodes_left -= st.nodes;
        out.nodes += st.nodes;
        out.max_size_scanned = N;
        if (nodes_left <= 0) throw BudgetExceeded(out.nodes);
    }

    for (int m = 0; m + 1 <= max_m; ++m)
        if (out.minimal_size[m] > 0 && out.minimal_size[m + 1] > 0 &&
            out.minimal_size[m + 1] > 2 * out.minimal_size[m])
            throw RelationViolation("doubling estimate N_{m+1} <= 2 N_m violated");
    return out;
}

}  // namespace ybhom
