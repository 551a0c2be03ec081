#include "ybhom/smith.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ybhom {

void write_matrix_text(std::ostream& os, const IntMatrix& m) {
    for (EIndex i = 0; i < m.rows(); ++i) {
        for (EIndex j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
}

IntMatrix read_matrix_text(std::istream& is) {
    std::vector<std::vector<Int>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) row.emplace_back(tok);
        rows.push_back(std::move(row));
    }
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(static_cast<EIndex>(i), static_cast<EIndex>(j)) = rows[i][j];
    return m;
}

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> out;
    for (EIndex i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
}

namespace {

using boost::multiprecision::abs;

// Core Smith elimination. Transform bookkeeping is optional so the
// diagonal-only path stays cheap.
struct SmithWorker {
    IntMatrix A;
    bool track;
    IntMatrix U, Uinv, V, Vinv;

    explicit SmithWorker(IntMatrix a, bool track_) : A(std::move(a)), track(track_) {
        if (track) {
            U = IntMatrix::Identity(A.rows(), A.rows());
            Uinv = IntMatrix::Identity(A.rows(), A.rows());
            V = IntMatrix::Identity(A.cols(), A.cols());
            Vinv = IntMatrix::Identity(A.cols(), A.cols());
        }
    }

    void row_sub(EIndex i, EIndex t, const Int& q) {  // row i -= q * row t
        A.row(i) -= q * A.row(t);
        if (track) {
            U.row(i) -= q * U.row(t);
            Uinv.col(t) += q * Uinv.col(i);
        }
    }
    void col_sub(EIndex j, EIndex t, const Int& q) {  // col j -= q * col t
        A.col(j) -= q * A.col(t);
        if (track) {
            V.col(j) -= q * V.col(t);
            Vinv.row(t) += q * Vinv.row(j);
        }
    }
    void row_swap(EIndex i, EIndex t) {
        A.row(i).swap(A.row(t));
        if (track) {
            U.row(i).swap(U.row(t));
            Uinv.col(i).swap(Uinv.col(t));
        }
    }
    void col_swap(EIndex j, EIndex t) {
        A.col(j).swap(A.col(t));
        if (track) {
            V.col(j).swap(V.col(t));
            Vinv.row(j).swap(Vinv.row(t));
        }
    }
    void row_add(EIndex t, EIndex i) {  // row t += row i
        A.row(t) += A.row(i);
        if (track) {
            U.row(t) += U.row(i);
            Uinv.col(i) -= Uinv.col(t);
        }
    }
    void row_negate(EIndex t) {
        A.row(t) = -A.row(t);
        if (track) {
            U.row(t) = -U.row(t);
            Uinv.col(t) = -Uinv.col(t);
        }
    }

    EIndex run() {
        const EIndex m = A.rows(), c = A.cols();
        EIndex t = 0;
        while (t < m && t < c) {
            // Minimal-absolute-value pivot in the trailing block.
            EIndex pi = -1, pj = -1;
            Int best = 0;
            for (EIndex i = t; i < m; ++i)
                for (EIndex j = t; j < c; ++j)
                    if (A(i, j) != 0 && (pi < 0 || abs(A(i, j)) < best)) {
                        best = abs(A(i, j));
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            if (pi != t) row_swap(pi, t);
            if (pj != t) col_swap(pj, t);

            for (;;) {
                bool clean = true;
                for (EIndex i = t + 1; i < m; ++i) {
                    if (A(i, t) == 0) continue;
                    Int q = A(i, t) / A(t, t);
                    if (q != 0) row_sub(i, t, q);
                    if (A(i, t) != 0) {  // smaller remainder becomes the pivot
                        row_swap(i, t);
                        clean = false;
                    }
                }
                for (EIndex j = t + 1; j < c; ++j) {
                    if (A(t, j) == 0) continue;
                    Int q = A(t, j) / A(t, t);
                    if (q != 0) col_sub(j, t, q);
                    if (A(t, j) != 0) {
                        col_swap(j, t);
                        clean = false;
                    }
                }
                if (!clean) continue;

                // Divisibility repair: the pivot must divide the whole
                // trailing block before it is frozen.
                EIndex bad = -1;
                for (EIndex i = t + 1; i < m && bad < 0; ++i)
                    for (EIndex j = t + 1; j < c; ++j)
                        if (A(i, j) % A(t, t) != 0) {
                            bad = i;
                            break;
                        }
                if (bad < 0) break;
                row_add(t, bad);
            }
            if (A(t, t) < 0) row_negate(t);
            ++t;
        }
        return t;
    }
};

}  // namespace

SmithResult smith_normal_form(IntMatrix A) {
    SmithWorker w(std::move(A), true);
    EIndex r = w.run();
    SmithResult res;
    res.rank = r;
    res.D = std::move(w.A);
    res.U = std::move(w.U);
    res.Uinv = std::move(w.Uinv);
    res.V = std::move(w.V);
    res.Vinv = std::move(w.Vinv);
    return res;
}

std::vector<Int> smith_diagonal(IntMatrix A) {
    SmithWorker w(std::move(A), false);
    EIndex r = w.run();
    std::vector<Int> d;
    d.reserve(r);
    for (EIndex i = 0; i < r; ++i) d.push_back(w.A(i, i));
    return d;
}

EIndex rank_z(const IntMatrix& A) {
    return static_cast<EIndex>(smith_diagonal(A).size());
}

Int determinant(IntMatrix A) {
    const EIndex n = A.rows();
    if (n != A.cols()) throw SizeMismatch("determinant of a non-square matrix");
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (EIndex k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            EIndex piv = -1;
            for (EIndex i = k + 1; i < n; ++i)
                if (A(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            A.row(k).swap(A.row(piv));
            sign = -sign;
        }
        for (EIndex i = k + 1; i < n; ++i)
            for (EIndex j = k + 1; j < n; ++j)
                A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

ColumnSpan::ColumnSpan(const IntMatrix& gens)
    : dim_(gens.rows()), snf_(smith_normal_form(gens)) {}

bool ColumnSpan::unit_factors() const {
    for (EIndex i = 0; i < snf_.rank; ++i)
        if (snf_.D(i, i) != 1) return false;
    return true;
}

bool ColumnSpan::contains(const IntVector& v) const {
    IntVector w = snf_.U * v;
    for (EIndex i = 0; i < dim_; ++i) {
        if (i < snf_.rank) {
            if (w(i) % snf_.D(i, i) != 0) return false;
        } else if (w(i) != 0) {
            return false;
        }
    }
    return true;
}

IntMatrix ColumnSpan::basis() const {
    IntMatrix b(dim_, snf_.rank);
    for (EIndex i = 0; i < snf_.rank; ++i) b.col(i) = snf_.Uinv.col(i) * snf_.D(i, i);
    return b;
}

std::optional<IntVector> ColumnSpan::coordinates(const IntVector& v) const {
    IntVector w = snf_.U * v;
    IntVector y = IntVector::Zero(snf_.rank);
    for (EIndex i = 0; i < dim_; ++i) {
        if (i < snf_.rank) {
            if (w(i) % snf_.D(i, i) != 0) return std::nullopt;
            y(i) = w(i) / snf_.D(i, i);
        } else if (w(i) != 0) {
            return std::nullopt;
        }
    }
    return y;
}

}  // namespace ybhom
