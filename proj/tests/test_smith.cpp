#include <doctest.h>

#include <sstream>

#include "ybhom/smith.hpp"

using namespace ybhom;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

void check_snf(const IntMatrix& A) {
    SmithResult r = smith_normal_form(A);
    IntMatrix recomposed = r.U * A * r.V;
    CHECK(is_zero_matrix(recomposed - r.D));
    CHECK(is_zero_matrix(r.U * r.Uinv - IntMatrix::Identity(A.rows(), A.rows())));
    CHECK(is_zero_matrix(r.V * r.Vinv - IntMatrix::Identity(A.cols(), A.cols())));
    Int du = determinant(r.U), dv = determinant(r.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // Diagonal, non-negative, divisibility chain.
    for (EIndex i = 0; i < r.D.rows(); ++i)
        for (EIndex j = 0; j < r.D.cols(); ++j)
            if (i != j) CHECK(r.D(i, j) == 0);
    for (EIndex i = 0; i < r.rank; ++i) {
        CHECK(r.D(i, i) > 0);
        if (i + 1 < r.rank) CHECK(r.D(i + 1, i + 1) % r.D(i, i) == 0);
    }
    for (EIndex i = r.rank; i < std::min(r.D.rows(), r.D.cols()); ++i) CHECK(r.D(i, i) == 0);
}

}  // namespace

TEST_CASE("smith normal form of simple matrices") {
    SmithResult id = smith_normal_form(IntMatrix::Identity(3, 3));
    CHECK(id.rank == 3);
    for (int i = 0; i < 3; ++i) CHECK(id.D(i, i) == 1);

    SmithResult z = smith_normal_form(from_rows({{0}}));
    CHECK(z.rank == 0);
    CHECK(z.D(0, 0) == 0);

    SmithResult r = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(r.rank == 2);
    CHECK(r.D(0, 0) == 2);
    CHECK(r.D(1, 1) == 4);
    check_snf(from_rows({{2, 4}, {6, 8}}));
}

TEST_CASE("smith normal form on random matrices") {
    unsigned long state = 987;
    auto rnd = [&](int lo, int hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<int>((state >> 33) % (hi - lo + 1));
    };
    for (int trial = 0; trial < 60; ++trial) {
        int rows = rnd(1, 6), cols = rnd(1, 6);
        IntMatrix A(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) A(i, j) = rnd(-9, 9);
        check_snf(A);
        CHECK(smith_diagonal(A) == smith_normal_form(A).invariant_factors());
    }
}

TEST_CASE("determinant by fraction-free elimination") {
    CHECK(determinant(IntMatrix::Identity(4, 4)) == 1);
    CHECK(determinant(from_rows({{2, 4}, {6, 8}})) == -8);
    CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
}

TEST_CASE("rank") {
    CHECK(rank_z(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(rank_z(IntMatrix::Zero(3, 5)) == 0);
}

TEST_CASE("column span membership and basis") {
    IntMatrix G = from_rows({{2, 0}, {0, 3}, {0, 0}});
    ColumnSpan span(G);
    CHECK(span.rank() == 2);
    IntVector v(3);
    v << 4, -3, 0;
    CHECK(span.contains(v));
    v << 1, 0, 0;
    CHECK(!span.contains(v));
    v << 0, 0, 1;
    CHECK(!span.contains(v));

    IntVector w(3);
    w << 2, 3, 0;
    auto coords = span.coordinates(w);
    REQUIRE(coords.has_value());
    IntMatrix basis = span.basis();
    CHECK(is_zero_matrix(basis * (*coords) - w));

    ColumnSpan empty(IntMatrix::Zero(3, 0));
    CHECK(empty.rank() == 0);
    v << 0, 0, 0;
    CHECK(empty.contains(v));
}

TEST_CASE("matrix text round trip") {
    IntMatrix A = from_rows({{1, -2, 3}, {0, 12345, -9}});
    std::stringstream ss;
    write_matrix_text(ss, A);
    IntMatrix B = read_matrix_text(ss);
    CHECK(is_zero_matrix(A - B));
}
