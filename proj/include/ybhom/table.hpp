#ifndef YBHOM_TABLE_HPP
#define YBHOM_TABLE_HPP

#include <vector>

#include "ybhom/errors.hpp"

namespace ybhom {

/// Rectangular table of small integers, row-major. Used for operation
/// tables of finite structures; entries are element indices.
class Table {
  public:
    Table() : rows_(0), cols_(0) {}
    Table(int rows, int cols, int fill = 0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Table square(int n, int fill = 0) { return Table(n, n, fill); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    int operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Table&) const = default;
    bool operator<(const Table& o) const { return data_ < o.data_; }

    const std::vector<int>& flat() const { return data_; }

    std::vector<std::vector<int>> to_rows() const {
        std::vector<std::vector<int>> out(rows_);
        for (int r = 0; r < rows_; ++r) {
            out[r].assign(data_.begin() + static_cast<long>(r) * cols_,
                          data_.begin() + static_cast<long>(r + 1) * cols_);
        }
        return out;
    }

    static Table from_rows(const std::vector<std::vector<int>>& rows) {
        if (rows.empty()) return Table();
        Table t(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != rows[0].size())
                throw ParseError("ragged table rows");
            for (size_t c = 0; c < rows[r].size(); ++c) t(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
        }
        return t;
    }

  private:
    int rows_, cols_;
    std::vector<int> data_;
};

using Perm = std::vector<int>;

/// True if v is a permutation of {0,...,n-1} where n = v.size().
inline bool is_permutation_vec(const std::vector<int>& v) {
    std::vector<char> seen(v.size(), 0);
    for (int x : v) {
        if (x < 0 || x >= static_cast<int>(v.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

inline Perm inverse_perm(const Perm& p) {
    Perm inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

inline void check_entries_in_range(const Table& t, int n) {
    for (int r = 0; r < t.rows(); ++r)
        for (int c = 0; c < t.cols(); ++c)
            if (t(r, c) < 0 || t(r, c) >= n)
                throw RangeError("table entry out of range at (" + std::to_string(r) +
                                 "," + std::to_string(c) + ")");
}

}  // namespace ybhom

#endif
