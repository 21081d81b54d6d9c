#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace cubar {

/* Sparse integer matrix, row-major coordinate storage. Rows/cols are
 * 0-based; entries with value 0 are never stored. */
class SparseMatInt {
public:
    SparseMatInt() = default;
    SparseMatInt(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, int64_t v);
    void add(int r, int c, int64_t v);
    int64_t get(int r, int c) const;

    const std::map<std::pair<int, int>, int64_t>& entries() const { return data_; }
    size_t nnz() const { return data_.size(); }

    SparseMatInt transpose() const;
    SparseMatInt multiply(const SparseMatInt& rhs) const;
    bool is_zero() const { return data_.empty(); }

    bool operator==(const SparseMatInt& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    /* rank of the reduction mod p (p prime) */
    int rank_mod_p(int64_t p) const;

private:
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, int64_t> data_;
};

std::ostream& operator<<(std::ostream& os, const SparseMatInt& m);

} // namespace cubar
