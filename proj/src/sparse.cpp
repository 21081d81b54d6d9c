#include "cubar/sparse.hpp"

#include <ostream>
#include <stdexcept>

namespace cubar {

void SparseMatInt::set(int r, int c, int64_t v)
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("sparse matrix index out of range");
    if (v == 0)
        data_.erase({r, c});
    else
        data_[{r, c}] = v;
}

void SparseMatInt::add(int r, int c, int64_t v)
{
    set(r, c, get(r, c) + v);
}

int64_t SparseMatInt::get(int r, int c) const
{
    auto it = data_.find({r, c});
    return it == data_.end() ? 0 : it->second;
}

SparseMatInt SparseMatInt::transpose() const
{
    SparseMatInt t(cols_, rows_);
    for (const auto& [rc, v] : data_)
        t.set(rc.second, rc.first, v);
    return t;
}

SparseMatInt SparseMatInt::multiply(const SparseMatInt& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("sparse multiply: shape mismatch");
    SparseMatInt out(rows_, rhs.cols_);
    for (const auto& [rc, v] : data_) {
        auto it = rhs.data_.lower_bound({rc.second, 0});
        for (; it != rhs.data_.end() && it->first.first == rc.second; ++it)
            out.add(rc.first, it->first.second, v * it->second);
    }
    return out;
}

int SparseMatInt::rank_mod_p(int64_t p) const
{
    // dense elimination mod p; fine at desk scale
    std::vector<std::vector<int64_t>> m(rows_, std::vector<int64_t>(cols_, 0));
    for (const auto& [rc, v] : data_) {
        int64_t r = v % p;
        m[rc.first][rc.second] = r < 0 ? r + p : r;
    }
    auto inv = [&](int64_t a) {
        int64_t res = 1, b = p - 2, base = a % p;
        while (b) {
            if (b & 1)
                res = res * base % p;
            base = base * base % p;
            b >>= 1;
        }
        return res;
    };
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[rank], m[pivot]);
        int64_t iv = inv(m[rank][col]);
        for (int c = col; c < cols_; ++c)
            m[rank][c] = m[rank][c] * iv % p;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || m[r][col] == 0)
                continue;
            int64_t f = m[r][col];
            for (int c = col; c < cols_; ++c)
                m[r][c] = ((m[r][c] - f * m[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

std::ostream& operator<<(std::ostream& os, const SparseMatInt& m)
{
    os << m.rows() << "x" << m.cols() << "{";
    for (const auto& [rc, v] : m.entries())
        os << " (" << rc.first << "," << rc.second << ")=" << v;
    return os << " }";
}

} // namespace cubar
