#include "cubar/snf.hpp"

#include <algorithm>
#include <map>

namespace cubar {

namespace {

/* Working copy: big-integer entries in nested maps row -> col -> value,
 * plus the column->rows mirror so pivot search stays cheap. */
struct WorkMat {
    std::map<int, std::map<int, BigInt>> row;
    std::map<int, std::map<int, bool>> colrows; // col -> set of rows

    void set(int r, int c, const BigInt& v)
    {
        if (v == 0) {
            auto it = row.find(r);
            if (it != row.end()) {
                it->second.erase(c);
                if (it->second.empty())
                    row.erase(it);
            }
            auto jt = colrows.find(c);
            if (jt != colrows.end()) {
                jt->second.erase(r);
                if (jt->second.empty())
                    colrows.erase(jt);
            }
        } else {
            row[r][c] = v;
            colrows[c][r] = true;
        }
    }
    BigInt get(int r, int c) const
    {
        auto it = row.find(r);
        if (it == row.end())
            return 0;
        auto jt = it->second.find(c);
        return jt == it->second.end() ? BigInt(0) : jt->second;
    }
    bool empty() const { return row.empty(); }
};

BigInt babs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

} // namespace

std::vector<BigInt> smith_normal_form(const SparseMatInt& m)
{
    WorkMat w;
    for (const auto& [rc, v] : m.entries())
        w.set(rc.first, rc.second, BigInt(v));

    std::vector<BigInt> diag;
    while (!w.empty()) {
        // smallest-magnitude nonzero pivot
        int pr = -1, pc = -1;
        BigInt best = 0;
        for (const auto& [r, cols] : w.row)
            for (const auto& [c, v] : cols) {
                BigInt a = babs(v);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }

        bool reduced = false;
        while (!reduced) {
            reduced = true;
            // clear the pivot column
            auto rows_in_col = w.colrows[pc];
            for (const auto& [r, _] : rows_in_col) {
                if (r == pr)
                    continue;
                BigInt q = w.get(r, pc) / w.get(pr, pc);
                if (q != 0) {
                    auto prow = w.row[pr]; // copy: mutation below
                    for (const auto& [c, v] : prow)
                        w.set(r, c, w.get(r, c) - q * v);
                }
                if (w.get(r, pc) != 0) {
                    // remainder smaller than pivot: swap roles and restart
                    pr = r;
                    reduced = false;
                    break;
                }
            }
            if (!reduced)
                continue;
            // clear the pivot row
            auto prow = w.row[pr];
            for (const auto& [c, v] : prow) {
                if (c == pc)
                    continue;
                BigInt q = v / w.get(pr, pc);
                if (q != 0) {
                    auto col_rows = w.colrows[pc];
                    for (const auto& [r, _] : col_rows)
                        w.set(r, c, w.get(r, c) - q * w.get(r, pc));
                }
                if (w.get(pr, c) != 0) {
                    pc = c;
                    reduced = false;
                    break;
                }
            }
        }

        diag.push_back(babs(w.get(pr, pc)));
        // drop pivot row and column
        auto prow = w.row[pr];
        for (const auto& [c, v] : prow)
            w.set(pr, c, 0);
        auto pcol = w.colrows.count(pc) ? w.colrows[pc] : std::map<int, bool>{};
        for (const auto& [r, _] : pcol)
            w.set(r, pc, 0);
    }

    /* enforce the divisibility chain d1 | d2 | ... */
    std::sort(diag.begin(), diag.end());
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[j] % diag[i] == 0)
                continue;
            BigInt a = diag[i], b = diag[j];
            BigInt g = gcd(a, b);
            diag[i] = g;
            diag[j] = a / g * b;
        }
    std::sort(diag.begin(), diag.end());
    return diag;
}

int integer_rank(const SparseMatInt& m)
{
    return static_cast<int>(smith_normal_form(m).size());
}

} // namespace cubar
