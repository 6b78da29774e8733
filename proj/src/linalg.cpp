#include "frobtk/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

namespace frobtk {

std::string rat_str(const Rat& q) {
    return q.get_str();
}

Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

SingularMatrixError::SingularMatrixError(int kd)
    : std::runtime_error("singular matrix, kernel dimension " + std::to_string(kd)),
      kernel_dim(kd) {}

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

const Rat& RationalMatrix::at(int r, int c) const {
    static const Rat zero(0);
    auto it = m_.find({r, c});
    return it == m_.end() ? zero : it->second;
}

void RationalMatrix::set(int r, int c, const Rat& v) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    if (v == 0)
        m_.erase({r, c});
    else
        m_[{r, c}] = v;
}

void RationalMatrix::add(int r, int c, const Rat& v) {
    set(r, c, Rat(at(r, c) + v));
}

bool RationalMatrix::integral() const {
    for (const auto& [k, v] : m_)
        if (v.get_den() != 1) return false;
    return true;
}

double RationalMatrix::fill() const {
    if (rows_ == 0 || cols_ == 0) return 0.0;
    return double(m_.size()) / (double(rows_) * double(cols_));
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (const auto& [k, v] : m_) t.set(k.second, k.first, v);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix size mismatch");
    RationalMatrix out(rows_, other.cols_);
    std::vector<std::vector<std::pair<int, const Rat*>>> rrows(other.rows_);
    for (const auto& [k, v] : other.m_) rrows[k.first].push_back({k.second, &v});
    std::map<Key, Rat> acc;
    for (const auto& [k, v] : m_)
        for (const auto& [c, w] : rrows[k.second]) acc[{k.first, c}] += v * (*w);
    for (const auto& [k, v] : acc)
        if (v != 0) out.m_[k] = v;
    return out;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix out(rows_, cols_);
    for (const auto& [k, v] : m_) out.m_[k] = -v;
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && m_ == other.m_;
}

namespace {

void divexact(Int& v, const Int& d) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
}

// Sign of the permutation sending i -> v[i]: (-1)^(n - #cycles).
int perm_sign(const std::vector<int>& v) {
    std::vector<bool> seen(v.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (size_t j = i; !seen[j]; j = size_t(v[j])) seen[j] = true;
    }
    return (v.size() - size_t(cycles)) % 2 == 0 ? 1 : -1;
}

struct BareissResult {
    int rank = 0;
    Int last_pivot = 1;
    std::vector<int> pivot_rows, pivot_cols;
};

// Fraction-free elimination on integer rows. Rows start as sparse maps and
// switch to dense storage once fill passes 50%. Every intermediate entry is a
// minor of the input, so the divisions are exact.
BareissResult bareiss(std::vector<std::map<int, Int>> rows, int ncols) {
    BareissResult res;
    const int nrows = int(rows.size());
    std::vector<bool> row_done(nrows, false), col_done(ncols, false);
    Int prev(1);

    std::vector<std::vector<Int>> dense;
    bool dense_mode = false;
    auto densify = [&]() {
        dense.assign(nrows, std::vector<Int>(ncols, 0));
        for (int r = 0; r < nrows; ++r)
            for (auto& [c, v] : rows[r]) dense[r][c] = v;
        dense_mode = true;
    };
    {
        size_t nnz = 0;
        for (auto& r : rows) nnz += r.size();
        if (nrows > 0 && ncols > 0 && double(nnz) > 0.5 * nrows * ncols) densify();
    }

    for (;;) {
        int pr = -1, pc = -1;
        if (!dense_mode) {
            // shortest live row first keeps fill-in down; ties by index
            size_t best = SIZE_MAX;
            for (int r = 0; r < nrows; ++r) {
                if (row_done[r] || rows[r].empty()) continue;
                int c = -1;
                for (auto& [cc, v] : rows[r])
                    if (!col_done[cc]) { c = cc; break; }
                if (c >= 0 && rows[r].size() < best) { best = rows[r].size(); pr = r; pc = c; }
            }
        } else {
            for (int r = 0; r < nrows && pr < 0; ++r) {
                if (row_done[r]) continue;
                for (int c = 0; c < ncols; ++c)
                    if (!col_done[c] && dense[r][c] != 0) { pr = r; pc = c; break; }
            }
        }
        if (pr < 0) break;

        Int p = dense_mode ? dense[pr][pc] : rows[pr][pc];
        res.rank++;
        res.pivot_rows.push_back(pr);
        res.pivot_cols.push_back(pc);
        row_done[pr] = true;
        col_done[pc] = true;

        if (!dense_mode) {
            for (int r = 0; r < nrows; ++r) {
                if (row_done[r] || rows[r].empty()) continue;
                auto it = rows[r].find(pc);
                Int f = (it == rows[r].end()) ? Int(0) : it->second;
                if (it != rows[r].end()) rows[r].erase(it);
                if (f == 0) {
                    for (auto& [c, v] : rows[r]) {
                        v *= p;
                        divexact(v, prev);
                    }
                } else {
                    std::map<int, Int> merged;
                    auto a = rows[r].begin();
                    auto b = rows[pr].begin();
                    while (a != rows[r].end() || b != rows[pr].end()) {
                        int ca = a != rows[r].end() ? a->first : INT32_MAX;
                        int cb = b != rows[pr].end() ? b->first : INT32_MAX;
                        int c = std::min(ca, cb);
                        Int v(0);
                        if (ca == c) { v += a->second * p; ++a; }
                        if (cb == c) { v -= f * b->second; ++b; }
                        if (c == pc || v == 0) continue;
                        divexact(v, prev);
                        merged[c] = std::move(v);
                    }
                    rows[r] = std::move(merged);
                }
            }
            size_t live = 0, cells = 0;
            for (int r = 0; r < nrows; ++r)
                if (!row_done[r]) { live += rows[r].size(); cells += size_t(ncols); }
            if (cells > 0 && double(live) > 0.5 * double(cells)) densify();
        } else {
            for (int r = 0; r < nrows; ++r) {
                if (row_done[r]) continue;
                Int f = dense[r][pc];
                for (int c = 0; c < ncols; ++c) {
                    if (col_done[c]) continue;
                    Int v = dense[r][c] * p - f * dense[pr][c];
                    divexact(v, prev);
                    dense[r][c] = std::move(v);
                }
                dense[r][pc] = 0;
            }
        }
        prev = p;
        res.last_pivot = p;
    }
    return res;
}

}  // namespace

Elimination eliminate(const RationalMatrix& m) {
    Elimination out;
    const int nr = m.rows(), nc = m.cols();
    const bool square = nr == nc;
    if (nr == 0 || nc == 0) {
        out.rank = 0;
        if (square) out.determinant = Rat(1);  // empty product convention
        return out;
    }

    // clear denominators rowwise; the determinant picks the scale back up
    std::vector<std::map<int, Int>> rows(nr);
    Rat scale(1);
    {
        std::vector<Int> rowlcm(nr, 1);
        for (const auto& [k, v] : m.entries())
            rowlcm[k.first] = lcm(rowlcm[k.first], Int(v.get_den()));
        for (const auto& [k, v] : m.entries())
            rows[k.first][k.second] = Int(v.get_num() * (rowlcm[k.first] / v.get_den()));
        if (square)
            for (int r = 0; r < nr; ++r) scale *= Rat(rowlcm[r]);
    }

    BareissResult res = bareiss(std::move(rows), nc);
    out.rank = res.rank;
    if (square) {
        if (res.rank < nr) {
            out.determinant = Rat(0);
        } else {
            int sgn = perm_sign(res.pivot_rows) * perm_sign(res.pivot_cols);
            Rat det = Rat(res.last_pivot) / scale;
            out.determinant = sgn > 0 ? det : Rat(-det);
        }
    }
    return out;
}

RationalMatrix invert(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: not square");
    const int n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (const auto& [k, v] : m.entries()) a[k.first][k.second] = v;
    for (int i = 0; i < n; ++i) a[i][n + i] = 1;

    int rank = 0;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][c] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(a[pr], a[rank]);
        Rat inv = Rat(1) / a[rank][c];
        for (int j = 0; j < 2 * n; ++j) a[rank][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rat f = a[r][c];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    if (rank < n) throw SingularMatrixError(n - rank);

    RationalMatrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (a[r][n + c] != 0) out.set(r, c, a[r][n + c]);
    return out;
}

int kernel_dimension(const RationalMatrix& m) {
    return m.cols() - eliminate(m).rank;
}

}  // namespace frobtk
