// Exact rational linear algebra: sparse matrices over Q with fraction-free
// elimination (rank, determinant), inversion and kernel dimension.
#pragma once

#include <gmpxx.h>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace frobtk {

using Int = mpz_class;
using Rat = mpq_class;

std::string rat_str(const Rat& q);
Rat rat_parse(const std::string& s);

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(int kernel_dim);
    int kernel_dim;
};

/// Sparse rational matrix; absent entries are zero, stored entries nonzero.
class RationalMatrix {
public:
    using Key = std::pair<int, int>;

    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int r, int c) const;
    void set(int r, int c, const Rat& v);
    void add(int r, int c, const Rat& v);

    const std::map<Key, Rat>& entries() const { return m_; }
    bool integral() const;
    double fill() const;

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix operator-() const;
    bool operator==(const RationalMatrix& other) const;

private:
    int rows_ = 0, cols_ = 0;
    std::map<Key, Rat> m_;
};

struct Elimination {
    int rank = 0;
    std::optional<Rat> determinant;  // present iff the input was square
};

/// Exact rank (and determinant when square) by fraction-free elimination.
Elimination eliminate(const RationalMatrix& m);

/// Exact inverse of a nonsingular square matrix.
/// Throws SingularMatrixError carrying the kernel dimension otherwise.
RationalMatrix invert(const RationalMatrix& m);

/// cols - rank.
int kernel_dimension(const RationalMatrix& m);

}  // namespace frobtk
