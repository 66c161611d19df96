#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace arith {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
IntVector ones(std::size_t n);

Integer gcd_of(std::span<const Integer> v);
Integer lcm_of(std::span<const Integer> v);
Integer sum_of(std::span<const Integer> v);
bool all_positive(std::span<const Integer> v);
bool is_primitive(std::span<const Integer> v);
std::string to_string(std::span<const Integer> v);

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Most of the library works with square matrices; rectangular shapes exist
/// for the intermediate lattice matrices of the critical-group quotient and
/// for Hermite/Smith forms of non-square inputs. Square-only operations
/// check `is_square()` themselves.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : IntMatrix(n, n) {}
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::span<const Integer> diag);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    // Dimension of a square matrix.
    std::size_t size() const noexcept { return rows_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;

    IntMatrix transpose() const;
    // Principal submatrix on the given sorted index set.
    IntMatrix principal(std::span<const std::size_t> idx) const;
    // Simultaneous row/column permutation: result(i, j) = (*this)(perm[i], perm[j]).
    IntMatrix permuted(std::span<const std::size_t> perm) const;

    bool is_zero() const;
    bool is_symmetric() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, std::span<const Integer> v);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// Block matrix [[a, b], [c, d]].
IntMatrix block(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d);
IntMatrix column_matrix(std::span<const Integer> v);
IntMatrix row_matrix(std::span<const Integer> v);
IntMatrix outer(std::span<const Integer> u, std::span<const Integer> v);

}  // namespace arith
