#include "arith/int_matrix.hpp"

#include <sstream>

#include "arith/error.hpp"

namespace arith {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InvalidGeneralizedGraph: return "InvalidGeneralizedGraph";
        case ErrorKind::NotZMatrix: return "NotZMatrix";
        case ErrorKind::KernelMismatch: return "KernelMismatch";
        case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorKind::ReducibleMatrix: return "ReducibleMatrix";
        case ErrorKind::NotAStructure: return "NotAStructure";
        case ErrorKind::NotAClique: return "NotAClique";
        case ErrorKind::ZeroX: return "ZeroX";
        case ErrorKind::NonPositivePQ: return "NonPositivePQ";
        case ErrorKind::IntegralityViolation: return "IntegralityViolation";
        case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
        case ErrorKind::PreconditionViolation: return "PreconditionViolation";
        case ErrorKind::AffineResidueNotConstant: return "AffineResidueNotConstant";
        case ErrorKind::BasisExpressionFailure: return "BasisExpressionFailure";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::FileError: return "FileError";
        case ErrorKind::InvalidMatrix: return "InvalidMatrix";
        case ErrorKind::UnknownTable: return "UnknownTable";
    }
    return "Unknown";
}

IntVector make_vector(std::initializer_list<long> values) {
    IntVector v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return v;
}

IntVector ones(std::size_t n) { return IntVector(n, Integer(1)); }

Integer gcd_of(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Integer lcm_of(std::span<const Integer> v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_mpz_t());
    return l;
}

Integer sum_of(std::span<const Integer> v) {
    Integer s = 0;
    for (const auto& x : v) s += x;
    return s;
}

bool all_positive(std::span<const Integer> v) {
    for (const auto& x : v)
        if (sgn(x) <= 0) return false;
    return true;
}

bool is_primitive(std::span<const Integer> v) { return gcd_of(v) == 1; }

std::string to_string(std::span<const Integer> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ')';
    return os.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> diag) {
    IntMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::principal(std::span<const std::size_t> idx) const {
    IntMatrix p(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) p(i, j) = (*this)(idx[i], idx[j]);
    return p;
}

IntMatrix IntMatrix::permuted(std::span<const std::size_t> perm) const {
    if (!is_square() || perm.size() != rows_)
        throw Error(ErrorKind::DimensionMismatch, "permutation size differs from matrix size");
    return principal(perm);
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (sgn(factor) == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (sgn(factor) == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    IntVector out(a.rows_, Integer(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << arith::to_string(std::span<const Integer>(data_.data() + i * cols_, cols_));
    }
    os << ']';
    return os.str();
}

IntMatrix block(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
        throw Error(ErrorKind::DimensionMismatch, "incompatible blocks");
    IntMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) m(a.rows() + i, j) = c(i, j);
        for (std::size_t j = 0; j < d.cols(); ++j) m(a.rows() + i, c.cols() + j) = d(i, j);
    }
    return m;
}

IntMatrix column_matrix(std::span<const Integer> v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

IntMatrix row_matrix(std::span<const Integer> v) {
    IntMatrix m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
    return m;
}

IntMatrix outer(std::span<const Integer> u, std::span<const Integer> v) {
    IntMatrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
    return m;
}

}  // namespace arith
