#include "redei8/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace redei8 {

namespace {

void check_dim(int n) {
    if (n < 0 || n > kMaxGF2Dim)
        throw std::invalid_argument("gf2: dimension out of range [0, 64]");
}

} // namespace

BitVector::BitVector(int n) : n_(n) {
    check_dim(n);
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(static_cast<int>(bits.size()));
    int i = 0;
    for (int b : bits)
        v.set(i++, b != 0);
    return v;
}

BitVector BitVector::from_mask(int n, std::uint64_t mask) {
    check_dim(n);
    BitVector v(n);
    if (n < 64 && (mask >> n) != 0)
        throw std::invalid_argument("BitVector: mask has bits beyond dimension");
    v.bits_ = mask;
    return v;
}

bool BitVector::get(int i) const {
    if (i < 0 || i >= n_)
        throw std::out_of_range("BitVector: coordinate out of range");
    return (bits_ >> i) & 1u;
}

void BitVector::set(int i, bool value) {
    if (i < 0 || i >= n_)
        throw std::out_of_range("BitVector: coordinate out of range");
    if (value)
        bits_ |= std::uint64_t{1} << i;
    else
        bits_ &= ~(std::uint64_t{1} << i);
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (n_ != other.n_)
        throw std::invalid_argument("BitVector: dimension mismatch");
    bits_ ^= other.bits_;
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector r = *this;
    r ^= other;
    return r;
}

std::string BitVector::to_string() const {
    std::string s;
    s.reserve(n_);
    for (int i = 0; i < n_; ++i)
        s.push_back(get(i) ? '1' : '0');
    return s;
}

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_words_(rows, 0) {
    check_dim(rows);
    check_dim(cols);
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>> &rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    BitMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("BitMatrix: ragged rows");
        for (int j = 0; j < c; ++j)
            m.set(i, j, rows[i][j] != 0);
    }
    return m;
}

void BitMatrix::check_cell(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("BitMatrix: index out of range");
}

bool BitMatrix::get(int i, int j) const {
    check_cell(i, j);
    return (row_words_[i] >> j) & 1u;
}

void BitMatrix::set(int i, int j, bool value) {
    check_cell(i, j);
    if (value)
        row_words_[i] |= std::uint64_t{1} << j;
    else
        row_words_[i] &= ~(std::uint64_t{1} << j);
}

std::uint64_t BitMatrix::row_mask(int i) const {
    if (i < 0 || i >= rows_)
        throw std::out_of_range("BitMatrix: row out of range");
    return row_words_[i];
}

BitVector BitMatrix::row(int i) const {
    return BitVector::from_mask(cols_, row_mask(i));
}

BitVector BitMatrix::col(int j) const {
    if (j < 0 || j >= cols_)
        throw std::out_of_range("BitMatrix: column out of range");
    BitVector v(rows_);
    for (int i = 0; i < rows_; ++i)
        v.set(i, get(i, j));
    return v;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.set(j, i, get(i, j));
    return t;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            s.push_back(get(i, j) ? '1' : '0');
        if (i + 1 < rows_)
            s.push_back('\n');
    }
    return s;
}

namespace {

struct Echelon {
    std::vector<std::uint64_t> rows; // reduced row-echelon form
    std::vector<int> pivot_cols;     // ascending
};

Echelon rref(const BitMatrix &m) {
    Echelon e;
    e.rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        e.rows.push_back(m.row_mask(i));

    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        int found = -1;
        for (int r = pivot_row; r < m.rows(); ++r) {
            if ((e.rows[r] >> col) & 1u) {
                found = r;
                break;
            }
        }
        if (found < 0)
            continue;
        std::swap(e.rows[pivot_row], e.rows[found]);
        for (int r = 0; r < m.rows(); ++r) {
            if (r != pivot_row && ((e.rows[r] >> col) & 1u))
                e.rows[r] ^= e.rows[pivot_row];
        }
        e.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return e;
}

} // namespace

int rank(const BitMatrix &m) {
    return static_cast<int>(rref(m).pivot_cols.size());
}

int nullity(const BitMatrix &m) {
    return m.cols() - rank(m);
}

std::vector<BitVector> kernel_basis(const BitMatrix &m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols)
        is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col])
            continue;
        BitVector v(m.cols());
        v.set(free_col, true);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
            if ((e.rows[r] >> free_col) & 1u)
                v.set(e.pivot_cols[r], true);
        }
        basis.push_back(v);
    }
    return basis;
}

BitVector matvec(const BitMatrix &m, const BitVector &v) {
    if (v.dim() != m.cols())
        throw std::invalid_argument("matvec: dimension mismatch");
    BitVector out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        out.set(i, std::popcount(m.row_mask(i) & v.mask()) & 1);
    return out;
}

BitMatrix matmul(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: dimension mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        for (int k = 0; k < a.cols(); ++k)
            if (a.get(i, k))
                acc ^= b.row_mask(k);
        for (int j = 0; j < b.cols(); ++j)
            out.set(i, j, (acc >> j) & 1u);
    }
    return out;
}

bool is_symmetric(const BitMatrix &m) {
    if (m.rows() != m.cols())
        return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m.get(i, j) != m.get(j, i))
                return false;
    return true;
}

bool is_alternating(const BitMatrix &m) {
    if (!is_symmetric(m))
        return false;
    for (int i = 0; i < m.rows(); ++i)
        if (m.get(i, i))
            return false;
    return true;
}

} // namespace redei8
