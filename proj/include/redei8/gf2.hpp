#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace redei8 {

// Dense F_2 linear algebra. Every dimension in this project is tiny
// (t <= ~20 primes, r4 <= ~10), so vectors fit in one machine word and
// matrices are arrays of word-packed rows.

inline constexpr int kMaxGF2Dim = 64;

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int n);
    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_mask(int n, std::uint64_t mask);

    int dim() const { return n_; }
    bool get(int i) const;
    void set(int i, bool value);
    std::uint64_t mask() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    BitVector &operator^=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    std::string to_string() const;

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);
    static BitMatrix identity(int n);
    static BitMatrix from_rows(const std::vector<std::vector<int>> &rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const;
    void set(int i, int j, bool value);
    std::uint64_t row_mask(int i) const;
    BitVector row(int i) const;
    BitVector col(int j) const;

    BitMatrix transposed() const;
    bool operator==(const BitMatrix &other) const = default;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint64_t> row_words_;

    void check_cell(int i, int j) const;
};

// Rank over F_2 by Gaussian elimination. rank(M) + nullity(M) == cols.
int rank(const BitMatrix &m);
int nullity(const BitMatrix &m);

// Canonical basis of the right kernel, read off the reduced row-echelon
// form and ordered by ascending pivot-free column index. Deterministic,
// so downstream divisor bases do not depend on elimination order.
std::vector<BitVector> kernel_basis(const BitMatrix &m);

BitVector matvec(const BitMatrix &m, const BitVector &v);
BitMatrix matmul(const BitMatrix &a, const BitMatrix &b);

bool is_symmetric(const BitMatrix &m);
// Symmetric with zero diagonal.
bool is_alternating(const BitMatrix &m);

} // namespace redei8
