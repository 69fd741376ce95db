#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "redei8/gf2.hpp"
#include "redei8/quadform.hpp"

namespace redei8 {

// Field-specific pipeline for Q(sqrt(-p_1...p_t)) with p_i = 1 (mod 4)
// for i < t and p_t = 3 (mod 4): the Redei matrix M_4 and the 4-rank,
// the kernel V_0 as divisors, the bilinear form built from Diophantine
// square roots, and the exact 8-rank with its predicted nullity set.

inline constexpr std::int64_t kDefaultMaxAbsDelta = std::int64_t{1} << 31;

// Squarefree positive divisor of p_1...p_{t-1}, encoded as a bitmask
// over the prime indices 1..t-1. Divisor addition is mask XOR.
struct Divisor {
    std::uint32_t mask = 0;
    std::uint64_t value = 1;

    bool operator==(const Divisor &other) const = default;
};

class FieldSpec {
public:
    // Validates: all prime, distinct, p_i = 1 (mod 4) for i < t,
    // p_t = 3 (mod 4), |delta| within bound. Throws std::invalid_argument.
    static FieldSpec validate(std::vector<std::uint64_t> primes,
                              std::int64_t max_abs_delta = kDefaultMaxAbsDelta);

    int t() const { return static_cast<int>(primes_.size()); }
    const std::vector<std::uint64_t> &primes() const { return primes_; }
    std::int64_t delta() const { return delta_; }

    // Divisor of p_1...p_{t-1} selected by the mask bits.
    Divisor divisor(std::uint32_t mask) const;
    Divisor divisor(const BitVector &v) const;
    std::vector<std::uint64_t> divisor_factors(const Divisor &d) const;

private:
    std::vector<std::uint64_t> primes_;
    std::int64_t delta_ = 0;
};

struct RedeiData {
    BitMatrix m4; // (t-1) x (t-1), symmetric
    int r2 = 0;   // t - 1
    int r4 = 0;   // t - 1 - rank(M_4)
    std::vector<Divisor> v0_basis;
};

struct PrimitiveSolution {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t z = 0;
};

struct EightRankReport {
    QuadForm qb;      // Q_B on F_2^(r4), coordinates = v0_basis
    BitMatrix b_matrix;
    int r4 = 0;
    int r8 = 0;       // r4 - rank(b_matrix)
    int rho = 0;
    std::set<int> predicted;
    std::uint64_t zero_count = 0;
    int log2_zero_bound = 0;
};

// M_4 with entry (i, j) = xi((p_i, delta)_{p_j}).
BitMatrix redei_matrix(const FieldSpec &f);

RedeiData four_rank(const FieldSpec &f);

// Whether xi((D, delta)_{p_j}) = 0 for every j < t, i.e. D lies in V_0.
bool in_v0(const FieldSpec &f, const Divisor &d);

// Q_B(D) = xi((delta/D | D)_4); 0 for D = 1. D must lie in V_0.
unsigned qb_quartic(const FieldSpec &f, const Divisor &d);

// Smallest positive primitive solution of x^2 = delta y^2 + 4 a z^2,
// searched with z ascending then y ascending. The search stops at
// z = floor(sqrt(|delta| / 3)) + 1 (the norm bound for reduced ideals)
// and throws std::runtime_error beyond it.
PrimitiveSolution find_primitive_solution(std::int64_t delta, std::uint64_t a);

// All primitive solutions within the same bound (for well-definedness
// checks), capped at max_count.
std::vector<PrimitiveSolution> find_primitive_solutions(std::int64_t delta,
                                                        std::uint64_t a,
                                                        std::size_t max_count);

// B(row, col) = xi(prod_{p | col} (z, delta)_p) for the solution of the
// row divisor's square-root equation.
unsigned b_entry(const FieldSpec &f, const Divisor &row, const Divisor &col);

EightRankReport eight_rank_report(const FieldSpec &f);
EightRankReport eight_rank_report(const FieldSpec &f, const RedeiData &rd);

} // namespace redei8
