#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace redei8 {

// Number-theoretic symbols, all with values in {+1, -1}, plus the
// translation xi into F_2 (xi(+1) = 0, xi(-1) = 1).

enum class Sign : int {
    plus = +1,
    minus = -1,
};

constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::plus : Sign::minus;
}

constexpr Sign sign_pow(Sign s, std::uint64_t e) {
    return (e & 1) ? s : Sign::plus;
}

constexpr int sign_value(Sign s) { return static_cast<int>(s); }

constexpr unsigned xi(Sign s) { return s == Sign::plus ? 0u : 1u; }

// 128-bit-safe modular arithmetic, valid for any modulus < 2^64.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin, correct for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Jacobi symbol (a | n) for odd n > 0; a may be negative (it is reduced
// mod n first). Returns nullopt when gcd(a, n) > 1.
std::optional<Sign> jacobi(std::int64_t a, std::uint64_t n);

// Rational quartic residue symbol (a | D)_4 = prod_p (a | p)_4 over the
// given factorization of D. Every factor must be a prime = 1 (mod 4),
// the factors distinct with product D, gcd(a, D) = 1 and (a | p) = +1
// for each factor; violations throw std::domain_error.
Sign quartic_symbol(std::int64_t a, std::uint64_t d,
                    const std::vector<std::uint64_t> &factors);

// Hilbert symbol (a, b)_p at an odd prime p, via the closed form
// (-1)^((p-1)/2 * alpha * beta) (a'|p)^beta (b'|p)^alpha where
// a = p^alpha a', b = p^beta b'. Throws if a or b is zero.
Sign hilbert_odd(std::int64_t a, std::int64_t b, std::uint64_t p);

} // namespace redei8
