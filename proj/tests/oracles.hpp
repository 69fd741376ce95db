#pragma once

// Test-only oracles. These stay independent of the library code paths
// they are used to check.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace test_oracles {

// Decides whether z^2 = a x^2 + b y^2 has a solution mod p^3 with
// (x, y, z) not all divisible by p. For odd p and p-adic valuations of
// a and b at most 1 this is equivalent to Q_p-solvability: a primitive
// solution mod p^3 Hensel-lifts because the gradient has valuation <= 1
// there. Scaling the unit coordinate to 1 leaves three one-dimensional
// scans over precomputed square tables.
class HilbertSolvabilityOracle {
public:
    explicit HilbertSolvabilityOracle(std::uint64_t p)
        : p_(p), p2_(p * p), p3_(p * p * p), sq2_(p2_, 0), sq3_(p3_, 0) {
        for (std::uint64_t x = 0; x < p2_; ++x)
            sq2_[x * x % p2_] = 1;
        for (std::uint64_t x = 0; x < p3_; ++x)
            sq3_[x * x % p3_] = 1;
    }

    bool solvable(std::int64_t a, std::int64_t b) const {
        if (valuation(a) > 1 || valuation(b) > 1)
            throw std::invalid_argument("solvability oracle: valuation must be <= 1");
        std::uint64_t ar = residue(a, p3_);
        std::uint64_t br = residue(b, p3_);

        // z unit, scaled to z = 1: a x^2 + b y^2 = 1
        for (std::uint64_t y = 0; y < p3_; ++y) {
            std::uint64_t w = (1 + p3_ - br * (y * y % p3_) % p3_) % p3_;
            if (scaled_square(a, w))
                return true;
        }
        // x unit, scaled to x = 1: z^2 - b y^2 = a
        for (std::uint64_t y = 0; y < p3_; ++y) {
            std::uint64_t w = (ar + br * (y * y % p3_)) % p3_;
            if (sq3_[w])
                return true;
        }
        // y unit, scaled to y = 1: z^2 - a x^2 = b
        for (std::uint64_t x = 0; x < p3_; ++x) {
            std::uint64_t w = (br + ar * (x * x % p3_)) % p3_;
            if (sq3_[w])
                return true;
        }
        return false;
    }

private:
    std::uint64_t p_, p2_, p3_;
    std::vector<char> sq2_, sq3_;

    static std::uint64_t residue(std::int64_t v, std::uint64_t m) {
        std::int64_t r = v % static_cast<std::int64_t>(m);
        if (r < 0)
            r += static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(r);
    }

    int valuation(std::int64_t v) const {
        int k = 0;
        while (v % static_cast<std::int64_t>(p_) == 0) {
            v /= static_cast<std::int64_t>(p_);
            ++k;
        }
        return k;
    }

    std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m) const {
        // m is p^2 or p^3; phi(p^k) = p^k - p^(k-1)
        std::uint64_t phi = m - m / p_;
        std::uint64_t r = 1, base = x % m, e = phi - 1;
        while (e) {
            if (e & 1)
                r = r * base % m;
            base = base * base % m;
            e >>= 1;
        }
        return r;
    }

    // exists x with coeff * x^2 = w (mod p^3)?
    bool scaled_square(std::int64_t coeff, std::uint64_t w) const {
        if (w == 0)
            return true;
        if (valuation(coeff) == 0) {
            std::uint64_t inv = inverse_mod(residue(coeff, p3_), p3_);
            return sq3_[inv * w % p3_] != 0;
        }
        // coeff = p * u: p u x^2 = w (mod p^3) iff p | w and
        // u x^2 = w / p (mod p^2)
        if (w % p_ != 0)
            return false;
        std::uint64_t u = residue(coeff / static_cast<std::int64_t>(p_), p2_);
        std::uint64_t inv = inverse_mod(u, p2_);
        return sq2_[inv * (w / p_ % p2_) % p2_] != 0;
    }
};

} // namespace test_oracles
