#include "redei8/symbols.hpp"

#include <numeric>
#include <stdexcept>

namespace redei8 {

namespace {

// a mod n as a residue in [0, n), valid for every n > 0 including n > 2^63.
std::uint64_t residue_mod(std::int64_t a, std::uint64_t n) {
    if (a >= 0)
        return static_cast<std::uint64_t>(a) % n;
    std::uint64_t mag = static_cast<std::uint64_t>(-(a + 1)) + 1;
    std::uint64_t r = mag % n;
    return r == 0 ? 0 : n - r;
}

} // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1)
        return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for every n < 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::optional<Sign> jacobi(std::int64_t a, std::uint64_t n) {
    if (n == 0 || (n & 1) == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    std::uint64_t x = residue_mod(a, n);
    std::uint64_t y = n;
    int sign = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            if (y % 8 == 3 || y % 8 == 5)
                sign = -sign;
        }
        std::swap(x, y);
        if (x % 4 == 3 && y % 4 == 3)
            sign = -sign;
        x %= y;
    }
    if (y != 1)
        return std::nullopt;
    return sign == 1 ? Sign::plus : Sign::minus;
}

Sign quartic_symbol(std::int64_t a, std::uint64_t d,
                    const std::vector<std::uint64_t> &factors) {
    std::uint64_t prod = 1;
    for (std::uint64_t p : factors) {
        if (p % 4 != 1 || !is_prime(p))
            throw std::domain_error("quartic_symbol: factors must be primes = 1 (mod 4)");
        if (prod > d / p)
            throw std::domain_error("quartic_symbol: factor product exceeds D");
        prod *= p;
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i] == factors[j])
                throw std::domain_error("quartic_symbol: repeated factor");
    if (prod != d)
        throw std::domain_error("quartic_symbol: factorization does not match D");

    Sign result = Sign::plus;
    for (std::uint64_t p : factors) {
        std::uint64_t r = residue_mod(a, p);
        if (r == 0)
            throw std::domain_error("quartic_symbol: gcd(a, D) > 1");
        if (powmod(r, (p - 1) / 2, p) != 1)
            throw std::domain_error("quartic_symbol: a is not a quadratic residue mod a factor");
        std::uint64_t v = powmod(r, (p - 1) / 4, p);
        if (v == p - 1)
            result = result * Sign::minus;
        else if (v != 1)
            throw std::logic_error("quartic_symbol: fourth-power map left {+1,-1}");
    }
    return result;
}

Sign hilbert_odd(std::int64_t a, std::int64_t b, std::uint64_t p) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("hilbert_odd: arguments must be nonzero");
    if (p < 3 || (p & 1) == 0 || !is_prime(p))
        throw std::invalid_argument("hilbert_odd: p must be an odd prime");

    auto split = [&](std::int64_t v, std::int64_t &unit) {
        unsigned alpha = 0;
        if (p <= static_cast<std::uint64_t>(INT64_MAX)) {
            auto sp = static_cast<std::int64_t>(p);
            while (v % sp == 0) {
                v /= sp;
                ++alpha;
            }
        }
        unit = v;
        return alpha;
    };
    std::int64_t au = 0, bu = 0;
    unsigned alpha = split(a, au);
    unsigned beta = split(b, bu);

    Sign result = Sign::plus;
    if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1)
        result = result * Sign::minus;
    if (beta & 1)
        result = result * jacobi(au, p).value();
    if (alpha & 1)
        result = result * jacobi(bu, p).value();
    return result;
}

} // namespace redei8
