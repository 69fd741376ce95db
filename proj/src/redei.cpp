#include "redei8/redei.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "redei8/symbols.hpp"

namespace redei8 {

FieldSpec FieldSpec::validate(std::vector<std::uint64_t> primes, std::int64_t max_abs_delta) {
    if (primes.empty())
        throw std::invalid_argument("FieldSpec: need at least one prime");
    if (primes.size() > 31)
        throw std::invalid_argument("FieldSpec: too many primes");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i]))
            throw std::invalid_argument("FieldSpec: " + std::to_string(primes[i]) + " is not prime");
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j])
                throw std::invalid_argument("FieldSpec: repeated prime " + std::to_string(primes[i]));
    }
    for (std::size_t i = 0; i + 1 < primes.size(); ++i)
        if (primes[i] % 4 != 1)
            throw std::invalid_argument("FieldSpec: p_" + std::to_string(i + 1) + " = " +
                                        std::to_string(primes[i]) + " must be 1 (mod 4)");
    if (primes.back() % 4 != 3)
        throw std::invalid_argument("FieldSpec: the final prime must be 3 (mod 4)");

    if (max_abs_delta <= 0)
        throw std::invalid_argument("FieldSpec: bound must be positive");
    unsigned __int128 prod = 1;
    for (std::uint64_t p : primes) {
        prod *= p;
        if (prod > static_cast<unsigned __int128>(max_abs_delta))
            throw std::invalid_argument("FieldSpec: |delta| exceeds the configured bound");
    }

    FieldSpec f;
    f.primes_ = std::move(primes);
    f.delta_ = -static_cast<std::int64_t>(prod);
    return f;
}

Divisor FieldSpec::divisor(std::uint32_t mask) const {
    if (t() >= 1 && (mask >> (t() - 1)) != 0)
        throw std::invalid_argument("FieldSpec: divisor mask out of range");
    Divisor d;
    d.mask = mask;
    for (int i = 0; i + 1 < t(); ++i)
        if ((mask >> i) & 1u)
            d.value *= primes_[i];
    return d;
}

Divisor FieldSpec::divisor(const BitVector &v) const {
    if (v.dim() != t() - 1)
        throw std::invalid_argument("FieldSpec: divisor vector has wrong dimension");
    return divisor(static_cast<std::uint32_t>(v.mask()));
}

std::vector<std::uint64_t> FieldSpec::divisor_factors(const Divisor &d) const {
    std::vector<std::uint64_t> out;
    for (int i = 0; i + 1 < t(); ++i)
        if ((d.mask >> i) & 1u)
            out.push_back(primes_[i]);
    return out;
}

BitMatrix redei_matrix(const FieldSpec &f) {
    int m = f.t() - 1;
    BitMatrix m4(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Sign s = hilbert_odd(static_cast<std::int64_t>(f.primes()[i]), f.delta(), f.primes()[j]);
            m4.set(i, j, xi(s) != 0);
        }
    return m4;
}

RedeiData four_rank(const FieldSpec &f) {
    RedeiData rd;
    rd.m4 = redei_matrix(f);
    rd.r2 = f.t() - 1;
    rd.r4 = rd.r2 - rank(rd.m4);
    for (const BitVector &v : kernel_basis(rd.m4))
        rd.v0_basis.push_back(f.divisor(v));
    return rd;
}

bool in_v0(const FieldSpec &f, const Divisor &d) {
    if (d.mask == 0)
        return true;
    for (int j = 0; j + 1 < f.t(); ++j) {
        Sign s = hilbert_odd(static_cast<std::int64_t>(d.value), f.delta(), f.primes()[j]);
        if (xi(s) != 0)
            return false;
    }
    return true;
}

unsigned qb_quartic(const FieldSpec &f, const Divisor &d) {
    if (!in_v0(f, d))
        throw std::domain_error("qb_quartic: divisor is not in V_0");
    if (d.mask == 0)
        return 0;
    std::int64_t a = f.delta() / static_cast<std::int64_t>(d.value);
    return xi(quartic_symbol(a, d.value, f.divisor_factors(d)));
}

namespace {

bool perfect_square_root(std::uint64_t v, std::uint64_t &root) {
    if (v == 0) {
        root = 0;
        return true;
    }
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    root = r;
    return r * r == v;
}

std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    auto g = [](std::uint64_t x, std::uint64_t y) {
        while (y) {
            x %= y;
            std::swap(x, y);
        }
        return x;
    };
    return g(g(a, b), c);
}

template <typename Fn>
void scan_primitive_solutions(std::int64_t delta, std::uint64_t a, Fn &&visit) {
    if (delta >= 0 || a == 0)
        throw std::invalid_argument("primitive solution search: need delta < 0, a > 0");
    std::uint64_t abs_delta = static_cast<std::uint64_t>(-delta);
    std::uint64_t third = abs_delta / 3;
    std::uint64_t zb = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(third)));
    while (zb > 0 && zb * zb > third)
        --zb;
    while ((zb + 1) * (zb + 1) <= third)
        ++zb;
    std::uint64_t z_bound = zb + 1;

    for (std::uint64_t z = 1; z <= z_bound; ++z) {
        std::uint64_t rhs0 = 4 * a * z * z;
        for (std::uint64_t y = 0; abs_delta * y * y <= rhs0; ++y) {
            std::uint64_t s = rhs0 - abs_delta * y * y;
            std::uint64_t x = 0;
            if (!perfect_square_root(s, x) || x == 0)
                continue;
            if (gcd3(x, y, z) != 1)
                continue;
            if (!visit(PrimitiveSolution{x, y, z}))
                return;
        }
    }
}

} // namespace

PrimitiveSolution find_primitive_solution(std::int64_t delta, std::uint64_t a) {
    PrimitiveSolution found{};
    bool have = false;
    scan_primitive_solutions(delta, a, [&](const PrimitiveSolution &s) {
        found = s;
        have = true;
        return false;
    });
    if (!have)
        throw std::runtime_error("find_primitive_solution: no primitive solution of x^2 = " +
                                 std::to_string(delta) + " y^2 + 4*" + std::to_string(a) +
                                 " z^2 within the z bound; the divisor is not in V_0 or this is a bug");
    return found;
}

std::vector<PrimitiveSolution> find_primitive_solutions(std::int64_t delta, std::uint64_t a,
                                                        std::size_t max_count) {
    std::vector<PrimitiveSolution> out;
    scan_primitive_solutions(delta, a, [&](const PrimitiveSolution &s) {
        out.push_back(s);
        return out.size() < max_count;
    });
    return out;
}

unsigned b_entry(const FieldSpec &f, const Divisor &row, const Divisor &col) {
    PrimitiveSolution sol = find_primitive_solution(f.delta(), row.value);
    unsigned acc = 0;
    for (std::uint64_t p : f.divisor_factors(col))
        acc ^= xi(hilbert_odd(static_cast<std::int64_t>(sol.z), f.delta(), p));
    return acc;
}

EightRankReport eight_rank_report(const FieldSpec &f) {
    return eight_rank_report(f, four_rank(f));
}

EightRankReport eight_rank_report(const FieldSpec &f, const RedeiData &rd) {
    EightRankReport rep;
    rep.r4 = rd.r4;
    rep.b_matrix = BitMatrix(rd.r4, rd.r4);
    for (int i = 0; i < rd.r4; ++i) {
        // One square-root solution per row divisor serves the whole row.
        PrimitiveSolution sol = find_primitive_solution(f.delta(), rd.v0_basis[i].value);
        for (int j = 0; j < rd.r4; ++j) {
            unsigned acc = 0;
            for (std::uint64_t p : f.divisor_factors(rd.v0_basis[j]))
                acc ^= xi(hilbert_odd(static_cast<std::int64_t>(sol.z), f.delta(), p));
            rep.b_matrix.set(i, j, acc != 0);
        }
    }
    rep.r8 = rd.r4 - rank(rep.b_matrix);
    rep.qb = QuadForm::induced_by(rep.b_matrix);

    Classification c = classify(rep.qb);
    rep.rho = c.rho;
    rep.zero_count = c.zero_count;
    rep.log2_zero_bound = std::bit_width(c.zero_count) - 1;
    bool is_x = (c.n == 2 && c.rank == 2 && c.type == FormType::type2_1);
    rep.predicted = nullity_set(c.rho, c.n, is_x);
    return rep;
}

} // namespace redei8
