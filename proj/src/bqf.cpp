#include "redei8/bqf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace redei8 {

namespace {

using i128 = __int128;

std::int64_t gcd_ll(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

// g = a*x + b*y
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t &x, std::int64_t &y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    std::int64_t x1 = 0, y1 = 0;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

void check_discriminant(std::int64_t delta) {
    if (delta >= 0)
        throw std::invalid_argument("bqf: discriminant must be negative");
    std::int64_t r = ((delta % 4) + 4) % 4;
    if (r != 1)
        throw std::invalid_argument("bqf: discriminant must be 1 (mod 4)");
}

} // namespace

BQForm bqf_identity(std::int64_t delta) {
    check_discriminant(delta);
    return BQForm{1, 1, (1 - delta) / 4};
}

BQForm bqf_reduce(BQForm f) {
    if (f.a <= 0)
        throw std::invalid_argument("bqf_reduce: form must be positive definite");
    std::int64_t delta = f.discriminant();
    for (;;) {
        // normalize: b into (-a, a]
        std::int64_t two_a = 2 * f.a;
        std::int64_t r = ((f.b % two_a) + two_a) % two_a;
        if (r > f.a)
            r -= two_a;
        f.b = r;
        f.c = (f.b * f.b - delta) / (4 * f.a);
        if (f.a > f.c) {
            f = BQForm{f.c, -f.b, f.a};
            continue;
        }
        if (f.a == f.c && f.b < 0)
            f.b = -f.b;
        break;
    }
    return f;
}

BQForm bqf_inverse(const BQForm &f) {
    return bqf_reduce(BQForm{f.a, -f.b, f.c});
}

BQForm compose(const BQForm &f, const BQForm &g, std::int64_t delta) {
    check_discriminant(delta);
    if (f.discriminant() != delta || g.discriminant() != delta)
        throw std::invalid_argument("compose: discriminant mismatch");

    std::int64_t s = (f.b + g.b) / 2;

    // d = lam1*a1 + lam2*a2 + lam3*s
    std::int64_t x12 = 0, y12 = 0;
    std::int64_t g12 = ext_gcd(f.a, g.a, x12, y12);
    std::int64_t u = 0, w = 0;
    std::int64_t d = ext_gcd(g12, s, u, w);
    std::int64_t lam1 = u * x12, lam2 = u * y12, lam3 = w;

    std::int64_t a3 = (f.a / d) * (g.a / d);

    i128 t = static_cast<i128>(lam1) * f.a * g.b + static_cast<i128>(lam2) * g.a * f.b +
             static_cast<i128>(lam3) * ((static_cast<i128>(f.b) * g.b + delta) / 2);
    if (t % d != 0)
        throw std::logic_error("compose: Bezout combination is not divisible by d");
    i128 b3_raw = t / d;
    std::int64_t two_a3 = 2 * a3;
    std::int64_t b3 = static_cast<std::int64_t>(((b3_raw % two_a3) + two_a3) % two_a3);

    i128 c_num = static_cast<i128>(b3) * b3 - delta;
    if (c_num % (4 * static_cast<i128>(a3)) != 0)
        throw std::logic_error("compose: composed b does not satisfy the discriminant congruence");
    std::int64_t c3 = static_cast<std::int64_t>(c_num / (4 * static_cast<i128>(a3)));

    BQForm out = bqf_reduce(BQForm{a3, b3, c3});
    if (gcd_ll(gcd_ll(out.a, out.b), out.c) != 1)
        throw std::logic_error("compose: composed form is imprimitive");
    return out;
}

std::vector<BQForm> reduced_forms(std::int64_t delta) {
    check_discriminant(delta);
    std::vector<BQForm> out;
    for (std::int64_t a = 1; 3 * a * a <= -delta; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (((b - delta) & 1) != 0)
                continue; // b must match the discriminant's parity (odd here)
            std::int64_t num = b * b - delta;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (c < a)
                continue;
            if (a == c && b < 0)
                continue;
            if (gcd_ll(gcd_ll(a, b), c) != 1)
                continue;
            out.push_back(BQForm{a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassGroupTable ClassGroupTable::build(std::int64_t delta) {
    ClassGroupTable t;
    t.delta_ = delta;
    t.forms_ = reduced_forms(delta);
    std::size_t h = t.forms_.size();

    std::map<BQForm, std::size_t> index;
    for (std::size_t i = 0; i < h; ++i)
        index[t.forms_[i]] = i;

    BQForm one = bqf_identity(delta);
    auto it = index.find(bqf_reduce(one));
    if (it == index.end())
        throw std::logic_error("ClassGroupTable: identity form missing");
    t.identity_ = it->second;

    t.table_.assign(h * h, 0);
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = i; j < h; ++j) {
            BQForm c = compose(t.forms_[i], t.forms_[j], delta);
            auto pos = index.find(c);
            if (pos == index.end())
                throw std::logic_error("ClassGroupTable: composition left the reduced set");
            t.table_[i * h + j] = static_cast<std::uint32_t>(pos->second);
            t.table_[j * h + i] = static_cast<std::uint32_t>(pos->second);
        }
    }
    return t;
}

std::size_t ClassGroupTable::index_of(const BQForm &f) const {
    auto it = std::lower_bound(forms_.begin(), forms_.end(), f);
    if (it == forms_.end() || !(*it == f))
        throw std::invalid_argument("ClassGroupTable: form not in the reduced set");
    return static_cast<std::size_t>(it - forms_.begin());
}

std::vector<int> two_power_ranks(const ClassGroupTable &t) {
    std::size_t h = t.order();
    std::set<std::size_t> current;
    for (std::size_t i = 0; i < h; ++i)
        current.insert(i);

    std::vector<int> ranks;
    for (;;) {
        std::set<std::size_t> squares;
        for (std::size_t i : current)
            squares.insert(t.compose_index(i, i));
        std::size_t before = current.size(), after = squares.size();
        if (before % after != 0)
            throw std::logic_error("two_power_ranks: image size does not divide");
        std::size_t ratio = before / after;
        if (ratio == 1)
            break;
        int r = 0;
        while (ratio > 1) {
            if (ratio % 2 != 0)
                throw std::logic_error("two_power_ranks: index ratio is not a power of 2");
            ratio /= 2;
            ++r;
        }
        ranks.push_back(r);
        current = std::move(squares);
    }
    return ranks;
}

int rank_at(const std::vector<int> &ranks, std::size_t k) {
    return k < ranks.size() ? ranks[k] : 0;
}

std::vector<std::uint64_t> two_part_elementary_divisors(const std::vector<int> &ranks) {
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < ranks.size(); ++k) {
        int exact = ranks[k] - (k + 1 < ranks.size() ? ranks[k + 1] : 0);
        for (int i = 0; i < exact; ++i)
            out.push_back(std::uint64_t{1} << (k + 1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Sign genus_character(const BQForm &f, std::uint64_t d_value, std::int64_t delta) {
    check_discriminant(delta);
    std::uint64_t abs_delta = static_cast<std::uint64_t>(-delta);
    for (std::int64_t window = 20; window <= 320; window *= 2) {
        std::int64_t best = 0;
        for (std::int64_t x = -window; x <= window; ++x) {
            for (std::int64_t y = -window; y <= window; ++y) {
                std::int64_t m = f.a * x * x + f.b * x * y + f.c * y * y;
                if (m <= 0)
                    continue;
                if (std::gcd(static_cast<std::uint64_t>(m), abs_delta) != 1)
                    continue;
                if (best == 0 || m < best)
                    best = m;
            }
        }
        if (best != 0)
            return jacobi(best, d_value).value();
    }
    throw std::runtime_error("genus_character: no represented value coprime to delta within the search cap");
}

} // namespace redei8
