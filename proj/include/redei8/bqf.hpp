#pragma once

#include <cstdint>
#include <vector>

#include "redei8/symbols.hpp"

namespace redei8 {

// Ground-truth oracle: the class group of discriminant delta < 0,
// realized as reduced primitive positive-definite binary quadratic
// forms under Dirichlet composition.

struct BQForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    auto operator<=>(const BQForm &other) const = default;
    std::int64_t discriminant() const { return b * b - 4 * a * c; }
};

// All reduced primitive forms of discriminant delta < 0, delta = 1 (mod 4),
// sorted by (a, b, c). Throws on a wrong discriminant residue.
std::vector<BQForm> reduced_forms(std::int64_t delta);

BQForm bqf_identity(std::int64_t delta);
BQForm bqf_reduce(BQForm f);
BQForm bqf_inverse(const BQForm &f);

// Dirichlet composition: d = gcd(a1, a2, (b1+b2)/2) via extended gcd,
// a3 = a1 a2 / d^2, b3 from the Bezout combination, reduced.
BQForm compose(const BQForm &f, const BQForm &g, std::int64_t delta);

class ClassGroupTable {
public:
    static ClassGroupTable build(std::int64_t delta);

    std::int64_t delta() const { return delta_; }
    std::size_t order() const { return forms_.size(); } // class number h
    const BQForm &form(std::size_t i) const { return forms_[i]; }
    std::size_t identity_index() const { return identity_; }
    std::size_t compose_index(std::size_t i, std::size_t j) const {
        return table_[i * forms_.size() + j];
    }
    std::size_t index_of(const BQForm &f) const; // throws if absent

private:
    std::int64_t delta_ = 0;
    std::vector<BQForm> forms_;
    std::vector<std::uint32_t> table_;
    std::size_t identity_ = 0;
};

// (r_2, r_4, r_8, ...) down to the last nonzero rank, from the sizes of
// the iterated square-image sets.
std::vector<int> two_power_ranks(const ClassGroupTable &t);

int rank_at(const std::vector<int> &ranks, std::size_t k); // k = 0 -> r_2

// Elementary divisors of the 2-Sylow subgroup (ascending), e.g. {4, 16}.
std::vector<std::uint64_t> two_part_elementary_divisors(const std::vector<int> &ranks);

// Genus character chi_D(f) = (m | D) for the smallest represented m
// with gcd(m, delta) = 1, searched over |x|, |y| <= window with the
// window doubling from 20 up to a hard cap of 320.
Sign genus_character(const BQForm &f, std::uint64_t d_value, std::int64_t delta);

} // namespace redei8
