#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "redei8/gf2.hpp"

namespace redei8 {

// Quadratic forms on F_2^n, stored as an upper-triangular coefficient
// matrix U with Q(x) = sum_{i<=j} U_ij x_i x_j. A bilinear form B
// induces Q_B(x) = x^T B x, which depends on B only through diag(B)
// and B + B^T.

enum class FormType {
    type1,   // odd rank: X^k + I + O
    type2_1, // even rank, Arf 0: X^k + O
    type2_2, // even rank, Arf 1: X^(k-1) + Y + O
};

struct Classification {
    int n = 0;
    int rank = 0;   // 2k + defect
    int k = 0;
    int defect = 0; // dim Q(radical), 0 or 1
    FormType type = FormType::type2_1;
    std::optional<unsigned> arf; // empty for type 1
    int rho = 0;                 // isotropy index
    std::uint64_t zero_count = 0;
};

class QuadForm {
public:
    QuadForm() = default;
    explicit QuadForm(int n);
    // U must be square upper-triangular.
    static QuadForm from_upper(const BitMatrix &u);
    static QuadForm from_upper_rows(const std::vector<std::vector<int>> &rows);
    // Q_B for an arbitrary square bilinear form B.
    static QuadForm induced_by(const BitMatrix &b);

    int dim() const { return n_; }
    bool coeff(int i, int j) const; // requires i <= j
    void set_coeff(int i, int j, bool value);
    BitMatrix upper() const;

    unsigned evaluate(const BitVector &x) const;
    unsigned evaluate_mask(std::uint64_t x) const;

    bool operator==(const QuadForm &other) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> upper_; // row i holds bits j >= i
};

// The alternating polar form U + U^T.
BitMatrix polar_form(const QuadForm &q);

// Kernel basis of the polar form.
std::vector<BitVector> radical(const QuadForm &q);

// Full classification record: rank/defect from the polar form, type by
// comparing #Q^-1(0) against 2^(n-1), isotropy index from the type.
Classification classify(const QuadForm &q);

// Maximal dimension of a subspace on which Q vanishes, by recursive
// search over the zero set closed under span. Requires n <= 8.
int isotropy_index_bruteforce(const QuadForm &q);

// S(rho, r): {a : 0 <= a <= rho}, with a = r (mod 2) when rho = r, and
// {1} for the two-dimensional form X.
std::set<int> nullity_set(int rho, int r, bool is_x = false);

// S(rho(Q), n) with the X exception detected from invariants.
std::set<int> predicted_nullities(const QuadForm &q);

// Exhaustive oracle: iterate every n x n bilinear form B, keep those
// with Q_B = Q, collect n - rank(B). Requires n <= 4, or n == 5 with
// allow_dim5 (2^25 candidates).
std::set<int> enumerate_bilinear_nullities(const QuadForm &q, bool allow_dim5 = false);

QuadForm direct_sum(const QuadForm &a, const QuadForm &b);

// Q' with Q'(x) = Q(Ux); U must be n x n.
QuadForm transform(const QuadForm &q, const BitMatrix &u);

// The canonical polynomial of the classification's equivalence class.
QuadForm canonical_form(const Classification &c);

// Invertible U with transform(q, U) == canonical_form(classify(q)),
// computed by symplectic Gram-Schmidt on the polar form followed by
// normalization within the radical.
BitMatrix canonical_change_of_basis(const QuadForm &q);

QuadForm form_X();
QuadForm form_Y();
QuadForm form_I();
QuadForm form_O(int n);

} // namespace redei8
