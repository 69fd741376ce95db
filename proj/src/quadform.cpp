#include "redei8/quadform.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <stdexcept>

namespace redei8 {

namespace {

// 2^n evaluations happen in classify(); keep the loop bounded.
constexpr int kMaxClassifyDim = 26;

} // namespace

QuadForm::QuadForm(int n) : n_(n), upper_(n, 0) {
    if (n < 0 || n > kMaxGF2Dim)
        throw std::invalid_argument("QuadForm: dimension out of range");
}

QuadForm QuadForm::from_upper(const BitMatrix &u) {
    if (u.rows() != u.cols())
        throw std::invalid_argument("QuadForm: coefficient matrix must be square");
    QuadForm q(u.rows());
    for (int i = 0; i < u.rows(); ++i)
        for (int j = 0; j < u.cols(); ++j) {
            if (j < i) {
                if (u.get(i, j))
                    throw std::invalid_argument("QuadForm: coefficient matrix must be upper-triangular");
            } else {
                q.set_coeff(i, j, u.get(i, j));
            }
        }
    return q;
}

QuadForm QuadForm::from_upper_rows(const std::vector<std::vector<int>> &rows) {
    return from_upper(BitMatrix::from_rows(rows));
}

QuadForm QuadForm::induced_by(const BitMatrix &b) {
    if (b.rows() != b.cols())
        throw std::invalid_argument("QuadForm: bilinear form must be square");
    QuadForm q(b.rows());
    for (int i = 0; i < b.rows(); ++i) {
        q.set_coeff(i, i, b.get(i, i));
        for (int j = i + 1; j < b.cols(); ++j)
            q.set_coeff(i, j, b.get(i, j) != b.get(j, i));
    }
    return q;
}

bool QuadForm::coeff(int i, int j) const {
    if (i < 0 || j < i || j >= n_)
        throw std::out_of_range("QuadForm: coefficient index out of range");
    return (upper_[i] >> j) & 1u;
}

void QuadForm::set_coeff(int i, int j, bool value) {
    if (i < 0 || j < i || j >= n_)
        throw std::out_of_range("QuadForm: coefficient index out of range");
    if (value)
        upper_[i] |= std::uint64_t{1} << j;
    else
        upper_[i] &= ~(std::uint64_t{1} << j);
}

BitMatrix QuadForm::upper() const {
    BitMatrix u(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            u.set(i, j, coeff(i, j));
    return u;
}

unsigned QuadForm::evaluate(const BitVector &x) const {
    if (x.dim() != n_)
        throw std::invalid_argument("QuadForm: dimension mismatch");
    return evaluate_mask(x.mask());
}

unsigned QuadForm::evaluate_mask(std::uint64_t x) const {
    unsigned acc = 0;
    std::uint64_t rest = x;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        acc ^= std::popcount(upper_[i] & x) & 1;
    }
    return acc;
}

BitMatrix polar_form(const QuadForm &q) {
    int n = q.dim();
    BitMatrix p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool v = q.coeff(i, j);
            p.set(i, j, v);
            p.set(j, i, v);
        }
    return p;
}

std::vector<BitVector> radical(const QuadForm &q) {
    return kernel_basis(polar_form(q));
}

namespace {

std::uint64_t count_zeros(const QuadForm &q, const BitMatrix &polar) {
    int n = q.dim();
    if (n == 0)
        return 1;
    std::array<std::uint64_t, kMaxGF2Dim> prow{};
    std::array<unsigned, kMaxGF2Dim> diag{};
    for (int i = 0; i < n; ++i) {
        prow[i] = polar.row_mask(i);
        diag[i] = q.coeff(i, i);
    }
    // Walk F_2^n in Gray-code order; each step flips one coordinate and
    // the value updates by Q(e_i) + polar(y, e_i).
    std::uint64_t zeros = 1; // y = 0
    unsigned val = 0;
    std::uint64_t prev = 0;
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t g = 1; g < total; ++g) {
        int i = std::countr_zero(g);
        val ^= diag[i] ^ (std::popcount(prow[i] & prev) & 1);
        prev ^= std::uint64_t{1} << i;
        if (val == 0)
            ++zeros;
    }
    return zeros;
}

} // namespace

Classification classify(const QuadForm &q) {
    int n = q.dim();
    if (n > kMaxClassifyDim)
        throw std::invalid_argument("classify: dimension too large");

    BitMatrix polar = polar_form(q);
    std::vector<BitVector> rad = kernel_basis(polar);
    int rad_dim = static_cast<int>(rad.size());

    // Q is linear on the radical, so its image there is spanned by the
    // basis values.
    int defect = 0;
    for (const BitVector &v : rad)
        if (q.evaluate(v)) {
            defect = 1;
            break;
        }

    Classification c;
    c.n = n;
    c.defect = defect;
    c.rank = (n - rad_dim) + defect;
    c.k = (c.rank - defect) / 2;
    c.zero_count = count_zeros(q, polar);

    std::uint64_t half_pop = std::uint64_t{1} << n; // 2 * 2^(n-1)
    std::uint64_t doubled = 2 * c.zero_count;
    if (doubled == half_pop)
        c.type = FormType::type1;
    else if (doubled > half_pop)
        c.type = FormType::type2_1;
    else
        c.type = FormType::type2_2;

    switch (c.type) {
    case FormType::type1:
        c.arf = std::nullopt;
        c.rho = c.k + (n - c.rank);
        break;
    case FormType::type2_1:
        c.arf = 0;
        c.rho = c.k + (n - c.rank);
        break;
    case FormType::type2_2:
        c.arf = 1;
        c.rho = c.k - 1 + (n - c.rank);
        break;
    }
    return c;
}

namespace {

struct IsotropySearch {
    std::vector<unsigned> qval;      // Q at every mask
    std::vector<std::uint32_t> zeros; // nonzero masks with Q = 0, ascending
    int best = 0;

    void extend(std::size_t first, std::vector<std::uint32_t> &span, int dim) {
        best = std::max(best, dim);
        for (std::size_t t = first; t < zeros.size(); ++t) {
            std::uint32_t z = zeros[t];
            // Canonical bases only: z must be the minimal element of its
            // coset z + span, which also rules out z already in span.
            bool canonical = true;
            for (std::uint32_t w : span)
                if ((z ^ w) < z) {
                    canonical = false;
                    break;
                }
            if (!canonical)
                continue;
            bool isotropic = true;
            for (std::uint32_t w : span)
                if (qval[z ^ w]) {
                    isotropic = false;
                    break;
                }
            if (!isotropic)
                continue;
            std::size_t old = span.size();
            for (std::size_t s = 0; s < old; ++s)
                span.push_back(span[s] ^ z);
            extend(t + 1, span, dim + 1);
            span.resize(old);
        }
    }
};

} // namespace

int isotropy_index_bruteforce(const QuadForm &q) {
    int n = q.dim();
    if (n > 8)
        throw std::invalid_argument("isotropy_index_bruteforce: dimension too large (n <= 8)");
    IsotropySearch s;
    std::uint64_t total = std::uint64_t{1} << n;
    s.qval.resize(total);
    for (std::uint64_t x = 0; x < total; ++x) {
        s.qval[x] = q.evaluate_mask(x);
        if (x != 0 && s.qval[x] == 0)
            s.zeros.push_back(static_cast<std::uint32_t>(x));
    }
    std::vector<std::uint32_t> span{0};
    s.extend(0, span, 0);
    return s.best;
}

std::set<int> nullity_set(int rho, int r, bool is_x) {
    if (rho < 0 || r < 0 || rho > r)
        throw std::invalid_argument("nullity_set: need 0 <= rho <= r");
    if (is_x && (r != 2 || rho != 1))
        throw std::invalid_argument("nullity_set: the X exception requires rho = 1, r = 2");
    if (is_x)
        return {1};
    std::set<int> s;
    for (int a = 0; a <= rho; ++a) {
        if (rho == r && (a - r) % 2 != 0)
            continue;
        s.insert(a);
    }
    return s;
}

std::set<int> predicted_nullities(const QuadForm &q) {
    Classification c = classify(q);
    bool is_x = (c.n == 2 && c.rank == 2 && c.type == FormType::type2_1);
    return nullity_set(c.rho, c.n, is_x);
}

namespace {

int rank_of_small_rows(std::array<std::uint32_t, 5> rows, int n) {
    int r = 0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if ((rows[i] >> col) & 1u) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[r], rows[pivot]);
        for (int i = 0; i < n; ++i)
            if (i != r && ((rows[i] >> col) & 1u))
                rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

} // namespace

std::set<int> enumerate_bilinear_nullities(const QuadForm &q, bool allow_dim5) {
    int n = q.dim();
    int limit = allow_dim5 ? 5 : 4;
    if (n > limit)
        throw std::invalid_argument("enumerate_bilinear_nullities: dimension too large");

    // Q_B = Q iff diag(B) matches Q's diagonal and B + B^T matches the
    // polar form, so each candidate is filtered on bit patterns alone.
    std::uint64_t diag_mask = 0, diag_expect = 0;
    for (int i = 0; i < n; ++i) {
        diag_mask |= std::uint64_t{1} << (i * n + i);
        if (q.coeff(i, i))
            diag_expect |= std::uint64_t{1} << (i * n + i);
    }
    struct PairBit {
        int p1, p2;
        unsigned expect;
    };
    std::vector<PairBit> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.push_back({i * n + j, j * n + i, q.coeff(i, j) ? 1u : 0u});

    std::set<int> out;
    if (n == 0) {
        out.insert(0); // the empty bilinear form
        return out;
    }
    std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t cand = 0; cand < total; ++cand) {
        if ((cand & diag_mask) != diag_expect)
            continue;
        bool ok = true;
        for (const PairBit &p : pairs)
            if ((((cand >> p.p1) ^ (cand >> p.p2)) & 1u) != p.expect) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        std::array<std::uint32_t, 5> rows{};
        for (int i = 0; i < n; ++i)
            rows[i] = static_cast<std::uint32_t>((cand >> (i * n)) & ((std::uint64_t{1} << n) - 1));
        out.insert(n - rank_of_small_rows(rows, n));
    }
    return out;
}

QuadForm direct_sum(const QuadForm &a, const QuadForm &b) {
    QuadForm q(a.dim() + b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j)
            q.set_coeff(i, j, a.coeff(i, j));
    for (int i = 0; i < b.dim(); ++i)
        for (int j = i; j < b.dim(); ++j)
            q.set_coeff(a.dim() + i, a.dim() + j, b.coeff(i, j));
    return q;
}

QuadForm transform(const QuadForm &q, const BitMatrix &u) {
    int n = q.dim();
    if (u.rows() != n || u.cols() != n)
        throw std::invalid_argument("transform: change of basis must be n x n");
    BitMatrix polar = polar_form(q);
    std::vector<std::uint64_t> cols(n);
    for (int j = 0; j < n; ++j)
        cols[j] = u.col(j).mask();

    auto nabla = [&](std::uint64_t x, std::uint64_t y) -> unsigned {
        unsigned acc = 0;
        std::uint64_t rest = x;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            acc ^= std::popcount(polar.row_mask(i) & y) & 1;
        }
        return acc;
    };

    QuadForm out(n);
    for (int i = 0; i < n; ++i) {
        out.set_coeff(i, i, q.evaluate_mask(cols[i]));
        for (int j = i + 1; j < n; ++j)
            out.set_coeff(i, j, nabla(cols[i], cols[j]));
    }
    return out;
}

QuadForm canonical_form(const Classification &c) {
    QuadForm q(c.n);
    int k = c.k;
    switch (c.type) {
    case FormType::type1:
        for (int i = 0; i < k; ++i)
            q.set_coeff(i, k + i, true);
        q.set_coeff(2 * k, 2 * k, true);
        break;
    case FormType::type2_1:
        for (int i = 0; i < k; ++i)
            q.set_coeff(i, k + i, true);
        break;
    case FormType::type2_2:
        for (int i = 0; i + 1 < k; ++i)
            q.set_coeff(i, k + i, true);
        q.set_coeff(k - 1, k - 1, true);
        q.set_coeff(k - 1, 2 * k - 1, true);
        q.set_coeff(2 * k - 1, 2 * k - 1, true);
        break;
    }
    return q;
}

BitMatrix canonical_change_of_basis(const QuadForm &q) {
    int n = q.dim();
    BitMatrix polar = polar_form(q);

    auto nabla = [&](std::uint64_t x, std::uint64_t y) -> unsigned {
        unsigned acc = 0;
        std::uint64_t rest = x;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            acc ^= std::popcount(polar.row_mask(i) & y) & 1;
        }
        return acc;
    };

    // Symplectic Gram-Schmidt: repeatedly split off a hyperbolic pair
    // and orthogonalize the remaining generators against it.
    std::vector<std::uint64_t> work;
    for (int i = 0; i < n; ++i)
        work.push_back(std::uint64_t{1} << i);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (;;) {
        int pi = -1, pj = -1;
        for (std::size_t i = 0; i < work.size() && pi < 0; ++i)
            for (std::size_t j = i + 1; j < work.size(); ++j)
                if (nabla(work[i], work[j])) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                    break;
                }
        if (pi < 0)
            break;
        std::uint64_t u = work[pi], v = work[pj];
        work.erase(work.begin() + pj);
        work.erase(work.begin() + pi);
        for (std::uint64_t &w : work) {
            if (nabla(w, v))
                w ^= u;
            if (nabla(w, u))
                w ^= v;
        }
        pairs.emplace_back(u, v);
    }

    // The leftovers span the radical; keep an independent subset.
    std::vector<std::uint64_t> rad;
    {
        std::vector<std::uint64_t> echelon;
        for (std::uint64_t w : work) {
            std::uint64_t r = w;
            for (std::uint64_t e : echelon)
                r = std::min(r, r ^ e);
            if (r != 0) {
                echelon.push_back(r);
                rad.push_back(w);
            }
        }
    }

    // Normalize each hyperbolic plane to X or Y.
    for (auto &[u, v] : pairs) {
        unsigned qu = q.evaluate_mask(u);
        unsigned qv = q.evaluate_mask(v);
        if (qu == 1 && qv == 0) {
            std::uint64_t nu = v, nv = u ^ v;
            u = nu;
            v = nv;
        } else if (qu == 0 && qv == 1) {
            v = u ^ v;
        }
    }

    std::uint64_t defect_vec = 0;
    auto is_y = [&](const std::pair<std::uint64_t, std::uint64_t> &p) {
        return q.evaluate_mask(p.first) == 1 && q.evaluate_mask(p.second) == 1;
    };

    for (std::size_t i = 0; i < rad.size(); ++i)
        if (q.evaluate_mask(rad[i])) {
            defect_vec = rad[i];
            rad.erase(rad.begin() + i);
            break;
        }

    if (defect_vec != 0) {
        // Defect case: the radical vector with Q = 1 absorbs every Y
        // plane and cleans the rest of the radical.
        for (std::uint64_t &r : rad)
            if (q.evaluate_mask(r))
                r ^= defect_vec;
        for (auto &[u, v] : pairs)
            if (q.evaluate_mask(u) == 1 && q.evaluate_mask(v) == 1) {
                u ^= defect_vec;
                v ^= defect_vec;
            }
    } else {
        // Defect 0: merge Y planes two at a time (Y + Y = X + X).
        std::vector<std::size_t> ys;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (is_y(pairs[i]))
                ys.push_back(i);
        for (std::size_t t = 0; t + 1 < ys.size(); t += 2) {
            auto &[a, b] = pairs[ys[t]];
            auto &[c, d] = pairs[ys[t + 1]];
            std::uint64_t na = a ^ c, nb = b ^ c;
            std::uint64_t nc = a ^ b ^ d, nd = a ^ b ^ c ^ d;
            a = na;
            b = nb;
            c = nc;
            d = nd;
        }
    }

    // Assemble columns in canonical order: X pairs split across the two
    // index blocks, the Y plane (if any) at positions k-1 and 2k-1, the
    // defect vector (if any) right after the pairs, plain radical last.
    std::vector<std::uint64_t> x_pairs_u, x_pairs_v;
    std::uint64_t y_u = 0, y_v = 0;
    bool have_y = false;
    for (auto &p : pairs) {
        if (is_y(p)) {
            if (have_y)
                throw std::logic_error("canonical_change_of_basis: more than one Y plane survived");
            have_y = true;
            y_u = p.first;
            y_v = p.second;
        } else {
            x_pairs_u.push_back(p.first);
            x_pairs_v.push_back(p.second);
        }
    }
    if (have_y && defect_vec != 0)
        throw std::logic_error("canonical_change_of_basis: Y plane left in the defect case");

    std::vector<std::uint64_t> cols;
    cols.reserve(n);
    for (std::uint64_t u : x_pairs_u)
        cols.push_back(u);
    if (have_y)
        cols.push_back(y_u);
    for (std::uint64_t v : x_pairs_v)
        cols.push_back(v);
    if (have_y)
        cols.push_back(y_v);
    if (defect_vec != 0)
        cols.push_back(defect_vec);
    for (std::uint64_t r : rad)
        cols.push_back(r);
    if (static_cast<int>(cols.size()) != n)
        throw std::logic_error("canonical_change_of_basis: basis has wrong size");

    BitMatrix u_mat(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            u_mat.set(i, j, (cols[j] >> i) & 1u);
    if (rank(u_mat) != n)
        throw std::logic_error("canonical_change_of_basis: change of basis is singular");
    return u_mat;
}

QuadForm form_X() {
    QuadForm q(2);
    q.set_coeff(0, 1, true);
    return q;
}

QuadForm form_Y() {
    QuadForm q(2);
    q.set_coeff(0, 0, true);
    q.set_coeff(0, 1, true);
    q.set_coeff(1, 1, true);
    return q;
}

QuadForm form_I() {
    QuadForm q(1);
    q.set_coeff(0, 0, true);
    return q;
}

QuadForm form_O(int n) {
    return QuadForm(n);
}

} // namespace redei8
