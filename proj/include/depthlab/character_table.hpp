#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "depthlab/bigint.hpp"
#include "depthlab/cyclotomic.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/perm_group.hpp"

namespace depthlab {

/// Values of a class function, indexed by the conjugacy classes of a fixed group.
using ClassFunction = std::vector<Cyclotomic>;

/// Exact irreducible characters of a finite permutation group.
///
/// Rows are sorted by degree with the trivial character first, then by
/// decreasing canonical value vectors. Columns follow the class order of
/// conjugacy_classes().
class CharacterTable {
public:
    CharacterTable(PermGroup group, ClassPartition classes, std::uint32_t exponent,
                   std::vector<ClassFunction> rows)
        : group_(std::move(group)), classes_(std::move(classes)), exponent_(exponent),
          rows_(std::move(rows))
    {
        if (rows_.size() != classes_.size())
            throw internal_error("character table is not square");
        for (const auto& row : rows_)
            if (row.size() != classes_.size())
                throw internal_error("character row has the wrong length");
    }

    const PermGroup& group() const noexcept { return group_; }
    const ClassPartition& classes() const noexcept { return classes_; }
    std::uint32_t exponent() const noexcept { return exponent_; }
    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<ClassFunction>& rows() const noexcept { return rows_; }
    const ClassFunction& character(std::size_t i) const { return rows_.at(i); }
    const Cyclotomic& value(std::size_t chi, std::size_t cls) const { return rows_.at(chi).at(cls); }

    BigInt degree(std::size_t chi) const { return *rows_.at(chi).front().to_integer(); }

    std::vector<BigInt> degrees() const
    {
        std::vector<BigInt> d;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            d.push_back(degree(i));
        return d;
    }

    bool is_integral() const
    {
        for (const auto& row : rows_)
            for (const auto& v : row)
                if (!v.is_integer())
                    return false;
        return true;
    }

    std::size_t class_of(const Permutation& g) const
    {
        return classes_.class_of[group_.index_of_member(g)];
    }

private:
    PermGroup group_;
    ClassPartition classes_;
    std::uint32_t exponent_;
    std::vector<ClassFunction> rows_;
};

namespace detail::modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((unsigned __int128)a * b % p); }
inline u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

inline u64 pow(u64 a, u64 e, u64 p)
{
    u64 r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1u)
            r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1u;
    }
    return r;
}

inline u64 inv(u64 a, u64 p)
{
    if (a % p == 0)
        throw internal_error("inverting zero modulo p");
    return pow(a, p - 2, p);
}

inline bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>; // row-major

/// Basis of the null space of `m` (rows x cols), as vectors of length cols.
inline std::vector<Vec> kernel(Mat m, std::size_t cols, u64 p)
{
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][c] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        u64 f = inv(m[row][c], p);
        for (auto& x : m[row])
            x = mul(x, f, p);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0)
                continue;
            u64 g = m[r][c];
            for (std::size_t k = 0; k < cols; ++k)
                m[r][k] = sub(m[r][k], mul(g, m[row][k], p), p);
        }
        pivot_col.push_back(c);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = sub(0, m[r][free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves P X = Q for square invertible P.
inline Mat solve(Mat pm, Mat q, u64 p)
{
    const std::size_t d = pm.size();
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t sel = c;
        while (sel < d && pm[sel][c] == 0)
            ++sel;
        if (sel == d)
            throw internal_error("singular pivot block in eigenspace restriction");
        std::swap(pm[c], pm[sel]);
        std::swap(q[c], q[sel]);
        u64 f = inv(pm[c][c], p);
        for (auto& x : pm[c])
            x = mul(x, f, p);
        for (auto& x : q[c])
            x = mul(x, f, p);
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || pm[r][c] == 0)
                continue;
            u64 g = pm[r][c];
            for (std::size_t k = 0; k < d; ++k) {
                pm[r][k] = sub(pm[r][k], mul(g, pm[c][k], p), p);
                q[r][k] = sub(q[r][k], mul(g, q[c][k], p), p);
            }
        }
    }
    return q;
}

/// Characteristic polynomial coefficients c_0..c_d (c_d = 1), Faddeev-LeVerrier.
inline Vec charpoly(const Mat& c, u64 p)
{
    const std::size_t d = c.size();
    Vec coeffs(d + 1, 0);
    coeffs[d] = 1;
    Mat m(d, Vec(d, 0));
    for (std::size_t k = 1; k <= d; ++k) {
        // m <- C m + c_{d-k+1} I
        Mat next(d, Vec(d, 0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l) {
                if (c[i][l] == 0)
                    continue;
                for (std::size_t j = 0; j < d; ++j)
                    next[i][j] = add(next[i][j], mul(c[i][l], m[l][j], p), p);
            }
        for (std::size_t i = 0; i < d; ++i)
            next[i][i] = add(next[i][i], coeffs[d - k + 1], p);
        m = std::move(next);
        u64 trace = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l)
                trace = add(trace, mul(c[i][l], m[l][i], p), p);
        coeffs[d - k] = sub(0, mul(trace, inv(k % p, p), p), p);
    }
    return coeffs;
}

} // namespace detail::modp

/// The field and root of unity used by the modular character-table method.
struct DixonParameters {
    std::uint32_t exponent = 1;
    std::uint64_t prime = 0;
    std::uint64_t root = 0; ///< primitive exponent-th root of unity mod prime
};

/// Least prime p with p = 1 (mod exponent) and p > 2|G|, plus a primitive
/// exponent-th root of unity modulo p.
inline DixonParameters dixon_parameters(std::uint32_t exponent, std::uint64_t group_order)
{
    namespace mp = detail::modp;
    DixonParameters params;
    params.exponent = exponent;
    std::uint64_t p = (2 * group_order) / exponent * exponent + 1;
    while (p <= 2 * group_order || !mp::is_prime(p))
        p += exponent;
    params.prime = p;

    std::vector<std::uint64_t> prime_factors;
    for (std::uint64_t q = 2, m = exponent; m > 1; ++q) {
        if (m % q == 0) {
            prime_factors.push_back(q);
            while (m % q == 0)
                m /= q;
        }
    }
    for (std::uint64_t a = 2; a < p; ++a) {
        std::uint64_t z = mp::pow(a, (p - 1) / exponent, p);
        bool primitive = std::all_of(prime_factors.begin(), prime_factors.end(),
                                     [&](std::uint64_t q) { return mp::pow(z, exponent / q, p) != 1; });
        if (primitive) {
            params.root = z;
            return params;
        }
    }
    params.root = 1; // exponent 1
    return params;
}

inline std::uint32_t group_exponent(const ClassPartition& classes)
{
    std::uint64_t e = 1;
    for (auto o : classes.element_orders)
        e = std::lcm(e, o);
    if (e > (1u << 24))
        throw resource_error("group exponent " + std::to_string(e) + " is too large");
    return static_cast<std::uint32_t>(e);
}

namespace detail {

inline bool row_less(const ClassFunction& a, const ClassFunction& b)
{
    // decreasing lexicographic order on canonical coefficient vectors
    for (std::size_t c = 0; c < a.size(); ++c) {
        const auto& x = a[c].coefficients();
        const auto& y = b[c].coefficients();
        if (x != y)
            return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
    }
    return false;
}

inline bool is_trivial_character(const ClassFunction& row)
{
    return std::all_of(row.begin(), row.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

inline void sort_rows(std::vector<ClassFunction>& rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const ClassFunction& a, const ClassFunction& b) {
        BigInt da = *a.front().to_integer();
        BigInt db = *b.front().to_integer();
        if (da != db)
            return da < db;
        bool ta = is_trivial_character(a);
        bool tb = is_trivial_character(b);
        if (ta != tb)
            return ta;
        return row_less(a, b);
    });
}

} // namespace detail

/// Class multiplication coefficients a[j][k][l] = #{x in C_j : x^-1 z_l in C_k}
/// for a fixed representative z_l of C_l.
inline std::vector<std::vector<std::vector<std::uint64_t>>>
class_structure_constants(const PermGroup& g, const ClassPartition& classes)
{
    const std::size_t r = classes.size();
    const auto& elems = g.elements();
    std::vector<std::vector<std::vector<std::uint64_t>>> a(
        r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
    std::vector<Permutation> inverses;
    inverses.reserve(elems.size());
    for (const auto& x : elems)
        inverses.push_back(x.inverse());
    for (std::size_t l = 0; l < r; ++l) {
        const Permutation& z = classes.representatives[l];
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t xi : classes.classes[j])
                ++a[j][classes.class_of[g.index_of_member(inverses[xi] * z)]][l];
    }
    return a;
}

/// Exact character table by the modular (Dixon) method.
///
/// Common eigenvectors of the class matrices are split out over GF(p), with
/// p the least prime = 1 (mod exp G) above 2|G|. Values are then lifted to
/// Z[zeta_e] from eigenvalue multiplicities computed through power maps.
inline CharacterTable character_table(const PermGroup& g)
{
    namespace mp = detail::modp;
    using mp::u64;

    ClassPartition classes = conjugacy_classes(g);
    const std::size_t r = classes.size();
    const u64 order = g.small_order();
    const std::uint32_t e = group_exponent(classes);
    const DixonParameters params = dixon_parameters(e, order);
    const u64 p = params.prime;

    auto a = class_structure_constants(g, classes);

    // (A_j)_{k,l} = a[j][k][l]; each character gives a common column eigenvector.
    std::vector<std::vector<mp::Vec>> spaces;
    {
        std::vector<mp::Vec> standard;
        for (std::size_t i = 0; i < r; ++i) {
            mp::Vec v(r, 0);
            v[i] = 1;
            standard.push_back(std::move(v));
        }
        spaces.push_back(std::move(standard));
    }

    auto apply = [&](std::size_t j, const mp::Vec& v) {
        mp::Vec out(r, 0);
        for (std::size_t k = 0; k < r; ++k) {
            u64 s = 0;
            for (std::size_t l = 0; l < r; ++l)
                if (a[j][k][l] != 0 && v[l] != 0)
                    s = mp::add(s, mp::mul(a[j][k][l] % p, v[l], p), p);
            out[k] = s;
        }
        return out;
    };

    for (std::size_t j = 1; j < r; ++j) {
        if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; }))
            break;
        std::vector<std::vector<mp::Vec>> next;
        for (auto& basis : spaces) {
            const std::size_t d = basis.size();
            if (d == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            std::vector<mp::Vec> image;
            for (const auto& v : basis)
                image.push_back(apply(j, v));

            // pick d rows where the basis matrix is invertible
            std::vector<std::size_t> pivots;
            {
                mp::Mat t = basis; // d x r, rows are basis vectors
                std::size_t row = 0;
                for (std::size_t c = 0; c < r && row < d; ++c) {
                    std::size_t sel = row;
                    while (sel < d && t[sel][c] == 0)
                        ++sel;
                    if (sel == d)
                        continue;
                    std::swap(t[row], t[sel]);
                    u64 f = mp::inv(t[row][c], p);
                    for (auto& x : t[row])
                        x = mp::mul(x, f, p);
                    for (std::size_t rr = 0; rr < d; ++rr) {
                        if (rr == row || t[rr][c] == 0)
                            continue;
                        u64 gg = t[rr][c];
                        for (std::size_t k = 0; k < r; ++k)
                            t[rr][k] = mp::sub(t[rr][k], mp::mul(gg, t[row][k], p), p);
                    }
                    pivots.push_back(c);
                    ++row;
                }
                if (pivots.size() != d)
                    throw internal_error("eigenspace basis is rank deficient");
            }
            mp::Mat pm(d, mp::Vec(d)), qm(d, mp::Vec(d));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t c = 0; c < d; ++c) {
                    pm[i][c] = basis[c][pivots[i]];
                    qm[i][c] = image[c][pivots[i]];
                }
            mp::Mat restricted = mp::solve(std::move(pm), std::move(qm), p);
            mp::Vec poly = mp::charpoly(restricted, p);

            std::size_t found = 0;
            for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
                u64 val = 0;
                for (std::size_t k = poly.size(); k-- > 0;)
                    val = mp::add(mp::mul(val, lambda, p), poly[k], p);
                if (val != 0)
                    continue;
                mp::Mat shifted = restricted;
                for (std::size_t i = 0; i < d; ++i)
                    shifted[i][i] = mp::sub(shifted[i][i], lambda, p);
                auto ker = mp::kernel(std::move(shifted), d, p);
                std::vector<mp::Vec> piece;
                for (const auto& coeffs : ker) {
                    mp::Vec v(r, 0);
                    for (std::size_t c = 0; c < d; ++c)
                        for (std::size_t k = 0; k < r; ++k)
                            v[k] = mp::add(v[k], mp::mul(coeffs[c], basis[c][k], p), p);
                    piece.push_back(std::move(v));
                }
                found += piece.size();
                next.push_back(std::move(piece));
            }
            if (found != d)
                throw internal_error("class matrix is not diagonalizable modulo " + std::to_string(p));
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r)
        throw internal_error("failed to split the class algebra into " + std::to_string(r) +
                             " eigenspaces");

    std::vector<std::size_t> inverse_class(r);
    for (std::size_t l = 0; l < r; ++l)
        inverse_class[l] = classes.class_of[g.index_of_member(classes.representatives[l].inverse())];

    // power maps: class of rep^i for i < order(rep)
    std::vector<std::vector<std::size_t>> power_classes(r);
    for (std::size_t l = 0; l < r; ++l) {
        const Permutation& rep = classes.representatives[l];
        Permutation x = g.identity();
        for (std::uint64_t i = 0; i < classes.element_orders[l]; ++i) {
            power_classes[l].push_back(classes.class_of[g.index_of_member(x)]);
            x = x * rep;
        }
    }

    std::vector<u64> root_powers(e);
    root_powers[0] = 1;
    for (std::uint32_t k = 1; k < e; ++k)
        root_powers[k] = mp::mul(root_powers[k - 1], params.root, p);

    std::vector<ClassFunction> rows;
    for (const auto& space : spaces) {
        mp::Vec w = space.front();
        if (w[0] == 0)
            throw internal_error("central character vanishes on the identity class");
        u64 f = mp::inv(w[0], p);
        for (auto& x : w)
            x = mp::mul(x, f, p);

        u64 norm = 0;
        for (std::size_t l = 0; l < r; ++l)
            norm = mp::add(norm, mp::mul(mp::mul(w[l], w[inverse_class[l]], p),
                                         mp::inv(classes.sizes[l] % p, p), p), p);
        u64 deg_sq = mp::mul(order % p, mp::inv(norm, p), p);
        u64 deg = 0;
        for (u64 d = 1; d * d <= order; ++d)
            if (d * d == deg_sq)
                deg = d;
        if (deg == 0)
            throw internal_error("no integral degree fits the central character");

        std::vector<u64> modvals(r);
        for (std::size_t l = 0; l < r; ++l)
            modvals[l] = mp::mul(mp::mul(w[l], deg, p), mp::inv(classes.sizes[l] % p, p), p);

        ClassFunction row;
        for (std::size_t l = 0; l < r; ++l) {
            const std::uint64_t o = classes.element_orders[l];
            const std::uint32_t step = static_cast<std::uint32_t>(e / o);
            const u64 o_inv = mp::inv(o % p, p);
            std::vector<BigInt> powers(e, 0);
            u64 total = 0;
            for (std::uint32_t k = 0; k < e; k += step) {
                u64 s = 0;
                for (std::uint64_t i = 0; i < o; ++i) {
                    std::uint64_t ex = (e - (i * k) % e) % e;
                    s = mp::add(s, mp::mul(modvals[power_classes[l][i]], root_powers[ex], p), p);
                }
                u64 mult = mp::mul(s, o_inv, p);
                if (mult > deg)
                    throw internal_error("eigenvalue multiplicity out of range");
                powers[k] = BigInt(mult);
                total += mult;
            }
            if (total != deg)
                throw internal_error("eigenvalue multiplicities do not sum to the degree");
            row.push_back(Cyclotomic::from_powers(e, powers));
        }
        rows.push_back(std::move(row));
    }
    detail::sort_rows(rows);
    return CharacterTable(g, std::move(classes), e, std::move(rows));
}

} // namespace depthlab
