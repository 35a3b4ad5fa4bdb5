#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "depthlab/bigint.hpp"
#include "depthlab/character_table.hpp"
#include "depthlab/cyclotomic.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/matrix.hpp"
#include "depthlab/perm_group.hpp"

namespace depthlab {

/// Class fusion from a subgroup H into G: map[c] is the G-class containing
/// the H-class c.
struct FusionMap {
    std::vector<std::size_t> map;
    std::size_t parent_class_count = 0;
};

inline FusionMap class_fusion(const PermGroup& g, const ClassPartition& g_classes, const PermGroup& h,
                              const ClassPartition& h_classes)
{
    require_subgroup(g, h);
    const auto& helems = h.elements();
    FusionMap fusion;
    fusion.parent_class_count = g_classes.size();
    for (std::size_t c = 0; c < h_classes.size(); ++c) {
        std::size_t target = g_classes.class_of[g.index_of_member(h_classes.representatives[c])];
        for (std::size_t idx : h_classes.classes[c])
            if (g_classes.class_of[g.index_of_member(helems[idx])] != target)
                throw internal_error("subgroup class splits across classes of the parent");
        fusion.map.push_back(target);
    }
    return fusion;
}

inline FusionMap class_fusion(const CharacterTable& g, const CharacterTable& h)
{
    return class_fusion(g.group(), g.classes(), h.group(), h.classes());
}

inline ClassFunction restrict(const ClassFunction& chi, const FusionMap& fusion)
{
    if (chi.size() != fusion.parent_class_count)
        throw input_error("class function has " + std::to_string(chi.size()) +
                          " values but the parent group has " +
                          std::to_string(fusion.parent_class_count) + " classes");
    ClassFunction out;
    out.reserve(fusion.map.size());
    for (std::size_t target : fusion.map)
        out.push_back(chi[target]);
    return out;
}

/// (1/|H|) sum over classes of |C| alpha(C) conj(beta(C)).
inline Rational inner_product(const ClassPartition& classes, const BigInt& order, const ClassFunction& alpha,
                              const ClassFunction& beta)
{
    if (alpha.size() != classes.size() || beta.size() != classes.size())
        throw input_error("class functions do not match the class count " + std::to_string(classes.size()));
    Cyclotomic sum;
    for (std::size_t c = 0; c < classes.size(); ++c)
        sum += Cyclotomic(BigInt(classes.sizes[c])) * alpha[c] * beta[c].conj();
    auto integer = sum.to_integer();
    if (!integer)
        throw input_error("inner product is not rational: " + sum.to_string());
    return Rational(*integer, order);
}

inline Rational inner_product(const CharacterTable& t, const ClassFunction& alpha, const ClassFunction& beta)
{
    return inner_product(t.classes(), t.group().order(), alpha, beta);
}

/// Induced class function from H to G:
/// psi^G(x) = sum over left coset representatives t of psi°(t^-1 x t).
inline ClassFunction induce(const ClassFunction& psi, const CharacterTable& g, const CharacterTable& h)
{
    if (psi.size() != h.size())
        throw input_error("class function does not match the subgroup's class count");
    const auto reps = left_transversal(g.group(), h.group());
    ClassFunction out;
    for (const auto& x : g.classes().representatives) {
        Cyclotomic value;
        for (const auto& t : reps) {
            Permutation y = x.conjugated_by(t.inverse());
            if (auto idx = h.group().index_of(y))
                value += psi[h.classes().class_of[*idx]];
        }
        out.push_back(std::move(value));
    }
    return out;
}

/// Multiplicities of the irreducibles of `t` in a character; each must be a
/// nonnegative integer.
inline std::vector<BigInt> character_multiplicities(const ClassFunction& f, const CharacterTable& t)
{
    std::vector<BigInt> mult;
    for (std::size_t i = 0; i < t.size(); ++i) {
        Rational m = inner_product(t, f, t.character(i));
        if (boost::multiprecision::denominator(m) != 1 || m < 0)
            throw internal_error("character multiplicity " + to_string(m) +
                                 " is not a nonnegative integer; the character table is inconsistent");
        mult.push_back(boost::multiprecision::numerator(m));
    }
    return mult;
}

inline std::vector<std::string> character_labels(const std::string& prefix, std::size_t count)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < count; ++i)
        labels.push_back(prefix + std::to_string(i + 1));
    return labels;
}

/// Induction-restriction table of H <= G. Entry (i, j) is the multiplicity of
/// psi_i in the restriction of chi_j.
struct InclusionMatrix {
    NonNegIntMatrix entries;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    std::size_t rows() const { return entries.rows(); }
    std::size_t cols() const { return entries.cols(); }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }

    /// Aligned text layout: a header row of G-labels, then one row per H-irreducible.
    std::string to_text() const
    {
        std::vector<std::vector<std::string>> cells;
        cells.push_back({""});
        cells.back().insert(cells.back().end(), col_labels.begin(), col_labels.end());
        for (std::size_t i = 0; i < rows(); ++i) {
            cells.push_back({row_labels[i]});
            for (std::size_t j = 0; j < cols(); ++j)
                cells.back().push_back(entries(i, j).str());
        }
        std::vector<std::size_t> width(cols() + 1, 0);
        for (const auto& row : cells)
            for (std::size_t j = 0; j < row.size(); ++j)
                width[j] = std::max(width[j], row[j].size());
        std::ostringstream out;
        for (const auto& row : cells) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j == 0)
                    out << row[j] << std::string(width[0] - row[j].size(), ' ');
                else
                    out << "  " << std::string(width[j] - row[j].size(), ' ') << row[j];
            }
            out << '\n';
        }
        return out.str();
    }
};

inline InclusionMatrix inclusion_matrix(const CharacterTable& g, const CharacterTable& h)
{
    const FusionMap fusion = class_fusion(g, h);
    Matrix<BigInt> m(h.size(), g.size(), 0);
    for (std::size_t j = 0; j < g.size(); ++j) {
        auto mult = character_multiplicities(restrict(g.character(j), fusion), h);
        for (std::size_t i = 0; i < h.size(); ++i)
            m(i, j) = mult[i];
    }
    // reciprocity: row i must also be the decomposition of the induced psi_i
    for (std::size_t i = 0; i < h.size(); ++i) {
        auto mult = character_multiplicities(induce(h.character(i), g, h), g);
        for (std::size_t j = 0; j < g.size(); ++j)
            if (mult[j] != m(i, j))
                throw internal_error("Frobenius reciprocity fails at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
    }
    InclusionMatrix result{NonNegIntMatrix(std::move(m)), character_labels("psi", h.size()),
                           character_labels("chi", g.size())};
    for (std::size_t i = 0; i < result.rows(); ++i) {
        bool any = false;
        for (std::size_t j = 0; j < result.cols(); ++j)
            any = any || result(i, j) != 0;
        if (!any)
            throw internal_error("inclusion matrix has a zero row");
    }
    for (std::size_t j = 0; j < result.cols(); ++j) {
        bool any = false;
        for (std::size_t i = 0; i < result.rows(); ++i)
            any = any || result(i, j) != 0;
        if (!any)
            throw internal_error("inclusion matrix has a zero column");
    }
    return result;
}

inline InclusionMatrix inclusion_matrix(const PermGroup& g, const PermGroup& h)
{
    require_subgroup(g, h);
    return inclusion_matrix(character_table(g), character_table(h));
}

/// Multiplicities over Irr(H) of psi induced to G and restricted back, k times.
inline std::vector<BigInt> res_ind_decompose(const CharacterTable& g, const CharacterTable& h, std::size_t psi,
                                             unsigned k)
{
    if (k < 1)
        throw input_error("res_ind_decompose needs at least one induction-restriction round");
    if (psi >= h.size())
        throw input_error("character index " + std::to_string(psi) + " out of range");
    const FusionMap fusion = class_fusion(g, h);
    ClassFunction current = h.character(psi);
    for (unsigned round = 0; round < k; ++round)
        current = restrict(induce(current, g, h), fusion);
    return character_multiplicities(current, h);
}

struct MackeyReport {
    bool holds = false;
    std::size_t double_coset_count = 0;
    ClassFunction induced_then_restricted; ///< (psi^G) restricted to N
    ClassFunction mackey_sum;              ///< sum over N\G/H of induced conjugate restrictions
};

/// Checks Mackey's decomposition of psi^G restricted to N against the sum
/// over double cosets NgH of (g-conjugate of psi restricted to N ∩ gHg^-1)^N.
/// The two sides are computed along independent paths.
inline MackeyReport mackey_check(const CharacterTable& g, const CharacterTable& n, const CharacterTable& h,
                                 std::size_t psi)
{
    require_subgroup(g.group(), n.group(), "N");
    require_subgroup(g.group(), h.group(), "H");
    if (psi >= h.size())
        throw input_error("character index " + std::to_string(psi) + " out of range");

    MackeyReport report;
    report.induced_then_restricted = restrict(induce(h.character(psi), g, h), class_fusion(g, n));

    const auto& hgroup = h.group();
    const ClassFunction& chi = h.character(psi);
    ClassFunction sum(n.size());
    const auto cosets = double_cosets(g.group(), n.group(), hgroup);
    report.double_coset_count = cosets.size();
    for (const auto& dc : cosets) {
        const Permutation& r = dc.representative;
        const Permutation r_inv = r.inverse();
        PermGroup k = intersection(n.group(), conjugate_subgroup(hgroup, r));
        const auto reps = left_transversal(n.group(), k);
        for (std::size_t c = 0; c < n.size(); ++c) {
            const Permutation& x = n.classes().representatives[c];
            for (const auto& t : reps) {
                Permutation y = x.conjugated_by(t.inverse());
                if (!k.contains(y))
                    continue;
                // conjugate character: psi(r^-1 y r)
                sum[c] += chi[h.class_of(y.conjugated_by(r_inv))];
            }
        }
    }
    report.mackey_sum = std::move(sum);
    report.holds = report.mackey_sum == report.induced_then_restricted;
    return report;
}

} // namespace depthlab
