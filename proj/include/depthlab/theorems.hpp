#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "depthlab/character_table.hpp"
#include "depthlab/depth.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/induction.hpp"
#include "depthlab/perm_group.hpp"

namespace depthlab {

struct FrobeniusPairReport {
    bool is_frobenius = false;
    std::optional<PermGroup> kernel;
    std::size_t double_coset_count = 0;
    bool s_formula_ok = false;
    std::string reason; ///< why the pair is not Frobenius, when it is not
    std::optional<Permutation> witness; ///< x outside H with H ∩ xHx^-1 nontrivial
};

namespace detail {

inline void require_proper_nontrivial(const PermGroup& g, const PermGroup& h)
{
    require_subgroup(g, h);
    if (h.order() == 1)
        throw input_error("Frobenius complement candidate must be nontrivial");
    if (h.order() == g.order())
        throw input_error("Frobenius complement candidate must be a proper subgroup");
}

inline bool s_formula_holds(const NonNegIntMatrix& s, const std::vector<BigInt>& degrees, std::size_t n)
{
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) {
            BigInt expected = BigInt(n - 1) * degrees[i] * degrees[j] + (i == j ? 1 : 0);
            if (s(i, j) != expected)
                return false;
        }
    return true;
}

} // namespace detail

/// Every entry of S = M M^t equals (n-1) deg(psi) deg(chi) + [psi == chi],
/// with n the number of (H, H)-double cosets. Requires a Frobenius pair.
inline bool frobenius_s_formula_check(const CharacterTable& g, const CharacterTable& h);

/// Checks that H is a Frobenius complement in G: H ∩ xHx^-1 = 1 for x outside
/// H, and the elements outside all conjugates of H (plus 1) form a normal
/// subgroup M with |M||H| = |G|.
inline FrobeniusPairReport verify_frobenius_pair(const CharacterTable& g, const CharacterTable& h)
{
    const PermGroup& G = g.group();
    const PermGroup& H = h.group();
    detail::require_proper_nontrivial(G, H);

    FrobeniusPairReport report;
    report.double_coset_count = double_cosets(G, H, H).size();

    const auto reps = left_transversal(G, H);
    for (std::size_t i = 1; i < reps.size(); ++i) {
        const Permutation x_inv = reps[i].inverse();
        for (const auto& y : H.elements()) {
            if (y.is_identity())
                continue;
            if (H.contains(y.conjugated_by(x_inv))) {
                report.reason = "H meets its conjugate by " + reps[i].to_cycles() + " in " + y.to_cycles();
                report.witness = reps[i];
                return report;
            }
        }
    }

    std::unordered_set<Permutation> conjugates;
    for (const auto& x : reps)
        for (const auto& y : H.elements())
            if (!y.is_identity())
                conjugates.insert(y.conjugated_by(x));
    std::vector<Permutation> kernel_elements;
    for (const auto& x : G.elements())
        if (!conjugates.contains(x))
            kernel_elements.push_back(x);

    PermGroup kernel = subgroup_from_elements(G.degree(), kernel_elements);
    if (kernel.order() != BigInt(kernel_elements.size())) {
        report.reason = "complement of the conjugates of H is not closed under multiplication";
        return report;
    }
    if (!is_normal(G, kernel)) {
        report.reason = "candidate kernel is not normal";
        return report;
    }
    if (kernel.order() * H.order() != G.order()) {
        report.reason = "candidate kernel has the wrong order";
        return report;
    }
    report.is_frobenius = true;
    report.kernel = std::move(kernel);
    report.s_formula_ok = frobenius_s_formula_check(g, h);
    return report;
}

inline bool frobenius_s_formula_check(const CharacterTable& g, const CharacterTable& h)
{
    const PermGroup& G = g.group();
    const PermGroup& H = h.group();
    detail::require_proper_nontrivial(G, H);
    const auto reps = left_transversal(G, H);
    for (std::size_t i = 1; i < reps.size(); ++i)
        for (const auto& y : H.elements())
            if (!y.is_identity() && H.contains(y.conjugated_by(reps[i].inverse())))
                throw input_error("not a Frobenius pair: H meets a conjugate nontrivially");
    const std::size_t n = double_cosets(G, H, H).size();
    const NonNegIntMatrix s = s_matrix(inclusion_matrix(g, h).entries);
    return detail::s_formula_holds(s, h.degrees(), n);
}

struct TowerReport {
    bool matrix_verdict = false; ///< N M M^t M <= q N M on inclusion matrices
    bool core_verdict = false;   ///< H contained in the normal core of N in G
    bool agree = false;
    std::optional<BigInt> multiplier;
    std::optional<Coordinate> failure;
};

/// Decides whether the tower G >= N >= H is depth three twice: from the
/// inclusion matrices and from containment of H in core_G(N).
inline TowerReport tower_core_equivalence(const CharacterTable& g, const CharacterTable& n, const CharacterTable& h)
{
    require_subgroup(g.group(), n.group(), "N");
    require_subgroup(n.group(), h.group(), "H");
    TowerReport report;
    const TowerTest t = tower_is_d3(inclusion_matrix(n, h).entries, inclusion_matrix(g, n).entries);
    report.matrix_verdict = t.holds;
    report.multiplier = t.multiplier;
    report.failure = t.failure;
    report.core_verdict = normal_core(g.group(), n.group()).contains(h.group());
    report.agree = report.matrix_verdict == report.core_verdict;
    return report;
}

struct CharCriterionReport {
    bool holds = false;
    std::optional<Coordinate> failure; ///< (psi, chi) with the Res-Ind^2 term positive and Res-Ind zero
    std::vector<std::vector<BigInt>> once;  ///< rows: psi induced and restricted once
    std::vector<std::vector<BigInt>> twice; ///< rows: twice
};

/// Depth three via characters: for all psi, chi in Irr(H),
/// <Res Ind Res Ind psi, chi> <= q <Res Ind psi, chi> for some q.
inline CharCriterionReport d3_char_criterion(const CharacterTable& g, const CharacterTable& h)
{
    require_subgroup(g.group(), h.group());
    CharCriterionReport report;
    report.holds = true;
    for (std::size_t psi = 0; psi < h.size(); ++psi) {
        report.once.push_back(res_ind_decompose(g, h, psi, 1));
        report.twice.push_back(res_ind_decompose(g, h, psi, 2));
        for (std::size_t chi = 0; chi < h.size(); ++chi) {
            if (report.holds && report.once[psi][chi] == 0 && report.twice[psi][chi] != 0) {
                report.holds = false;
                report.failure = Coordinate{psi, chi};
            }
        }
    }
    return report;
}

} // namespace depthlab
