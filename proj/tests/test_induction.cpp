#include <gtest/gtest.h>

#include "depthlab/induction.hpp"
#include "depthlab/depth.hpp"
#include "support/groups.hpp"
#include "support/oracles.hpp"

using namespace depthlab;
using testing_groups::grp;

TEST(Induction, FusionOfKleinGroupInS4)
{
    auto g = character_table(grp("S4"));
    auto h = character_table(grp("V4"));
    auto f = class_fusion(g, h);
    ASSERT_EQ(f.map.size(), 4u);
    EXPECT_EQ(f.map[0], 0u);
    // the three involutions all land in the (2,2) class
    for (std::size_t c = 1; c < 4; ++c)
        EXPECT_EQ(g.classes().representatives[f.map[c]].cycle_type(), (std::vector<std::size_t>{2, 2}));
}

TEST(Induction, SignRestrictsToTrivialOnKleinGroup)
{
    auto g = character_table(grp("S4"));
    auto h = character_table(grp("V4"));
    auto sign = g.character(1);
    auto res = restrict(sign, class_fusion(g, h));
    for (const auto& v : res)
        EXPECT_EQ(v, Cyclotomic(1));
    EXPECT_THROW(restrict(h.character(0), class_fusion(g, h)), input_error);
}

TEST(Induction, InducedTrivialIsPermutationCharacter)
{
    for (auto [gs, hs] : std::vector<std::pair<const char*, const char*>>{{"S4", "S3"}, {"S4", "D4"}, {"A5", "A4"}}) {
        auto gg = grp(gs);
        auto hh = grp(hs, gg.degree());
        auto g = character_table(gg);
        auto h = character_table(hh);
        auto ind = induce(h.character(0), g, h);
        auto t = left_transversal(gg, hh);
        for (std::size_t c = 0; c < g.size(); ++c) {
            // number of cosets xH fixed by the class representative
            long long fixed = 0;
            for (const auto& x : t)
                fixed += hh.contains(x.inverse() * g.classes().representatives[c] * x) ? 1 : 0;
            EXPECT_EQ(ind[c], Cyclotomic(fixed)) << gs << " " << hs;
        }
    }
}

TEST(Induction, InclusionMatricesOfSmallPairs)
{
    auto m = inclusion_matrix(grp("S3"), grp("S2", 3));
    EXPECT_EQ(m.entries, (NonNegIntMatrix{{1, 0, 1}, {0, 1, 1}}));
    EXPECT_EQ(m.row_labels, (std::vector<std::string>{"psi1", "psi2"}));
    EXPECT_EQ(m.to_text(), "      chi1  chi2  chi3\npsi1     1     0     1\npsi2     0     1     1\n");

    auto m4 = inclusion_matrix(grp("S4"), grp("S3", 4));
    EXPECT_EQ(m4.entries, (NonNegIntMatrix{{1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}, {0, 0, 1, 1, 1}}));

    // column sums weighted by psi degrees give chi degrees
    auto g = character_table(grp("S5"));
    auto h = character_table(grp("S4", 5));
    auto m5 = inclusion_matrix(g, h);
    for (std::size_t j = 0; j < g.size(); ++j) {
        BigInt deg = 0;
        for (std::size_t i = 0; i < h.size(); ++i)
            deg += m5(i, j) * h.degree(i);
        EXPECT_EQ(deg, g.degree(j));
    }
    EXPECT_THROW(inclusion_matrix(grp("A4"), grp("S2", 4)), containment_error);
}

TEST(Induction, TrivialSubgroupAndWholeGroup)
{
    auto g = grp("S3");
    auto whole = inclusion_matrix(g, g);
    EXPECT_EQ(whole.entries, NonNegIntMatrix::identity(3));
    auto triv = inclusion_matrix(g, PermGroup::trivial(3));
    EXPECT_EQ(triv.entries, (NonNegIntMatrix{{1, 1, 2}}));
}

TEST(Induction, ResIndPowersAreRowsOfSPowers)
{
    for (auto [gs, hs] : std::vector<std::pair<const char*, const char*>>{{"S4", "S3"}, {"S4", "D4"}, {"A4", "C3"}}) {
        auto gg = grp(gs);
        auto g = character_table(gg);
        auto h = character_table(grp(hs, gg.degree()));
        auto s = s_matrix(inclusion_matrix(g, h).entries);
        for (unsigned k = 1; k <= 3; ++k) {
            auto sk = s.pow(k);
            for (std::size_t psi = 0; psi < h.size(); ++psi) {
                auto row = res_ind_decompose(g, h, psi, k);
                for (std::size_t j = 0; j < h.size(); ++j)
                    EXPECT_EQ(row[j], sk(psi, j)) << gs << " " << hs << " k=" << k;
            }
        }
    }
    auto g = character_table(grp("S3"));
    auto h = character_table(grp("S2", 3));
    EXPECT_THROW(res_ind_decompose(g, h, 0, 0), input_error);
    EXPECT_THROW(res_ind_decompose(g, h, 5, 1), input_error);
}

TEST(Induction, MackeyDecomposition)
{
    auto g = character_table(grp("S4"));
    for (const char* n : {"D4", "A4", "V4", "S3", "gens=(1 2)"}) {
        for (const char* hs : {"S3", "D4", "gens=(1 2 3 4)"}) {
            auto nt = character_table(grp(n, 4));
            auto ht = character_table(grp(hs, 4));
            for (std::size_t psi = 0; psi < ht.size(); ++psi) {
                auto r = mackey_check(g, nt, ht, psi);
                EXPECT_TRUE(r.holds) << n << " " << hs << " psi" << psi;
                auto brute = oracle::double_cosets(oracle::closure(g.group()), oracle::closure(nt.group()),
                                                   oracle::closure(ht.group()));
                EXPECT_EQ(r.double_coset_count, brute.size());
            }
        }
    }
}

TEST(Induction, InnerProductRejectsShapeMismatch)
{
    auto t = character_table(grp("S3"));
    EXPECT_THROW(inner_product(t, {1, 1}, {1, 1, 1}), input_error);
}
