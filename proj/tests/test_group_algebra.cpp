#include <gtest/gtest.h>

#include <random>

#include "depthlab/group_algebra.hpp"
#include "support/groups.hpp"

using namespace depthlab;
using testing_groups::grp;
using E = GroupAlgebraElement;

namespace {

struct Pair {
    const char* g;
    const char* h;
};

const std::vector<Pair> corpus{{"S3", "S2"}, {"S3", "C3"}, {"S4", "D4"}, {"S4", "A4"},
                               {"S4", "V4"}, {"A4", "V4"}, {"S4", "S3"}, {"D4", "gens=(1 3)(2 4)"}};

ExtensionPtr ext(const Pair& p)
{
    auto g = grp(p.g);
    return make_extension(g, grp(p.h, g.degree()));
}

} // namespace

TEST(GroupAlgebra, TransversalDecomposition)
{
    auto e = ext({"S4", "D4"});
    EXPECT_EQ(e->index_count(), 3u);
    EXPECT_EQ(e->transversal(0), e->identity());
    for (std::size_t x = 0; x < e->order(); ++x) {
        auto xi = static_cast<E::index>(x);
        EXPECT_TRUE(e->in_subgroup(e->sub_part(xi)));
        EXPECT_EQ(e->mul(e->transversal(e->coset(xi)), e->sub_part(xi)), xi);
    }
}

TEST(GroupAlgebra, TensorNormalizationIsBalanced)
{
    std::mt19937 rng(3);
    for (const auto& p : corpus) {
        auto e = ext(p);
        std::vector<E::index> sub;
        for (std::size_t b = 0; b < e->order(); ++b)
            if (e->in_subgroup(static_cast<E::index>(b)))
                sub.push_back(static_cast<E::index>(b));
        std::uniform_int_distribution<std::size_t> any(0, e->order() - 1), in_sub(0, sub.size() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            auto x = static_cast<E::index>(any(rng)), y = static_cast<E::index>(any(rng));
            auto b = sub[in_sub(rng)];
            EXPECT_EQ(TensorElement2::simple(e, e->mul(x, b), y), TensorElement2::simple(e, x, e->mul(b, y)))
                << p.g << " " << p.h;
            TensorElement3 left(e), right(e);
            auto z = static_cast<E::index>(any(rng));
            left.add_simple(x, e->mul(y, b), z, 1);
            right.add_simple(x, y, e->mul(b, z), 1);
            EXPECT_EQ(left, right);
        }
    }
}

TEST(GroupAlgebra, FrobeniusHomIsBimoduleMap)
{
    for (const auto& p : corpus) {
        auto e = ext(p);
        for (std::size_t a = 0; a < e->order(); ++a)
            for (std::size_t b = 0; b < e->order(); ++b) {
                if (!e->in_subgroup(static_cast<E::index>(b)))
                    continue;
                for (std::size_t c = 0; c < e->order(); ++c) {
                    if (!e->in_subgroup(static_cast<E::index>(c)))
                        continue;
                    E ea = E::basis(e, static_cast<E::index>(a));
                    E eb = E::basis(e, static_cast<E::index>(b));
                    E ec = E::basis(e, static_cast<E::index>(c));
                    EXPECT_EQ(frobenius_hom(eb * ea * ec), eb * frobenius_hom(ea) * ec);
                }
            }
    }
}

TEST(GroupAlgebra, FrobeniusSystemAndSeparability)
{
    for (const auto& p : corpus) {
        auto g = grp(p.g);
        auto h = grp(p.h, g.degree());
        EXPECT_TRUE(check_frobenius_system(g, h).passed) << p.g << " " << p.h;
        auto s = separability_element(g, h);
        EXPECT_TRUE(s.central) << p.g << " " << p.h;
        EXPECT_TRUE(s.multiplies_to_one) << p.g << " " << p.h;
    }
}

TEST(GroupAlgebra, ArithmeticOnCombinations)
{
    auto e = ext({"S3", "S2"});
    E a = E::basis(e, parse_cycles("(1 2 3)", 3), 2) + E::basis(e, parse_cycles("(1 2)", 3), Rational(1, 2));
    E b = E::basis(e, parse_cycles("(1 3 2)", 3));
    E prod = a * b;
    E expect = E::basis(e, e->identity(), 2) + E::basis(e, parse_cycles("(1 2)", 3) * parse_cycles("(1 3 2)", 3), Rational(1, 2));
    EXPECT_EQ(prod, expect);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(Rational(2) * b, b + b);
    EXPECT_THROW(E::basis(e, parse_cycles("(1 2)", 3).extended(4)), input_error);
}

TEST(GroupAlgebra, DepthTwoQuasiBasesExactlyForNormalSubgroups)
{
    for (const char* spec : {"S3", "D4", "A4", "S4"}) {
        auto g = grp(spec);
        for (const auto& n : all_subgroups(g)) {
            auto r = verify_d2_quasibases(g, n);
            EXPECT_EQ(r.passed, is_normal(g, n)) << spec << " |N|=" << n.order();
            if (!r.passed)
                EXPECT_TRUE(r.counterexample.has_value());
        }
    }
}

TEST(GroupAlgebra, DepthThreeQuasiBasesFromDepthTwo)
{
    EXPECT_TRUE(verify_d3_from_d2(grp("S3"), grp("C3")).passed);
    EXPECT_TRUE(verify_d3_from_d2(grp("A4"), grp("V4")).passed);
    EXPECT_TRUE(verify_d3_from_d2(grp("S3"), grp("S3")).passed);
    EXPECT_TRUE(verify_d3_from_d2(grp("D4"), grp("gens=(1 3)(2 4)")).passed);
    EXPECT_TRUE(verify_d3_from_d2(grp("S4"), grp("A4")).passed);
}

TEST(GroupAlgebra, RejectsLargeGroups)
{
    EXPECT_THROW(make_extension(grp("S7"), grp("S6", 7)), resource_error);
}
