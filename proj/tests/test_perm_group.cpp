#include <gtest/gtest.h>

#include <cstdlib>

#include "depthlab/perm_group.hpp"
#include "support/groups.hpp"
#include "support/oracles.hpp"

using namespace depthlab;
using testing_groups::grp;

namespace {

std::set<oracle::Perm> as_set(const PermGroup& g)
{
    std::set<oracle::Perm> s;
    for (const auto& x : g.elements())
        s.insert(oracle::of(x));
    return s;
}

} // namespace

TEST(PermGroup, OrdersMatchClosure)
{
    for (const char* spec : {"S1", "S2", "S3", "S4", "S5", "A4", "A5", "C6", "D4", "D5", "F20", "V4", "Q8",
                             "gens=(1 2)(3 4),(1 2 3 4 5 6)", "deg=7:gens=(1 2 3)"}) {
        PermGroup g = grp(spec);
        EXPECT_EQ(g.order(), BigInt(oracle::closure(g).size())) << spec;
        EXPECT_EQ(as_set(g), oracle::closure(g)) << spec;
    }
}

TEST(PermGroup, LargeOrderWithoutEnumeration)
{
    PermGroup s10 = grp("S10");
    EXPECT_EQ(s10.order(), BigInt(3628800));
    EXPECT_TRUE(s10.contains(parse_cycles("(1 10)(2 3 4)", 10)));
    PermGroup a10 = grp("A10");
    EXPECT_EQ(a10.order(), BigInt(1814400));
    EXPECT_FALSE(a10.contains(parse_cycles("(1 10)", 10)));
    EXPECT_THROW((void)s10.elements(), resource_error);
}

TEST(PermGroup, EnumerationBoundFromEnvironment)
{
    ::setenv("DEPTHLAB_MAX_ORDER", "50", 1);
    EXPECT_THROW((void)grp("S5").elements(), resource_error);
    EXPECT_NO_THROW((void)grp("S4").elements());
    ::unsetenv("DEPTHLAB_MAX_ORDER");
    EXPECT_NO_THROW((void)grp("S5").elements());
}

TEST(PermGroup, ElementsSortedAndIndexed)
{
    PermGroup g = grp("S4");
    const auto& e = g.elements();
    EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
    EXPECT_TRUE(e.front().is_identity());
    for (std::size_t i = 0; i < e.size(); ++i)
        EXPECT_EQ(g.index_of(e[i]), i);
    EXPECT_FALSE(grp("A4").index_of(parse_cycles("(1 2)", 4)).has_value());
}

TEST(PermGroup, ConjugacyClassesMatchBruteForce)
{
    for (const char* spec : {"S3", "S4", "S5", "A4", "A5", "D4", "D5", "Q8", "F20", "C6"}) {
        PermGroup g = grp(spec);
        ClassPartition cp = conjugacy_classes(g);
        auto brute = oracle::classes(as_set(g));
        ASSERT_EQ(cp.size(), brute.size()) << spec;
        std::set<std::set<oracle::Perm>> expected(brute.begin(), brute.end());
        std::set<std::set<oracle::Perm>> got;
        for (const auto& cls : cp.classes) {
            std::set<oracle::Perm> s;
            for (auto idx : cls)
                s.insert(oracle::of(g.elements()[idx]));
            got.insert(s);
        }
        EXPECT_EQ(got, expected) << spec;
        EXPECT_TRUE(cp.representatives.front().is_identity());
    }
}

TEST(PermGroup, ClassOrderIsDeterministic)
{
    EXPECT_EQ(conjugacy_classes(grp("S3")).sizes, (std::vector<std::size_t>{1, 3, 2}));
    EXPECT_EQ(conjugacy_classes(grp("S4")).sizes, (std::vector<std::size_t>{1, 6, 3, 8, 6}));
    auto s4 = conjugacy_classes(grp("S4"));
    EXPECT_EQ(s4.element_orders, (std::vector<std::uint64_t>{1, 2, 2, 3, 4}));
}

TEST(PermGroup, TransversalAndDoubleCosets)
{
    PermGroup g = grp("S4");
    PermGroup h = grp("S3", 4);
    auto t = left_transversal(g, h);
    ASSERT_EQ(t.size(), 4u);
    EXPECT_TRUE(t.front().is_identity());
    std::set<oracle::Perm> covered;
    for (const auto& c : t)
        for (const auto& x : h.elements())
            covered.insert(oracle::of(c * x));
    EXPECT_EQ(covered.size(), 24u);

    PermGroup d4 = grp("D4");
    auto dc = double_cosets(g, h, d4);
    auto brute = oracle::double_cosets(as_set(g), as_set(h), as_set(d4));
    ASSERT_EQ(dc.size(), brute.size());
    std::multiset<std::size_t> sizes, brute_sizes;
    for (const auto& d : dc)
        sizes.insert(d.size);
    for (const auto& d : brute)
        brute_sizes.insert(d.size());
    EXPECT_EQ(sizes, brute_sizes);
    EXPECT_EQ(double_cosets(grp("S3"), grp("S2", 3), grp("S2", 3)).size(), 2u);
}

TEST(PermGroup, NormalityCoreAndClosure)
{
    PermGroup s4 = grp("S4");
    EXPECT_TRUE(is_normal(s4, grp("V4")));
    EXPECT_TRUE(is_normal(s4, grp("A4")));
    EXPECT_FALSE(is_normal(s4, grp("D4")));
    EXPECT_EQ(normal_core(s4, grp("D4")).order(), BigInt(4));
    EXPECT_EQ(as_set(normal_core(s4, grp("D4"))), as_set(grp("V4")));
    EXPECT_EQ(normal_core(s4, grp("S3", 4)).order(), BigInt(1));
    EXPECT_EQ(as_set(normal_closure(s4, grp("gens=(1 2)(3 4)"))), as_set(grp("V4")));
    EXPECT_EQ(normal_closure(s4, grp("gens=(1 2)", 4)).order(), BigInt(24));
    for (const char* spec : {"D4", "S3", "gens=(1 2)(3 4)", "gens=(1 2 3 4)"}) {
        PermGroup h = grp(spec, 4);
        EXPECT_EQ(as_set(normal_core(s4, h)), oracle::normal_core(as_set(s4), as_set(h))) << spec;
    }
}

TEST(PermGroup, IntersectionAndConjugates)
{
    PermGroup s4 = grp("S4");
    PermGroup d4 = grp("D4");
    auto x = parse_cycles("(2 3)", 4);
    PermGroup conj = conjugate_subgroup(d4, x);
    EXPECT_EQ(conj.order(), BigInt(8));
    for (const auto& y : d4.elements())
        EXPECT_TRUE(conj.contains(y.conjugated_by(x)));
    EXPECT_EQ(intersection(d4, conj).order(), BigInt(4));
    EXPECT_EQ(intersection(grp("A4"), grp("S3", 4)).order(), BigInt(3));
}

TEST(PermGroup, SubgroupCountsMatchBruteForce)
{
    for (auto [spec, count] : std::vector<std::pair<const char*, std::size_t>>{
             {"S3", 6}, {"A4", 10}, {"D4", 10}, {"Q8", 6}, {"S4", 30}}) {
        PermGroup g = grp(spec);
        auto subs = all_subgroups(g);
        EXPECT_EQ(subs.size(), count) << spec;
        EXPECT_EQ(oracle::all_subgroups(as_set(g)).size(), count) << spec;
        for (const auto& h : subs)
            EXPECT_TRUE(g.contains(h)) << spec;
    }
}

TEST(PermGroup, ContainmentErrors)
{
    EXPECT_THROW(require_subgroup(grp("A4"), grp("gens=(1 2)", 4)), containment_error);
    EXPECT_THROW(require_subgroup(grp("S4"), grp("S3")), containment_error);
    EXPECT_NO_THROW(require_subgroup(grp("S4"), grp("V4")));
}
