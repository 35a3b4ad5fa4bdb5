#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "depthlab/character_table.hpp"
#include "depthlab/induction.hpp"
#include "depthlab/symmetric_characters.hpp"
#include "support/float_character_table.hpp"
#include "support/groups.hpp"

using namespace depthlab;
using testing_groups::grp;

namespace {

std::vector<long long> degrees_of(const CharacterTable& t)
{
    std::vector<long long> d;
    for (const auto& x : t.degrees())
        d.push_back(static_cast<long long>(x));
    return d;
}

// Rows of the exact table as integer vectors, columns reordered to the
// symmetric-group cycle types.
std::vector<std::vector<long long>> by_cycle_type(const CharacterTable& t, const SymmetricCharacterTable& mn)
{
    std::vector<std::size_t> col;
    for (const auto& mu : mn.cycle_types) {
        std::size_t found = t.size();
        for (std::size_t c = 0; c < t.size(); ++c)
            if (t.classes().representatives[c].cycle_type() == mu)
                found = c;
        col.push_back(found);
    }
    std::vector<std::vector<long long>> rows;
    for (const auto& row : t.rows()) {
        std::vector<long long> r;
        for (std::size_t c : col)
            r.push_back(static_cast<long long>(*row[c].to_integer()));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

TEST(CharacterTable, SmallTablesExactly)
{
    auto s3 = character_table(grp("S3"));
    ASSERT_EQ(s3.size(), 3u);
    std::vector<std::vector<Cyclotomic>> expected{{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
    EXPECT_EQ(s3.rows(), expected);

    auto c1 = character_table(grp("C1"));
    ASSERT_EQ(c1.size(), 1u);
    EXPECT_EQ(c1.value(0, 0), Cyclotomic(1));

    auto c3 = character_table(grp("C3"));
    EXPECT_FALSE(c3.is_integral());
    EXPECT_EQ(c3.exponent(), 3u);
}

TEST(CharacterTable, DegreesOfNamedGroups)
{
    EXPECT_EQ(degrees_of(character_table(grp("S4"))), (std::vector<long long>{1, 1, 2, 3, 3}));
    EXPECT_EQ(degrees_of(character_table(grp("A4"))), (std::vector<long long>{1, 1, 1, 3}));
    EXPECT_EQ(degrees_of(character_table(grp("D4"))), (std::vector<long long>{1, 1, 1, 1, 2}));
    EXPECT_EQ(degrees_of(character_table(grp("Q8"))), (std::vector<long long>{1, 1, 1, 1, 2}));
    EXPECT_EQ(degrees_of(character_table(grp("A5"))), (std::vector<long long>{1, 3, 3, 4, 5}));
    EXPECT_EQ(degrees_of(character_table(grp("F20"))), (std::vector<long long>{1, 1, 1, 1, 4}));
    EXPECT_EQ(degrees_of(character_table(grp("S5"))), (std::vector<long long>{1, 1, 4, 4, 5, 5, 6}));
}

TEST(CharacterTable, DixonParametersChooseSmallestPrime)
{
    auto s3 = dixon_parameters(6, 6);
    EXPECT_EQ(s3.prime, 13u);
    auto a5 = dixon_parameters(30, 60);
    EXPECT_EQ(a5.prime, 151u);
    EXPECT_EQ(detail::modp::pow(a5.root, 30, a5.prime), 1u);
    for (std::uint64_t k : {2u, 3u, 5u, 6u, 10u, 15u})
        EXPECT_NE(detail::modp::pow(a5.root, k, a5.prime), 1u);
}

TEST(CharacterTable, OrthogonalityAndSquareSum)
{
    for (const char* spec : {"S3", "S4", "A4", "D4", "Q8", "C5", "C6", "D5", "F20", "A5", "S5", "gens=(1 2 3)(4 5)"}) {
        auto t = character_table(grp(spec));
        BigInt square_sum = 0;
        for (const auto& d : t.degrees())
            square_sum += d * d;
        EXPECT_EQ(square_sum, t.group().order()) << spec;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j)
                EXPECT_EQ(inner_product(t, t.character(i), t.character(j)), Rational(i == j ? 1 : 0)) << spec;
        // columns: sum_chi chi(g) conj(chi(h)) = |C_G(g)| [g ~ h]
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = 0; b < t.size(); ++b) {
                Cyclotomic s;
                for (std::size_t i = 0; i < t.size(); ++i)
                    s += t.value(i, a) * t.value(i, b).conj();
                BigInt expect = a == b ? BigInt(t.group().order() / t.classes().sizes[a]) : BigInt(0);
                EXPECT_EQ(s, Cyclotomic(expect)) << spec;
            }
    }
}

TEST(CharacterTable, RowOrderTrivialFirstThenByDegree)
{
    for (const char* spec : {"S4", "A5", "D5", "F20"}) {
        auto t = character_table(grp(spec));
        for (const auto& v : t.character(0))
            EXPECT_EQ(v, Cyclotomic(1)) << spec;
        auto d = t.degrees();
        EXPECT_TRUE(std::is_sorted(d.begin(), d.end())) << spec;
    }
}

TEST(CharacterTable, MurnaghanNakayamaMatchesHookLengths)
{
    for (std::size_t n = 1; n <= 8; ++n) {
        auto t = character_table_sn(n);
        const auto one = std::find(t.cycle_types.begin(), t.cycle_types.end(), Partition(n, 1)) - t.cycle_types.begin();
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
            std::vector<int> lambda(t.irreducibles[i].begin(), t.irreducibles[i].end());
            EXPECT_EQ(t.values[i][one], oracle::hook_length_degree(lambda)) << n;
            total += static_cast<std::uint64_t>(t.values[i][one] * t.values[i][one]);
        }
        std::uint64_t fact = 1;
        for (std::size_t i = 2; i <= n; ++i)
            fact *= i;
        EXPECT_EQ(total, fact);
        std::uint64_t class_total = std::accumulate(t.class_sizes.begin(), t.class_sizes.end(), std::uint64_t{0});
        EXPECT_EQ(class_total, fact);
    }
    EXPECT_THROW(character_table_sn(9), input_error);
    EXPECT_THROW(character_table_sn(0), input_error);
}

TEST(CharacterTable, DixonMatchesMurnaghanNakayamaUpToRowOrder)
{
    for (std::size_t n = 3; n <= 6; ++n) {
        auto exact = character_table(grp("S" + std::to_string(n)));
        auto mn = character_table_sn(n);
        auto rows = by_cycle_type(exact, mn);
        auto expected = mn.values;
        std::sort(rows.begin(), rows.end());
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(rows, expected) << n;
    }
}

TEST(CharacterTable, FloatOracleAgrees)
{
    for (const char* spec : {"S4", "A4", "D5", "Q8", "F20", "A5", "C7"}) {
        auto exact = character_table(grp(spec));
        auto set = oracle::closure(exact.group());
        auto fl = oracle::float_character_table(set);
        ASSERT_EQ(fl.rows.size(), exact.size()) << spec;
        // oracle column of each exact class
        std::vector<std::size_t> col(exact.size());
        for (std::size_t c = 0; c < exact.size(); ++c)
            for (std::size_t k = 0; k < fl.classes.size(); ++k)
                if (fl.classes[k].contains(oracle::of(exact.classes().representatives[c])))
                    col[c] = k;
        std::vector<bool> used(fl.rows.size(), false);
        for (std::size_t i = 0; i < exact.size(); ++i) {
            bool matched = false;
            for (std::size_t k = 0; k < fl.rows.size() && !matched; ++k) {
                if (used[k])
                    continue;
                bool close = true;
                for (std::size_t c = 0; c < exact.size(); ++c)
                    close = close && std::abs(exact.value(i, c).to_complex() - fl.rows[k][col[c]]) < 1e-6;
                if (close)
                    used[k] = matched = true;
            }
            EXPECT_TRUE(matched) << spec << " row " << i;
        }
    }
}

TEST(CharacterTable, ClassStructureConstantsCountProducts)
{
    auto g = grp("S4");
    auto cp = conjugacy_classes(g);
    auto a = class_structure_constants(g, cp);
    // C_j C_k contains z_l exactly a[j][k][l] times; summing over l weighted by
    // class size gives |C_j| |C_k|
    for (std::size_t j = 0; j < cp.size(); ++j)
        for (std::size_t k = 0; k < cp.size(); ++k) {
            std::uint64_t total = 0;
            for (std::size_t l = 0; l < cp.size(); ++l)
                total += a[j][k][l] * cp.sizes[l];
            EXPECT_EQ(total, cp.sizes[j] * cp.sizes[k]);
        }
}
