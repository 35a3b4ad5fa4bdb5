#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "depthlab/errors.hpp"

namespace depthlab {

using Partition = std::vector<std::size_t>;

/// Partitions of n in decreasing lexicographic order, starting with (n).
inline std::vector<Partition> partitions(std::size_t n)
{
    std::vector<Partition> out;
    Partition current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_part) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Character table of S_n from the Murnaghan-Nakayama rule.
/// Rows are indexed by partitions (irreducibles), columns by cycle types.
struct SymmetricCharacterTable {
    std::size_t n = 0;
    std::vector<Partition> irreducibles;
    std::vector<Partition> cycle_types;
    std::vector<std::uint64_t> class_sizes;
    std::vector<std::vector<long long>> values;
};

namespace detail {

// chi^lambda(mu) with lambda given by its beta-set (first-column hook lengths).
inline long long mn_value(std::vector<std::size_t> beta, const Partition& mu, std::size_t next,
                          std::map<std::pair<std::vector<std::size_t>, std::size_t>, long long>& memo)
{
    if (next == mu.size())
        return 1;
    auto key = std::make_pair(beta, next);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    const std::size_t k = mu[next];
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < k)
            continue;
        std::size_t target = beta[i] - k;
        if (std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        // removing a rim hook of length k: height = beta entries strictly between
        std::size_t height = 0;
        for (std::size_t b : beta)
            if (b > target && b < beta[i])
                ++height;
        std::vector<std::size_t> next_beta = beta;
        next_beta[i] = target;
        long long sub = mn_value(std::move(next_beta), mu, next + 1, memo);
        total += (height % 2 == 0 ? sub : -sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace detail

inline std::uint64_t centralizer_order(const Partition& mu)
{
    std::uint64_t z = 1;
    std::map<std::size_t, std::size_t> mult;
    for (std::size_t part : mu)
        ++mult[part];
    for (auto [part, m] : mult) {
        for (std::size_t i = 0; i < m; ++i)
            z *= part;
        for (std::size_t i = 2; i <= m; ++i)
            z *= i;
    }
    return z;
}

/// chi^lambda evaluated on the class of cycle type mu.
inline long long murnaghan_nakayama(const Partition& lambda, const Partition& mu)
{
    std::vector<std::size_t> beta(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        beta[i] = lambda[i] + (lambda.size() - 1 - i);
    std::map<std::pair<std::vector<std::size_t>, std::size_t>, long long> memo;
    return detail::mn_value(std::move(beta), mu, 0, memo);
}

inline SymmetricCharacterTable character_table_sn(std::size_t n)
{
    if (n < 1 || n > 8)
        throw input_error("symmetric-group oracle supports 1 <= n <= 8, got " + std::to_string(n));
    SymmetricCharacterTable t;
    t.n = n;
    t.irreducibles = partitions(n);
    t.cycle_types = partitions(n);
    std::uint64_t factorial = 1;
    for (std::size_t i = 2; i <= n; ++i)
        factorial *= i;
    for (const auto& mu : t.cycle_types)
        t.class_sizes.push_back(factorial / centralizer_order(mu));
    for (const auto& lambda : t.irreducibles) {
        std::vector<long long> row;
        for (const auto& mu : t.cycle_types)
            row.push_back(murnaghan_nakayama(lambda, mu));
        t.values.push_back(std::move(row));
    }
    return t;
}

} // namespace depthlab
