#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// algorithms; permutations are plain image vectors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "depthlab/permutation.hpp"

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm compose(const Perm& a, const Perm& b) // a after b
{
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

inline Perm inverse(const Perm& a)
{
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[a[i]] = static_cast<std::uint32_t>(i);
    return r;
}

inline Perm identity(std::size_t n)
{
    Perm r(n);
    std::iota(r.begin(), r.end(), 0u);
    return r;
}

inline Perm of(const depthlab::Permutation& p) { return Perm(p.images().begin(), p.images().end()); }

/// Breadth-first closure under right multiplication by generators.
inline std::set<Perm> closure(std::size_t degree, const std::vector<Perm>& gens)
{
    std::set<Perm> seen{identity(degree)};
    std::vector<Perm> frontier{identity(degree)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Perm y = compose(x, g);
                if (seen.insert(y).second)
                    next.push_back(y);
            }
        frontier = std::move(next);
    }
    return seen;
}

inline std::set<Perm> closure(const depthlab::PermGroup& g)
{
    std::vector<Perm> gens;
    for (const auto& x : g.generators())
        gens.push_back(of(x));
    return closure(g.degree(), gens);
}

/// Conjugacy classes as sets, in no particular order.
inline std::vector<std::set<Perm>> classes(const std::set<Perm>& group)
{
    std::vector<std::set<Perm>> out;
    std::set<Perm> done;
    for (const auto& x : group) {
        if (done.contains(x))
            continue;
        std::set<Perm> cls;
        for (const auto& g : group)
            cls.insert(compose(compose(g, x), inverse(g)));
        done.insert(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

/// Double cosets H x K as sets.
inline std::vector<std::set<Perm>> double_cosets(const std::set<Perm>& g, const std::set<Perm>& h,
                                                 const std::set<Perm>& k)
{
    std::vector<std::set<Perm>> out;
    std::set<Perm> done;
    for (const auto& x : g) {
        if (done.contains(x))
            continue;
        std::set<Perm> dc;
        for (const auto& a : h)
            for (const auto& b : k)
                dc.insert(compose(compose(a, x), b));
        done.insert(dc.begin(), dc.end());
        out.push_back(std::move(dc));
    }
    return out;
}

/// Intersection of all conjugates g H g^-1.
inline std::set<Perm> normal_core(const std::set<Perm>& g, const std::set<Perm>& h)
{
    std::set<Perm> core = h;
    for (const auto& x : g) {
        std::set<Perm> keep;
        for (const auto& y : core)
            if (h.contains(compose(compose(inverse(x), y), x)))
                keep.insert(y);
        core = std::move(keep);
    }
    return core;
}

inline bool is_normal(const std::set<Perm>& g, const std::set<Perm>& h) { return normal_core(g, h) == h; }

/// Every subgroup, as the closure of each subset reachable by adding one
/// cyclic subgroup at a time.
inline std::set<std::set<Perm>> all_subgroups(const std::set<Perm>& g)
{
    const std::size_t n = g.begin()->size();
    std::set<std::set<Perm>> found{{identity(n)}};
    std::vector<std::set<Perm>> frontier{{identity(n)}};
    while (!frontier.empty()) {
        std::vector<std::set<Perm>> next;
        for (const auto& s : frontier)
            for (const auto& x : g) {
                if (s.contains(x))
                    continue;
                std::vector<Perm> gens(s.begin(), s.end());
                gens.push_back(x);
                auto t = closure(n, gens);
                if (found.insert(t).second)
                    next.push_back(std::move(t));
            }
        frontier = std::move(next);
    }
    return found;
}

/// f^lambda by the hook length formula.
inline long long hook_length_degree(const std::vector<int>& lambda)
{
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    long long num = 1;
    for (int i = 2; i <= n; ++i)
        num *= i;
    long long hooks = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = 0;
            for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k)
                ++leg;
            hooks *= arm + leg + 1;
        }
    return num / hooks;
}

using IntMatrix = std::vector<std::vector<long long>>;

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix c(a.size(), std::vector<long long>(b.front().size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.front().size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline IntMatrix transpose(const IntMatrix& a)
{
    IntMatrix t(a.front().size(), std::vector<long long>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.front().size(); ++j)
            t[j][i] = a[i][j];
    return t;
}

inline IntMatrix power(const IntMatrix& a, unsigned k)
{
    IntMatrix r(a.size(), std::vector<long long>(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i][i] = 1;
    for (unsigned i = 0; i < k; ++i)
        r = multiply(r, a);
    return r;
}

/// Least q with x <= q y, or -1 when y vanishes where x does not.
inline long long min_multiplier(const IntMatrix& x, const IntMatrix& y)
{
    long long q = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x[i].size(); ++j) {
            if (y[i][j] == 0) {
                if (x[i][j] != 0)
                    return -1;
                continue;
            }
            q = std::max(q, (x[i][j] + y[i][j] - 1) / y[i][j]);
        }
    return q;
}

inline IntMatrix to_int(const depthlab::NonNegIntMatrix& m)
{
    IntMatrix r(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i][j] = static_cast<long long>(m(i, j));
    return r;
}

} // namespace oracle
