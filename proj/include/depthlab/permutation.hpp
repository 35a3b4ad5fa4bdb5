#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "depthlab/errors.hpp"

namespace depthlab {

/// A permutation of {0, ..., n-1} stored as its image array.
///
/// Products compose right to left: (a * b)(x) == a(b(x)). The ordering is
/// lexicographic on the image arrays, which puts the identity first among
/// permutations of equal degree.
class Permutation {
public:
    using point_type = std::uint32_t;

    Permutation() = default;

    explicit Permutation(std::size_t degree) : images_(degree)
    {
        std::iota(images_.begin(), images_.end(), point_type{0});
    }

    /// Throws input_error unless `images` is a bijection of {0, ..., n-1}.
    explicit Permutation(std::vector<point_type> images) : images_(std::move(images))
    {
        std::vector<bool> seen(images_.size(), false);
        for (point_type p : images_) {
            if (p >= images_.size() || seen[p])
                throw input_error("permutation images are not a bijection");
            seen[p] = true;
        }
    }

    static Permutation identity(std::size_t degree) { return Permutation(degree); }

    std::size_t degree() const noexcept { return images_.size(); }
    std::span<const point_type> images() const noexcept { return images_; }

    point_type operator()(point_type x) const { return images_[x]; }
    point_type operator[](point_type x) const { return images_[x]; }

    bool is_identity() const noexcept
    {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i)
                return false;
        return true;
    }

    Permutation inverse() const
    {
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            r.images_[images_[i]] = static_cast<point_type>(i);
        return r;
    }

    friend Permutation operator*(const Permutation& a, const Permutation& b)
    {
        if (a.degree() != b.degree())
            throw input_error("cannot compose permutations of different degree");
        Permutation r;
        r.images_.resize(a.images_.size());
        for (std::size_t i = 0; i < a.images_.size(); ++i)
            r.images_[i] = a.images_[b.images_[i]];
        return r;
    }

    /// g * this * g^-1
    Permutation conjugated_by(const Permutation& g) const
    {
        if (g.degree() != degree())
            throw input_error("cannot conjugate by a permutation of different degree");
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            r.images_[g.images_[i]] = g.images_[images_[i]];
        return r;
    }

    Permutation pow(long long k) const
    {
        Permutation base = k < 0 ? inverse() : *this;
        unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                                     : static_cast<unsigned long long>(k);
        Permutation result(degree());
        while (e > 0) {
            if (e & 1u)
                result = result * base;
            base = base * base;
            e >>= 1u;
        }
        return result;
    }

    /// Cycle lengths in non-increasing order, fixed points included.
    std::vector<std::size_t> cycle_type() const
    {
        std::vector<std::size_t> lengths;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i])
                continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = images_[j]) {
                seen[j] = true;
                ++len;
            }
            lengths.push_back(len);
        }
        std::sort(lengths.begin(), lengths.end(), std::greater<>());
        return lengths;
    }

    std::uint64_t order() const
    {
        std::uint64_t o = 1;
        for (std::size_t len : cycle_type())
            o = std::lcm(o, static_cast<std::uint64_t>(len));
        return o;
    }

    bool is_even() const
    {
        std::size_t transpositions = 0;
        for (std::size_t len : cycle_type())
            transpositions += len - 1;
        return transpositions % 2 == 0;
    }

    /// Same permutation acting on {0, ..., new_degree-1}, fixing the added points.
    Permutation extended(std::size_t new_degree) const
    {
        if (new_degree < degree())
            throw input_error("cannot shrink the degree of a permutation");
        Permutation r(new_degree);
        std::copy(images_.begin(), images_.end(), r.images_.begin());
        return r;
    }

    /// Disjoint-cycle notation with 1-based points; "()" for the identity.
    std::string to_cycles() const
    {
        std::string out;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i] || images_[i] == i)
                continue;
            out += '(';
            for (std::size_t j = i; !seen[j]; j = images_[j]) {
                seen[j] = true;
                if (j != i)
                    out += ' ';
                out += std::to_string(j + 1);
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b)
    {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<point_type> images_;
};

namespace detail {

inline void skip_space(std::string_view text, std::size_t& pos)
{
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
        ++pos;
}

} // namespace detail

/// Parses disjoint-cycle notation such as "(1 2 3)(4 5)" with 1-based points.
/// Points inside a cycle may be separated by spaces or commas.
inline Permutation parse_cycles(std::string_view text, std::size_t degree)
{
    std::vector<Permutation::point_type> images(degree);
    std::iota(images.begin(), images.end(), Permutation::point_type{0});
    std::vector<bool> used(degree, false);

    std::size_t pos = 0;
    detail::skip_space(text, pos);
    if (pos == text.size())
        throw input_error("empty cycle notation (use \"()\" for the identity)");

    while (pos < text.size()) {
        if (text[pos] != '(')
            throw input_error("malformed cycle notation: expected '(' in \"" +
                              std::string(text) + "\"");
        ++pos;
        std::vector<std::size_t> cycle;
        for (;;) {
            detail::skip_space(text, pos);
            if (pos < text.size() && text[pos] == ',') {
                if (cycle.empty())
                    throw input_error("malformed cycle notation: leading ','");
                ++pos;
                detail::skip_space(text, pos);
                if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
                    throw input_error("malformed cycle notation: dangling ','");
            }
            if (pos >= text.size())
                throw input_error("malformed cycle notation: unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] < '0' || text[pos] > '9')
                throw input_error(std::string("malformed cycle notation: unexpected '") +
                                  text[pos] + "'");
            std::size_t value = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
                if (value > (std::size_t{1} << 30))
                    throw input_error("point out of range in cycle notation");
                ++pos;
            }
            if (value == 0)
                throw input_error("cycle points are 1-based; got 0");
            if (value > degree)
                throw input_error("point " + std::to_string(value) + " exceeds degree " +
                                  std::to_string(degree));
            if (used[value - 1])
                throw input_error("point " + std::to_string(value) +
                                  " repeated in cycle notation");
            used[value - 1] = true;
            cycle.push_back(value - 1);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            images[cycle[i]] =
                static_cast<Permutation::point_type>(cycle[(i + 1) % cycle.size()]);
        detail::skip_space(text, pos);
    }
    return Permutation(std::move(images));
}

} // namespace depthlab

template <>
struct std::hash<depthlab::Permutation> {
    std::size_t operator()(const depthlab::Permutation& p) const noexcept
    {
        // FNV-1a over the image array
        std::size_t h = 1469598103934665603ull;
        for (auto x : p.images()) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};
