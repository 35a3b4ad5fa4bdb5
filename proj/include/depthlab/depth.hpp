#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "depthlab/bigint.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/matrix.hpp"

namespace depthlab {

inline constexpr unsigned default_depth_cap = 24;

struct Coordinate {
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

inline void require_same_shape(const NonNegIntMatrix& x, const NonNegIntMatrix& y)
{
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw input_error("matrices have different shapes: " + std::to_string(x.rows()) + "x" +
                          std::to_string(x.cols()) + " vs " + std::to_string(y.rows()) + "x" +
                          std::to_string(y.cols()));
}

/// First coordinate (row-major) where y is zero but x is not.
inline std::optional<Coordinate> support_violation(const NonNegIntMatrix& x, const NonNegIntMatrix& y)
{
    require_same_shape(x, y);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (y(i, j) == 0 && x(i, j) != 0)
                return Coordinate{i, j};
    return std::nullopt;
}

/// True iff some positive integer q gives x <= q y entrywise, i.e. every zero
/// of y is a zero of x.
inline bool support_dominated(const NonNegIntMatrix& x, const NonNegIntMatrix& y)
{
    return !support_violation(x, y).has_value();
}

/// Least q with x <= q y entrywise.
inline BigInt minimal_multiplier(const NonNegIntMatrix& x, const NonNegIntMatrix& y)
{
    if (auto bad = support_violation(x, y))
        throw input_error("no multiplier exists: x is positive where y vanishes at (" +
                          std::to_string(bad->row) + "," + std::to_string(bad->col) + ")");
    if (x.is_zero())
        throw input_error("minimal multiplier is undefined for a zero matrix");
    BigInt q = 0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (y(i, j) == 0)
                continue;
            BigInt c = (x(i, j) + y(i, j) - 1) / y(i, j);
            if (c > q)
                q = c;
        }
    return q;
}

/// S = M M^t.
inline NonNegIntMatrix s_matrix(const NonNegIntMatrix& m) { return m * m.transpose(); }

/// One depth-n test. `lhs <= q rhs` is the inequality being decided.
struct DepthTest {
    unsigned depth = 0;
    bool holds = false;
    std::string inequality;
    NonNegIntMatrix lhs;
    NonNegIntMatrix rhs;
    std::optional<BigInt> multiplier;  ///< least q, when the test holds
    std::optional<Coordinate> failure; ///< rhs zero, lhs positive, when it fails
};

namespace detail {

inline std::string power_text(const char* base, unsigned k)
{
    if (k == 0)
        return "";
    if (k == 1)
        return base;
    return std::string(base) + "^" + std::to_string(k);
}

inline DepthTest decide(unsigned depth, std::string inequality, NonNegIntMatrix lhs, NonNegIntMatrix rhs)
{
    DepthTest t;
    t.depth = depth;
    t.inequality = std::move(inequality);
    t.failure = support_violation(lhs, rhs);
    t.holds = !t.failure;
    if (t.holds)
        t.multiplier = lhs.is_zero() ? BigInt(1) : minimal_multiplier(lhs, rhs);
    t.lhs = std::move(lhs);
    t.rhs = std::move(rhs);
    return t;
}

} // namespace detail

/// Depth-n test on an inclusion matrix M with S = M M^t.
/// Odd n = 2m+1: S^(m+1) <= q S^m. Even n = 2m: S^m M <= q S^(m-1) M,
/// which for n = 2 is M M^t M <= q M.
inline DepthTest is_depth_n(const NonNegIntMatrix& m, unsigned n)
{
    if (n < 2)
        throw input_error("depth is defined for n >= 2, got " + std::to_string(n));
    const NonNegIntMatrix s = s_matrix(m);
    const unsigned half = n / 2;
    if (n % 2 == 1) {
        std::string text = detail::power_text("S", half + 1) + " <= q " +
                           (half == 0 ? std::string("I") : detail::power_text("S", half));
        return detail::decide(n, std::move(text), s.pow(half + 1), s.pow(half));
    }
    std::string rhs_text = half == 1 ? "M" : detail::power_text("S", half - 1) + " M";
    return detail::decide(n, detail::power_text("S", half) + " M <= q " + rhs_text, s.pow(half) * m,
                          s.pow(half - 1) * m);
}

struct DepthFailure {
    unsigned depth = 0;
    Coordinate at;
    BigInt lhs_value;
};

struct DepthReport {
    std::optional<unsigned> minimal_depth; ///< empty when no depth up to the cap works
    unsigned cap = default_depth_cap;
    std::optional<DepthTest> witness;
    std::vector<DepthFailure> failures; ///< one per depth below the minimum
};

/// Least n in [2, cap] passing is_depth_n, with the witness inequality and
/// a failure coordinate for every smaller depth.
inline DepthReport minimal_depth(const NonNegIntMatrix& m, unsigned cap = default_depth_cap)
{
    if (cap < 2)
        throw input_error("depth cap must be at least 2");
    DepthReport report;
    report.cap = cap;
    for (unsigned d = 2; d <= cap; ++d) {
        DepthTest t = is_depth_n(m, d);
        if (t.holds) {
            report.minimal_depth = d;
            report.witness = std::move(t);
            return report;
        }
        report.failures.push_back({d, *t.failure, t.lhs(t.failure->row, t.failure->col)});
    }
    return report;
}

struct TowerTest {
    bool holds = false;
    std::optional<BigInt> multiplier;
    std::optional<Coordinate> failure;
};

/// Depth-3 test for a tower C <= B <= A with inclusion matrices N (C in B)
/// and M (B in A): N M M^t M <= q N M.
inline TowerTest tower_is_d3(const NonNegIntMatrix& n, const NonNegIntMatrix& m)
{
    if (n.cols() != m.rows())
        throw input_error("tower matrices do not chain: N has " + std::to_string(n.cols()) +
                          " columns, M has " + std::to_string(m.rows()) + " rows");
    const NonNegIntMatrix nm = n * m;
    const NonNegIntMatrix lhs = nm * m.transpose() * m;
    TowerTest t;
    t.failure = support_violation(lhs, nm);
    t.holds = !t.failure;
    if (t.holds)
        t.multiplier = lhs.is_zero() ? BigInt(1) : minimal_multiplier(lhs, nm);
    return t;
}

/// Least m in [1, max_m] with S^m strictly positive.
inline std::optional<unsigned> strictly_positive_power(const NonNegIntMatrix& s, unsigned max_m)
{
    if (s.rows() != s.cols())
        throw input_error("strictly_positive_power needs a square matrix");
    NonNegIntMatrix power = s;
    for (unsigned m = 1; m <= max_m; ++m) {
        if (power.is_strictly_positive())
            return m;
        power = power * s;
    }
    return std::nullopt;
}

namespace detail {

inline std::string dot_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

/// Bratteli diagram as an undirected DOT multigraph: subalgebra simples on
/// the bottom row, algebra simples on top, m_ij parallel edges.
inline std::string bratteli_dot(const NonNegIntMatrix& m, const std::vector<std::string>& row_labels,
                                const std::vector<std::string>& col_labels)
{
    if (row_labels.size() != m.rows() || col_labels.size() != m.cols())
        throw input_error("Bratteli labels do not match the matrix dimensions");
    std::ostringstream out;
    out << "graph bratteli {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle];\n";
    out << "  { rank=same;";
    for (std::size_t i = 0; i < m.rows(); ++i)
        out << " b" << i + 1 << " [label=" << detail::dot_quote(row_labels[i]) << "];";
    out << " }\n";
    out << "  { rank=same;";
    for (std::size_t j = 0; j < m.cols(); ++j)
        out << " a" << j + 1 << " [label=" << detail::dot_quote(col_labels[j]) << "];";
    out << " }\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (BigInt k = 0; k < m(i, j); ++k)
                out << "  b" << i + 1 << " -- a" << j + 1 << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace depthlab
