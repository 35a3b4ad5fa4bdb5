#pragma once

#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "depthlab/bigint.hpp"
#include "depthlab/character_table.hpp"
#include "depthlab/depth.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/group_algebra.hpp"
#include "depthlab/induction.hpp"
#include "depthlab/matrix.hpp"

namespace depthlab {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline json bigint_to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

inline BigInt bigint_from_json(const json& j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? BigInt(j.get<unsigned long long>()) : BigInt(j.get<long long>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw input_error("not an integer: \"" + s + "\"");
        return BigInt(s);
    }
    throw input_error("expected an integer, got " + j.dump());
}

inline json matrix_to_json(const NonNegIntMatrix& m)
{
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(bigint_to_json(m(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

/// Accepts {rows, cols, entries} or a bare array of rows.
inline NonNegIntMatrix matrix_from_json(const json& j)
{
    const json* entries = &j;
    if (j.is_object()) {
        if (!j.contains("entries"))
            throw input_error("matrix object has no \"entries\" field");
        entries = &j.at("entries");
    }
    if (!entries->is_array() || entries->empty())
        throw input_error("matrix entries must be a nonempty array of rows");
    const std::size_t rows = entries->size();
    const std::size_t cols = entries->front().is_array() ? entries->front().size() : 0;
    Matrix<BigInt> m(rows, cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = (*entries)[i];
        if (!row.is_array() || row.size() != cols)
            throw input_error("matrix row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = bigint_from_json(row[k]);
    }
    if (j.is_object()) {
        if (j.contains("rows") && j.at("rows") != rows)
            throw input_error("\"rows\" does not match the entries");
        if (j.contains("cols") && j.at("cols") != cols)
            throw input_error("\"cols\" does not match the entries");
    }
    return NonNegIntMatrix(std::move(m));
}

inline NonNegIntMatrix matrix_from_json_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
    return matrix_from_json(j);
}

/// Value of an integral table is a plain integer; otherwise the coefficient
/// vector over Z[E(exponent)] in reduced form.
inline json cyclotomic_to_json(const Cyclotomic& v, std::uint32_t exponent, bool integral)
{
    if (integral)
        return bigint_to_json(*v.to_integer());
    json coeffs = json::array();
    const Cyclotomic lifted = v.in_conductor(exponent);
    for (const auto& c : lifted.coefficients())
        coeffs.push_back(bigint_to_json(c));
    return coeffs;
}

inline json table_to_json(const CharacterTable& t)
{
    const bool integral = t.is_integral();
    json sizes = json::array(), reps = json::array(), rows = json::array();
    for (std::size_t c = 0; c < t.size(); ++c) {
        sizes.push_back(t.classes().sizes[c]);
        reps.push_back(t.classes().representatives[c].to_cycles());
    }
    for (const auto& row : t.rows()) {
        json r = json::array();
        for (const auto& v : row)
            r.push_back(cyclotomic_to_json(v, t.exponent(), integral));
        rows.push_back(std::move(r));
    }
    return json{{"order", bigint_to_json(t.group().order())},
                {"exponent", t.exponent()},
                {"class_sizes", std::move(sizes)},
                {"class_reps", std::move(reps)},
                {"rows", std::move(rows)}};
}

inline json inclusion_to_json(const InclusionMatrix& m)
{
    json j = matrix_to_json(m.entries);
    j["row_labels"] = m.row_labels;
    j["col_labels"] = m.col_labels;
    return j;
}

inline json coordinate_to_json(const Coordinate& c) { return json{{"row", c.row}, {"col", c.col}}; }

inline json depth_test_to_json(const DepthTest& t)
{
    json j{{"depth", t.depth}, {"holds", t.holds}, {"inequality", t.inequality}};
    j["multiplier"] = t.multiplier ? bigint_to_json(*t.multiplier) : json(nullptr);
    j["failure"] = t.failure ? coordinate_to_json(*t.failure) : json(nullptr);
    return j;
}

inline json depth_report_to_json(const DepthReport& r)
{
    json j;
    j["minimal_depth"] = r.minimal_depth ? json(*r.minimal_depth) : json(nullptr);
    j["cap"] = r.cap;
    j["witness"] = r.witness ? depth_test_to_json(*r.witness) : json(nullptr);
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"depth", f.depth},
                                {"row", f.at.row},
                                {"col", f.at.col},
                                {"lhs", bigint_to_json(f.lhs_value)},
                                {"rhs", 0}});
    j["failures"] = std::move(failures);
    return j;
}

inline json verification_to_json(const std::string& name, const VerificationResult& r)
{
    json j{{"check", name}, {"passed", r.passed}};
    j["failed_check"] = r.passed ? json(nullptr) : json(r.failed_check);
    if (r.counterexample)
        j["counterexample"] = json::array({r.counterexample->first.to_cycles(), r.counterexample->second.to_cycles()});
    else
        j["counterexample"] = nullptr;
    return j;
}

} // namespace depthlab
