#pragma once

#include <array>
#include <span>
#include <string>
#include <variant>

#include <json.hpp>

#include "index.hpp"
#include "oracle.hpp"

namespace freeindex {

/// Either instantiation of the metric, plus display labels for the points.
struct ParsedMetric {
    std::variant<TriangleMetric<Rational>, TriangleMetric<double>> metric;
    std::array<std::string, 3> labels{"x", "y", "z"};

    bool exact() const { return metric.index() == 0; }
    TriangleMetric<double> as_double() const;
};

/// True when the token is an integer or "p/q" literal (no decimal point or
/// exponent); three such tokens select exact mode.
bool is_rational_literal(const std::string& text);

/// Three distance strings -> metric; exact mode when every string is a
/// rational literal or force_exact is set. Throws Error on bad input.
ParsedMetric parse_metric_strings(const std::string& d_xy, const std::string& d_xz,
                                  const std::string& d_yz, bool force_exact);

/// {"distances": {"xy": ..., "xz": ..., "yz": ...}, "labels": [...]?} with
/// distances given as strings or JSON numbers.
ParsedMetric parse_metric_json(const std::string& text, bool force_exact);

/// Scalar <-> JSON per numeric mode: rationals as "p/q" strings, doubles as
/// JSON numbers (shortest round-trip form).
template <class S>
struct JsonScalar;

template <>
struct JsonScalar<Rational> {
    static nlohmann::json to(const Rational& v) { return v.str(); }
    static Rational from(const nlohmann::json& j);
};

template <>
struct JsonScalar<double> {
    static nlohmann::json to(double v) { return v; }
    static double from(const nlohmann::json& j);
};

template <class S>
nlohmann::json report_to_json(const IndexReport<S>& report,
                              const std::array<std::string, 3>& labels = {"x", "y", "z"});

template <class S>
IndexReport<S> report_from_json(const nlohmann::json& doc);

/// {"matrix": [[t11,t12],[t21,t22]]} with string or numeric entries; a full
/// report document is accepted too, contributing its witness matrix.
template <class S>
Operator2<S> operator_from_json(const nlohmann::json& doc);

std::string sweep_to_csv(std::span<const SweepRecord> records);

}  // namespace freeindex
