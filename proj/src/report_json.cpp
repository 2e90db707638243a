#include "report_json.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace freeindex {

namespace {

using nlohmann::json;

double parse_double_token(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    while (end && *end && std::isspace(static_cast<unsigned char>(*end))) ++end;
    if (end == begin || (end && *end != '\0')) {
        raise(ErrorCode::ParseError, "not a number: '" + text + "'");
    }
    return v;
}

Rational parse_rational_token(const std::string& text) {
    auto r = Rational::parse(text);
    if (!r) raise(ErrorCode::ParseError, "not a rational or decimal: '" + text + "'");
    return *r;
}

std::string distance_token(const json& j, const char* key) {
    if (!j.contains(key)) {
        raise(ErrorCode::ParseError, std::string("missing distance '") + key + "'");
    }
    const json& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    raise(ErrorCode::ParseError, std::string("distance '") + key + "' must be a string or number");
}

Regime regime_from_string(const std::string& s) {
    if (s == "aligned") return Regime::Aligned;
    if (s == "ratio_case") return Regime::RatioCase;
    if (s == "contop_case") return Regime::ContopCase;
    raise(ErrorCode::ParseError, "unknown regime '" + s + "'");
}

ClassTag tag_from_string(const std::string& s) {
    for (ClassTag t : {ClassTag::Aligned, ClassTag::Equilateral, ClassTag::IsoscelesLong,
                       ClassTag::IsoscelesFat, ClassTag::Scalene}) {
        if (s == to_string(t)) return t;
    }
    raise(ErrorCode::ParseError, "unknown classification '" + s + "'");
}

PointId point_from_string(const std::string& s) {
    if (s == "x") return PointId::X;
    if (s == "y") return PointId::Y;
    if (s == "z") return PointId::Z;
    raise(ErrorCode::ParseError, "unknown point '" + s + "'");
}

template <class S>
json metric_to_json(const TriangleMetric<S>& m) {
    return {{"xy", JsonScalar<S>::to(m.d_xy())},
            {"xz", JsonScalar<S>::to(m.d_xz())},
            {"yz", JsonScalar<S>::to(m.d_yz())}};
}

template <class S>
TriangleMetric<S> metric_from_json(const json& distances) {
    return TriangleMetric<S>::validate(JsonScalar<S>::from(distances.at("xy")),
                                       JsonScalar<S>::from(distances.at("xz")),
                                       JsonScalar<S>::from(distances.at("yz")));
}

template <class S>
json matrix_to_json(const Operator2<S>& T) {
    return json::array({json::array({JsonScalar<S>::to(T.t11), JsonScalar<S>::to(T.t12)}),
                        json::array({JsonScalar<S>::to(T.t21), JsonScalar<S>::to(T.t22)})});
}

}  // namespace

TriangleMetric<double> ParsedMetric::as_double() const {
    if (const auto* exact_metric = std::get_if<TriangleMetric<Rational>>(&metric)) {
        return TriangleMetric<double>::validate(exact_metric->d_xy().to_double(),
                                                exact_metric->d_xz().to_double(),
                                                exact_metric->d_yz().to_double());
    }
    return std::get<TriangleMetric<double>>(metric);
}

bool is_rational_literal(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    auto integer = [&]() {
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return i > start;
    };
    if (!integer()) return false;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!integer()) return false;
    }
    skip_ws();
    return i == text.size();
}

ParsedMetric parse_metric_strings(const std::string& d_xy, const std::string& d_xz,
                                  const std::string& d_yz, bool force_exact) {
    ParsedMetric out;
    bool exact = force_exact || (is_rational_literal(d_xy) && is_rational_literal(d_xz) &&
                                 is_rational_literal(d_yz));
    if (exact) {
        out.metric = TriangleMetric<Rational>::validate(
            parse_rational_token(d_xy), parse_rational_token(d_xz), parse_rational_token(d_yz));
    } else {
        out.metric = TriangleMetric<double>::validate(
            parse_double_token(d_xy), parse_double_token(d_xz), parse_double_token(d_yz));
    }
    return out;
}

ParsedMetric parse_metric_json(const std::string& text, bool force_exact) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) raise(ErrorCode::ParseError, "malformed JSON metric document");
    if (!doc.contains("distances") || !doc.at("distances").is_object()) {
        raise(ErrorCode::ParseError, "metric document needs a 'distances' object");
    }
    const json& d = doc.at("distances");
    ParsedMetric out = parse_metric_strings(distance_token(d, "xy"), distance_token(d, "xz"),
                                            distance_token(d, "yz"), force_exact);
    if (doc.contains("labels")) {
        const json& labels = doc.at("labels");
        if (!labels.is_array() || labels.size() != 3) {
            raise(ErrorCode::ParseError, "'labels' must be an array of three strings");
        }
        for (int i = 0; i < 3; ++i) {
            if (!labels[i].is_string()) {
                raise(ErrorCode::ParseError, "'labels' must be an array of three strings");
            }
            out.labels[static_cast<std::size_t>(i)] = labels[i].get<std::string>();
        }
    }
    return out;
}

Rational JsonScalar<Rational>::from(const json& j) {
    if (j.is_string()) return parse_rational_token(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    raise(ErrorCode::ParseError, "expected an exact scalar (string or integer)");
}

double JsonScalar<double>::from(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (is_rational_literal(s)) return parse_rational_token(s).to_double();
        return parse_double_token(s);
    }
    raise(ErrorCode::ParseError, "expected a numeric scalar");
}

template <class S>
json report_to_json(const IndexReport<S>& report, const std::array<std::string, 3>& labels) {
    json doc;
    doc["mode"] = ScalarOps<S>::exact ? "exact" : "float";
    doc["input"] = {{"distances", metric_to_json(report.input)},
                    {"labels", json::array({labels[0], labels[1], labels[2]})}};
    doc["classification"] = to_string(report.classification.tag);
    const auto& order = report.classification.canonical_to_original;
    doc["canonical"] = {{"distances", metric_to_json(report.canonical)},
                        {"order",
                         {{"x", to_string(order[0])},
                          {"y", to_string(order[1])},
                          {"z", to_string(order[2])}}}};
    doc["index"] = JsonScalar<S>::to(report.index);
    doc["regime"] = to_string(report.regime);
    if (report.components) {
        const auto& c = *report.components;
        doc["components"] = {{"nu_op_x0", JsonScalar<S>::to(c.nu_op_x0)},
                             {"ratio_y_x0", JsonScalar<S>::to(c.ratio_y_x0)},
                             {"nu_op_xy", JsonScalar<S>::to(c.nu_op_xy)},
                             {"nu_op_y0", JsonScalar<S>::to(c.nu_op_y0)},
                             {"ratio_0_xy", JsonScalar<S>::to(c.ratio_0_xy)},
                             {"ratio_x_y0", JsonScalar<S>::to(c.ratio_x_y0)},
                             {"threshold", JsonScalar<S>::to(c.threshold)}};
    }
    if (report.witness) {
        const auto& w = *report.witness;
        json construction;
        construction["type"] = to_string(w.regime);
        construction[w.regime == Regime::RatioCase ? "alpha_x" : "lambda_x"] =
            JsonScalar<S>::to(w.primary);
        construction["lambda_y"] = JsonScalar<S>::to(w.lambda_y);
        construction["scale"] = JsonScalar<S>::to(w.scale);
        doc["witness"] = {{"matrix", matrix_to_json(w.op)}, {"construction", construction}};
    }
    doc["certified"] = report.certified();
    doc["certification"] = {{"operator_norm_one", report.witness_norm_one},
                            {"radius_equals_index", report.witness_radius_matches}};
    return doc;
}

template <class S>
IndexReport<S> report_from_json(const json& doc) {
    auto input = metric_from_json<S>(doc.at("input").at("distances"));
    auto canonical = metric_from_json<S>(doc.at("canonical").at("distances"));
    Classification cls;
    cls.tag = tag_from_string(doc.at("classification").get<std::string>());
    const json& order = doc.at("canonical").at("order");
    cls.canonical_to_original = {point_from_string(order.at("x").get<std::string>()),
                                 point_from_string(order.at("y").get<std::string>()),
                                 point_from_string(order.at("z").get<std::string>())};
    IndexReport<S> report(std::move(input), std::move(canonical), cls);
    report.index = JsonScalar<S>::from(doc.at("index"));
    report.regime = regime_from_string(doc.at("regime").get<std::string>());
    if (doc.contains("components")) {
        const json& c = doc.at("components");
        report.components = IndexComponents<S>{
            JsonScalar<S>::from(c.at("nu_op_x0")),   JsonScalar<S>::from(c.at("ratio_y_x0")),
            JsonScalar<S>::from(c.at("nu_op_xy")),   JsonScalar<S>::from(c.at("nu_op_y0")),
            JsonScalar<S>::from(c.at("ratio_0_xy")), JsonScalar<S>::from(c.at("ratio_x_y0")),
            JsonScalar<S>::from(c.at("threshold"))};
    }
    if (doc.contains("witness")) {
        const json& w = doc.at("witness");
        const json& construction = w.at("construction");
        WitnessBuild<S> witness;
        witness.op = operator_from_json<S>(w);
        witness.regime = regime_from_string(construction.at("type").get<std::string>());
        witness.primary = JsonScalar<S>::from(construction.at(
            witness.regime == Regime::RatioCase ? "alpha_x" : "lambda_x"));
        witness.lambda_y = JsonScalar<S>::from(construction.at("lambda_y"));
        witness.scale = JsonScalar<S>::from(construction.at("scale"));
        report.witness = std::move(witness);
    }
    const json& certification = doc.at("certification");
    report.witness_norm_one = certification.at("operator_norm_one").get<bool>();
    report.witness_radius_matches = certification.at("radius_equals_index").get<bool>();
    return report;
}

template <class S>
Operator2<S> operator_from_json(const json& doc) {
    const json* matrix = nullptr;
    if (doc.contains("matrix")) {
        matrix = &doc.at("matrix");
    } else if (doc.contains("witness") && doc.at("witness").contains("matrix")) {
        matrix = &doc.at("witness").at("matrix");
    } else {
        raise(ErrorCode::ParseError, "operator document needs a 'matrix' field");
    }
    if (!matrix->is_array() || matrix->size() != 2 || !(*matrix)[0].is_array() ||
        (*matrix)[0].size() != 2 || !(*matrix)[1].is_array() || (*matrix)[1].size() != 2) {
        raise(ErrorCode::ParseError, "'matrix' must be a 2x2 array");
    }
    return {JsonScalar<S>::from((*matrix)[0][0]), JsonScalar<S>::from((*matrix)[0][1]),
            JsonScalar<S>::from((*matrix)[1][0]), JsonScalar<S>::from((*matrix)[1][1])};
}

template json report_to_json<Rational>(const IndexReport<Rational>&,
                                       const std::array<std::string, 3>&);
template json report_to_json<double>(const IndexReport<double>&,
                                     const std::array<std::string, 3>&);
template IndexReport<Rational> report_from_json<Rational>(const json&);
template IndexReport<double> report_from_json<double>(const json&);
template Operator2<Rational> operator_from_json<Rational>(const json&);
template Operator2<double> operator_from_json<double>(const json&);

std::string sweep_to_csv(std::span<const SweepRecord> records) {
    std::string out = "d_xy,d_xz,d_yz,formula_index,oracle_min,gap,regime,seed\n";
    char buf[256];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s,%llu\n",
                      r.metric.d_xy(), r.metric.d_xz(), r.metric.d_yz(), r.formula_index,
                      r.oracle_min, r.gap, to_string(r.regime),
                      static_cast<unsigned long long>(r.seed));
        out += buf;
    }
    return out;
}

}  // namespace freeindex
