#include "freeindex/freeindex.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "report_json.hpp"
#include "svg_render.hpp"

using namespace freeindex;

struct fi_metric {
    ParsedMetric parsed;
};

namespace {

thread_local std::string g_last_error;

fi_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:            return FI_ERROR_INVALID_ARGUMENT;
        case ErrorCode::ParseError:                 return FI_ERROR_PARSE;
        case ErrorCode::NonPositiveDistance:        return FI_ERROR_NONPOSITIVE_DISTANCE;
        case ErrorCode::TriangleInequalityViolated: return FI_ERROR_TRIANGLE_INEQUALITY;
        case ErrorCode::SamePoint:                  return FI_ERROR_INVALID_ARGUMENT;
        case ErrorCode::AlignedMetric:              return FI_ERROR_ALIGNED_METRIC;
        case ErrorCode::WrongRegime:                return FI_ERROR_WRONG_REGIME;
        case ErrorCode::AlphaOutOfRange:            return FI_ERROR_ALPHA_OUT_OF_RANGE;
        case ErrorCode::IoError:                    return FI_ERROR_IO;
        case ErrorCode::Internal:                   return FI_ERROR_INTERNAL;
    }
    return FI_ERROR_INTERNAL;
}

template <class Fn>
fi_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FI_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FI_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return FI_ERROR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool cond, const char* what) {
    if (!cond) raise(ErrorCode::InvalidArgument, what);
}

OracleConfig config_of(const fi_oracle_options* opts) {
    OracleConfig cfg;
    if (opts) {
        cfg.restarts = opts->restarts;
        cfg.init_step = opts->init_step;
        cfg.step_tolerance = opts->step_tolerance;
        cfg.max_iters_per_restart = opts->max_iters_per_restart;
        cfg.rng_seed = opts->rng_seed;
        cfg.seed_with_witness = opts->seed_with_witness != 0;
    }
    return cfg;
}

nlohmann::json index_json(const ParsedMetric& parsed) {
    if (parsed.exact()) {
        return report_to_json(numerical_index(std::get<TriangleMetric<Rational>>(parsed.metric)),
                              parsed.labels);
    }
    return report_to_json(numerical_index(std::get<TriangleMetric<double>>(parsed.metric)),
                          parsed.labels);
}

std::vector<TriangleMode> parse_modes(const char* modes) {
    std::vector<TriangleMode> out;
    if (!modes || !*modes) {
        return {TriangleMode::UniformScalene, TriangleMode::Isosceles, TriangleMode::NearAligned,
                TriangleMode::NearEquilateral};
    }
    std::stringstream ss{std::string(modes)};
    std::string token;
    while (std::getline(ss, token, ',')) {
        bool known = false;
        for (TriangleMode mode : {TriangleMode::UniformScalene, TriangleMode::Isosceles,
                                  TriangleMode::NearAligned, TriangleMode::NearEquilateral}) {
            if (token == to_string(mode)) {
                out.push_back(mode);
                known = true;
                break;
            }
        }
        if (!known) raise(ErrorCode::InvalidArgument, "unknown sampling mode '" + token + "'");
    }
    if (out.empty()) raise(ErrorCode::InvalidArgument, "empty sampling mode list");
    return out;
}

}  // namespace

extern "C" {

const char* fi_status_name(fi_status status) {
    switch (status) {
        case FI_OK:                           return "Ok";
        case FI_ERROR_INVALID_ARGUMENT:       return "InvalidArgument";
        case FI_ERROR_PARSE:                  return "ParseError";
        case FI_ERROR_NONPOSITIVE_DISTANCE:   return "NonPositiveDistance";
        case FI_ERROR_TRIANGLE_INEQUALITY:    return "TriangleInequalityViolated";
        case FI_ERROR_ALIGNED_METRIC:         return "AlignedMetric";
        case FI_ERROR_WRONG_REGIME:           return "WrongRegime";
        case FI_ERROR_ALPHA_OUT_OF_RANGE:     return "AlphaOutOfRange";
        case FI_ERROR_IO:                     return "IoError";
        case FI_ERROR_INTERNAL:               return "Internal";
    }
    return "Unknown";
}

const char* fi_last_error(void) {
    return g_last_error.c_str();
}

void fi_string_destroy(char* s) {
    delete[] s;
}

fi_status fi_metric_parse(const char* d_xy, const char* d_xz, const char* d_yz,
                          int force_exact, fi_metric** out) {
    return guarded([&] {
        require(d_xy && d_xz && d_yz && out, "distances and out pointer must be non-null");
        auto parsed = parse_metric_strings(d_xy, d_xz, d_yz, force_exact != 0);
        *out = new fi_metric{std::move(parsed)};
    });
}

fi_status fi_metric_parse_json(const char* json_utf8, int force_exact, fi_metric** out) {
    return guarded([&] {
        require(json_utf8 && out, "document and out pointer must be non-null");
        auto parsed = parse_metric_json(json_utf8, force_exact != 0);
        *out = new fi_metric{std::move(parsed)};
    });
}

void fi_metric_destroy(fi_metric* m) {
    delete m;
}

int fi_metric_is_exact(const fi_metric* m) {
    return m && m->parsed.exact() ? 1 : 0;
}

void fi_oracle_options_init(fi_oracle_options* opts) {
    if (!opts) return;
    OracleConfig defaults;
    opts->restarts = defaults.restarts;
    opts->init_step = defaults.init_step;
    opts->step_tolerance = defaults.step_tolerance;
    opts->max_iters_per_restart = defaults.max_iters_per_restart;
    opts->rng_seed = defaults.rng_seed;
    opts->seed_with_witness = defaults.seed_with_witness ? 1 : 0;
    opts->tolerance = 5e-3;
}

fi_status fi_index_report(const fi_metric* m, char** json_out) {
    return guarded([&] {
        require(m && json_out, "metric and out pointer must be non-null");
        *json_out = copy_string(index_json(m->parsed).dump(2));
    });
}

fi_status fi_verify(const fi_metric* m, const fi_oracle_options* opts, char** json_out,
                    int* pass_out) {
    return guarded([&] {
        require(m && json_out, "metric and out pointer must be non-null");
        const double tolerance = opts ? opts->tolerance : 5e-3;
        require(tolerance > 0.0, "tolerance must be positive");

        nlohmann::json formula = index_json(m->parsed);
        double formula_index = m->parsed.exact()
            ? JsonScalar<Rational>::from(formula.at("index")).to_double()
            : formula.at("index").get<double>();

        auto estimate = estimate_index(m->parsed.as_double(), config_of(opts));
        double gap = estimate.min_v - formula_index;
        bool pass = gap >= -1e-9 && gap <= tolerance;

        nlohmann::json doc = {{"formula", formula.at("index")},
                              {"formula_regime", formula.at("regime")},
                              {"oracle_min", estimate.min_v},
                              {"gap", gap},
                              {"evaluations", estimate.evaluations},
                              {"pass", pass}};
        *json_out = copy_string(doc.dump(2));
        if (pass_out) *pass_out = pass ? 1 : 0;
    });
}

fi_status fi_design(const char* alpha, char** json_out) {
    return guarded([&] {
        require(alpha && json_out, "alpha and out pointer must be non-null");
        nlohmann::json doc;
        if (is_rational_literal(alpha)) {
            auto a = Rational::parse(alpha);
            if (!a) raise(ErrorCode::ParseError, "cannot parse alpha");
            auto metric = design_triangle<Rational>(*a);
            auto report = numerical_index(metric);
            doc = {{"mode", "exact"},
                   {"alpha", a->str()},
                   {"metric",
                    {{"distances",
                      {{"xy", metric.d_xy().str()},
                       {"xz", metric.d_xz().str()},
                       {"yz", metric.d_yz().str()}}}}},
                   {"verified_index", report.index.str()},
                   {"regime", to_string(report.regime)},
                   {"round_trip", report.index == *a}};
        } else {
            char* end = nullptr;
            double a = std::strtod(alpha, &end);
            if (end == alpha || (end && *end != '\0')) {
                raise(ErrorCode::ParseError, "cannot parse alpha");
            }
            auto metric = design_triangle<double>(a);
            auto report = numerical_index(metric);
            doc = {{"mode", "float"},
                   {"alpha", a},
                   {"metric",
                    {{"distances",
                      {{"xy", metric.d_xy()}, {"xz", metric.d_xz()}, {"yz", metric.d_yz()}}}}},
                   {"verified_index", report.index},
                   {"regime", to_string(report.regime)},
                   {"round_trip", std::fabs(report.index - a) <= 1e-12}};
        }
        *json_out = copy_string(doc.dump(2));
    });
}

fi_status fi_sweep(uint32_t n, const char* modes, const fi_oracle_options* opts, char** csv_out) {
    return guarded([&] {
        require(csv_out, "out pointer must be non-null");
        require(n >= 1, "n must be >= 1");
        auto mode_list = parse_modes(modes);
        auto records = sweep(n, config_of(opts), mode_list);
        *csv_out = copy_string(sweep_to_csv(records));
    });
}

fi_status fi_ball_svg(const fi_metric* m, const char* operator_json, char** svg_out) {
    return guarded([&] {
        require(m && svg_out, "metric and out pointer must be non-null");
        auto metric = m->parsed.as_double();
        std::optional<Operator2<double>> op;
        if (operator_json) {
            nlohmann::json doc = nlohmann::json::parse(operator_json, nullptr, false);
            if (doc.is_discarded()) raise(ErrorCode::ParseError, "malformed operator JSON");
            op = operator_from_json<double>(doc);
        }
        *svg_out = copy_string(render_ball(metric, op ? &*op : nullptr).svg);
    });
}

}  // extern "C"
