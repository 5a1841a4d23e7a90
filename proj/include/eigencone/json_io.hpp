#pragma once

#include "eigencone/cone_calculus.hpp"
#include "eigencone/hyperbolicity.hpp"
#include "eigencone/scalar.hpp"
#include "eigencone/version.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace eigencone {

using Json = nlohmann::ordered_json;

/// Exact scalar as a JSON number when it is a small integer, else as its
/// exact text form.
inline Json scalar_to_json(const Scalar& s) {
    if (s.is_rational() && boost::multiprecision::denominator(s.a) == 1) {
        const auto& num = boost::multiprecision::numerator(s.a);
        if (num >= -(1LL << 53) && num <= (1LL << 53)) return num.convert_to<int64_t>();
    }
    return s.str();
}

inline Json eigencubic_to_json(const std::string& name, const EigencubicReport& rep) {
    Json j;
    j["name"] = name;
    j["harmonic"] = rep.is_harmonic;
    j["munzner_c"] = rep.munzner_gradient_constant ? scalar_to_json(*rep.munzner_gradient_constant)
                                                   : Json(nullptr);
    j["weight"] = rep.weight ? scalar_to_json(*rep.weight) : Json(nullptr);
    j["residual_zero"] = rep.residual_zero;
    return j;
}

inline Json member_summary_to_json(const MemberSummary& s) {
    if (!s.valid) return Json(nullptr);
    Json j;
    j["index"] = s.index;
    j["ratio"] = s.ratio;
    j["spectrum"] = s.spectrum;
    j["trace"] = s.trace;
    if (std::isfinite(s.p)) {
        j["p"] = s.p;
        j["p_bar"] = s.p_bar;
    }
    return j;
}

inline Json search_report_to_json(const SearchReport& r) {
    Json j;
    j["field"] = r.field_name;
    j["mode"] = r.mode;
    j["seed"] = r.seed;
    if (r.mode == "sample") j["samples"] = r.n_samples;
    if (r.mode == "search") {
        j["restarts"] = r.restarts;
        j["evals"] = r.evals;
    }
    j["delta"] = r.delta;
    if (r.big_m != 0.0) j["big_m"] = r.big_m;
    j["band"] = Json::array({r.band.lo, r.band.hi});
    j["band_asserted"] = r.band_asserted;
    j["eps_exclude"] = r.eps_exclude;
    j["n_excluded"] = r.n_excluded;
    j["n_sign_defect"] = r.n_sign_defect;
    if (r.prop41_checked > 0) {
        j["prop41_checked"] = r.prop41_checked;
        j["prop41_failed"] = r.prop41_failed;
    }
    j["min_ratio"] = std::isfinite(r.min_ratio) ? Json(r.min_ratio) : Json(nullptr);
    j["max_ratio"] = std::isfinite(r.max_ratio) ? Json(r.max_ratio) : Json(nullptr);
    j["argmin"] = member_summary_to_json(r.argmin);
    j["argmax"] = member_summary_to_json(r.argmax);
    Json v = Json::array();
    for (const auto& viol : r.violations) {
        Json e;
        e["index"] = viol.index;
        e["kind"] = viol.kind;
        e["ratio"] = viol.ratio;
        e["spectrum"] = viol.spectrum;
        v.push_back(std::move(e));
    }
    j["violations"] = std::move(v);
    j["pass"] = r.pass();
    return j;
}

}  // namespace eigencone
