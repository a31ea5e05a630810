#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "partstat/asymptotics.hpp"
#include "partstat/closedforms.hpp"
#include "partstat/sampler.hpp"
#include "partstat/zmean.hpp"

namespace partstat {

/// Shortest round-trip decimal rendering of a double.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline nlohmann::json to_json(const mean_report& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
  j["total"] = to_decimal_string(r.total);
  j["mean"] = to_fraction_string(r.mean);
  j["mean_float"] = r.mean_float;
  j["asymptotic"] = r.asymptotic ? nlohmann::json(*r.asymptotic) : nlohmann::json(nullptr);
  if (r.oracle) {
    j["oracle"] = (*r.oracle == oracle_verdict::match) ? "match" : "mismatch";
    if (!r.oracle_detail.empty()) j["oracle_detail"] = r.oracle_detail;
  } else {
    j["oracle"] = nlohmann::json(nullptr);
  }
  return j;
}

inline nlohmann::json to_json(const empirical_estimate& e) {
  return {{"mean", e.mean}, {"stderr", e.stderr_of_mean}, {"trials", e.trials}};
}

inline nlohmann::json to_json(const formula_info& f) {
  const char* variant = f.variant == formula_variant::theorem
                            ? "theorem"
                            : (f.variant == formula_variant::derivation ? "derivation"
                                                                        : "canonical");
  nlohmann::json j{{"name", f.name}, {"domain", f.domain}, {"variant", variant},
                   {"canonical", f.canonical}};
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

inline std::string csv_header_convergence() { return "n,exact,leading,ratio,correction_ratio"; }

inline std::string to_csv_row(const asymptotic_report& r) {
  return std::to_string(r.n) + "," + format_double(exact_to_double(r.exact)) + "," +
         format_double(r.leading) + "," + format_double(r.ratio) + "," +
         format_double(r.correction_ratio);
}

}  // namespace partstat
