// SPDX-License-Identifier: MIT
#pragma once

#include "ctori/root_datum.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctori {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "1.0.0";

/// One verification record. `provenance` is "published", "trivial" or "derived".
struct Check {
    std::string id;
    std::string paper_ref;
    std::string provenance;
    Json expected;
    Json computed;
    bool pass = false;
};

struct ReportConfig {
    std::vector<Family> types{Family::A, Family::B, Family::C, Family::D, Family::A2, Family::D2};
    int min_rank = 0;  // 0: the family minimum
    int max_rank = 8;
    std::optional<int> kappa;
    bool tori_example = true;
    int tori_max_rank = 4;
    std::size_t random_lifts = 100;
    std::size_t mutation_trials = 200;
    int isocrystal_max_n = 4;
    std::vector<std::uint64_t> qs{2, 3, 5};
    std::size_t isocrystal_trials = 20;
    long precision = 0;
    std::size_t lang_lift_trials = 20;
    std::uint64_t seed = 1;
    bool isocrystal = true;
    bool lang_lift = true;
};

struct Preset {
    std::string name;
    std::string description;
    std::optional<Family> family;  // nullopt for the SL2 x SL2 / mu2 example
    int n = 0;
    int kappa = 0;
};
const std::vector<Preset>& presets();
const Preset& find_preset(const std::string& name);  // ConfigError if unknown

std::string rational_string(const Rational& r);
Json rationals(const std::vector<Rational>& v);
std::string type_tag(Family f, int n);

std::vector<Check> checks_fundamental_groups(const ReportConfig& cfg);
std::vector<Check> checks_newton(const ReportConfig& cfg);
std::vector<Check> checks_kottwitz(const ReportConfig& cfg);
std::vector<Check> checks_fixed_points(const ReportConfig& cfg);
std::vector<Check> checks_bounds(const ReportConfig& cfg);
std::vector<Check> checks_filtrations(const ReportConfig& cfg);
std::vector<Check> checks_cross_section(const ReportConfig& cfg);
std::vector<Check> checks_tori(const ReportConfig& cfg);
std::vector<Check> checks_isocrystal(const ReportConfig& cfg);
std::vector<Check> checks_lang_lift(const ReportConfig& cfg);

/// Every topic, sorted by id.
std::vector<Check> run_report(const ReportConfig& cfg);

Json config_json(const ReportConfig& cfg);
Json report_json(const std::vector<Check>& checks, const Json& config);
std::string report_table(const std::vector<Check>& checks);

/// Compares expected, computed and pass of every check with a stored report; every mismatch or missing id
/// becomes a failing check named "golden.<id>".
std::vector<Check> compare_golden(const std::vector<Check>& checks, const Json& golden);

}  // namespace ctori
