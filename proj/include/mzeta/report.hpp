#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mzeta/kodaira.hpp"
#include "mzeta/verify.hpp"

namespace mzeta {

// Machine-readable command reports. Identical inputs produce byte-identical
// JSON; every check sets the top-level "pass" flag.

struct SncdOptions {
    bool lct = false;
    bool delta = false;
    bool poles = false;
    bool monodromy_zeta = false;
    long series = 0;                      // expand to this depth when > 0
    std::vector<std::string> gmp_with;    // characteristic polynomials in t
};

struct AbelianOptions {
    bool verify = false;
    bool gmp = false;
    long series = 0;
    long euler_check = 0;
    std::vector<std::string> gmp_with;    // overrides the bundled H^i polys
};

struct IgusaOptions {
    std::string poly;
    long p = 0;
    long M = 0;
    bool fit = false;
    bool check_poinzeta = false;
    long budget = 0;  // 0: default
};

nlohmann::json cmd_sncd(const std::string& file, const SncdOptions& opt);
nlohmann::json cmd_abelian(const std::optional<std::string>& type_tag, long n,
                           const std::optional<std::string>& neron_file,
                           const std::string& data_dir, const AbelianOptions& opt);
nlohmann::json cmd_igusa(const IgusaOptions& opt);
nlohmann::json cmd_verify_all(const std::string& data_dir);

// true unless the report carries pass = false
bool report_passed(const nlohmann::json& report);

std::string render_human(const nlohmann::json& report);

}  // namespace mzeta
