#pragma once

#include <string>

#include <json.hpp>

#include "frontsheaf/chd.hpp"
#include "frontsheaf/dga.hpp"
#include "frontsheaf/front.hpp"
#include "frontsheaf/sheaf.hpp"
#include "frontsheaf/strat.hpp"

namespace frontsheaf {

// Structured reports for every pipeline stage. All objects are built from
// sorted containers, so serialization is byte-identical across runs. Each
// report carries a boolean "pass" with the stage verdict.

nlohmann::json front_report(const FrontComplex& front);

nlohmann::json dga_report(const SimplicialDGA& dga);

nlohmann::json augs_report(const SimplicialDGA& dga, PrimeField field,
                           unsigned long long bound);

nlohmann::json chd_report(const SimplicialDGA& dga, PrimeField field,
                          unsigned long long bound);

nlohmann::json sheaf_report(const FrontComplex& front, PrimeField field,
                            unsigned long long bound);

nlohmann::json verify_report(const FrontComplex& front, PrimeField field,
                             unsigned long long bound);

// Every stage in one document.
nlohmann::json full_report(const FrontComplex& front, PrimeField field,
                           unsigned long long bound);

// Deterministic human-readable rendering (YAML-like indentation).
std::string render_text(const nlohmann::json& report);

}  // namespace frontsheaf
