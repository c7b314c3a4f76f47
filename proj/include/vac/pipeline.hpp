#pragma once

#include "json.hpp"

#include <string>

namespace vac {

using Json = nlohmann::json;

struct RunOptions {
	std::string data_dir;   // defaults to $VAC_DATA_DIR or "data"
	std::string cache_dir;  // empty: no caching
	std::string out_dir;    // empty: no artifact files
	bool skip_subsingular = false;
	bool emit_polys = false;
	bool check_ideal_membership = false;
};

/// exit-code contract: 0 = everything reproduced, 2 = computation fine but
/// a diff against the shipped transcriptions was found (reports carry
/// "status": "ok"/"diff"); internal errors throw and map to 1 in the CLI.
int report_exit_code(const Json& report);

Json verify_singular_report(const std::string& path);
Json pipeline_g2(const RunOptions& opt);
Json pipeline_b3(const RunOptions& opt);
Json assoc_variety_g2(const RunOptions& opt);
Json table1_report(const std::string& algebra, const std::string& level,
                   long max_dim);
Json conf_dim_report(const std::string& algebra, const std::string& level,
                     const std::string& weight);
Json freudenthal_report(const std::string& algebra, const std::string& lambda,
                        const std::string& mu);
Json spectral_flow_report();

/// Structure-constant and embedding tables as JSON (generator name ->
/// coefficient list), for use as test fixtures.
Json algebra_tables_json(const std::string& algebra);
Json embedding_table_json(const std::string& pair);

/// CSV rendering of a classification report's solution table.
std::string solutions_csv(const Json& report);

} // namespace vac
