// Command-line driver; all functionality goes through the C API.
#include "vac/capi.h"

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>

namespace {

struct Engine {
	vac_engine* e;
	Engine(const std::string& data_dir, const std::string& cache_dir)
	    : e(vac_engine_new(data_dir.empty() ? nullptr : data_dir.c_str(),
	                       cache_dir.empty() ? nullptr : cache_dir.c_str())) {}
	~Engine() { vac_engine_free(e); }
};

int finish(Engine& eng, int rc, char* json, bool want_json, bool want_csv) {
	if (rc == 1) {
		fprintf(stderr, "error: %s\n", vac_last_error(eng.e));
		if (json) vac_string_free(json);
		return 1;
	}
	if (json) {
		if (want_csv) {
			char* csv = nullptr;
			if (vac_report_csv(eng.e, json, &csv) == 0 && csv) {
				fputs(csv, stdout);
				vac_string_free(csv);
			}
		} else if (want_json) {
			puts(json);
		} else {
			puts(json);
		}
		vac_string_free(json);
	}
	return rc;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact computations for level -2 affine vertex algebras of "
	             "types G2, B3 and D4"};
	app.require_subcommand(1);

	std::string data_dir, cache_dir, out_dir;
	bool as_json = false, as_csv = false;
	app.add_option("--data-dir", data_dir, "directory with the data files");
	app.add_option("--cache-dir", cache_dir, "cache directory for intermediates");
	app.add_option("--out", out_dir, "directory for report artifacts");
	app.add_flag("--json", as_json, "print the JSON report (default)");
	app.add_flag("--csv", as_csv, "print the classification table as CSV");

	// verify-singular
	std::string state_path;
	auto* cmd_vs = app.add_subcommand(
	    "verify-singular", "check the singular-vector conditions for a state file");
	cmd_vs->add_option("file", state_path, "state file")->required();

	// pipeline-g2
	bool emit_polys = false;
	auto* cmd_g2 = app.add_subcommand(
	    "pipeline-g2", "reproduce the G2 highest-weight classification");
	cmd_g2->add_flag("--emit-polys", emit_polys, "write recomputed polynomials");

	// pipeline-b3
	bool skip_subsingular = false, check_ideal = false;
	auto* cmd_b3 = app.add_subcommand(
	    "pipeline-b3", "reproduce the B3 highest-weight classification");
	cmd_b3->add_flag("--skip-subsingular", skip_subsingular,
	                 "stop after the one-parameter families");
	cmd_b3->add_flag("--check-ideal-membership", check_ideal,
	                 "run the (slow) ideal-membership corroborations");
	cmd_b3->add_flag("--emit-polys", emit_polys, "write recomputed polynomials");

	// assoc-variety-g2
	auto* cmd_av = app.add_subcommand(
	    "assoc-variety-g2", "associated-variety computation for G2 at level -2");
	cmd_av->add_flag("--emit-polys", emit_polys, "write recomputed polynomials");

	// conf-dim ALG LEVEL WEIGHT
	std::string algebra, level = "-2", weight, lambda, mu;
	auto* cmd_cd = app.add_subcommand("conf-dim", "conformal dimension of L(level, weight)");
	cmd_cd->add_option("algebra", algebra)->required();
	cmd_cd->add_option("level", level)->required();
	cmd_cd->add_option("weight", weight, "fundamental-weight coordinates a1,a2,...")
	    ->required();

	// freudenthal ALG LAMBDA MU
	auto* cmd_fr = app.add_subcommand("freudenthal",
	                                  "weight multiplicity in L(lambda)");
	cmd_fr->add_option("algebra", algebra)->required();
	cmd_fr->add_option("lambda", lambda)->required();
	cmd_fr->add_option("mu", mu)->required();

	// table1 ALG LEVEL MAXDIM
	long max_dim = 6;
	auto* cmd_t1 = app.add_subcommand(
	    "table1", "dominant integral weights with integer conformal dimension");
	cmd_t1->add_option("algebra", algebra)->required();
	cmd_t1->add_option("level", level)->required();
	cmd_t1->add_option("max-dim", max_dim);

	// spectral-flow-check
	auto* cmd_sf = app.add_subcommand(
	    "spectral-flow-check",
	    "verify the D4 spectral flow and the flowed highest-weight vector");

	// tables ALG|PAIR
	std::string which_tables;
	auto* cmd_tb = app.add_subcommand(
	    "tables", "export structure constants or an embedding table as JSON");
	cmd_tb->add_option("name", which_tables, "G2, B3, D4, G2->B3, B3->D4, G2->D4")
	    ->required();

	CLI11_PARSE(app, argc, argv);

	Engine eng(data_dir, cache_dir);
	char* json = nullptr;
	int rc = 1;
	const char* out = out_dir.empty() ? nullptr : out_dir.c_str();

	if (cmd_vs->parsed())
		rc = vac_verify_singular(eng.e, state_path.c_str(), &json);
	else if (cmd_g2->parsed())
		rc = vac_pipeline_g2(eng.e, emit_polys, out, &json);
	else if (cmd_b3->parsed())
		rc = vac_pipeline_b3(eng.e, skip_subsingular, check_ideal, emit_polys,
		                     out, &json);
	else if (cmd_av->parsed())
		rc = vac_assoc_variety_g2(eng.e, emit_polys, out, &json);
	else if (cmd_cd->parsed())
		rc = vac_conf_dim(eng.e, algebra.c_str(), level.c_str(), weight.c_str(),
		                  &json);
	else if (cmd_fr->parsed())
		rc = vac_freudenthal(eng.e, algebra.c_str(), lambda.c_str(), mu.c_str(),
		                     &json);
	else if (cmd_t1->parsed())
		rc = vac_table1(eng.e, algebra.c_str(), level.c_str(), max_dim, &json);
	else if (cmd_sf->parsed())
		rc = vac_spectral_flow_check(eng.e, &json);
	else if (cmd_tb->parsed()) {
		if (which_tables.find("->") != std::string::npos)
			rc = vac_embedding_table(eng.e, which_tables.c_str(), &json);
		else
			rc = vac_algebra_tables(eng.e, which_tables.c_str(), &json);
	}

	return finish(eng, rc, json, as_json, as_csv);
}
