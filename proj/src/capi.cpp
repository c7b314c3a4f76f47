#include "vac/capi.h"

#include "vac/pipeline.hpp"
#include "vac/textio.hpp"

#include <cstring>
#include <string>

struct vac_engine {
	std::string data_dir;
	std::string cache_dir;
	std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
	char* p = (char*)malloc(s.size() + 1);
	memcpy(p, s.c_str(), s.size() + 1);
	return p;
}

vac::RunOptions options_of(const vac_engine* eng) {
	vac::RunOptions opt;
	opt.data_dir = eng->data_dir;
	opt.cache_dir = eng->cache_dir;
	return opt;
}

template <typename Fn>
int guarded(vac_engine* eng, char** out_json, Fn&& fn) {
	if (!eng) return 1;
	eng->last_error.clear();
	try {
		vac::Json report = fn();
		if (out_json) *out_json = dup_string(report.dump(2));
		return vac::report_exit_code(report);
	} catch (const std::exception& e) {
		eng->last_error = e.what();
		if (out_json) *out_json = nullptr;
		return 1;
	}
}

} // namespace

extern "C" {

vac_engine* vac_engine_new(const char* data_dir, const char* cache_dir) {
	auto* eng = new vac_engine;
	eng->data_dir = data_dir ? data_dir : vac::data_dir();
	eng->cache_dir = cache_dir ? cache_dir : "";
	return eng;
}

void vac_engine_free(vac_engine* eng) { delete eng; }

const char* vac_last_error(const vac_engine* eng) {
	return eng ? eng->last_error.c_str() : "null engine";
}

int vac_verify_singular(vac_engine* eng, const char* path, char** out_json) {
	return guarded(eng, out_json, [&] {
		if (!path) throw std::invalid_argument("null path");
		return vac::verify_singular_report(path);
	});
}

int vac_pipeline_g2(vac_engine* eng, int emit_polys, const char* out_dir,
                    char** out_json) {
	return guarded(eng, out_json, [&] {
		vac::RunOptions opt = options_of(eng);
		opt.emit_polys = emit_polys != 0;
		if (out_dir) opt.out_dir = out_dir;
		return vac::pipeline_g2(opt);
	});
}

int vac_pipeline_b3(vac_engine* eng, int skip_subsingular,
                    int check_ideal_membership, int emit_polys,
                    const char* out_dir, char** out_json) {
	return guarded(eng, out_json, [&] {
		vac::RunOptions opt = options_of(eng);
		opt.skip_subsingular = skip_subsingular != 0;
		opt.check_ideal_membership = check_ideal_membership != 0;
		opt.emit_polys = emit_polys != 0;
		if (out_dir) opt.out_dir = out_dir;
		return vac::pipeline_b3(opt);
	});
}

int vac_assoc_variety_g2(vac_engine* eng, int emit_polys, const char* out_dir,
                         char** out_json) {
	return guarded(eng, out_json, [&] {
		vac::RunOptions opt = options_of(eng);
		opt.emit_polys = emit_polys != 0;
		if (out_dir) opt.out_dir = out_dir;
		return vac::assoc_variety_g2(opt);
	});
}

int vac_table1(vac_engine* eng, const char* algebra, const char* level,
               long max_dim, char** out_json) {
	return guarded(eng, out_json, [&] {
		if (!algebra || !level) throw std::invalid_argument("null argument");
		return vac::table1_report(algebra, level, max_dim);
	});
}

int vac_conf_dim(vac_engine* eng, const char* algebra, const char* level,
                 const char* weight, char** out_json) {
	return guarded(eng, out_json, [&] {
		if (!algebra || !level || !weight)
			throw std::invalid_argument("null argument");
		return vac::conf_dim_report(algebra, level, weight);
	});
}

int vac_freudenthal(vac_engine* eng, const char* algebra, const char* lambda,
                    const char* mu, char** out_json) {
	return guarded(eng, out_json, [&] {
		if (!algebra || !lambda || !mu)
			throw std::invalid_argument("null argument");
		return vac::freudenthal_report(algebra, lambda, mu);
	});
}

int vac_spectral_flow_check(vac_engine* eng, char** out_json) {
	return guarded(eng, out_json, [&] { return vac::spectral_flow_report(); });
}

int vac_algebra_tables(vac_engine* eng, const char* algebra, char** out_json) {
	return guarded(eng, out_json, [&] {
		if (!algebra) throw std::invalid_argument("null algebra");
		return vac::algebra_tables_json(algebra);
	});
}

int vac_embedding_table(vac_engine* eng, const char* pair, char** out_json) {
	return guarded(eng, out_json, [&] {
		if (!pair) throw std::invalid_argument("null pair");
		return vac::embedding_table_json(pair);
	});
}

int vac_report_csv(vac_engine* eng, const char* report_json, char** out_csv) {
	if (!eng) return 1;
	eng->last_error.clear();
	try {
		if (!report_json) throw std::invalid_argument("null report");
		vac::Json j = vac::Json::parse(report_json);
		if (out_csv) *out_csv = dup_string(vac::solutions_csv(j));
		return 0;
	} catch (const std::exception& e) {
		eng->last_error = e.what();
		if (out_csv) *out_csv = nullptr;
		return 1;
	}
}

void vac_string_free(char* s) { free(s); }

} // extern "C"
