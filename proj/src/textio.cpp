#include "vac/textio.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vac {

namespace {

struct Header {
	std::string algebra;
	std::string level;
	int nvars = 0;
};

std::ifstream open_or_throw(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw std::runtime_error("cannot open '" + path + "'");
	return in;
}

std::vector<std::string> tokens_of(const std::string& line) {
	std::istringstream is(line);
	std::vector<std::string> toks;
	std::string t;
	while (is >> t) toks.push_back(t);
	return toks;
}

void parse_header_line(const std::string& line, Header& h) {
	auto toks = tokens_of(line);
	if (toks.size() >= 3 && toks[1] == "algebra") h.algebra = toks[2];
	if (toks.size() >= 3 && toks[1] == "level") h.level = toks[2];
	if (toks.size() >= 3 && toks[1] == "vars") h.nvars = std::stoi(toks[2]);
}

// factor token "e[6](-3)^2" or "e[6](-3)"
void parse_va_factor(const Algebra& A, const std::string& tok, VaMono& out,
                     int lineno) {
	auto lp = tok.find('(');
	auto rp = tok.find(')');
	if (lp == std::string::npos || rp == std::string::npos || rp < lp)
		throw std::runtime_error("line " + std::to_string(lineno) +
		                         ": bad factor '" + tok + "'");
	int gen = A.parse_gen(tok.substr(0, lp));
	int mode = std::stoi(tok.substr(lp + 1, rp - lp - 1));
	if (mode >= 0)
		throw std::runtime_error("line " + std::to_string(lineno) +
		                         ": nonnegative mode in '" + tok + "'");
	int pow = 1;
	if (rp + 1 < tok.size()) {
		if (tok[rp + 1] != '^')
			throw std::runtime_error("line " + std::to_string(lineno) +
			                         ": bad factor tail '" + tok + "'");
		pow = std::stoi(tok.substr(rp + 2));
	}
	for (int k = 0; k < pow; ++k) out.emplace_back(mode, gen);
}

// letter token "e[4]^2" or "h[1]"
void parse_letter(const Algebra& A, const std::string& tok,
                  std::vector<std::pair<int, int>>& out, int lineno) {
	auto caret = tok.find('^');
	std::string name = caret == std::string::npos ? tok : tok.substr(0, caret);
	int pow = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
	if (pow < 1)
		throw std::runtime_error("line " + std::to_string(lineno) +
		                         ": bad exponent in '" + tok + "'");
	out.emplace_back(A.parse_gen(name), pow);
}

} // namespace

VaState parse_va_state(std::istream& in) {
	Header h;
	std::string line;
	int lineno = 0;
	std::vector<std::pair<VaMono, Rat>> raw;
	while (std::getline(in, line)) {
		++lineno;
		if (line.empty()) continue;
		if (line[0] == '#') {
			parse_header_line(line, h);
			continue;
		}
		auto toks = tokens_of(line);
		if (toks.size() < 2 || toks[1] != "*")
			throw std::runtime_error("line " + std::to_string(lineno) +
			                         ": expected 'coeff * factors...'");
		if (h.algebra.empty())
			throw std::runtime_error("missing '# algebra' header");
		const Algebra& A = build_algebra(h.algebra);
		Rat c = parse_rat(toks[0]);
		VaMono m;
		for (size_t i = 2; i < toks.size(); ++i) parse_va_factor(A, toks[i], m, lineno);
		raw.emplace_back(std::move(m), c);
	}
	if (h.algebra.empty()) throw std::runtime_error("missing '# algebra' header");
	if (h.level.empty()) throw std::runtime_error("missing '# level' header");
	const Algebra& A = build_algebra(h.algebra);
	VaState v(A, parse_rat(h.level));
	for (auto& [m, c] : raw) v += normalize_word(A, v.level, m, c);
	return v;
}

VaState read_va_state(const std::string& path) {
	auto in = open_or_throw(path);
	return parse_va_state(in);
}

std::string print_va_state(const VaState& v) {
	const Algebra& A = *v.alg;
	std::ostringstream os;
	os << "# algebra " << A.label << "\n# level " << to_string(v.level) << "\n";
	for (auto& [m, c] : v.t) {
		os << to_string(c) << " *";
		size_t i = 0;
		while (i < m.size()) {
			size_t j = i;
			while (j < m.size() && m[j] == m[i]) ++j;
			os << " " << A.gen_name(m[i].second) << "(" << m[i].first << ")";
			if (j - i > 1) os << "^" << j - i;
			i = j;
		}
		os << "\n";
	}
	return os.str();
}

UeaElem parse_uea(std::istream& in) {
	Header h;
	std::string line;
	int lineno = 0;
	std::vector<std::pair<std::vector<std::pair<int, int>>, Rat>> raw;
	while (std::getline(in, line)) {
		++lineno;
		if (line.empty()) continue;
		if (line[0] == '#') {
			parse_header_line(line, h);
			continue;
		}
		if (h.algebra.empty())
			throw std::runtime_error("missing '# algebra' header");
		const Algebra& A = build_algebra(h.algebra);
		auto toks = tokens_of(line);
		if (toks.size() < 2 || toks[1] != "*")
			throw std::runtime_error("line " + std::to_string(lineno) +
			                         ": expected 'coeff * letters...'");
		Rat c = parse_rat(toks[0]);
		std::vector<std::pair<int, int>> letters;
		for (size_t i = 2; i < toks.size(); ++i)
			parse_letter(A, toks[i], letters, lineno);
		raw.emplace_back(std::move(letters), c);
	}
	if (h.algebra.empty()) throw std::runtime_error("missing '# algebra' header");
	const Algebra& A = build_algebra(h.algebra);
	UeaElem out(A);
	for (auto& [letters, c] : raw) {
		UeaElem word(A);
		word.t.emplace(PbwMono{}, c);
		for (auto& [g, p] : letters)
			for (int k = 0; k < p; ++k) word = multiply(word, UeaElem::gen(A, g));
		out += word;
	}
	return out;
}

UeaElem read_uea(const std::string& path) {
	auto in = open_or_throw(path);
	return parse_uea(in);
}

std::string print_uea(const UeaElem& u) {
	const Algebra& A = *u.alg;
	std::ostringstream os;
	os << "# algebra " << A.label << "\n";
	for (auto& [m, c] : u.t) {
		os << to_string(c) << " *";
		for (auto& [g, p] : m) {
			os << " " << A.gen_name(g);
			if (p > 1) os << "^" << p;
		}
		os << "\n";
	}
	return os.str();
}

SymElem parse_sym(std::istream& in) {
	Header h;
	std::string line;
	int lineno = 0;
	std::vector<std::pair<SymMono, Rat>> raw;
	while (std::getline(in, line)) {
		++lineno;
		if (line.empty()) continue;
		if (line[0] == '#') {
			parse_header_line(line, h);
			continue;
		}
		if (h.algebra.empty())
			throw std::runtime_error("missing '# algebra' header");
		const Algebra& A = build_algebra(h.algebra);
		auto toks = tokens_of(line);
		if (toks.size() < 2 || toks[1] != "*")
			throw std::runtime_error("line " + std::to_string(lineno) +
			                         ": expected 'coeff * letters...'");
		Rat c = parse_rat(toks[0]);
		SymMono m;
		for (size_t i = 2; i < toks.size(); ++i) parse_letter(A, toks[i], m, lineno);
		raw.emplace_back(std::move(m), c);
	}
	if (h.algebra.empty()) throw std::runtime_error("missing '# algebra' header");
	const Algebra& A = build_algebra(h.algebra);
	SymElem out(A);
	for (auto& [m, c] : raw) out.add_term(m, c);
	return out;
}

SymElem read_sym(const std::string& path) {
	auto in = open_or_throw(path);
	return parse_sym(in);
}

std::string print_sym(const SymElem& s) {
	const Algebra& A = *s.alg;
	std::ostringstream os;
	os << "# algebra " << A.label << "\n";
	for (auto& [m, c] : s.t) {
		os << to_string(c) << " *";
		for (auto& [g, p] : m) {
			os << " " << A.gen_name(g);
			if (p > 1) os << "^" << p;
		}
		os << "\n";
	}
	return os.str();
}

std::vector<PolyEntry> read_polyset_file(const std::string& path, int* nvars) {
	auto in = open_or_throw(path);
	Header h;
	std::string line;
	std::string alg_label;
	std::vector<PolyEntry> out;
	PolyEntry cur;
	bool in_poly = false;
	auto flush = [&]() {
		if (in_poly) out.push_back(cur);
		cur = PolyEntry{};
	};
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (line.empty()) continue;
		if (line[0] == '#') {
			auto toks = tokens_of(line);
			if (toks.size() >= 3 && toks[1] == "vars") h.nvars = std::stoi(toks[2]);
			if (toks.size() >= 3 && toks[1] == "algebra") h.algebra = toks[2];
			if (toks.size() >= 3 && toks[1] == "poly") {
				flush();
				in_poly = true;
				cur.name = toks[2];
				cur.poly = MPoly(h.nvars);
			}
			if (toks.size() >= 3 && toks[1] == "chain") {
				const Algebra& A = build_algebra(h.algebra);
				for (size_t i = 2; i < toks.size(); ++i)
					cur.chain.push_back(A.parse_gen(toks[i]));
			}
			continue;
		}
		if (!in_poly)
			throw std::runtime_error("line " + std::to_string(lineno) +
			                         ": monomial before '# poly'");
		auto toks = tokens_of(line);
		Rat c = parse_rat(toks[0]);
		std::vector<int> exp(h.nvars, 0);
		for (size_t i = 1; i < toks.size(); ++i) {
			const std::string& tok = toks[i];
			if (tok[0] != 'h')
				throw std::runtime_error("line " + std::to_string(lineno) +
				                         ": bad variable '" + tok + "'");
			auto caret = tok.find('^');
			int var = std::stoi(tok.substr(1, caret == std::string::npos
			                                      ? std::string::npos
			                                      : caret - 1));
			int p = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
			if (var < 1 || var > h.nvars)
				throw std::runtime_error("line " + std::to_string(lineno) +
				                         ": variable out of range");
			exp[var - 1] += p;
		}
		cur.poly.add_term(exp, c);
	}
	flush();
	if (nvars) *nvars = h.nvars;
	return out;
}

std::string print_polyset(const std::vector<PolyEntry>& entries, int nvars,
                           const Algebra* alg) {
	std::ostringstream os;
	if (alg) os << "# algebra " << alg->label << "\n";
	os << "# vars " << nvars << "\n";
	for (auto& e : entries) {
		os << "# poly " << e.name << "\n";
		if (alg && !e.chain.empty()) {
			os << "# chain";
			for (int g : e.chain) os << " " << alg->gen_name(g);
			os << "\n";
		}
		for (auto term_it = e.poly.t.rbegin(); term_it != e.poly.t.rend(); ++term_it) {
			os << to_string(term_it->second);
			for (int i = 0; i < nvars; ++i) {
				if (term_it->first[i] == 0) continue;
				os << " h" << i + 1;
				if (term_it->first[i] > 1) os << "^" << term_it->first[i];
			}
			os << "\n";
		}
	}
	return os.str();
}

std::vector<Weight> read_weight_list(const std::string& path) {
	auto in = open_or_throw(path);
	std::string line;
	std::vector<Weight> out;
	while (std::getline(in, line)) {
		if (line.empty() || line[0] == '#') continue;
		std::vector<Rat> fw;
		std::string cur;
		for (char ch : line + ",") {
			if (ch == ',') {
				fw.push_back(parse_rat(cur));
				cur.clear();
			} else if (!isspace((unsigned char)ch))
				cur += ch;
		}
		out.emplace_back(std::move(fw));
	}
	return out;
}

std::string print_weight(const Weight& w) { return w.str(); }

Weight parse_weight(const std::string& s, int rank) {
	std::vector<Rat> fw;
	std::string cur;
	for (char ch : s + ",") {
		if (ch == ',') {
			fw.push_back(parse_rat(cur));
			cur.clear();
		} else if (!isspace((unsigned char)ch))
			cur += ch;
	}
	if ((int)fw.size() != rank)
		throw std::invalid_argument("weight '" + s + "': expected " +
		                            std::to_string(rank) + " coordinates");
	return Weight(fw);
}

std::string data_dir() {
	const char* env = std::getenv("VAC_DATA_DIR");
	if (env && *env) return env;
	return "data";
}

} // namespace vac
