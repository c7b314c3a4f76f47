#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vac/textio.hpp"

#include <fstream>
#include <sstream>

using namespace vac;

TEST_CASE("va state round trip") {
	std::string text = "# algebra G2\n# level -2\n"
	                   "-60 * e[6](-3) e[5](-2) e[4](-1)\n"
	                   "8 * e[4](-3) e[4](-1)^3\n";
	std::istringstream in(text);
	VaState v = parse_va_state(in);
	CHECK(v.t.size() == 2);
	// print -> parse -> print is stable, and parse(print(v)) == v
	std::string printed = print_va_state(v);
	std::istringstream in2(printed);
	VaState v2 = parse_va_state(in2);
	CHECK(v2 == v);
	CHECK(print_va_state(v2) == printed);
}

TEST_CASE("non-canonical input is straightened") {
	// the same two factors in both orders differ by a commutator term
	std::string a = "# algebra G2\n# level -2\n1 * e[1](-1) e[2](-1)\n";
	std::string b = "# algebra G2\n# level -2\n1 * e[2](-1) e[1](-1)\n"
	                "1 * e[3](-2)\n";
	std::istringstream ia(a), ib(b);
	VaState va = parse_va_state(ia);
	VaState vb = parse_va_state(ib);
	CHECK(va == vb);
}

TEST_CASE("parse errors carry line numbers") {
	std::string bad = "# algebra G2\n# level -2\n1 * e[9](-1)\n";
	std::istringstream in(bad);
	try {
		parse_va_state(in);
		CHECK(false);
	} catch (const std::exception& e) {
		CHECK(std::string(e.what()).find("e[9]") != std::string::npos);
	}
	std::string bad2 = "# algebra G2\n# level -2\nxyz\n";
	std::istringstream in2(bad2);
	try {
		parse_va_state(in2);
		CHECK(false);
	} catch (const std::exception& e) {
		CHECK(std::string(e.what()).find("line 3") != std::string::npos);
	}
	std::string bad3 = "1 * e[1](-1)\n";
	std::istringstream in3(bad3);
	CHECK_THROWS(parse_va_state(in3));
}

TEST_CASE("uea and sym round trips") {
	std::string text = "# algebra G2\n72 * e[4] e[5] e[6]\n-1 * f[1] h[2]^2\n";
	std::istringstream in(text);
	UeaElem u = parse_uea(in);
	CHECK(u.t.size() == 2);
	std::string printed = print_uea(u);
	std::istringstream in2(printed);
	CHECK(parse_uea(in2) == u);

	std::istringstream in3(text);
	SymElem s = parse_sym(in3);
	CHECK(s.t.size() == 2);
	std::string sp = print_sym(s);
	std::istringstream in4(sp);
	CHECK(parse_sym(in4) == s);
}

TEST_CASE("shipped data files load") {
	std::string dir = data_dir();
	VaState vg = read_va_state(dir + "/g2_singular_vector.txt");
	CHECK(vg.t.size() >= 380);
	CHECK(vg.conformal_weight() == 6);
	VaState vb = read_va_state(dir + "/b3_singular_vector.txt");
	CHECK(vb.t.size() == 3);
	UeaElem vz = read_uea(dir + "/g2_singular_vector_zhu.txt");
	CHECK(vz.t.size() > 150);

	int nv = 0;
	auto g2polys = read_polyset_file(dir + "/g2_weight_zero_polys.txt", &nv);
	CHECK(nv == 2);
	CHECK(g2polys.size() == 8);
	for (auto& e : g2polys) CHECK(e.chain.size() >= 4);
	auto av = read_polyset_file(dir + "/g2_assoc_variety_polys.txt", &nv);
	CHECK(av.size() == 7);
	CHECK(av[0].chain.size() == 3);
	auto quads = read_polyset_file(dir + "/b3_quadratic_polys.txt", &nv);
	CHECK(nv == 3);
	CHECK(quads.size() == 3);
	for (auto& e : quads) CHECK(e.poly.total_degree() == 2);
	auto sext = read_polyset_file(dir + "/b3_subsingular_polys.txt", &nv);
	CHECK(sext.size() == 6);
	for (auto& e : sext) {
		CHECK(e.poly.total_degree() == 6);
		CHECK(e.chain.size() == 4);
	}

	auto t2 = read_weight_list(dir + "/g2_category_o_weights.txt");
	CHECK(t2.size() == 20);
	auto t3 = read_weight_list(dir + "/b3_category_o_weights.txt");
	CHECK(t3.size() == 13);

	SymElem r1 = read_sym(dir + "/g2_reduction_vsym.txt");
	CHECK(r1.t.size() == 7);
	SymElem r2 = read_sym(dir + "/g2_reduction_lowered.txt");
	CHECK(r2.t.size() == 6);
}

TEST_CASE("weights parse and print") {
	Weight w = parse_weight("3,-5/2", 2);
	CHECK(w.fw[0] == rat(3));
	CHECK(w.fw[1] == rat(-5, 2));
	CHECK(w.str() == "3,-5/2");
	CHECK_THROWS(parse_weight("1,2,3", 2));
}

TEST_CASE("polyset print parses back") {
	std::string dir = data_dir();
	int nv = 0;
	auto quads = read_polyset_file(dir + "/b3_quadratic_polys.txt", &nv);
	std::string printed = print_polyset(quads, nv);
	// write to a temp file and read back
	std::string tmp = "/tmp/vac_test_polyset.txt";
	{
		std::ofstream out(tmp);
		out << "# algebra B3\n" << printed;
	}
	int nv2 = 0;
	auto again = read_polyset_file(tmp, &nv2);
	REQUIRE(again.size() == quads.size());
	for (size_t i = 0; i < again.size(); ++i) {
		CHECK(again[i].poly == quads[i].poly);
		CHECK(again[i].name == quads[i].name);
	}
}
