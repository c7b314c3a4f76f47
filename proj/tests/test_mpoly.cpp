#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vac/mpoly.hpp"

using namespace vac;

TEST_CASE("rational scalars") {
	CHECK(rat(2, 4) == rat(1, 2));
	CHECK(parse_rat("-5/3") == rat(-5, 3));
	CHECK(to_string(rat(-5, 3)) == "-5/3");
	CHECK(is_integer(rat(6, 3)));
	CHECK(!is_integer(rat(1, 3)));
	CHECK_THROWS(parse_rat("a/b"));
	CHECK_THROWS(rat(1, 0));
}

TEST_CASE("polynomial arithmetic and evaluation") {
	// p = (h1 + 2 h2)^2 - h1
	MPoly h1 = MPoly::var(2, 0), h2 = MPoly::var(2, 1);
	MPoly p = (h1 + h2 * rat(2)) * (h1 + h2 * rat(2)) - h1;
	CHECK(p.total_degree() == 2);
	CHECK(p.eval({rat(1), rat(1)}) == rat(8));
	CHECK(p.eval({rat(2), rat(-1)}) == rat(-2));
	MPoly zero = p - p;
	CHECK(zero.zero());

	// substitution: h1 -> h2 + 1 in h1^2
	MPoly repl = MPoly::var(2, 1) + MPoly::constant(2, rat(1));
	MPoly q = (h1 * h1).substitute(0, repl);
	CHECK(q.eval({rat(0), rat(3)}) == rat(16));
}

TEST_CASE("monomial orders") {
	// degrevlex with h1 > h2: h1 h2 > h2^2 and h1^2 > h1 h2
	CHECK(mono_less({0, 2}, {1, 1}, MonOrder::DegRevLex));
	CHECK(mono_less({1, 1}, {2, 0}, MonOrder::DegRevLex));
	// lex: h1 dominates regardless of degree
	CHECK(mono_less({0, 5}, {1, 0}, MonOrder::Lex));
}

TEST_CASE("proportional detection") {
	MPoly h1 = MPoly::var(2, 0), h2 = MPoly::var(2, 1);
	MPoly p = h1 * h2 + h2 * h2 * rat(3);
	MPoly q = p * rat(-7, 2);
	Rat ratio;
	CHECK(proportional(p, q, &ratio));
	CHECK(ratio == rat(-7, 2));
	MPoly r = q + h1;
	CHECK(!proportional(p, r, &ratio));
	CHECK(!proportional(p, MPoly(2), &ratio));
}

TEST_CASE("univariate roots") {
	// (x - 1/2)(x + 3)^2 (x^2 - 2): rational roots 1/2 (mult 1), -3 (mult 2),
	// plus an irrational pair
	UPoly x_half{{rat(-1, 2), rat(1)}};
	UPoly x_p3{{rat(3), rat(1)}};
	UPoly x2_m2{{rat(-2), rat(0), rat(1)}};
	auto mul = [](const UPoly& a, const UPoly& b) {
		UPoly r;
		r.c.assign(a.c.size() + b.c.size() - 1, rat(0));
		for (size_t i = 0; i < a.c.size(); ++i)
			for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
		return r;
	};
	UPoly p = mul(mul(mul(x_half, x_p3), x_p3), x2_m2);
	bool all_rational = true;
	auto roots = rational_roots(p, &all_rational);
	CHECK(!all_rational);
	REQUIRE(roots.size() == 2);
	CHECK(roots[0].first == rat(-3));
	CHECK(roots[0].second == 2);
	CHECK(roots[1].first == rat(1, 2));
	CHECK(roots[1].second == 1);

	// fully rational case
	UPoly q = mul(x_half, x_p3);
	all_rational = true;
	auto roots2 = rational_roots(q, &all_rational);
	CHECK(all_rational);
	CHECK(roots2.size() == 2);

	// sturm count
	CHECK(sturm_count(p, rat(-10), rat(10)) == 4);
	CHECK(sturm_count(p, rat(0), rat(10)) == 2);  // 1/2 and sqrt(2)
}
