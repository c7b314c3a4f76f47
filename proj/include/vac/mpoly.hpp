#pragma once

#include "vac/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace vac {

/// Monomial order on exponent vectors; h1 > h2 > h3 throughout.
enum class MonOrder { Lex, DegRevLex };

bool mono_less(const std::vector<int>& a, const std::vector<int>& b, MonOrder ord);

/// Sparse multivariate polynomial over Q in variables h1..h_nvars.
struct MPoly {
	int nvars = 0;
	std::map<std::vector<int>, Rat> t;  // exponent vector -> coefficient

	MPoly() = default;
	explicit MPoly(int n) : nvars(n) {}
	static MPoly constant(int n, const Rat& c);
	static MPoly var(int n, int i);  // 0-based variable index

	bool zero() const { return t.empty(); }
	void add_term(const std::vector<int>& m, const Rat& c);
	MPoly& operator+=(const MPoly& o);
	MPoly& operator-=(const MPoly& o);
	MPoly operator+(const MPoly& o) const;
	MPoly operator-(const MPoly& o) const;
	MPoly operator*(const MPoly& o) const;
	MPoly operator*(const Rat& c) const;
	bool operator==(const MPoly& o) const { return nvars == o.nvars && t == o.t; }

	int total_degree() const;
	Rat eval(const std::vector<Rat>& x) const;
	/// substitute variable i by a polynomial
	MPoly substitute(int i, const MPoly& repl) const;
	const std::pair<const std::vector<int>, Rat>* leading(MonOrder ord) const;
	/// divides every coefficient by the leading one (w.r.t. ord)
	MPoly monic(MonOrder ord) const;
	/// content-normalized: integer coefficients with gcd 1, positive leading
	MPoly primitive(MonOrder ord) const;

	std::string str() const;  // text format: "coeff h1^a h2^b" per term, "+" joined
};

/// True if q == c * p for some nonzero rational c; reports c.
bool proportional(const MPoly& p, const MPoly& q, Rat* ratio);

/// Exact univariate polynomial over Q, coefficient vector low-to-high.
struct UPoly {
	std::vector<Rat> c;

	int deg() const { return (int)c.size() - 1; }
	bool zero() const { return c.empty(); }
	void normalize();
	Rat eval(const Rat& x) const;
	UPoly derivative() const;
	static UPoly rem(const UPoly& a, const UPoly& b);
	static UPoly gcd(UPoly a, UPoly b);
	UPoly squarefree() const;
	/// deflate by a root: p / (x - r); caller guarantees p(r) == 0
	UPoly deflate(const Rat& r) const;
};

/// All rational roots with multiplicities, found by Sturm isolation plus
/// simplest-rational reconstruction.  Sets *all_rational to false when a
/// real irrational root exists (complex pairs do not affect it).
std::vector<std::pair<Rat, int>> rational_roots(const UPoly& p, bool* all_rational);

/// Number of real roots in (a, b] by Sturm's theorem.
int sturm_count(const UPoly& p, const Rat& a, const Rat& b);

} // namespace vac
