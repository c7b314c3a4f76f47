#pragma once

#include "vac/liealg.hpp"
#include "vac/mpoly.hpp"

#include <map>
#include <vector>

namespace vac {

/// Commutative monomial: sorted generator letters with exponents.
using SymMono = std::vector<std::pair<int, int>>;

/// Element of the symmetric algebra S(g).
struct SymElem {
	const Algebra* alg = nullptr;
	std::map<SymMono, Rat> t;

	explicit SymElem(const Algebra& a) : alg(&a) {}
	static SymElem one(const Algebra& a);
	static SymElem gen(const Algebra& a, int g);

	bool zero() const { return t.empty(); }
	void add_term(SymMono m, const Rat& c);  // m need not be sorted
	SymElem& operator+=(const SymElem& o);
	SymElem& operator-=(const SymElem& o);
	SymElem operator*(const SymElem& o) const;
	SymElem operator*(const Rat& c) const;
	bool operator==(const SymElem& o) const { return t == o.t; }
};

/// Adjoint action extended as a derivation of S(g).
SymElem adjoint(const LieVec& x, const SymElem& s);
SymElem adjoint_gen(int g, const SymElem& s);

/// Nested adjoint chain [g_1, [g_2, [... [g_k, s]...]]], rightmost first.
SymElem adjoint_chain(const std::vector<int>& chain, const SymElem& s);

/// Chevalley projection onto S(h), read as a polynomial in h_1..h_l.
MPoly chevalley_projection(const SymElem& s);

/// Slodowy-slice data for the subregular nilpotent of G2:
/// f = e_{-a2} + e_{-a4}, x = h/2 = h1 + 2h2.
struct SlodowyData {
	const Algebra* alg = nullptr;
	LieVec f, e, x;                 // sl2 triple (e, h=2x, f)
	std::vector<int> grade;         // per generator: ad(x)-eigenvalue (integer)
	std::map<int, Rat> chi;         // generator in m = g_1 + g_2 -> chi value
	std::vector<LieVec> centralizer;  // basis of g^f

	/// ad(x)-grading component of a generator
	int grading(int gen) const { return grade[gen]; }
};

/// Builds the subregular slice data; chi(x) = -(f|x), the sign convention
/// that reproduces the classical reduction of the singular vector symbol.
SlodowyData build_slodowy_g2();

/// Evaluation modulo J_chi = sum_{x in m} S(g)(x - chi(x)): substitutes each
/// generator of m by its chi value.
SymElem reduce_mod_jchi(const SymElem& s, const SlodowyData& data);

} // namespace vac
