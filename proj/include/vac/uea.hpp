#pragma once

#include "vac/liealg.hpp"
#include "vac/mpoly.hpp"

#include <map>
#include <vector>

namespace vac {

/// PBW monomial: generator letters in the fixed global order
/// f[1] < ... < f[N] < h[1] < ... < h[l] < e[1] < ... < e[N],
/// run-length encoded as (generator, exponent) pairs.
using PbwMono = std::vector<std::pair<int, int>>;

/// Element of U(g) in PBW normal form.  No zero coefficients are stored.
struct UeaElem {
	const Algebra* alg = nullptr;
	std::map<PbwMono, Rat> t;

	explicit UeaElem(const Algebra& a) : alg(&a) {}
	static UeaElem one(const Algebra& a);
	static UeaElem gen(const Algebra& a, int g);

	bool zero() const { return t.empty(); }
	size_t size() const { return t.size(); }
	void add_term(const PbwMono& m, const Rat& c);
	UeaElem& operator+=(const UeaElem& o);
	UeaElem& operator-=(const UeaElem& o);
	UeaElem operator*(const Rat& c) const;
	bool operator==(const UeaElem& o) const { return t == o.t; }

	/// h-weight of a (weight-homogeneous) element; throws if mixed
	RootVec h_weight() const;
};

/// Normal-ordered product.
UeaElem multiply(const UeaElem& a, const UeaElem& b);

/// Left-adjoint action x_L u = xu - ux, extended as a derivation.
UeaElem left_adjoint(const LieVec& x, const UeaElem& u);
UeaElem left_adjoint_gen(int g, const UeaElem& u);

/// Iterated left-adjoint action: chain = (g_1 g_2 ... g_k)_L u, i.e. the
/// rightmost generator acts first.
UeaElem apply_lowering_chain(const std::vector<int>& chain, const UeaElem& u);

/// Harish-Chandra projection: the U(h) component in the PBW decomposition
/// U(g) = U(h) + (n_- U(g) + U(g) n_+), read as a polynomial in h_1..h_l.
MPoly harish_chandra(const UeaElem& u);

} // namespace vac
