#pragma once

#include "vac/groebner.hpp"
#include "vac/uea.hpp"

#include <string>
#include <vector>

namespace vac {

/// Polynomial with its provenance: the lowering chain (generator indices,
/// rightmost applied first) whose Harish-Chandra projection produced it.
struct PolyEntry {
	std::string name;
	std::vector<int> chain;  // empty when unknown / not applicable
	MPoly poly;
};

struct PolySet {
	const Algebra* alg = nullptr;
	std::vector<PolyEntry> polys;

	std::vector<MPoly> raw() const;
};

/// Harish-Chandra projections of chain applications to v_prime; each chain
/// must produce a weight-zero element (throws otherwise).
PolySet extract_polyset(const UeaElem& v_prime,
                        const std::vector<std::vector<int>>& chains);

/// One-parameter family of weights t -> base + t * dir.
struct WeightFamily {
	Weight base, dir;
};

struct WeightSolution {
	bool finite = false;
	bool complete = false;
	std::vector<Weight> points;
	std::vector<WeightFamily> families;
	long quotient_dim = -1;  // solution count with multiplicity when finite
	std::string note;
};

/// Exact zero set of the polynomial system in Cartan coordinates.
WeightSolution solve_weights(const PolySet& ps);

/// True iff every polynomial of the set vanishes at mu.
bool verify_point(const PolySet& ps, const Weight& mu);

/// True iff every polynomial vanishes identically along the family.
bool verify_family(const PolySet& ps, const WeightFamily& fam);

/// Dominant integral members of a finite solution set.
std::vector<Weight> ordinary_filter(const WeightSolution& sol);

/// Rank of a list of polynomials over Q (linear span).
long poly_rank(const std::vector<MPoly>& polys);

/// True iff q lies in the Q-span of basis.
bool poly_in_span(const std::vector<MPoly>& basis, const MPoly& q);

} // namespace vac
