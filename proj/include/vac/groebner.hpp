#pragma once

#include "vac/mpoly.hpp"

#include <string>
#include <vector>

namespace vac {

struct GroebnerBasis {
	MonOrder ord = MonOrder::DegRevLex;
	std::vector<MPoly> g;  // reduced basis, monic, deterministic order
};

/// Buchberger with the normal selection strategy (lowest lcm degree first,
/// then lex on the lcm); output is the unique reduced basis.
GroebnerBasis groebner(std::vector<MPoly> gens, MonOrder ord);

/// Full normal form of p modulo the basis.
MPoly normal_form(MPoly p, const GroebnerBasis& gb);

/// True if the quotient is finite-dimensional over Q.
bool is_zero_dimensional(const GroebnerBasis& gb);

/// dim_Q of the quotient ring (solutions counted with multiplicity);
/// -1 if infinite.
long quotient_dimension(const GroebnerBasis& gb);

/// A rational line {base + t * dir}.
struct VarietyLine {
	std::vector<Rat> base, dir;
};

/// Exact description of the common zero locus of a polynomial system in
/// <= 3 variables.
struct ZeroLocus {
	bool empty = false;
	bool finite = false;
	/// every complex solution is accounted for by points/lines below
	bool complete = false;
	std::vector<std::vector<Rat>> points;
	std::vector<VarietyLine> lines;
	std::string note;  // symbolic remainder description when !complete
};

ZeroLocus common_zero_locus(const std::vector<MPoly>& polys);

} // namespace vac
