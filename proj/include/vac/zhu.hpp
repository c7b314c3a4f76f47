#pragma once

#include "vac/symalg.hpp"
#include "vac/uea.hpp"
#include "vac/vertex.hpp"

namespace vac {

/// Zhu-algebra image F([v]) in U(g):
///   F([a_1(-n_1-1)...a_m(-n_m-1)|0>]) = (-1)^{n_1+...+n_m} a_m ... a_1,
/// PBW normal ordered.
UeaElem zhu_image(const VaState& v);

/// C2 symbol into S(g): x(-1)-only monomials map to commutative products,
/// anything with a deeper mode maps to zero.
SymElem c2_symbol(const VaState& v);

} // namespace vac
