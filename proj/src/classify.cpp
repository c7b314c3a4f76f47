#include "vac/classify.hpp"

#include "vac/linalg.hpp"

#include <stdexcept>

namespace vac {

std::vector<MPoly> PolySet::raw() const {
	std::vector<MPoly> r;
	for (auto& p : polys) r.push_back(p.poly);
	return r;
}

PolySet extract_polyset(const UeaElem& v_prime,
                        const std::vector<std::vector<int>>& chains) {
	const Algebra& A = *v_prime.alg;
	PolySet ps;
	ps.alg = &A;
	int idx = 0;
	for (auto& chain : chains) {
		UeaElem u = apply_lowering_chain(chain, v_prime);
		if (!u.zero()) {
			RootVec w = u.h_weight();
			for (int i = 0; i < A.rank; ++i)
				if (w[i] != 0)
					throw std::invalid_argument(
					    "extract_polyset: chain output is not h-invariant");
		}
		PolyEntry e;
		e.name = "p" + std::to_string(++idx);
		e.chain = chain;
		e.poly = harish_chandra(u);
		ps.polys.push_back(std::move(e));
	}
	return ps;
}

WeightSolution solve_weights(const PolySet& ps) {
	WeightSolution sol;
	ZeroLocus z = common_zero_locus(ps.raw());
	sol.finite = z.finite;
	sol.complete = z.complete;
	sol.note = z.note;
	for (auto& p : z.points) sol.points.emplace_back(p);
	for (auto& l : z.lines)
		sol.families.push_back({Weight(l.base), Weight(l.dir)});
	if (z.finite) {
		GroebnerBasis gb = groebner(ps.raw(), MonOrder::DegRevLex);
		sol.quotient_dim = quotient_dimension(gb);
	}
	return sol;
}

bool verify_point(const PolySet& ps, const Weight& mu) {
	for (auto& e : ps.polys)
		if (!is_zero(e.poly.eval(mu.fw))) return false;
	return true;
}

bool verify_family(const PolySet& ps, const WeightFamily& fam) {
	// substitute h_i -> base_i + t * dir_i; the result must be 0 in Q[t]
	for (auto& e : ps.polys) {
		std::map<long, Rat> tpoly;
		for (auto& [m, c] : e.poly.t) {
			// expand prod (base_i + t dir_i)^(m_i)
			std::map<long, Rat> term{{0, c}};
			for (int i = 0; i < e.poly.nvars; ++i)
				for (int k = 0; k < m[i]; ++k) {
					std::map<long, Rat> next;
					for (auto& [d, v] : term) {
						next[d] += v * fam.base.fw[i];
						next[d + 1] += v * fam.dir.fw[i];
					}
					term = std::move(next);
				}
			for (auto& [d, v] : term) tpoly[d] += v;
		}
		for (auto& [d, v] : tpoly)
			if (!is_zero(v)) return false;
	}
	return true;
}

std::vector<Weight> ordinary_filter(const WeightSolution& sol) {
	if (!sol.finite)
		throw std::invalid_argument("ordinary_filter: solution set not finite");
	std::vector<Weight> out;
	for (auto& w : sol.points)
		if (w.dominant_integral()) out.push_back(w);
	return out;
}

namespace {

SparseMat poly_matrix(const std::vector<MPoly>& polys) {
	std::map<std::vector<int>, int> colix;
	for (auto& p : polys)
		for (auto& [m, c] : p.t)
			colix.emplace(m, (int)colix.size());
	SparseMat M;
	M.ncols = (int)colix.size();
	for (auto& p : polys) {
		std::map<int, Rat> row;
		for (auto& [m, c] : p.t) row[colix[m]] = c;
		M.rows.push_back(std::move(row));
	}
	return M;
}

} // namespace

long poly_rank(const std::vector<MPoly>& polys) {
	return poly_matrix(polys).rank();
}

bool poly_in_span(const std::vector<MPoly>& basis, const MPoly& q) {
	// columns = basis polynomials, rows = monomials
	std::map<std::vector<int>, int> rowix;
	for (auto& p : basis)
		for (auto& [m, c] : p.t) rowix.emplace(m, (int)rowix.size());
	for (auto& [m, c] : q.t) rowix.emplace(m, (int)rowix.size());
	SparseMat M;
	M.ncols = (int)basis.size();
	M.rows.assign(rowix.size(), {});
	for (size_t j = 0; j < basis.size(); ++j)
		for (auto& [m, c] : basis[j].t) M.rows[rowix[m]][(int)j] = c;
	std::vector<Rat> b(rowix.size(), rat(0));
	for (auto& [m, c] : q.t) b[rowix[m]] = c;
	return M.solve(b, nullptr);
}

} // namespace vac
