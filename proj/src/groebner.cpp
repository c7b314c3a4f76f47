#include "vac/groebner.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vac {

namespace {

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
	for (size_t i = 0; i < a.size(); ++i)
		if (a[i] > b[i]) return false;
	return true;
}

std::vector<int> mono_lcm(const std::vector<int>& a, const std::vector<int>& b) {
	std::vector<int> r(a.size());
	for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
	return r;
}

MPoly mono_mult(const MPoly& p, const std::vector<int>& m, const Rat& c) {
	MPoly r(p.nvars);
	for (auto& [mm, cc] : p.t) {
		std::vector<int> k(mm.size());
		for (size_t i = 0; i < mm.size(); ++i) k[i] = mm[i] + m[i];
		r.t.emplace(std::move(k), cc * c);
	}
	return r;
}

} // namespace

MPoly normal_form(MPoly p, const GroebnerBasis& gb) {
	MPoly rem(p.nvars);
	while (!p.zero()) {
		auto* lt = p.leading(gb.ord);
		bool reduced = false;
		for (auto& g : gb.g) {
			auto* glt = g.leading(gb.ord);
			if (!divides(glt->first, lt->first)) continue;
			std::vector<int> q(lt->first.size());
			for (size_t i = 0; i < q.size(); ++i) q[i] = lt->first[i] - glt->first[i];
			p -= mono_mult(g, q, lt->second / glt->second);
			reduced = true;
			break;
		}
		if (!reduced) {
			rem.add_term(lt->first, lt->second);
			p.t.erase(lt->first);
		}
	}
	return rem;
}

GroebnerBasis groebner(std::vector<MPoly> gens, MonOrder ord) {
	GroebnerBasis gb;
	gb.ord = ord;
	for (auto& p : gens)
		if (!p.zero()) gb.g.push_back(p.monic(ord));
	if (gb.g.empty()) return gb;

	struct Pair {
		int i, j;
		std::vector<int> lcm;
		long deg;
	};
	auto pair_less = [](const Pair& a, const Pair& b) {
		if (a.deg != b.deg) return a.deg > b.deg;  // priority: low degree first
		return b.lcm < a.lcm;
	};
	std::vector<Pair> pending;
	auto push_pairs = [&](int j) {
		auto* lj = gb.g[j].leading(gb.ord);
		for (int i = 0; i < j; ++i) {
			auto* li = gb.g[i].leading(gb.ord);
			// Buchberger 1: coprime leading monomials
			bool coprime = true;
			for (size_t k = 0; k < li->first.size(); ++k)
				if (li->first[k] > 0 && lj->first[k] > 0) coprime = false;
			if (coprime) continue;
			Pair p{i, j, mono_lcm(li->first, lj->first), 0};
			p.deg = std::accumulate(p.lcm.begin(), p.lcm.end(), 0L);
			pending.push_back(std::move(p));
			std::push_heap(pending.begin(), pending.end(), pair_less);
		}
	};
	for (size_t j = 0; j < gb.g.size(); ++j) push_pairs((int)j);

	while (!pending.empty()) {
		std::pop_heap(pending.begin(), pending.end(), pair_less);
		Pair pr = std::move(pending.back());
		pending.pop_back();
		auto* li = gb.g[pr.i].leading(gb.ord);
		auto* lj = gb.g[pr.j].leading(gb.ord);
		// s-polynomial
		std::vector<int> qi(pr.lcm.size()), qj(pr.lcm.size());
		for (size_t k = 0; k < pr.lcm.size(); ++k) {
			qi[k] = pr.lcm[k] - li->first[k];
			qj[k] = pr.lcm[k] - lj->first[k];
		}
		MPoly s = mono_mult(gb.g[pr.i], qi, rat(1) / li->second) -
		          mono_mult(gb.g[pr.j], qj, rat(1) / lj->second);
		MPoly r = normal_form(std::move(s), gb);
		if (r.zero()) continue;
		gb.g.push_back(r.monic(ord));
		push_pairs((int)gb.g.size() - 1);
	}

	// minimalize: drop elements whose lead is divisible by another lead
	std::vector<MPoly> min;
	for (size_t i = 0; i < gb.g.size(); ++i) {
		auto* li = gb.g[i].leading(gb.ord);
		bool redundant = false;
		for (size_t j = 0; j < gb.g.size(); ++j) {
			if (i == j) continue;
			auto* ljj = gb.g[j].leading(gb.ord);
			if (divides(ljj->first, li->first) &&
			    (ljj->first != li->first || j < i)) {
				redundant = true;
				break;
			}
		}
		if (!redundant) min.push_back(gb.g[i]);
	}
	// reduce each element against the others
	GroebnerBasis red;
	red.ord = ord;
	for (size_t i = 0; i < min.size(); ++i) {
		GroebnerBasis rest;
		rest.ord = ord;
		for (size_t j = 0; j < min.size(); ++j)
			if (j != i) rest.g.push_back(min[j]);
		MPoly r = normal_form(min[i], rest);
		if (!r.zero()) red.g.push_back(r.monic(ord));
	}
	std::sort(red.g.begin(), red.g.end(), [&](const MPoly& a, const MPoly& b) {
		return mono_less(a.leading(ord)->first, b.leading(ord)->first, ord);
	});
	return red;
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
	if (gb.g.empty()) return false;
	int n = gb.g[0].nvars;
	for (auto& g : gb.g)
		if (g.leading(gb.ord)->first == std::vector<int>(n, 0)) return true;  // <1>
	for (int i = 0; i < n; ++i) {
		bool pure = false;
		for (auto& g : gb.g) {
			auto& lt = g.leading(gb.ord)->first;
			bool only_i = lt[i] > 0;
			for (int j = 0; j < n && only_i; ++j)
				if (j != i && lt[j] > 0) only_i = false;
			if (only_i) pure = true;
		}
		if (!pure) return false;
	}
	return true;
}

long quotient_dimension(const GroebnerBasis& gb) {
	if (!is_zero_dimensional(gb)) return -1;
	int n = gb.g[0].nvars;
	std::vector<std::vector<int>> leads;
	for (auto& g : gb.g) leads.push_back(g.leading(gb.ord)->first);
	// bound per variable from pure powers
	std::vector<int> bound(n, 0);
	for (int i = 0; i < n; ++i)
		for (auto& l : leads) {
			bool only_i = l[i] > 0;
			for (int j = 0; j < n && only_i; ++j)
				if (j != i && l[j] > 0) only_i = false;
			if (only_i && (bound[i] == 0 || l[i] < bound[i])) bound[i] = l[i];
		}
	long count = 0;
	std::vector<int> e(n, 0);
	std::function<void(int)> rec = [&](int i) {
		if (i == n) {
			for (auto& l : leads)
				if (divides(l, e)) return;
			++count;
			return;
		}
		for (e[i] = 0; e[i] < bound[i]; ++e[i]) rec(i + 1);
		e[i] = 0;
	};
	rec(0);
	return count;
}

// ---------------------------------------------------------------------
// zero locus
// ---------------------------------------------------------------------

namespace {

/// univariate content of a polynomial that uses only variable `var`
UPoly to_univariate(const MPoly& p, int var) {
	UPoly u;
	for (auto& [m, c] : p.t) {
		for (size_t i = 0; i < m.size(); ++i)
			if ((int)i != var && m[i] > 0)
				throw std::logic_error("to_univariate: not univariate");
		if ((int)m[var] >= (int)u.c.size()) u.c.resize(m[var] + 1, rat(0));
		u.c[m[var]] += c;
	}
	u.normalize();
	return u;
}

/// substitute the last variable by a constant and drop it
MPoly substitute_last(const MPoly& p, const Rat& v) {
	MPoly r(p.nvars - 1);
	for (auto& [m, c] : p.t) {
		Rat coeff = c;
		for (int k = 0; k < m.back(); ++k) coeff *= v;
		std::vector<int> mm(m.begin(), m.end() - 1);
		r.add_term(mm, coeff);
	}
	return r;
}

/// all rational points of a zero-dimensional system; sets *complete = false
/// when a non-rational coordinate is certified to exist
void solve_points(std::vector<MPoly> polys, int nvars, std::vector<Rat>& partial,
                  std::vector<std::vector<Rat>>& out, bool* complete,
                  std::string* note) {
	GroebnerBasis gb = groebner(polys, MonOrder::Lex);
	if (gb.g.empty()) {
		// zero ideal: any value works; impossible for zero-dim systems
		*complete = false;
		*note += "free variable; ";
		return;
	}
	if (gb.g.size() == 1 && gb.g[0].t.size() == 1 &&
	    gb.g[0].t.begin()->first == std::vector<int>(nvars, 0))
		return;  // <1>: no solutions
	if (nvars == 1) {
		UPoly u = to_univariate(gb.g[0], 0);
		bool all_rat = true;
		for (auto& [r, mult] : rational_roots(u, &all_rat)) {
			std::vector<Rat> pt{r};
			pt.insert(pt.end(), partial.begin(), partial.end());
			out.push_back(std::move(pt));
		}
		if (!all_rat) {
			*complete = false;
			*note += "irrational roots of " + gb.g[0].str() + "; ";
		}
		return;
	}
	// elimination ideal generator in the last variable
	const MPoly* uni = nullptr;
	for (auto& g : gb.g) {
		bool only_last = true;
		for (auto& [m, c] : g.t)
			for (int i = 0; i + 1 < nvars; ++i)
				if (m[i] > 0) only_last = false;
		if (only_last) {
			uni = &g;
			break;
		}
	}
	if (!uni) {
		*complete = false;
		*note += "positive-dimensional subsystem; ";
		return;
	}
	UPoly u = to_univariate(*uni, nvars - 1);
	bool all_rat = true;
	auto roots = rational_roots(u, &all_rat);
	if (!all_rat) {
		*complete = false;
		*note += "irrational roots of " + uni->str() + "; ";
	}
	for (auto& [r, mult] : roots) {
		std::vector<MPoly> sub;
		for (auto& g : gb.g) {
			MPoly s = substitute_last(g, r);
			if (!s.zero()) sub.push_back(s);
		}
		std::vector<Rat> part2{r};
		part2.insert(part2.end(), partial.begin(), partial.end());
		if (sub.empty()) {
			*complete = false;
			*note += "free variable after substitution; ";
			continue;
		}
		solve_points(std::move(sub), nvars - 1, part2, out, complete, note);
	}
}

UPoly restrict_to_line(const MPoly& p, const std::vector<Rat>& base,
                       const std::vector<Rat>& dir) {
	// p(base + t dir) as a univariate polynomial in t
	UPoly r;
	for (auto& [m, c] : p.t) {
		UPoly term;
		term.c = {c};
		for (int i = 0; i < p.nvars; ++i)
			for (int k = 0; k < m[i]; ++k) {
				UPoly lin;
				lin.c = {base[i], dir[i]};
				lin.normalize();
				// term *= lin
				UPoly prod;
				prod.c.assign(term.c.size() + lin.c.size(), rat(0));
				for (size_t a2 = 0; a2 < term.c.size(); ++a2)
					for (size_t b2 = 0; b2 < lin.c.size(); ++b2)
						prod.c[a2 + b2] += term.c[a2] * lin.c[b2];
				prod.normalize();
				term = prod;
			}
		if (r.c.size() < term.c.size()) r.c.resize(term.c.size(), rat(0));
		for (size_t i = 0; i < term.c.size(); ++i) r.c[i] += term.c[i];
	}
	r.normalize();
	return r;
}

bool on_line(const std::vector<Rat>& pt, const VarietyLine& ln) {
	// pt - base parallel to dir
	int n = (int)pt.size();
	// find parameter from the first nonzero dir coordinate
	int k = -1;
	for (int i = 0; i < n; ++i)
		if (!is_zero(ln.dir[i])) {
			k = i;
			break;
		}
	if (k < 0) return false;
	Rat tpar = (pt[k] - ln.base[k]) / ln.dir[k];
	for (int i = 0; i < n; ++i)
		if (pt[i] != ln.base[i] + tpar * ln.dir[i]) return false;
	return true;
}

VarietyLine canonical_line(std::vector<Rat> base, std::vector<Rat> dir) {
	int n = (int)dir.size();
	int k = -1;
	for (int i = 0; i < n; ++i)
		if (!is_zero(dir[i])) {
			k = i;
			break;
		}
	Rat scale = dir[k];
	for (auto& d : dir) d /= scale;
	// normalize base point: set the k-th coordinate to zero
	Rat tpar = base[k];
	for (int i = 0; i < n; ++i) base[i] -= tpar * dir[i];
	return {std::move(base), std::move(dir)};
}

} // namespace

ZeroLocus common_zero_locus(const std::vector<MPoly>& polys) {
	if (polys.empty()) throw std::invalid_argument("common_zero_locus: empty input");
	int nvars = polys[0].nvars;
	if (nvars > 3)
		throw std::invalid_argument("common_zero_locus: more than 3 variables");
	for (auto& p : polys)
		if (p.nvars != nvars)
			throw std::invalid_argument("common_zero_locus: variable mismatch");

	ZeroLocus out;
	std::vector<MPoly> nonzero;
	for (auto& p : polys)
		if (!p.zero()) nonzero.push_back(p);
	if (nonzero.empty())
		throw std::invalid_argument("common_zero_locus: zero system");

	GroebnerBasis gb = groebner(nonzero, MonOrder::DegRevLex);
	if (gb.g.size() == 1 && gb.g[0].t.size() == 1 &&
	    gb.g[0].t.count(std::vector<int>(nvars, 0))) {
		out.empty = true;
		out.finite = true;
		out.complete = true;
		return out;
	}
	if (is_zero_dimensional(gb)) {
		out.finite = true;
		out.complete = true;
		std::vector<Rat> partial;
		solve_points(nonzero, nvars, partial, out.points, &out.complete, &out.note);
		std::sort(out.points.begin(), out.points.end(),
		          [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
			          return std::lexicographical_compare(a.begin(), a.end(),
			                                              b.begin(), b.end());
		          });
		return out;
	}

	// positive-dimensional: recover rational line components from two
	// parallel finite slices
	out.finite = false;
	const std::array<std::array<long, 3>, 6> dirs{{{1, 2, 5},
	                                               {5, 2, 1},
	                                               {1, 1, 1},
	                                               {2, 3, 1},
	                                               {3, 1, 2},
	                                               {1, 5, 3}}};
	int successes = 0;
	std::vector<std::vector<Rat>> all_slice_pts;
	for (auto& u : dirs) {
		std::vector<std::vector<std::vector<Rat>>> slice_pts(2);
		bool good = true;
		for (int c = 0; c < 2 && good; ++c) {
			MPoly plane(nvars);
			for (int i = 0; i < nvars; ++i) {
				std::vector<int> m(nvars, 0);
				m[i] = 1;
				plane.add_term(m, Rat(u[i]));
			}
			plane.add_term(std::vector<int>(nvars, 0), Rat(-c));
			std::vector<MPoly> sys = nonzero;
			sys.push_back(plane);
			GroebnerBasis sgb = groebner(sys, MonOrder::Lex);
			if (!is_zero_dimensional(sgb) &&
			    !(sgb.g.size() == 1 && sgb.g[0].t.size() == 1 &&
			      sgb.g[0].t.count(std::vector<int>(nvars, 0)))) {
				good = false;
				break;
			}
			bool complete = true;
			std::string note;
			std::vector<Rat> partial;
			solve_points(sys, nvars, partial, slice_pts[c], &complete, &note);
			if (!complete) good = false;
		}
		if (!good) continue;
		// candidate lines through pairs of slice points
		for (auto& p0 : slice_pts[0])
			for (auto& p1 : slice_pts[1]) {
				std::vector<Rat> dir(nvars);
				for (int i = 0; i < nvars; ++i) dir[i] = p1[i] - p0[i];
				bool ok = true;
				for (auto& p : nonzero) {
					UPoly r = restrict_to_line(p, p0, dir);
					if (!r.zero()) ok = false;
				}
				if (!ok) continue;
				VarietyLine ln = canonical_line(p0, dir);
				bool dup = false;
				for (auto& l2 : out.lines)
					if (l2.base == ln.base && l2.dir == ln.dir) dup = true;
				if (!dup) out.lines.push_back(std::move(ln));
			}
		++successes;
		for (auto& sp : slice_pts)
			for (auto& p : sp) all_slice_pts.push_back(p);
	}
	// every slice point from every successful direction must lie on a line
	bool covered = true;
	for (auto& p : all_slice_pts) {
		bool onl = false;
		for (auto& l : out.lines)
			if (on_line(p, l)) onl = true;
		if (!onl) covered = false;
	}
	if (successes >= 2 && covered && !out.lines.empty()) {
		out.complete = true;
		std::sort(out.lines.begin(), out.lines.end(),
		          [](const VarietyLine& a, const VarietyLine& b) {
			          if (a.base != b.base)
				          return std::lexicographical_compare(
				              a.base.begin(), a.base.end(), b.base.begin(),
				              b.base.end());
			          return std::lexicographical_compare(
			              a.dir.begin(), a.dir.end(), b.dir.begin(), b.dir.end());
		          });
		return out;
	}
	out.complete = false;
	std::ostringstream os;
	os << "positive-dimensional zero set not resolved into rational lines; "
	      "reduced groebner basis:";
	for (auto& g : gb.g) os << " [" << g.str() << "]";
	out.note += os.str();
	return out;
}

} // namespace vac
