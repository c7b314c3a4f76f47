#include "vac/symalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace vac {

SymElem SymElem::one(const Algebra& a) {
	SymElem s(a);
	s.t.emplace(SymMono{}, rat(1));
	return s;
}

SymElem SymElem::gen(const Algebra& a, int g) {
	SymElem s(a);
	s.t.emplace(SymMono{{g, 1}}, rat(1));
	return s;
}

namespace {

SymMono sort_mono(SymMono m) {
	std::vector<int> letters;
	for (auto& [g, p] : m)
		for (int k = 0; k < p; ++k) letters.push_back(g);
	std::sort(letters.begin(), letters.end());
	SymMono out;
	for (int g : letters) {
		if (!out.empty() && out.back().first == g)
			++out.back().second;
		else
			out.emplace_back(g, 1);
	}
	return out;
}

} // namespace

void SymElem::add_term(SymMono m, const Rat& c) {
	m = sort_mono(std::move(m));
	auto it = t.find(m);
	if (it == t.end()) {
		if (!is_zero(c)) t.emplace(std::move(m), c);
		return;
	}
	it->second += c;
	if (is_zero(it->second)) t.erase(it);
}

SymElem& SymElem::operator+=(const SymElem& o) {
	if (alg != o.alg) throw std::invalid_argument("SymElem: algebra mismatch");
	for (auto& [m, c] : o.t) {
		auto it = t.find(m);
		if (it == t.end())
			t.emplace(m, c);
		else {
			it->second += c;
			if (is_zero(it->second)) t.erase(it);
		}
	}
	return *this;
}

SymElem& SymElem::operator-=(const SymElem& o) {
	if (alg != o.alg) throw std::invalid_argument("SymElem: algebra mismatch");
	for (auto& [m, c] : o.t) {
		auto it = t.find(m);
		if (it == t.end())
			t.emplace(m, -c);
		else {
			it->second -= c;
			if (is_zero(it->second)) t.erase(it);
		}
	}
	return *this;
}

SymElem SymElem::operator*(const SymElem& o) const {
	SymElem r(*alg);
	for (auto& [m1, c1] : t)
		for (auto& [m2, c2] : o.t) {
			SymMono m = m1;
			m.insert(m.end(), m2.begin(), m2.end());
			r.add_term(std::move(m), c1 * c2);
		}
	return r;
}

SymElem SymElem::operator*(const Rat& c) const {
	SymElem r(*alg);
	if (is_zero(c)) return r;
	for (auto& [m, v] : t) r.t.emplace(m, v * c);
	return r;
}

SymElem adjoint_gen(int g, const SymElem& s) {
	const Algebra& A = *s.alg;
	SymElem out(A);
	for (auto& [m, c] : s.t) {
		for (size_t i = 0; i < m.size(); ++i) {
			const LieVec& br = A.bracket(g, m[i].first);
			for (auto& [g2, v] : br.c) {
				SymMono w = m;
				if (--w[i].second == 0) w.erase(w.begin() + i);
				w.emplace_back(g2, 1);
				out.add_term(std::move(w), c * v * Rat(m[i].second));
			}
		}
	}
	return out;
}

SymElem adjoint(const LieVec& x, const SymElem& s) {
	SymElem out(*s.alg);
	for (auto& [g, v] : x.c) out += adjoint_gen(g, s) * v;
	return out;
}

SymElem adjoint_chain(const std::vector<int>& chain, const SymElem& s) {
	SymElem r = s;
	for (auto it = chain.rbegin(); it != chain.rend(); ++it)
		r = adjoint_gen(*it, r);
	return r;
}

MPoly chevalley_projection(const SymElem& s) {
	const Algebra& A = *s.alg;
	MPoly p(A.rank);
	for (auto& [m, c] : s.t) {
		bool pure_h = true;
		std::vector<int> exp(A.rank, 0);
		for (auto& [g, pw] : m) {
			if (!A.is_h(g)) {
				pure_h = false;
				break;
			}
			exp[g - A.npos] += pw;
		}
		if (pure_h) p.add_term(exp, c);
	}
	return p;
}

SlodowyData build_slodowy_g2() {
	const Algebra& A = build_algebra("G2");
	SlodowyData d;
	d.alg = &A;
	d.f.add(A.f_idx(2), rat(1));
	d.f.add(A.f_idx(4), rat(1));
	d.e.add(A.e_idx(2), rat(1));
	d.e.add(A.e_idx(4), rat(1));
	d.x.add(A.h_idx(1), rat(1));
	d.x.add(A.h_idx(2), rat(2));

	// sl2 relations: [x, e] = e, ... checked via [2x, e] = 2e, [2x, f] = -2f,
	// [e, f] = 2x
	{
		LieVec h2x = d.x * rat(2);
		LieVec t = A.bracket(h2x, d.e);
		t -= d.e * rat(2);
		if (!t.zero()) throw std::logic_error("slodowy: [h,e] != 2e");
		t = A.bracket(h2x, d.f);
		t += d.f * rat(2);
		if (!t.zero()) throw std::logic_error("slodowy: [h,f] != -2f");
		t = A.bracket(d.e, d.f);
		t -= h2x;
		if (!t.zero()) throw std::logic_error("slodowy: [e,f] != h");
	}

	d.grade.assign(A.dim(), 0);
	for (int g = 0; g < A.dim(); ++g) {
		if (A.is_h(g)) continue;
		LieVec xg = A.bracket(d.x, LieVec{{{g, rat(1)}}});
		if (xg.zero()) continue;
		if (xg.c.size() != 1 || xg.c.begin()->first != g)
			throw std::logic_error("slodowy: generator not graded");
		Rat ev = xg.c.begin()->second;
		if (!is_integer(ev)) throw std::logic_error("slodowy: non-integer grade");
		d.grade[g] = (int)to_long(ev);
	}

	// chi(x) = -(f|x) on m = g_1 + g_2
	for (int g = 0; g < A.dim(); ++g) {
		if (d.grade[g] <= 0) continue;
		d.chi[g] = -A.form(d.f, LieVec{{{g, rat(1)}}});
	}

	// centralizer basis: f, e_{-a2}, e_{-a3} - 3 e_{-a5}, e_{-theta}
	{
		LieVec v1 = d.f;
		LieVec v2;
		v2.add(A.f_idx(2), rat(1));
		LieVec v3;
		v3.add(A.f_idx(3), rat(1));
		v3.add(A.f_idx(5), rat(-3));
		LieVec v4;
		v4.add(A.f_idx(6), rat(1));
		for (auto& v : {v1, v2, v3, v4}) {
			if (!A.bracket(v, d.f).zero())
				throw std::logic_error("slodowy: claimed centralizer fails");
			d.centralizer.push_back(v);
		}
	}
	return d;
}

SymElem reduce_mod_jchi(const SymElem& s, const SlodowyData& data) {
	const Algebra& A = *s.alg;
	if (data.alg != &A) throw std::invalid_argument("reduce_mod_jchi: algebra mismatch");
	SymElem out(A);
	for (auto& [m, c] : s.t) {
		Rat coeff = c;
		SymMono rest;
		bool dead = false;
		for (auto& [g, p] : m) {
			if (data.grade[g] > 0) {
				auto it = data.chi.find(g);
				Rat v = it == data.chi.end() ? rat(0) : it->second;
				if (is_zero(v)) {
					dead = true;
					break;
				}
				for (int k = 0; k < p; ++k) coeff *= v;
			} else {
				rest.emplace_back(g, p);
			}
		}
		if (!dead) out.add_term(std::move(rest), coeff);
	}
	return out;
}

} // namespace vac
