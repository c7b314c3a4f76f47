#include "vac/uea.hpp"

#include <stdexcept>

namespace vac {

UeaElem UeaElem::one(const Algebra& a) {
	UeaElem u(a);
	u.t.emplace(PbwMono{}, rat(1));
	return u;
}

UeaElem UeaElem::gen(const Algebra& a, int g) {
	UeaElem u(a);
	u.t.emplace(PbwMono{{g, 1}}, rat(1));
	return u;
}

void UeaElem::add_term(const PbwMono& m, const Rat& c) {
	auto it = t.find(m);
	if (it == t.end()) {
		if (!is_zero(c)) t.emplace(m, c);
		return;
	}
	it->second += c;
	if (is_zero(it->second)) t.erase(it);
}

UeaElem& UeaElem::operator+=(const UeaElem& o) {
	if (alg != o.alg) throw std::invalid_argument("UeaElem: algebra mismatch");
	for (auto& [m, c] : o.t) add_term(m, c);
	return *this;
}

UeaElem& UeaElem::operator-=(const UeaElem& o) {
	if (alg != o.alg) throw std::invalid_argument("UeaElem: algebra mismatch");
	for (auto& [m, c] : o.t) add_term(m, -c);
	return *this;
}

UeaElem UeaElem::operator*(const Rat& c) const {
	UeaElem r(*alg);
	if (is_zero(c)) return r;
	for (auto& [m, v] : t) r.t.emplace(m, v * c);
	return r;
}

RootVec UeaElem::h_weight() const {
	bool first = true;
	RootVec w(alg->rank, 0);
	for (auto& [m, c] : t) {
		RootVec mw(alg->rank, 0);
		for (auto& [g, p] : m) {
			const RootVec& gw = alg->gen_root_weight(g);
			for (int i = 0; i < alg->rank; ++i) mw[i] += p * gw[i];
		}
		if (first) {
			w = mw;
			first = false;
		} else if (mw != w)
			throw std::logic_error("UeaElem: not weight homogeneous");
	}
	return w;
}

namespace {

PbwMono rle(const std::vector<int>& letters) {
	PbwMono m;
	for (int g : letters) {
		if (!m.empty() && m.back().first == g)
			++m.back().second;
		else
			m.emplace_back(g, 1);
	}
	return m;
}

void letters_of(const PbwMono& m, std::vector<int>& out) {
	out.clear();
	for (auto& [g, p] : m)
		for (int k = 0; k < p; ++k) out.push_back(g);
}

/// straighten an arbitrary word into the PBW basis (rightmost inversion)
void normalize_into(const Algebra& A, std::vector<int> word, Rat coeff,
                    UeaElem& out) {
	struct Item {
		std::vector<int> w;
		Rat c;
	};
	std::vector<Item> stack;
	stack.push_back({std::move(word), std::move(coeff)});
	while (!stack.empty()) {
		Item it = std::move(stack.back());
		stack.pop_back();
		int inv = -1;
		for (int i = (int)it.w.size() - 2; i >= 0; --i)
			if (it.w[i] > it.w[i + 1]) {
				inv = i;
				break;
			}
		if (inv < 0) {
			out.add_term(rle(it.w), it.c);
			continue;
		}
		const LieVec& br = A.bracket(it.w[inv], it.w[inv + 1]);
		for (auto& [g, v] : br.c) {
			std::vector<int> rw;
			rw.reserve(it.w.size() - 1);
			rw.insert(rw.end(), it.w.begin(), it.w.begin() + inv);
			rw.push_back(g);
			rw.insert(rw.end(), it.w.begin() + inv + 2, it.w.end());
			stack.push_back({std::move(rw), it.c * v});
		}
		std::swap(it.w[inv], it.w[inv + 1]);
		stack.push_back({std::move(it.w), std::move(it.c)});
	}
}

} // namespace

UeaElem multiply(const UeaElem& a, const UeaElem& b) {
	if (a.alg != b.alg) throw std::invalid_argument("multiply: algebra mismatch");
	UeaElem out(*a.alg);
	std::vector<int> la, lb, w;
	for (auto& [ma, ca] : a.t) {
		letters_of(ma, la);
		for (auto& [mb, cb] : b.t) {
			letters_of(mb, lb);
			w = la;
			w.insert(w.end(), lb.begin(), lb.end());
			normalize_into(*a.alg, w, ca * cb, out);
		}
	}
	return out;
}

UeaElem left_adjoint_gen(int g, const UeaElem& u) {
	const Algebra& A = *u.alg;
	UeaElem out(A);
	std::vector<int> letters;
	for (auto& [m, c] : u.t) {
		letters_of(m, letters);
		for (size_t i = 0; i < letters.size(); ++i) {
			const LieVec& br = A.bracket(g, letters[i]);
			for (auto& [g2, v] : br.c) {
				std::vector<int> w = letters;
				w[i] = g2;
				normalize_into(A, std::move(w), c * v, out);
			}
		}
	}
	return out;
}

UeaElem left_adjoint(const LieVec& x, const UeaElem& u) {
	UeaElem out(*u.alg);
	for (auto& [g, v] : x.c) {
		UeaElem part = left_adjoint_gen(g, u);
		out += part * v;
	}
	return out;
}

UeaElem apply_lowering_chain(const std::vector<int>& chain, const UeaElem& u) {
	UeaElem r = u;
	for (auto it = chain.rbegin(); it != chain.rend(); ++it)
		r = left_adjoint_gen(*it, r);
	return r;
}

MPoly harish_chandra(const UeaElem& u) {
	const Algebra& A = *u.alg;
	MPoly p(A.rank);
	for (auto& [m, c] : u.t) {
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

} // namespace vac
