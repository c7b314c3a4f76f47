#include "vac/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vac {

bool mono_less(const std::vector<int>& a, const std::vector<int>& b, MonOrder ord) {
	if (ord == MonOrder::Lex)
		return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
	int da = std::accumulate(a.begin(), a.end(), 0);
	int db = std::accumulate(b.begin(), b.end(), 0);
	if (da != db) return da < db;
	// degrevlex: larger power of the *last* variable is smaller
	for (int i = (int)a.size() - 1; i >= 0; --i)
		if (a[i] != b[i]) return a[i] > b[i];
	return false;
}

MPoly MPoly::constant(int n, const Rat& c) {
	MPoly p(n);
	if (!is_zero(c)) p.t.emplace(std::vector<int>(n, 0), c);
	return p;
}

MPoly MPoly::var(int n, int i) {
	MPoly p(n);
	std::vector<int> m(n, 0);
	m[i] = 1;
	p.t.emplace(m, rat(1));
	return p;
}

void MPoly::add_term(const std::vector<int>& m, const Rat& c) {
	auto it = t.find(m);
	if (it == t.end()) {
		if (!is_zero(c)) t.emplace(m, c);
		return;
	}
	it->second += c;
	if (is_zero(it->second)) t.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
	for (auto& [m, c] : o.t) add_term(m, c);
	return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
	for (auto& [m, c] : o.t) add_term(m, -c);
	return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
	MPoly r = *this;
	r += o;
	return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
	MPoly r = *this;
	r -= o;
	return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
	MPoly r(nvars);
	for (auto& [m1, c1] : t)
		for (auto& [m2, c2] : o.t) {
			std::vector<int> m(nvars);
			for (int i = 0; i < nvars; ++i) m[i] = m1[i] + m2[i];
			r.add_term(m, c1 * c2);
		}
	return r;
}

MPoly MPoly::operator*(const Rat& c) const {
	MPoly r(nvars);
	if (is_zero(c)) return r;
	for (auto& [m, v] : t) r.t.emplace(m, v * c);
	return r;
}

int MPoly::total_degree() const {
	int d = 0;
	for (auto& [m, c] : t)
		d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
	return d;
}

Rat MPoly::eval(const std::vector<Rat>& x) const {
	Rat s = rat(0);
	for (auto& [m, c] : t) {
		Rat v = c;
		for (int i = 0; i < nvars; ++i)
			for (int k = 0; k < m[i]; ++k) v *= x[i];
		s += v;
	}
	return s;
}

MPoly MPoly::substitute(int i, const MPoly& repl) const {
	MPoly r(nvars);
	for (auto& [m, c] : t) {
		std::vector<int> base = m;
		int p = base[i];
		base[i] = 0;
		MPoly term(nvars);
		term.t.emplace(base, c);
		for (int k = 0; k < p; ++k) term = term * repl;
		r += term;
	}
	return r;
}

const std::pair<const std::vector<int>, Rat>* MPoly::leading(MonOrder ord) const {
	const std::pair<const std::vector<int>, Rat>* best = nullptr;
	for (auto& kv : t)
		if (!best || mono_less(best->first, kv.first, ord)) best = &kv;
	return best;
}

MPoly MPoly::monic(MonOrder ord) const {
	auto* l = leading(ord);
	if (!l) return *this;
	return *this * (rat(1) / l->second);
}

MPoly MPoly::primitive(MonOrder ord) const {
	if (zero()) return *this;
	mpz_class num_gcd = 0, den_lcm = 1;
	for (auto& [m, c] : t) {
		mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
		mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
	}
	Rat scale(den_lcm, num_gcd);
	scale.canonicalize();
	MPoly r = *this * scale;
	auto* l = r.leading(ord);
	if (l && sgn(l->second) < 0) r = r * rat(-1);
	return r;
}

std::string MPoly::str() const {
	if (zero()) return "0";
	std::ostringstream os;
	bool first = true;
	// print in descending degrevlex order
	std::vector<const std::pair<const std::vector<int>, Rat>*> terms;
	for (auto& kv : t) terms.push_back(&kv);
	std::sort(terms.begin(), terms.end(), [](auto* a, auto* b) {
		return mono_less(b->first, a->first, MonOrder::DegRevLex);
	});
	for (auto* kv : terms) {
		if (!first) os << " + ";
		first = false;
		os << to_string(kv->second);
		for (size_t i = 0; i < kv->first.size(); ++i) {
			if (kv->first[i] == 0) continue;
			os << " h" << i + 1;
			if (kv->first[i] > 1) os << "^" << kv->first[i];
		}
	}
	return os.str();
}

bool proportional(const MPoly& p, const MPoly& q, Rat* ratio) {
	if (p.zero() || q.zero()) {
		if (p.zero() && q.zero()) {
			if (ratio) *ratio = rat(1);
			return true;
		}
		return false;
	}
	if (p.t.size() != q.t.size()) return false;
	Rat r = q.t.begin()->second / p.t.begin()->second;
	auto ip = p.t.begin();
	auto iq = q.t.begin();
	for (; ip != p.t.end(); ++ip, ++iq) {
		if (ip->first != iq->first) return false;
		if (iq->second != ip->second * r) return false;
	}
	if (ratio) *ratio = r;
	return true;
}

// ---------------------------------------------------------------------
// univariate
// ---------------------------------------------------------------------

void UPoly::normalize() {
	while (!c.empty() && is_zero(c.back())) c.pop_back();
}

Rat UPoly::eval(const Rat& x) const {
	Rat s = rat(0);
	for (int i = deg(); i >= 0; --i) s = s * x + c[i];
	return s;
}

UPoly UPoly::derivative() const {
	UPoly d;
	for (int i = 1; i <= deg(); ++i) d.c.push_back(c[i] * rat(i));
	d.normalize();
	return d;
}

UPoly UPoly::rem(const UPoly& a, const UPoly& b) {
	if (b.zero()) throw std::invalid_argument("UPoly::rem by zero");
	UPoly r = a;
	r.normalize();
	while (!r.zero() && r.deg() >= b.deg()) {
		Rat q = r.c.back() / b.c.back();
		int shift = r.deg() - b.deg();
		for (int i = 0; i <= b.deg(); ++i) r.c[i + shift] -= q * b.c[i];
		r.normalize();
	}
	return r;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
	a.normalize();
	b.normalize();
	while (!b.zero()) {
		UPoly r = rem(a, b);
		a = b;
		b = r;
	}
	if (!a.zero()) {
		Rat lead = a.c.back();
		for (auto& x : a.c) x /= lead;
	}
	return a;
}

UPoly UPoly::squarefree() const {
	UPoly g = gcd(*this, derivative());
	if (g.deg() <= 0) return *this;
	// divide exactly
	UPoly q, r = *this;
	q.c.assign(deg() - g.deg() + 1, rat(0));
	while (!r.zero() && r.deg() >= g.deg()) {
		Rat f = r.c.back() / g.c.back();
		int shift = r.deg() - g.deg();
		q.c[shift] = f;
		for (int i = 0; i <= g.deg(); ++i) r.c[i + shift] -= f * g.c[i];
		r.normalize();
	}
	if (!r.zero()) throw std::logic_error("squarefree: non-exact division");
	q.normalize();
	return q;
}

UPoly UPoly::deflate(const Rat& r) const {
	// synthetic division by (x - r)
	UPoly q;
	q.c.assign(deg(), rat(0));
	Rat carry = rat(0);
	for (int i = deg(); i >= 1; --i) {
		carry = c[i] + carry * r;
		q.c[i - 1] = carry;
	}
	if (c[0] + carry * r != 0) throw std::logic_error("deflate: not a root");
	q.normalize();
	return q;
}

namespace {

int sign_at(const UPoly& p, const Rat& x) { return sgn(p.eval(x)); }

std::vector<UPoly> sturm_chain(const UPoly& p) {
	std::vector<UPoly> ch;
	UPoly a = p;
	a.normalize();
	if (a.zero()) return ch;
	ch.push_back(a);
	UPoly b = a.derivative();
	while (!b.zero()) {
		ch.push_back(b);
		UPoly r = UPoly::rem(a, b);
		for (auto& x : r.c) x = -x;
		a = b;
		b = r;
	}
	return ch;
}

int sign_changes(const std::vector<UPoly>& ch, const Rat& x) {
	int n = 0, last = 0;
	for (auto& p : ch) {
		int s = sign_at(p, x);
		if (s == 0) continue;
		if (last != 0 && s != last) ++n;
		last = s;
	}
	return n;
}

/// simplest rational in the closed interval [a, b], a <= b (Stern-Brocot)
Rat simplest_in(Rat a, Rat b) {
	if (sgn(a) <= 0 && sgn(b) >= 0) return rat(0);
	if (sgn(b) < 0) return -simplest_in(-b, -a);
	// now 0 < a <= b
	mpz_class fa = a.get_num() / a.get_den();  // floor since a > 0
	if (Rat(fa) >= a) return Rat(fa);          // integer in range? a<=fa<=b
	if (Rat(fa + 1) <= b) return Rat(fa + 1);
	Rat fr(fa);
	Rat sub = simplest_in(rat(1) / (b - fr), rat(1) / (a - fr));
	Rat res = fr + rat(1) / sub;
	res.canonicalize();
	return res;
}

} // namespace

int sturm_count(const UPoly& p, const Rat& a, const Rat& b) {
	auto ch = sturm_chain(p);
	if (ch.empty()) return 0;
	return sign_changes(ch, a) - sign_changes(ch, b);
}

std::vector<std::pair<Rat, int>> rational_roots(const UPoly& p0, bool* all_rational) {
	if (all_rational) *all_rational = true;
	std::vector<std::pair<Rat, int>> roots;
	UPoly p = p0;
	p.normalize();
	if (p.deg() <= 0) return roots;
	UPoly sf = p.squarefree();
	// denominator bound: q | (integer leading coeff of the primitive part)
	mpz_class den_lcm = 1;
	for (auto& x : sf.c)
		mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
	mpz_class lead = sf.c.back().get_num() * (den_lcm / sf.c.back().get_den());
	Rat qbound(abs(lead));

	// Cauchy bound on |roots|
	Rat m = rat(0);
	for (int i = 0; i < sf.deg(); ++i) m = std::max(m, Rat(abs(sf.c[i] / sf.c.back())));
	Rat bound = rat(1) + m;

	auto ch = sturm_chain(sf);
	// a split point strictly inside (a,b) that is not a root of sf
	auto pick_nonroot = [&](const Rat& a, const Rat& b) {
		for (long k = 2;; ++k) {
			Rat cand = a + (b - a) / rat(k);
			if (!is_zero(sf.eval(cand))) return cand;
		}
	};
	struct Iv { Rat a, b; };  // endpoints are never roots
	std::vector<Iv> stack;
	{
		Rat lo = -bound, hi = bound;
		while (is_zero(sf.eval(lo))) lo -= rat(1);
		while (is_zero(sf.eval(hi))) hi += rat(1);
		stack.push_back({lo, hi});
	}
	std::vector<Rat> isolated;
	while (!stack.empty()) {
		Iv iv = stack.back();
		stack.pop_back();
		int n = sign_changes(ch, iv.a) - sign_changes(ch, iv.b);
		if (n == 0) continue;
		if (n == 1) {
			// refine until width < 1/(2*qbound^2+2), then reconstruct the
			// unique candidate with denominator <= qbound
			Rat a = iv.a, b = iv.b;
			Rat target = rat(1) / (rat(2) * qbound * qbound + rat(2));
			bool found = false;
			while (b - a >= target) {
				Rat c = (a + b) / rat(2);
				if (is_zero(sf.eval(c))) {
					isolated.push_back(c);
					found = true;
					break;
				}
				if (sign_changes(ch, a) - sign_changes(ch, c) == 1)
					b = c;
				else
					a = c;
			}
			if (!found) {
				Rat cand = simplest_in(a, b);
				if (is_zero(sf.eval(cand)))
					isolated.push_back(cand);
				else if (all_rational)
					*all_rational = false;  // verified irrational real root
			}
			continue;
		}
		Rat mid = pick_nonroot(iv.a, iv.b);
		stack.push_back({iv.a, mid});
		stack.push_back({mid, iv.b});
	}
	// multiplicities by deflation of the full polynomial
	std::sort(isolated.begin(), isolated.end());
	for (auto& r : isolated) {
		int mult = 0;
		UPoly q = p;
		while (!q.zero() && q.deg() >= 1 && is_zero(q.eval(r))) {
			q = q.deflate(r);
			++mult;
		}
		roots.emplace_back(r, mult);
	}
	return roots;
}

} // namespace vac
