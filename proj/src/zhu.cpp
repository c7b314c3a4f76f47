#include "vac/zhu.hpp"

namespace vac {

UeaElem zhu_image(const VaState& v) {
	const Algebra& A = *v.alg;
	UeaElem out(A);
	for (auto& [m, c] : v.t) {
		// x(-n) contributes a sign factor (-1)^(n-1); letters are reversed
		long signexp = 0;
		std::vector<int> letters;
		for (auto& [n, g] : m) {
			signexp += (-n) - 1;
			letters.push_back(g);
		}
		std::reverse(letters.begin(), letters.end());
		Rat coeff = (signexp % 2 == 0) ? c : -c;
		UeaElem word(A);
		word.t.emplace(PbwMono{}, coeff);
		for (int g : letters) word = multiply(word, UeaElem::gen(A, g));
		out += word;
	}
	return out;
}

SymElem c2_symbol(const VaState& v) {
	const Algebra& A = *v.alg;
	SymElem out(A);
	for (auto& [m, c] : v.t) {
		bool depth_one = true;
		SymMono mono;
		for (auto& [n, g] : m) {
			if (n != -1) {
				depth_one = false;
				break;
			}
			mono.emplace_back(g, 1);
		}
		if (depth_one) out.add_term(std::move(mono), c);
	}
	return out;
}

} // namespace vac
