#pragma once

#include "vac/rat.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace vac {

enum class AlgId { G2, B3, D4 };

AlgId alg_from_label(const std::string& label);
std::string alg_label(AlgId id);

/// Integer vector in simple-root coordinates.
using RootVec = std::vector<int>;

/// Sparse linear combination of Chevalley basis generators, keyed by the
/// global generator index of an Algebra.
struct LieVec {
	std::map<int, Rat> c;

	bool zero() const { return c.empty(); }
	void add(int g, const Rat& x);
	LieVec& operator+=(const LieVec& o);
	LieVec& operator-=(const LieVec& o);
	LieVec operator*(const Rat& x) const;
	bool operator==(const LieVec& o) const { return c == o.c; }
};

/// Weight in fundamental-weight coordinates: fw[i] = <w, alpha_i^vee>.
struct Weight {
	std::vector<Rat> fw;

	Weight() = default;
	explicit Weight(std::vector<Rat> a) : fw(std::move(a)) {}
	bool operator==(const Weight& o) const { return fw == o.fw; }
	bool operator<(const Weight& o) const;
	bool dominant_integral() const;
	bool is_zero() const;
	std::string str() const;
};

/// A simple Lie algebra of type G2, B3 or D4 with a fixed Chevalley basis.
///
/// Generator layout (global index):
///   f[1]..f[N]  ->  0..N-1        (negative root vectors, positive-root order)
///   h[1]..h[l]  ->  N..N+l-1      (simple coroots)
///   e[1]..e[N]  ->  N+l..N+l+N-1  (positive root vectors)
/// where N = number of positive roots and l = rank.  e[i]/f[i] refer to the
/// i-th positive root; for G2 the numbering is a1, a2, a1+a2, 2a1+a2,
/// 3a1+a2, 3a1+2a2 = theta; for B3/D4 positive roots are ordered by height
/// then reverse-lex so that e[i] = i-th simple root for i <= rank.
class Algebra {
public:
	AlgId id;
	std::string label;
	int rank = 0;
	int npos = 0;
	int h_coxeter = 0;
	int h_dual = 0;

	std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
	std::vector<RootVec> pos_roots;        // pos_roots[0] = alpha_1, ...
	std::vector<Rat> root_norm2;           // (alpha|alpha) per positive root
	int theta = 0;                         // index into pos_roots

	int dim() const { return 2 * npos + rank; }
	int f_idx(int i) const { return i - 1; }             // i is 1-based
	int h_idx(int j) const { return npos + j - 1; }
	int e_idx(int i) const { return npos + rank + i - 1; }
	bool is_f(int g) const { return g < npos; }
	bool is_h(int g) const { return g >= npos && g < npos + rank; }
	bool is_e(int g) const { return g >= npos + rank; }
	int root_of(int g) const;  // 1-based positive-root number; 0 for h

	std::string gen_name(int g) const;
	int parse_gen(const std::string& name) const;

	/// Root-lattice weight of a generator (zero vector for Cartan elements).
	const RootVec& gen_root_weight(int g) const { return gen_wt_[g]; }
	Weight gen_weight(int g) const;

	/// Structure constants: [basis_a, basis_b] as a LieVec.
	const LieVec& bracket(int a, int b) const { return bracket_[a][b]; }
	LieVec bracket(const LieVec& x, const LieVec& y) const;

	/// Normalized invariant form, (theta|theta) = 2.
	const Rat& form(int a, int b) const { return gram_[a][b]; }
	Rat form(const LieVec& x, const LieVec& y) const;

	// -- weights ------------------------------------------------------
	Weight weight_from_root_coords(const std::vector<Rat>& rc) const;
	std::vector<Rat> root_coords(const Weight& w) const;
	Rat inner(const Weight& a, const Weight& b) const;
	Weight fundamental(int i) const;  // 1-based
	Weight rho() const;
	Weight weight_of_pos_root(int i) const;  // 1-based positive root

	// -- finite-dimensional representation utilities ------------------
	Rat weyl_dim(const Weight& lambda) const;
	long freudenthal_multiplicity(const Weight& lambda, const Weight& mu) const;
	std::map<Weight, long> weight_multiplicities(const Weight& lambda) const;

	// -- self checks ---------------------------------------------------
	void check_jacobi() const;          // throws on violation
	void check_form_invariance() const; // throws on violation

	static const Algebra& get(AlgId id);

private:
	friend Algebra build_algebra_impl(AlgId);
	std::vector<RootVec> gen_wt_;
	std::vector<std::vector<LieVec>> bracket_;
	std::vector<std::vector<Rat>> gram_;
	std::vector<std::vector<Rat>> simple_gram_;  // (alpha_i|alpha_j)
};

/// Builds (or returns the cached) algebra for the given type label.
const Algebra& build_algebra(const std::string& type_label);

/// Lie algebra embedding given by images of every source basis generator.
struct Embedding {
	const Algebra* src = nullptr;
	const Algebra* dst = nullptr;
	std::vector<LieVec> image;  // indexed by source generator

	LieVec apply(const LieVec& x) const;
	/// Verifies image([x,y]) == [image(x), image(y)] over all basis pairs.
	void check_homomorphism() const;
};

/// pair is one of "G2->B3", "B3->D4", "G2->D4".
const Embedding& build_embedding(const std::string& pair);

/// The 7-dimensional standard representation of B3 on basis eps_1..eps_7,
/// as matrices over Q for every Chevalley generator.
struct MatrixRep {
	const Algebra* alg = nullptr;
	int dim = 0;
	std::vector<std::vector<std::vector<Rat>>> mat;  // [gen][row][col]
	std::vector<Weight> basis_weight;

	std::vector<Rat> apply(int gen, const std::vector<Rat>& v) const;
	void check_homomorphism() const;
};

const MatrixRep& standard_rep_b3();

} // namespace vac
