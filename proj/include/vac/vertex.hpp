#pragma once

#include "vac/liealg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vac {

/// One factor x(n) of a mode monomial, n <= -1 for states.
/// Canonical factor order inside a monomial: ascending (n, gen), i.e.
/// deepest modes first, then by global generator index.
using VaFactor = std::pair<int, int>;  // (mode n, generator)
using VaMono = std::vector<VaFactor>;

/// State of V^k(g): exact linear combination of PBW mode monomials
/// x_1(-n_1)...x_m(-n_m)|0> in canonical order.
struct VaState {
	const Algebra* alg = nullptr;
	Rat level;
	std::map<VaMono, Rat> t;

	VaState() = default;
	VaState(const Algebra& a, const Rat& k) : alg(&a), level(k) {}
	static VaState vacuum(const Algebra& a, const Rat& k);

	bool zero() const { return t.empty(); }
	size_t size() const { return t.size(); }
	void add_term(const VaMono& m, const Rat& c);
	VaState& operator+=(const VaState& o);
	VaState& operator-=(const VaState& o);
	VaState operator*(const Rat& c) const;
	bool operator==(const VaState& o) const { return t == o.t; }

	/// conformal weight (= D-degree); throws if not homogeneous
	long conformal_weight() const;
	/// h-weight in root coordinates; throws if not homogeneous
	RootVec h_weight() const;
	Weight h_weight_fw() const;
	bool homogeneous() const;
};

/// Straightens an arbitrary product of creation operators into canonical form.
VaState normalize_word(const Algebra& a, const Rat& level, const VaMono& word,
                       const Rat& coeff);

/// x(n) acting on a state, any n; exact.
VaState apply_mode(int gen, int mode, const VaState& v);
VaState apply_mode(const LieVec& x, int mode, const VaState& v);

struct SingularWitness {
	bool singular = false;
	std::string failing_op;  // e.g. "e[1](0)"
	VaState image;           // nonzero witness when !singular
};

/// Tests e_alpha(0) v = 0 for all simple alpha and e_{-theta}(1) v = 0.
SingularWitness is_singular(const VaState& v);

/// (lambda | lambda + 2 rho) / (2 (k + h_dual)); throws at critical level.
Rat conformal_dimension(const Algebra& a, const Rat& k, const Weight& lambda);

/// All dominant integral weights with integer conformal dimension in
/// [0, max_dim], as dimension -> weight list.
std::map<long, std::vector<Weight>> enumerate_integer_dimensions(
    const Algebra& a, const Rat& k, long max_dim);

/// Basis monomials of the conformal-degree d, h-weight lambda component.
std::vector<VaMono> graded_component(const Algebra& a, long d, const Weight& lambda);

/// Exact basis of the joint kernel of {e_alpha(0), e_{-theta}(1)} inside the
/// (lambda, degree) component.
std::vector<VaState> search_singular(const Algebra& a, const Rat& k,
                                     const Weight& lambda, long degree);

/// State map induced by a Lie algebra embedding (levels equal).
VaState embed_state(const Embedding& emb, const VaState& v);

/// The mu-homogeneous part of v.
VaState weight_component(const VaState& v, const Weight& mu);
/// All h-weights occurring in v.
std::vector<Weight> occurring_weights(const VaState& v);

// ---------------------------------------------------------------------
// ideal machinery (degree component of the ideal generated by a singular
// vector; used for the membership corroborations)
// ---------------------------------------------------------------------

/// Spanning set of the (degree, weight) component of the ideal <v) generated
/// by a singular vector v: creation monomials times f(0)-monomials applied
/// to v.
std::vector<VaState> ideal_component(const VaState& v_sing, long degree,
                                     const Weight& mu);

/// True iff w lies in the span of vs (exact).
bool in_span(const std::vector<VaState>& vs, const VaState& w);

// ---------------------------------------------------------------------
// spectral flow
// ---------------------------------------------------------------------

/// Composite spectral flow tau_1^{s_1} ... tau_l^{s_l}; exponents may be
/// half-integers as long as every applied shift is integral.
struct SpectralFlow {
	const Algebra* alg = nullptr;
	std::vector<Rat> s;

	/// pairing <alpha, sum_i s_i alpha_i^vee> for the root of generator g
	Rat mode_shift(int gen) const;
	/// central correction of h_j(0):  h_j(0) -> h_j(0) + central_shift(j) K
	Rat central_shift(int j) const;  // 1-based Cartan index
	/// L_0 -> L_0 - sum s_i h_i(0) + (1/2)(v_s|v_s) K
	Rat l0_central() const;
};

struct FlowedOp {
	int gen;
	int mode;
	Rat central;  // coefficient of K added (Cartan zero modes only)
};

/// Image of x(n) under the flow; throws if the shift is not integral.
FlowedOp spectral_flow_twist(const SpectralFlow& flow, int gen, int mode);

/// Verifies the flow preserves all commutation relations on generator pairs
/// for modes in a small window; throws on failure.
void check_flow_automorphism(const SpectralFlow& flow);

/// Report of the finite-representation checks for the flowed highest-weight
/// vector in the top level of L_{B3}(-2, w1).
struct FlowsReport {
	bool v_nonzero = false;
	bool v_weight_ok = false;       // h-weight -w1
	bool e1_mode1_kills = false;    // e_{b1}(1) v = 0
	bool e2_zero_kills = false;     // e_{b2}(0) v = 0
	bool e3_zero_kills = false;     // e_{b3}(0) v = 0
	bool ftheta_zero_kills = false; // e_{-theta}(0) v = 0
	bool all() const {
		return v_nonzero && v_weight_ok && e1_mode1_kills && e2_zero_kills &&
		       e3_zero_kills && ftheta_zero_kills;
	}
};

FlowsReport check_flows_lemma();

} // namespace vac
