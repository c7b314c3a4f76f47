#pragma once

#include "vac/rat.hpp"

#include <map>
#include <vector>

namespace vac {

/// Sparse matrix over Q, stored by rows, for exact elimination.
struct SparseMat {
	int ncols = 0;
	std::vector<std::map<int, Rat>> rows;

	void add_row(std::map<int, Rat> r) { rows.push_back(std::move(r)); }

	/// Exact rank by fraction-preserving Gaussian elimination with
	/// sparsity-guided pivoting.
	long rank() const;

	/// Basis of the right kernel {x : A x = 0}; deterministic order
	/// (one vector per free column, ascending column index).
	std::vector<std::vector<Rat>> kernel() const;

	/// Least augmented solve: returns true and fills x if A x = b has a
	/// solution (A given column-wise semantics: rows are equations).
	bool solve(const std::vector<Rat>& b, std::vector<Rat>* x) const;
};

} // namespace vac
