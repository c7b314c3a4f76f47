#include "vac/linalg.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace vac {

namespace {

struct Elim {
	int ncols;
	int pivot_limit;  // columns >= limit are never chosen as pivots
	std::vector<std::map<int, Rat>> rows;
	std::vector<std::pair<int, int>> pivots;  // (row, col) in elimination order
	std::vector<bool> row_done;
	std::vector<int> col_pivot_row;  // -1 if free

	Elim(const SparseMat& m, int limit)
	    : ncols(m.ncols), pivot_limit(limit), rows(m.rows),
	      row_done(m.rows.size(), false), col_pivot_row(m.ncols, -1) {}

	bool has_pivotable(const std::map<int, Rat>& r) const {
		auto it = r.begin();
		return it != r.end() && it->first < pivot_limit;
	}

	void run() {
		std::vector<long> col_count(ncols, 0);
		for (auto& r : rows)
			for (auto& [c, v] : r) ++col_count[c];
		for (;;) {
			// pick the sparsest unprocessed row with a pivotable column
			int best = -1;
			size_t best_n = SIZE_MAX;
			for (size_t i = 0; i < rows.size(); ++i) {
				if (row_done[i] || !has_pivotable(rows[i])) continue;
				if (rows[i].size() < best_n) {
					best = (int)i;
					best_n = rows[i].size();
				}
			}
			if (best < 0) break;
			// pivot column: fewest occurrences elsewhere
			int pc = -1;
			long pc_n = LONG_MAX;
			for (auto& [c, v] : rows[best]) {
				if (c >= pivot_limit) break;
				if (col_count[c] < pc_n) {
					pc = c;
					pc_n = col_count[c];
				}
			}
			Rat pv = rows[best][pc];
			row_done[best] = true;
			pivots.emplace_back(best, pc);
			col_pivot_row[pc] = best;
			for (size_t i = 0; i < rows.size(); ++i) {
				if ((int)i == best) continue;
				auto it = rows[i].find(pc);
				if (it == rows[i].end()) continue;
				Rat f = it->second / pv;
				for (auto& [c, v] : rows[best]) {
					auto jt = rows[i].find(c);
					if (jt == rows[i].end()) {
						Rat nv = -f * v;
						if (!is_zero(nv)) {
							rows[i].emplace(c, nv);
							++col_count[c];
						}
					} else {
						jt->second -= f * v;
						if (is_zero(jt->second)) {
							rows[i].erase(jt);
							--col_count[c];
						}
					}
				}
			}
		}
	}
};

} // namespace

long SparseMat::rank() const {
	Elim e(*this, ncols);
	e.run();
	return (long)e.pivots.size();
}

std::vector<std::vector<Rat>> SparseMat::kernel() const {
	Elim e(*this, ncols);
	e.run();
	std::vector<std::vector<Rat>> basis;
	for (int free = 0; free < ncols; ++free) {
		if (e.col_pivot_row[free] >= 0) continue;
		std::vector<Rat> x(ncols, rat(0));
		x[free] = rat(1);
		// rows are fully eliminated against each other: each pivot row reads
		// pv * x[pc] + sum_{free cols c} v * x[c] = 0
		for (auto& [r, pc] : e.pivots) {
			Rat s = rat(0);
			for (auto& [c, v] : e.rows[r])
				if (c != pc && e.col_pivot_row[c] < 0) s += v * x[c];
			x[pc] = -s / e.rows[r].at(pc);
		}
		basis.push_back(std::move(x));
	}
	return basis;
}

bool SparseMat::solve(const std::vector<Rat>& b, std::vector<Rat>* x) const {
	if (b.size() != rows.size()) throw std::invalid_argument("solve: size mismatch");
	// augment with the rhs and eliminate; the rhs column is never a pivot
	SparseMat aug;
	aug.ncols = ncols + 1;
	aug.rows = rows;
	for (size_t i = 0; i < rows.size(); ++i)
		if (!is_zero(b[i])) aug.rows[i][ncols] = -b[i];
	Elim e(aug, ncols);
	e.run();
	// leftover rows have no entries in pivotable columns; any nonzero rhs
	// entry there certifies inconsistency
	for (size_t i = 0; i < e.rows.size(); ++i)
		if (!e.row_done[i] && !e.rows[i].empty()) return false;
	if (x) {
		// particular solution with free columns set to zero:
		// pv * x[pc] + rhs = 0 along pivot rows,  A x = -(-b) = b after flip
		x->assign(ncols, rat(0));
		for (auto& [r, pc] : e.pivots) {
			auto it = e.rows[r].find(ncols);
			if (it == e.rows[r].end()) continue;
			(*x)[pc] = -it->second / e.rows[r].at(pc);
		}
	}
	return true;
}

} // namespace vac
