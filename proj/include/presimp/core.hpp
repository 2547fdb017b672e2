// core.hpp
//
// Filtered chain complex with a fixed cell basis and Z2 coefficients.
// Cells carry explicit face and coface lists; incidence is plain set
// membership. Removal is tombstone-based: a removed cell is marked dead
// and unlinked from the incidence lists of every surviving cell, so the
// live sub-complex always reads as a complex in its own right.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace presimp {

using cell_id = std::uint32_t;
using filt_t = std::int64_t;

inline constexpr cell_id invalid_cell = std::numeric_limits<cell_id>::max();

struct error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct parse_error : error {
	using error::error;
};

struct cell {
	std::int32_t dim = 0;
	filt_t filt = 0;
	std::vector<cell_id> faces;    // codimension-1 faces, live only
	std::vector<cell_id> cofaces;  // codimension-1 cofaces, live only
	bool alive = true;
};

/// Result of filtered_complex::validate(). Both lists empty means valid.
struct validation_report {
	// (face, coface) pairs with filt(face) > filt(coface)
	std::vector<std::pair<cell_id, cell_id>> monotonicity_violations;
	// (cell, codim-2 cell) pairs reached through an odd number of faces
	std::vector<std::pair<cell_id, cell_id>> boundary_violations;

	bool valid() const {
		return monotonicity_violations.empty() && boundary_violations.empty();
	}
};

/// Labels live vertices by connected component. Two vertices share a label
/// iff they are connected through live cells of any dimension.
struct component_partition {
	std::vector<int> label;  // indexed by cell_id; -1 for dead or non-vertex
	int count = 0;
};

class filtered_complex {
public:
	filtered_complex() = default;

	/// Appends a cell. Faces must already exist, be alive, and have
	/// dimension exactly dim-1; duplicates are rejected (Z2 incidence).
	cell_id add_cell(std::int32_t dim, filt_t filt, std::vector<cell_id> faces = {}) {
		if (dim < 0) throw error("add_cell: negative dimension");
		if (dim == 0 && !faces.empty()) throw error("add_cell: a vertex has no faces");
		const cell_id id = static_cast<cell_id>(cells_.size());
		for (std::size_t i = 0; i < faces.size(); ++i) {
			const cell_id f = faces[i];
			if (f >= id) throw error("add_cell: face id " + std::to_string(f) + " does not precede cell");
			if (!cells_[f].alive) throw error("add_cell: face " + std::to_string(f) + " is dead");
			if (cells_[f].dim != dim - 1)
				throw error("add_cell: face " + std::to_string(f) + " has wrong dimension");
			if (std::find(faces.begin(), faces.begin() + static_cast<std::ptrdiff_t>(i), f) !=
			    faces.begin() + static_cast<std::ptrdiff_t>(i))
				throw error("add_cell: duplicate face " + std::to_string(f));
		}
		cell c;
		c.dim = dim;
		c.filt = filt;
		c.faces = std::move(faces);
		for (cell_id f : c.faces) cells_[f].cofaces.push_back(id);
		cells_.push_back(std::move(c));
		++live_count_;
		return id;
	}

	std::size_t size() const { return cells_.size(); }
	std::size_t live_count() const { return live_count_; }
	bool empty() const { return live_count_ == 0; }

	bool is_alive(cell_id c) const { return c < cells_.size() && cells_[c].alive; }
	const cell& operator[](cell_id c) const { return cells_[c]; }

	std::int32_t dim(cell_id c) const { return cells_[c].dim; }
	filt_t filt(cell_id c) const { return cells_[c].filt; }
	std::span<const cell_id> faces(cell_id c) const { return cells_[c].faces; }
	std::span<const cell_id> cofaces(cell_id c) const { return cells_[c].cofaces; }

	void set_filt(cell_id c, filt_t value) { cells_[c].filt = value; }

	std::int32_t max_dim() const {
		std::int32_t d = -1;
		for (const cell& c : cells_)
			if (c.alive) d = std::max(d, c.dim);
		return d;
	}

	/// Live cell ids in ascending order.
	std::vector<cell_id> live_cells() const {
		std::vector<cell_id> out;
		out.reserve(live_count_);
		for (cell_id c = 0; c < cells_.size(); ++c)
			if (cells_[c].alive) out.push_back(c);
		return out;
	}

	std::vector<std::size_t> live_counts_per_dim() const {
		std::vector<std::size_t> counts;
		for (const cell& c : cells_) {
			if (!c.alive) continue;
			if (static_cast<std::size_t>(c.dim) >= counts.size()) counts.resize(c.dim + 1, 0);
			++counts[c.dim];
		}
		return counts;
	}

	/// Removes the pair (a, B) where a is a face of B. Both die together;
	/// every incidence reference to them is dropped from surviving cells.
	void remove_pair(cell_id a, cell_id b_upper) {
		check_id(a);
		check_id(b_upper);
		if (!cells_[a].alive || !cells_[b_upper].alive)
			throw error("remove_pair: cell already dead");
		const auto& fs = cells_[b_upper].faces;
		if (std::find(fs.begin(), fs.end(), a) == fs.end())
			throw error("remove_pair: cells are not incident");
		unlink(a);
		unlink(b_upper);
		live_count_ -= 2;
	}

	/// Removes a single cell (used for coreduction seeding and excision).
	void remove_cell(cell_id c) {
		check_id(c);
		if (!cells_[c].alive) throw error("remove_cell: cell already dead");
		unlink(c);
		--live_count_;
	}

	/// Checks filtration monotonicity and that the boundary of a boundary
	/// vanishes mod 2 on the live sub-complex. Reports all violations.
	validation_report validate() const {
		validation_report report;
		for (cell_id c = 0; c < cells_.size(); ++c) {
			if (!cells_[c].alive) continue;
			for (cell_id f : cells_[c].faces)
				if (cells_[f].filt > cells_[c].filt)
					report.monotonicity_violations.emplace_back(f, c);
			if (cells_[c].dim >= 2) {
				std::map<cell_id, int> parity;
				for (cell_id f : cells_[c].faces)
					for (cell_id ff : cells_[f].faces) parity[ff] ^= 1;
				for (const auto& [ff, odd] : parity)
					if (odd) report.boundary_violations.emplace_back(c, ff);
			}
		}
		return report;
	}

	/// Smallest downward-closed superset of the seed among live cells.
	/// Returned ids are sorted ascending.
	std::vector<cell_id> closure(std::span<const cell_id> seed) const {
		std::vector<std::uint8_t> seen(cells_.size(), 0);
		std::vector<cell_id> stack;
		for (cell_id s : seed) {
			check_id(s);
			if (!cells_[s].alive) throw error("closure: dead seed cell " + std::to_string(s));
			if (!seen[s]) {
				seen[s] = 1;
				stack.push_back(s);
			}
		}
		std::vector<cell_id> out;
		while (!stack.empty()) {
			const cell_id c = stack.back();
			stack.pop_back();
			out.push_back(c);
			for (cell_id f : cells_[c].faces)
				if (!seen[f]) {
					seen[f] = 1;
					stack.push_back(f);
				}
		}
		std::sort(out.begin(), out.end());
		return out;
	}

	/// Live vertices of a cell, reached through live faces.
	std::vector<cell_id> vertices_of(cell_id c) const {
		std::vector<cell_id> out;
		std::vector<std::uint8_t> seen(cells_.size(), 0);
		std::vector<cell_id> stack{c};
		seen[c] = 1;
		while (!stack.empty()) {
			const cell_id x = stack.back();
			stack.pop_back();
			if (cells_[x].dim == 0) {
				out.push_back(x);
				continue;
			}
			for (cell_id f : cells_[x].faces)
				if (!seen[f]) {
					seen[f] = 1;
					stack.push_back(f);
				}
		}
		std::sort(out.begin(), out.end());
		return out;
	}

	component_partition connected_components() const {
		// Union-find over all live cells; every live cell merges the
		// vertices it reaches through its face lists.
		std::vector<cell_id> parent(cells_.size());
		for (cell_id c = 0; c < cells_.size(); ++c) parent[c] = c;
		auto find = [&](cell_id x) {
			while (parent[x] != x) {
				parent[x] = parent[parent[x]];
				x = parent[x];
			}
			return x;
		};
		for (cell_id c = 0; c < cells_.size(); ++c) {
			if (!cells_[c].alive) continue;
			for (cell_id f : cells_[c].faces) {
				const cell_id a = find(c), b = find(f);
				if (a != b) parent[std::max(a, b)] = std::min(a, b);
			}
		}
		component_partition part;
		part.label.assign(cells_.size(), -1);
		std::map<cell_id, int> root_label;
		for (cell_id c = 0; c < cells_.size(); ++c) {
			if (!cells_[c].alive || cells_[c].dim != 0) continue;
			const cell_id r = find(c);
			auto [it, inserted] = root_label.try_emplace(r, part.count);
			if (inserted) ++part.count;
			part.label[c] = it->second;
		}
		return part;
	}

	struct compaction_result;

	/// Renumbers the live cells into a fresh complex, ordered by
	/// (filt, dim, id). This is the canonical order used for emitted files
	/// and boundary matrices; faces always precede cofaces in it.
	compaction_result compacted() const;

private:
	void check_id(cell_id c) const {
		if (c >= cells_.size()) throw error("unknown cell id " + std::to_string(c));
	}

	void unlink(cell_id c) {
		cells_[c].alive = false;
		for (cell_id f : cells_[c].faces)
			if (cells_[f].alive) std::erase(cells_[f].cofaces, c);
		for (cell_id cf : cells_[c].cofaces)
			if (cells_[cf].alive) std::erase(cells_[cf].faces, c);
		cells_[c].faces.clear();
		cells_[c].cofaces.clear();
	}

	std::vector<cell> cells_;
	std::size_t live_count_ = 0;
};

struct filtered_complex::compaction_result {
	filtered_complex complex;
	std::vector<cell_id> old_to_new;  // invalid_cell for dead cells
};

inline filtered_complex::compaction_result filtered_complex::compacted() const {
	std::vector<cell_id> order = live_cells();
	std::stable_sort(order.begin(), order.end(), [&](cell_id a, cell_id b) {
		if (cells_[a].filt != cells_[b].filt) return cells_[a].filt < cells_[b].filt;
		if (cells_[a].dim != cells_[b].dim) return cells_[a].dim < cells_[b].dim;
		return a < b;
	});
	compaction_result result;
	result.old_to_new.assign(cells_.size(), invalid_cell);
	for (cell_id c : order) {
		std::vector<cell_id> faces;
		faces.reserve(cells_[c].faces.size());
		for (cell_id f : cells_[c].faces) faces.push_back(result.old_to_new[f]);
		std::sort(faces.begin(), faces.end());
		result.old_to_new[c] = result.complex.add_cell(cells_[c].dim, cells_[c].filt, std::move(faces));
	}
	return result;
}

}  // namespace presimp
