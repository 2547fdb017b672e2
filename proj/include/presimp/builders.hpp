// builders.hpp
//
// Constructors for filtered complexes: full cubical complexes from voxel
// grids (lower-star by minima, or vertex-valued extension by maxima) and
// simplicial complexes from maximal-simplex lists (filtration by maxima).
//
// Cubical cells are addressed in Khalimsky coordinates: every axis
// coordinate is doubled, even coordinates select vertex slices and odd
// coordinates interval slices, so faces and cofaces differ by +-1 along
// one axis.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "core.hpp"

namespace presimp {

struct voxel_grid {
	std::vector<std::size_t> shape;  // n_1, ..., n_d
	std::vector<filt_t> values;      // row-major, last axis fastest

	std::size_t value_count() const {
		std::size_t n = 1;
		for (std::size_t s : shape) n *= s;
		return shape.empty() ? 0 : n;
	}
};

struct simplex_spec {
	std::vector<filt_t> vertex_values;
	std::vector<std::vector<std::size_t>> maximal_simplices;  // vertex id lists
};

namespace detail {

struct cell_proto {
	std::int32_t dim;
	filt_t filt;
	std::vector<std::size_t> faces;  // provisional indices
};

// Renumbers protos into the canonical (filt, dim, provisional index) order
// and materializes the complex. Faces sort strictly before their cofaces
// because dimensions differ and the filtration is monotone by construction.
inline filtered_complex assemble(std::vector<cell_proto>& protos) {
	std::vector<std::size_t> order(protos.size());
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
		if (protos[a].filt != protos[b].filt) return protos[a].filt < protos[b].filt;
		if (protos[a].dim != protos[b].dim) return protos[a].dim < protos[b].dim;
		return a < b;
	});
	std::vector<cell_id> to_new(protos.size());
	for (std::size_t i = 0; i < order.size(); ++i) to_new[order[i]] = static_cast<cell_id>(i);
	filtered_complex complex;
	for (std::size_t idx : order) {
		std::vector<cell_id> faces;
		faces.reserve(protos[idx].faces.size());
		for (std::size_t f : protos[idx].faces) faces.push_back(to_new[f]);
		std::sort(faces.begin(), faces.end());
		complex.add_cell(protos[idx].dim, protos[idx].filt, std::move(faces));
	}
	return complex;
}

struct khalimsky_box {
	std::vector<std::size_t> extent;

	std::size_t total() const {
		std::size_t n = 1;
		for (std::size_t e : extent) n *= e;
		return n;
	}
	std::vector<std::size_t> coords(std::size_t linear) const {
		std::vector<std::size_t> k(extent.size());
		for (std::size_t axis = extent.size(); axis-- > 0;) {
			k[axis] = linear % extent[axis];
			linear /= extent[axis];
		}
		return k;
	}
	std::size_t linear(const std::vector<std::size_t>& k) const {
		std::size_t idx = 0;
		for (std::size_t axis = 0; axis < extent.size(); ++axis) idx = idx * extent[axis] + k[axis];
		return idx;
	}
};

// Enumerates, per axis, the odd (interval) coordinates of top cells
// incident to the cell at k, and folds fn over each combination.
inline void for_each_incident_top(const khalimsky_box& box, const std::vector<std::size_t>& k,
                                  const std::function<void(const std::vector<std::size_t>&)>& fn) {
	std::vector<std::vector<std::size_t>> options(k.size());
	for (std::size_t axis = 0; axis < k.size(); ++axis) {
		if (k[axis] % 2 == 1) {
			options[axis].push_back(k[axis]);
		} else {
			if (k[axis] > 0) options[axis].push_back(k[axis] - 1);
			if (k[axis] + 1 < box.extent[axis]) options[axis].push_back(k[axis] + 1);
		}
	}
	std::vector<std::size_t> pick(k.size());
	std::function<void(std::size_t)> rec = [&](std::size_t axis) {
		if (axis == k.size()) {
			fn(pick);
			return;
		}
		for (std::size_t v : options[axis]) {
			pick[axis] = v;
			rec(axis + 1);
		}
	};
	rec(0);
}

inline filtered_complex build_cubical(const voxel_grid& grid, bool values_on_vertices) {
	if (grid.shape.empty()) throw error("cubical builder: empty grid");
	for (std::size_t n : grid.shape)
		if (n == 0) throw error("cubical builder: zero-length axis");
	if (grid.values.size() != grid.value_count())
		throw error("cubical builder: value count does not match shape");

	khalimsky_box box;
	for (std::size_t n : grid.shape)
		box.extent.push_back(values_on_vertices ? 2 * n - 1 : 2 * n + 1);

	const std::size_t total = box.total();
	std::vector<cell_proto> protos(total);
	for (std::size_t lin = 0; lin < total; ++lin) {
		const std::vector<std::size_t> k = box.coords(lin);
		cell_proto& p = protos[lin];
		p.dim = 0;
		for (std::size_t axis = 0; axis < k.size(); ++axis)
			if (k[axis] % 2 == 1) ++p.dim;

		if (values_on_vertices) {
			// filtration by maxima over the vertices of the cell
			filt_t best = std::numeric_limits<filt_t>::min();
			std::vector<std::vector<std::size_t>> vopts(k.size());
			for (std::size_t axis = 0; axis < k.size(); ++axis) {
				if (k[axis] % 2 == 1) {
					vopts[axis] = {k[axis] - 1, k[axis] + 1};
				} else {
					vopts[axis] = {k[axis]};
				}
			}
			std::vector<std::size_t> pick(k.size());
			std::function<void(std::size_t)> rec = [&](std::size_t axis) {
				if (axis == k.size()) {
					std::size_t vidx = 0;
					for (std::size_t a = 0; a < k.size(); ++a) vidx = vidx * grid.shape[a] + pick[a] / 2;
					best = std::max(best, grid.values[vidx]);
					return;
				}
				for (std::size_t v : vopts[axis]) {
					pick[axis] = v;
					rec(axis + 1);
				}
			};
			rec(0);
			p.filt = best;
		} else {
			// lower star: minimum over incident top-dimensional cells
			filt_t best = std::numeric_limits<filt_t>::max();
			for_each_incident_top(box, k, [&](const std::vector<std::size_t>& top) {
				std::size_t vidx = 0;
				for (std::size_t a = 0; a < k.size(); ++a) vidx = vidx * grid.shape[a] + (top[a] - 1) / 2;
				best = std::min(best, grid.values[vidx]);
			});
			p.filt = best;
		}

		for (std::size_t axis = 0; axis < k.size(); ++axis) {
			if (k[axis] % 2 == 0) continue;
			std::vector<std::size_t> f = k;
			f[axis] = k[axis] - 1;
			p.faces.push_back(box.linear(f));
			f[axis] = k[axis] + 1;
			p.faces.push_back(box.linear(f));
		}
	}
	return assemble(protos);
}

}  // namespace detail

/// Full cubical complex of a grid of top-cell values; every lower cell
/// takes the minimum over its incident top-dimensional cells.
inline filtered_complex build_cubical_lower_star(const voxel_grid& grid) {
	return detail::build_cubical(grid, false);
}

/// Cubical complex over a lattice of vertex values (shape counts vertices
/// per axis); every cell takes the maximum over its vertices.
inline filtered_complex build_cubical_vertex_max(const voxel_grid& grid) {
	return detail::build_cubical(grid, true);
}

/// Simplicial complex containing every face of every maximal simplex
/// exactly once, filtered by maxima over vertex values. The result is
/// independent of the order in which maximal simplices are listed.
inline filtered_complex build_simplicial_max(const simplex_spec& spec) {
	const std::size_t nv = spec.vertex_values.size();
	auto by_dim_then_lex = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
		if (a.size() != b.size()) return a.size() < b.size();
		return a < b;
	};
	std::map<std::vector<std::size_t>, std::size_t, decltype(by_dim_then_lex)> simplices(by_dim_then_lex);

	for (const auto& maximal : spec.maximal_simplices) {
		std::vector<std::size_t> s = maximal;
		std::sort(s.begin(), s.end());
		if (std::adjacent_find(s.begin(), s.end()) != s.end())
			throw error("simplicial builder: duplicate vertex in a simplex");
		for (std::size_t v : s)
			if (v >= nv) throw error("simplicial builder: vertex id out of range");
		if (s.size() > 24) throw error("simplicial builder: simplex too large");
		// all non-empty subsets
		for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
			std::vector<std::size_t> subset;
			for (std::size_t i = 0; i < s.size(); ++i)
				if (mask & (1u << i)) subset.push_back(s[i]);
			simplices.try_emplace(std::move(subset), 0);
		}
	}

	std::size_t next = 0;
	for (auto& [s, idx] : simplices) idx = next++;

	std::vector<detail::cell_proto> protos(simplices.size());
	for (const auto& [s, idx] : simplices) {
		detail::cell_proto& p = protos[idx];
		p.dim = static_cast<std::int32_t>(s.size()) - 1;
		p.filt = std::numeric_limits<filt_t>::min();
		for (std::size_t v : s) p.filt = std::max(p.filt, spec.vertex_values[v]);
		if (s.size() >= 2) {
			for (std::size_t drop = 0; drop < s.size(); ++drop) {
				std::vector<std::size_t> f;
				for (std::size_t i = 0; i < s.size(); ++i)
					if (i != drop) f.push_back(s[i]);
				p.faces.push_back(simplices.at(f));
			}
		}
	}
	return detail::assemble(protos);
}

}  // namespace presimp
