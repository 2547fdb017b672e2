// Hand-built complexes used across the test suites.

#pragma once

#include <array>

#include "presimp/presimp.hpp"

namespace fixtures {

using namespace presimp;

struct square_cells {
	filtered_complex k;
	std::array<cell_id, 4> v;
	std::array<cell_id, 4> e;
	cell_id s;
};

/// One square with its four edges and vertices at level 0 and the 2-cell
/// at `lid`. With lid = 10 this is the slow-lid cube: a dim-1 interval
/// [0, 10) that any value-mismatched collapse would destroy.
inline square_cells slow_lid_square(filt_t lid = 10) {
	square_cells f;
	for (auto& v : f.v) v = f.k.add_cell(0, 0);
	f.e[0] = f.k.add_cell(1, 0, {f.v[0], f.v[1]});
	f.e[1] = f.k.add_cell(1, 0, {f.v[1], f.v[2]});
	f.e[2] = f.k.add_cell(1, 0, {f.v[2], f.v[3]});
	f.e[3] = f.k.add_cell(1, 0, {f.v[3], f.v[0]});
	f.s = f.k.add_cell(2, lid, {f.e[0], f.e[1], f.e[2], f.e[3]});
	return f;
}

/// Circle: 4 vertices and 4 edges, one level.
inline filtered_complex circle(filt_t level = 0) {
	filtered_complex k;
	std::array<cell_id, 4> v;
	for (auto& x : v) x = k.add_cell(0, level);
	k.add_cell(1, level, {v[0], v[1]});
	k.add_cell(1, level, {v[1], v[2]});
	k.add_cell(1, level, {v[2], v[3]});
	k.add_cell(1, level, {v[3], v[0]});
	return k;
}

/// End state of a coreduction run on the slow-lid square: one
/// boundaryless edge at level 0 whose only coface is a 2-cell at level
/// 10. The pair is value-mismatched, so a guarded coreduction must keep
/// both cells and the dim-1 interval [0, 10).
inline filtered_complex mismatched_coreduction_pair() {
	filtered_complex k;
	const cell_id e = k.add_cell(1, 0);
	k.add_cell(2, 10, {e});
	return k;
}

/// Path with vertex values 0, 5, 3, 4, 2 filtered by maxima. Coreduction
/// removes the 0-valued vertex and one pair, then stalls: three vertices
/// of the component survive.
inline simplex_spec valley_path() {
	simplex_spec spec;
	spec.vertex_values = {0, 5, 3, 4, 2};
	spec.maximal_simplices = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
	return spec;
}

/// Star with four arms around a central vertex, filtered by maxima.
/// Coreduction eats the seed arm through the junction and stalls at the
/// entrance of the other three arms, leaving three connected components
/// where the original complex has one.
inline simplex_spec four_arm_star() {
	simplex_spec spec;
	// 0: seed tip, 7: seed arm middle, 8: junction, 1-3: arm middles, 4-6: arm tips
	spec.vertex_values = {0, 0, 0, 0, 0, 0, 0, 1, 2};
	spec.maximal_simplices = {{0, 7}, {7, 8}, {8, 1}, {1, 4}, {8, 2}, {2, 5}, {8, 3}, {3, 6}};
	return spec;
}

/// 3x3 grid whose ring of squares sits at level 0 and whose middle square
/// sits at level 1; the ring creates a dim-1 interval [0, 1).
inline voxel_grid ring_with_slow_center() {
	return {{3, 3}, {0, 0, 0, 0, 1, 0, 0, 0, 0}};
}

/// Annulus: 3x3 grid of squares with the center 2-cell removed. The ring
/// squares carry the given values; the hole makes the dim-1 class
/// immortal, born at the maximum ring value.
inline filtered_complex annulus(const std::array<filt_t, 8>& ring) {
	const filt_t sentinel = 1000000;
	voxel_grid grid{{3, 3},
	                {ring[0], ring[1], ring[2], ring[7], sentinel, ring[3], ring[6], ring[5], ring[4]}};
	filtered_complex k = build_cubical_lower_star(grid);
	for (cell_id c = 0; c < k.size(); ++c)
		if (k.is_alive(c) && k.filt(c) == sentinel) {
			k.remove_cell(c);
			break;
		}
	return k;
}

/// Strip of three squares valued 1, 2, 3 (lower star). The shared edges
/// sit below their surviving cofaces, so any removal of them must go
/// through the perturbation guards.
inline voxel_grid graded_strip() { return {{1, 3}, {1, 2, 3}}; }

}  // namespace fixtures
