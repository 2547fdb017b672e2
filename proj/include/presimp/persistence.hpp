// persistence.hpp
//
// Ground-truth persistence: boundary-matrix reduction over Z2 in the
// canonical (filt, dim, id) column order, union-find dimension-0
// persistence with the elder rule, and diagram comparison.

#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"

namespace presimp {

inline constexpr filt_t infinite_death = std::numeric_limits<filt_t>::max();

struct persistence_interval {
	std::int32_t dim = 0;
	filt_t birth = 0;
	filt_t death = infinite_death;

	bool finite() const { return death != infinite_death; }
	auto operator<=>(const persistence_interval&) const = default;
};

struct persistence_diagram {
	std::vector<persistence_interval> intervals;

	void push(std::int32_t dim, filt_t birth, filt_t death) {
		if (birth == death) return;  // zero-length intervals carry no information
		intervals.push_back({dim, birth, death});
	}

	void sort() { std::sort(intervals.begin(), intervals.end()); }

	persistence_diagram restricted(std::int32_t dim) const {
		persistence_diagram out;
		for (const persistence_interval& i : intervals)
			if (i.dim == dim) out.intervals.push_back(i);
		out.sort();
		return out;
	}

	std::int32_t max_dim() const {
		std::int32_t d = -1;
		for (const persistence_interval& i : intervals) d = std::max(d, i.dim);
		return d;
	}

	bool operator==(const persistence_diagram& other) const {
		auto a = intervals, b = other.intervals;
		std::sort(a.begin(), a.end());
		std::sort(b.begin(), b.end());
		return a == b;
	}
};

namespace detail {

using column = std::vector<std::size_t>;  // sorted row indices, Z2

inline void add_into(column& target, const column& other) {
	column merged;
	merged.reserve(target.size() + other.size());
	std::set_symmetric_difference(target.begin(), target.end(), other.begin(), other.end(),
	                              std::back_inserter(merged));
	target = std::move(merged);
}

/// Live cells sorted by (filt, dim, id); the filtration-compatible column
/// order shared by the matrix oracle and the union-find path.
inline std::vector<cell_id> canonical_order(const filtered_complex& complex) {
	std::vector<cell_id> order = complex.live_cells();
	std::sort(order.begin(), order.end(), [&](cell_id a, cell_id b) {
		if (complex.filt(a) != complex.filt(b)) return complex.filt(a) < complex.filt(b);
		if (complex.dim(a) != complex.dim(b)) return complex.dim(a) < complex.dim(b);
		return a < b;
	});
	return order;
}

}  // namespace detail

/// Standard left-to-right column reduction of the Z2 boundary matrix.
/// With `clearing`, columns paired while processing dimension p are
/// cleared before dimension p-1 is reduced (the twist optimization); both
/// paths produce the same diagram.
inline persistence_diagram compute_diagram(const filtered_complex& complex, bool clearing = false) {
	if (!complex.validate().valid()) throw error("compute_diagram: invalid complex");

	const std::vector<cell_id> order = detail::canonical_order(complex);
	const std::size_t n = order.size();
	std::vector<std::size_t> position(complex.size(), 0);
	for (std::size_t j = 0; j < n; ++j) position[order[j]] = j;

	std::vector<detail::column> columns(n);
	for (std::size_t j = 0; j < n; ++j) {
		for (cell_id f : complex.faces(order[j])) columns[j].push_back(position[f]);
		std::sort(columns[j].begin(), columns[j].end());
	}

	constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
	std::vector<std::size_t> low_owner(n, none);   // row -> column that owns it as lowest entry
	std::vector<std::size_t> death_of(n, none);    // birth column -> killing column
	std::vector<std::uint8_t> cleared(n, 0);

	auto reduce_column = [&](std::size_t j) {
		detail::column& col = columns[j];
		while (!col.empty()) {
			const std::size_t low = col.back();
			if (low_owner[low] == none) {
				low_owner[low] = j;
				death_of[low] = j;
				if (clearing) {
					cleared[low] = 1;
					columns[low].clear();
				}
				return;
			}
			detail::add_into(col, columns[low_owner[low]]);
		}
	};

	if (clearing) {
		for (std::int32_t d = complex.max_dim(); d >= 1; --d)
			for (std::size_t j = 0; j < n; ++j)
				if (!cleared[j] && complex.dim(order[j]) == d) reduce_column(j);
	} else {
		for (std::size_t j = 0; j < n; ++j) reduce_column(j);
	}

	persistence_diagram diagram;
	for (std::size_t i = 0; i < n; ++i) {
		if (!columns[i].empty() && !cleared[i]) continue;  // i is a death, not a birth
		const cell_id birth_cell = order[i];
		if (death_of[i] != none)
			diagram.push(complex.dim(birth_cell), complex.filt(birth_cell), complex.filt(order[death_of[i]]));
		else
			diagram.push(complex.dim(birth_cell), complex.filt(birth_cell), infinite_death);
	}
	diagram.sort();
	return diagram;
}

/// Dimension-0 persistence by union-find with the elder rule: an edge
/// merging two components kills the one whose earliest vertex comes later
/// in the canonical order. Agrees exactly with the dim-0 restriction of
/// compute_diagram. Edges left with a single live endpoint (possible in
/// reduced complexes) cone that component off against a virtual
/// basepoint, mirroring the matrix pairing.
inline persistence_diagram zero_dim_unionfind(const filtered_complex& complex) {
	const std::vector<cell_id> order = detail::canonical_order(complex);
	const std::size_t n = complex.size();
	const std::size_t basepoint = n;  // eternal elder

	std::vector<std::size_t> parent(n + 1);
	std::vector<std::size_t> eldest(n + 1);  // canonical position of the component's first vertex
	for (std::size_t i = 0; i <= n; ++i) parent[i] = i;
	eldest[basepoint] = 0;

	std::vector<std::size_t> position(n, 0);
	for (std::size_t j = 0; j < order.size(); ++j) position[order[j]] = j;

	auto find = [&](std::size_t x) {
		while (parent[x] != x) {
			parent[x] = parent[parent[x]];
			x = parent[x];
		}
		return x;
	};

	persistence_diagram diagram;
	for (std::size_t j = 0; j < order.size(); ++j) {
		const cell_id c = order[j];
		if (complex.dim(c) == 0) {
			eldest[c] = j;
			continue;
		}
		if (complex.dim(c) != 1) continue;
		const auto endpoints = complex.faces(c);
		std::size_t ra, rb;
		if (endpoints.size() == 2) {
			ra = find(endpoints[0]);
			rb = find(endpoints[1]);
		} else if (endpoints.size() == 1) {
			ra = find(endpoints[0]);
			rb = find(basepoint);
		} else {
			continue;  // boundaryless edge: a dim-1 cycle, not a merge
		}
		if (ra == rb) continue;
		const bool a_elder = (ra == basepoint) || (rb != basepoint && eldest[ra] < eldest[rb]);
		const std::size_t dying = a_elder ? rb : ra;
		const std::size_t living = a_elder ? ra : rb;
		diagram.push(0, complex.filt(order[eldest[dying]]), complex.filt(c));
		parent[dying] = living;
	}
	for (std::size_t j = 0; j < order.size(); ++j) {
		const cell_id c = order[j];
		if (complex.dim(c) == 0 && find(c) == c) diagram.push(0, complex.filt(c), infinite_death);
	}
	diagram.sort();
	return diagram;
}

struct diagram_comparison {
	bool equal = true;
	std::optional<persistence_interval> witness;  // first differing interval
	std::string detail;                           // which side the witness comes from
};

/// Multiset equality per requested dimension (empty dims = all).
inline diagram_comparison diagrams_equal(const persistence_diagram& lhs, const persistence_diagram& rhs,
                                         std::span<const std::int32_t> dims = {}) {
	auto keep = [&](const persistence_interval& i) {
		return dims.empty() || std::find(dims.begin(), dims.end(), i.dim) != dims.end();
	};
	std::vector<persistence_interval> a, b;
	for (const auto& i : lhs.intervals)
		if (keep(i)) a.push_back(i);
	for (const auto& i : rhs.intervals)
		if (keep(i)) b.push_back(i);
	std::sort(a.begin(), a.end());
	std::sort(b.begin(), b.end());

	diagram_comparison cmp;
	std::size_t i = 0, j = 0;
	while (i < a.size() && j < b.size()) {
		if (a[i] == b[j]) {
			++i;
			++j;
			continue;
		}
		cmp.equal = false;
		cmp.witness = std::min(a[i], b[j]);
		cmp.detail = a[i] < b[j] ? "only in first diagram" : "only in second diagram";
		return cmp;
	}
	if (i < a.size() || j < b.size()) {
		cmp.equal = false;
		cmp.witness = i < a.size() ? a[i] : b[j];
		cmp.detail = i < a.size() ? "only in first diagram" : "only in second diagram";
	}
	return cmp;
}

/// Diagram text format: one interval per line, `<dim> <birth> <death|inf>`,
/// sorted by (dim, birth, death).
inline void write_diagram(const persistence_diagram& diagram, std::ostream& out) {
	persistence_diagram sorted = diagram;
	sorted.sort();
	for (const persistence_interval& i : sorted.intervals) {
		out << i.dim << ' ' << i.birth << ' ';
		if (i.finite()) out << i.death;
		else out << "inf";
		out << '\n';
	}
}

inline persistence_diagram read_diagram(std::istream& in, const std::string& context = "<stream>") {
	persistence_diagram diagram;
	std::string raw;
	std::size_t line_no = 0;
	while (std::getline(in, raw)) {
		++line_no;
		const std::size_t hash = raw.find('#');
		const std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
		if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
		std::istringstream ls(line);
		std::int64_t dim = 0;
		filt_t birth = 0;
		std::string death;
		if (!(ls >> dim >> birth >> death))
			throw parse_error(context + ":" + std::to_string(line_no) + ": malformed interval line");
		filt_t d = infinite_death;
		if (death != "inf") {
			try {
				d = std::stoll(death);
			} catch (...) {
				throw parse_error(context + ":" + std::to_string(line_no) + ": malformed death value");
			}
		}
		diagram.intervals.push_back({static_cast<std::int32_t>(dim), birth, d});
	}
	diagram.sort();
	return diagram;
}

}  // namespace presimp
