// reduce.hpp
//
// Elementary collapses and coreductions for persistence.
//
// A collapse pair (A, b) removes a free face b (unique coface A) together
// with A; a coreduction pair (B, a) removes a cell B whose boundary has
// shrunk to the single cell a together with a. Either removal keeps the
// persistence diagram intact only when the two cells sit at the same
// filtration level, so both engines guard on g-equality. Uniqueness in the
// full current complex is enough: a free face with g(A) = g(b) stays free
// in every sub-level complex that contains it.
//
// Candidates go through a FIFO work queue and are re-validated at dequeue,
// since earlier removals may have changed their incidence. Duplicate
// enqueues are harmless for the same reason.

#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "core.hpp"
#include "log.hpp"

namespace presimp {

namespace detail {

// Both engines are parameterized over a pair policy so that the exact and
// the epsilon-smoothing variants share one queue discipline verbatim.
// pair_ok(lower, upper) decides eligibility; commit(lower, upper) runs
// right before removal (the smoothing policy perturbs there).
struct exact_pair_policy {
	const filtered_complex& complex;
	bool pair_ok(cell_id lower, cell_id upper) const {
		return complex.filt(lower) == complex.filt(upper);
	}
	void commit(cell_id, cell_id) {}
};

inline void require_valid(const filtered_complex& complex, const char* op) {
	if (!complex.validate().valid()) throw error(std::string(op) + ": invalid complex");
}

template <typename Policy>
reduction_log run_collapse(filtered_complex& complex, Policy&& policy) {
	require_valid(complex, "collapse_reduce");
	reduction_log log;

	auto candidate = [&](cell_id b) {
		return complex.is_alive(b) && complex.cofaces(b).size() == 1 &&
		       policy.pair_ok(b, complex.cofaces(b).front());
	};

	std::deque<cell_id> queue;
	for (cell_id b = 0; b < complex.size(); ++b)
		if (candidate(b)) queue.push_back(b);

	while (!queue.empty()) {
		const cell_id b = queue.front();
		queue.pop_front();
		if (!candidate(b)) continue;
		const cell_id a = complex.cofaces(b).front();
		policy.commit(b, a);
		const filt_t level = complex.filt(a);
		std::vector<cell_id> boundary(complex.faces(a).begin(), complex.faces(a).end());
		boundary.insert(boundary.end(), complex.faces(b).begin(), complex.faces(b).end());
		complex.remove_pair(b, a);
		log.events.push_back({reduction_rule::collapse, a, b, level});
		for (cell_id c : boundary)
			if (candidate(c)) queue.push_back(c);
	}
	return log;
}

template <typename Policy>
reduction_log run_coreduce(filtered_complex& complex, Policy&& policy) {
	require_valid(complex, "coreduce");
	reduction_log log;

	// One vertex per connected component is removed up front; this is the
	// step that destroys dimension-0 persistence. Chosen vertex: minimal
	// filtration, then minimal id.
	//
	// The removal leaves dimensions >= 1 intact only while no edge chain
	// can have boundary exactly {V}: every edge must keep an even number
	// of live vertex faces. Complexes that went through excision or
	// collapses first may hold half-open edges (one live endpoint), and
	// removing a vertex such a chain reaches would mint a spurious cycle.
	// Components containing a half-open edge therefore keep their vertex.
	const component_partition parts = complex.connected_components();
	std::vector<std::uint8_t> odd_edge(parts.count, 0);
	for (cell_id e = 0; e < complex.size(); ++e)
		if (complex.is_alive(e) && complex.dim(e) == 1 && complex.faces(e).size() == 1)
			odd_edge[parts.label[complex.faces(e).front()]] = 1;
	std::vector<cell_id> seed(parts.count, invalid_cell);
	for (cell_id v = 0; v < complex.size(); ++v) {
		if (!complex.is_alive(v) || complex.dim(v) != 0) continue;
		cell_id& s = seed[parts.label[v]];
		if (s == invalid_cell || complex.filt(v) < complex.filt(s)) s = v;
	}
	for (int label = 0; label < parts.count; ++label) {
		if (seed[label] == invalid_cell || odd_edge[label]) continue;
		const cell_id v = seed[label];
		log.events.push_back({reduction_rule::vertex_removal, v, invalid_cell, complex.filt(v)});
		complex.remove_cell(v);
	}

	auto candidate = [&](cell_id b_upper) {
		return complex.is_alive(b_upper) && complex.faces(b_upper).size() == 1 &&
		       policy.pair_ok(complex.faces(b_upper).front(), b_upper);
	};

	std::deque<cell_id> queue;
	for (cell_id b = 0; b < complex.size(); ++b)
		if (candidate(b)) queue.push_back(b);

	while (!queue.empty()) {
		const cell_id b_upper = queue.front();
		queue.pop_front();
		if (!candidate(b_upper)) continue;
		const cell_id a = complex.faces(b_upper).front();
		policy.commit(a, b_upper);
		const filt_t level = complex.filt(b_upper);
		std::vector<cell_id> coboundary(complex.cofaces(a).begin(), complex.cofaces(a).end());
		coboundary.insert(coboundary.end(), complex.cofaces(b_upper).begin(), complex.cofaces(b_upper).end());
		complex.remove_pair(a, b_upper);
		log.events.push_back({reduction_rule::coreduction, b_upper, a, level});
		for (cell_id c : coboundary)
			if (candidate(c)) queue.push_back(c);
	}
	return log;
}

}  // namespace detail

/// Removes elementary collapse pairs (A, b) with g(A) = g(b) until none of
/// the queued candidates qualifies. Preserves persistence in every
/// dimension.
inline reduction_log collapse_reduce(filtered_complex& complex) {
	return detail::run_collapse(complex, detail::exact_pair_policy{complex});
}

/// Removes one vertex per connected component, then coreduction pairs
/// (B, a) with g(B) = g(a). Preserves persistence in dimensions >= 1;
/// dimension 0 must be recomputed from the original complex.
inline reduction_log coreduce(filtered_complex& complex) {
	return detail::run_coreduce(complex, detail::exact_pair_policy{complex});
}

}  // namespace presimp
