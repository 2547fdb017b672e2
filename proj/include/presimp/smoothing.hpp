// smoothing.hpp
//
// Epsilon-relaxation of the g(A) = g(b) reduction guard.
//
// A pair whose values differ may still be removed by perturbing the face
// member up to the coface's value, provided (1) the gap measured on the
// original values is strictly below epsilon and (2) every coface the face
// had in the initial, un-reduced complex sits at or above the new value.
// Both checks deliberately consult the snapshot taken before any removal:
// checking only surviving cells lets perturbations cascade and the
// drift of the output diagram loses its epsilon bound. A cell is moved at
// most once, so max |f' - f| <= epsilon holds cell-wise and the bottleneck
// distance between the diagrams under f and f' is bounded by epsilon.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "core.hpp"
#include "log.hpp"
#include "reduce.hpp"

namespace presimp {

struct perturbation {
	cell_id cell;
	filt_t original;
	filt_t current;
};

/// Snapshot of the filtration and coboundary taken before reduction plus
/// the record of every value change made against it.
class perturbed_filtration {
public:
	perturbed_filtration(const filtered_complex& complex, filt_t epsilon) : epsilon_(epsilon) {
		if (epsilon < 0) throw error("smoothing: negative epsilon");
		original_.reserve(complex.size());
		initial_cofaces_.reserve(complex.size());
		for (cell_id c = 0; c < complex.size(); ++c) {
			original_.push_back(complex.filt(c));
			initial_cofaces_.emplace_back(complex.cofaces(c).begin(), complex.cofaces(c).end());
		}
		perturbed_.assign(complex.size(), 0);
	}

	filt_t epsilon() const { return epsilon_; }
	filt_t original(cell_id c) const { return original_[c]; }
	bool is_perturbed(cell_id c) const { return perturbed_[c] != 0; }
	std::span<const cell_id> initial_cofaces(cell_id c) const { return initial_cofaces_[c]; }
	std::span<const perturbation> changes() const { return changes_; }

	void record(cell_id c, filt_t value) {
		perturbed_[c] = 1;
		changes_.push_back({c, original_[c], value});
	}

	/// max |f' - f| over all cells, perturbed or not.
	filt_t max_deviation(const filtered_complex& complex) const {
		filt_t dev = 0;
		for (cell_id c = 0; c < complex.size(); ++c)
			dev = std::max(dev, std::abs(complex.filt(c) - original_[c]));
		return dev;
	}

	/// f' must stay a sublevel-complex filtration with respect to the
	/// initial incidence, dead cells included.
	bool monotone_on_initial(const filtered_complex& complex) const {
		for (cell_id c = 0; c < complex.size(); ++c)
			for (cell_id cf : initial_cofaces_[c])
				if (complex.filt(c) > complex.filt(cf)) return false;
		return true;
	}

private:
	filt_t epsilon_;
	std::vector<filt_t> original_;
	std::vector<std::vector<cell_id>> initial_cofaces_;
	std::vector<std::uint8_t> perturbed_;
	std::vector<perturbation> changes_;
};

namespace detail {

struct smooth_pair_policy {
	filtered_complex& complex;
	perturbed_filtration& filtration;

	// `lower` is the member that would be moved up to `upper`'s value.
	bool pair_ok(cell_id lower, cell_id upper) const {
		if (complex.filt(lower) == complex.filt(upper)) return true;
		if (filtration.epsilon() == 0) return false;
		if (filtration.is_perturbed(lower)) return false;
		const filt_t target = filtration.original(upper);
		if (!(filtration.original(upper) - filtration.original(lower) < filtration.epsilon()))
			return false;
		for (cell_id cf : filtration.initial_cofaces(lower))
			if (filtration.original(cf) < target) return false;
		return true;
	}

	void commit(cell_id lower, cell_id upper) {
		if (complex.filt(lower) == complex.filt(upper)) return;
		const filt_t target = filtration.original(upper);
		filtration.record(lower, target);
		complex.set_filt(lower, target);
	}
};

}  // namespace detail

/// Collapse engine with the relaxed guard; shares its queue discipline
/// with collapse_reduce, so epsilon = 0 reproduces it exactly.
inline reduction_log smooth_collapse(filtered_complex& complex, perturbed_filtration& filtration) {
	return detail::run_collapse(complex, detail::smooth_pair_policy{complex, filtration});
}

/// Coreduction engine with the relaxed guard; epsilon = 0 reproduces
/// coreduce exactly.
inline reduction_log smooth_coreduce(filtered_complex& complex, perturbed_filtration& filtration) {
	return detail::run_coreduce(complex, detail::smooth_pair_policy{complex, filtration});
}

struct smooth_result {
	reduction_log log;
	perturbed_filtration filtration;
};

inline smooth_result smooth_collapse(filtered_complex& complex, filt_t epsilon) {
	perturbed_filtration filtration(complex, epsilon);
	reduction_log log = smooth_collapse(complex, filtration);
	return {std::move(log), std::move(filtration)};
}

inline smooth_result smooth_coreduce(filtered_complex& complex, filt_t epsilon) {
	perturbed_filtration filtration(complex, epsilon);
	reduction_log log = smooth_coreduce(complex, filtration);
	return {std::move(log), std::move(filtration)};
}

/// Merges the distinct top-cell values into buckets of diameter at most
/// 2 * epsilon (greedy from below, representative = minimum +
/// floor(diameter / 2)) and re-extends all lower cells by minima. Requires
/// a lower-star filtration on top cells; every cell moves by at most
/// epsilon.
inline perturbed_filtration quantize_levels(filtered_complex& complex, filt_t epsilon) {
	perturbed_filtration filtration(complex, epsilon);
	if (complex.live_count() == 0) return filtration;
	if (!complex.validate().valid()) throw error("quantize_levels: invalid complex");

	const std::int32_t top_dim = complex.max_dim();
	std::vector<cell_id> tops;
	for (cell_id c = 0; c < complex.size(); ++c) {
		if (!complex.is_alive(c) || !complex.cofaces(c).empty()) continue;
		if (complex.dim(c) != top_dim)
			throw error("quantize_levels: filtration is not given on top cells (mixed top dimensions)");
		tops.push_back(c);
	}

	// incident tops of every cell, by upward traversal
	std::vector<std::vector<cell_id>> tops_above(complex.size());
	for (cell_id t : tops)
		for (cell_id c : complex.closure(std::vector<cell_id>{t})) tops_above[c].push_back(t);
	for (cell_id c = 0; c < complex.size(); ++c) {
		if (!complex.is_alive(c) || complex.dim(c) == top_dim) continue;
		if (tops_above[c].empty()) throw error("quantize_levels: cell not below any top cell");
		filt_t expect = std::numeric_limits<filt_t>::max();
		for (cell_id t : tops_above[c]) expect = std::min(expect, complex.filt(t));
		if (expect != complex.filt(c))
			throw error("quantize_levels: input is not a lower-star filtration");
	}

	std::vector<filt_t> values;
	for (cell_id t : tops) values.push_back(complex.filt(t));
	std::sort(values.begin(), values.end());
	values.erase(std::unique(values.begin(), values.end()), values.end());

	std::vector<std::pair<filt_t, filt_t>> remap;  // value -> representative
	std::size_t start = 0;
	while (start < values.size()) {
		std::size_t end = start;
		while (end + 1 < values.size() && values[end + 1] - values[start] <= 2 * epsilon) ++end;
		const filt_t representative = values[start] + (values[end] - values[start]) / 2;
		for (std::size_t i = start; i <= end; ++i) remap.emplace_back(values[i], representative);
		start = end + 1;
	}
	auto representative_of = [&](filt_t v) {
		const auto it = std::lower_bound(remap.begin(), remap.end(), v,
		                                 [](const auto& p, filt_t x) { return p.first < x; });
		return it->second;
	};

	for (cell_id t : tops) {
		const filt_t nv = representative_of(complex.filt(t));
		if (nv != complex.filt(t)) {
			filtration.record(t, nv);
			complex.set_filt(t, nv);
		}
	}
	for (cell_id c = 0; c < complex.size(); ++c) {
		if (!complex.is_alive(c) || complex.dim(c) == top_dim) continue;
		filt_t nv = std::numeric_limits<filt_t>::max();
		for (cell_id t : tops_above[c]) nv = std::min(nv, complex.filt(t));
		if (nv != complex.filt(c)) {
			filtration.record(c, nv);
			complex.set_filt(c, nv);
		}
	}
	return filtration;
}

}  // namespace presimp
