// bottleneck.hpp
//
// Exact bottleneck distance between two persistence diagrams in one
// dimension: the minimum over perfect matchings (diagonal matches
// allowed) of the maximal L-infinity point distance.
//
// All arithmetic runs on doubled integer coordinates so that diagonal
// distances (death - birth) / 2 stay exact. The distance itself is found
// by binary search over the candidate values, with feasibility decided by
// augmenting-path bipartite matching on the standard augmented graph:
// each point gains a personal diagonal shadow on the opposite side, and
// shadow-shadow edges are free.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <vector>

#include "persistence.hpp"

namespace presimp {

namespace detail {

struct doubled_point {
	filt_t birth2;
	filt_t death2;
};

inline filt_t pair_cost2(const doubled_point& a, const doubled_point& b) {
	return std::max(std::abs(a.birth2 - b.birth2), std::abs(a.death2 - b.death2));
}

inline filt_t diag_cost2(const doubled_point& a) { return (a.death2 - a.birth2) / 2; }

class bottleneck_matcher {
public:
	bottleneck_matcher(std::vector<doubled_point> left, std::vector<doubled_point> right)
	    : left_(std::move(left)), right_(std::move(right)) {}

	// Perfect matching of size |L| + |R| exists at threshold delta2?
	bool feasible(filt_t delta2) const {
		const std::size_t nl = left_.size(), nr = right_.size();
		const std::size_t n = nl + nr;
		std::vector<std::vector<std::size_t>> adj(n);
		for (std::size_t u = 0; u < n; ++u) {
			for (std::size_t v = 0; v < n; ++v) {
				bool ok;
				if (u < nl && v < nr) ok = pair_cost2(left_[u], right_[v]) <= delta2;
				else if (u < nl) ok = (v - nr == u) && diag_cost2(left_[u]) <= delta2;
				else if (v < nr) ok = (u - nl == v) && diag_cost2(right_[v]) <= delta2;
				else ok = true;  // shadow-shadow, cost 0
				if (ok) adj[u].push_back(v);
			}
		}
		std::vector<std::size_t> match_of(n, npos);
		std::vector<std::uint8_t> visited;
		std::size_t matched = 0;
		std::function<bool(std::size_t)> try_augment = [&](std::size_t u) -> bool {
			for (std::size_t v : adj[u]) {
				if (visited[v]) continue;
				visited[v] = 1;
				if (match_of[v] == npos || try_augment(match_of[v])) {
					match_of[v] = u;
					return true;
				}
			}
			return false;
		};
		for (std::size_t u = 0; u < n; ++u) {
			visited.assign(n, 0);
			if (try_augment(u)) ++matched;
		}
		return matched == n;
	}

private:
	static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
	std::vector<doubled_point> left_;
	std::vector<doubled_point> right_;
};

}  // namespace detail

/// Exact bottleneck distance restricted to one dimension. Returns
/// +infinity when the two diagrams disagree on the number of infinite
/// intervals; otherwise infinite intervals are matched by sorted births
/// and finite intervals by matching feasibility.
inline double bottleneck_distance(const persistence_diagram& lhs, const persistence_diagram& rhs,
                                  std::int32_t dim) {
	std::vector<detail::doubled_point> left, right;
	std::vector<filt_t> inf_left, inf_right;
	for (const persistence_interval& i : lhs.intervals) {
		if (i.dim != dim) continue;
		if (i.finite()) left.push_back({2 * i.birth, 2 * i.death});
		else inf_left.push_back(i.birth);
	}
	for (const persistence_interval& i : rhs.intervals) {
		if (i.dim != dim) continue;
		if (i.finite()) right.push_back({2 * i.birth, 2 * i.death});
		else inf_right.push_back(i.birth);
	}

	if (inf_left.size() != inf_right.size()) return std::numeric_limits<double>::infinity();
	std::sort(inf_left.begin(), inf_left.end());
	std::sort(inf_right.begin(), inf_right.end());
	filt_t floor2 = 0;  // forced by the infinite intervals
	for (std::size_t i = 0; i < inf_left.size(); ++i)
		floor2 = std::max(floor2, 2 * std::abs(inf_left[i] - inf_right[i]));

	std::vector<filt_t> candidates{floor2};
	for (const auto& p : left) candidates.push_back(detail::diag_cost2(p));
	for (const auto& p : right) candidates.push_back(detail::diag_cost2(p));
	for (const auto& a : left)
		for (const auto& b : right) candidates.push_back(detail::pair_cost2(a, b));
	std::sort(candidates.begin(), candidates.end());
	candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
	candidates.erase(candidates.begin(),
	                 std::lower_bound(candidates.begin(), candidates.end(), floor2));

	const detail::bottleneck_matcher matcher(std::move(left), std::move(right));
	std::size_t lo = 0, hi = candidates.size() - 1;
	while (lo < hi) {
		const std::size_t mid = (lo + hi) / 2;
		if (matcher.feasible(candidates[mid])) hi = mid;
		else lo = mid + 1;
	}
	return static_cast<double>(candidates[lo]) / 2.0;
}

}  // namespace presimp
