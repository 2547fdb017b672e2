// log.hpp — audit record of reduction runs.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "core.hpp"

namespace presimp {

enum class reduction_rule { collapse, coreduction, vertex_removal, acyclic };

inline const char* to_string(reduction_rule rule) {
	switch (rule) {
		case reduction_rule::collapse: return "collapse";
		case reduction_rule::coreduction: return "coreduction";
		case reduction_rule::vertex_removal: return "vertex-removal";
		case reduction_rule::acyclic: return "acyclic";
	}
	return "?";
}

/// For pair rules, `first` is the higher-dimensional cell of the pair and
/// `second` its partner face; single-cell rules leave `second` invalid.
/// `filt` is the filtration level at which the removal happened.
struct reduction_event {
	reduction_rule rule;
	cell_id first = invalid_cell;
	cell_id second = invalid_cell;
	filt_t filt = 0;

	bool is_pair() const { return second != invalid_cell; }
	bool operator==(const reduction_event&) const = default;
};

struct reduction_log {
	std::vector<reduction_event> events;
	std::vector<std::string> notes;  // emitted as `#` comments

	std::size_t removed_count() const {
		std::size_t n = 0;
		for (const reduction_event& e : events) n += e.is_pair() ? 2 : 1;
		return n;
	}

	void note(std::string text) { notes.push_back(std::move(text)); }

	void append(reduction_log&& other) {
		for (auto& n : other.notes) notes.push_back(std::move(n));
		for (auto& e : other.events) events.push_back(e);
	}
};

/// One event per line: `<rule> <id1> [<id2>] <filt>`.
inline void write_log(const reduction_log& log, std::ostream& out) {
	for (const std::string& n : log.notes) out << "# " << n << '\n';
	for (const reduction_event& e : log.events) {
		out << to_string(e.rule) << ' ' << e.first;
		if (e.is_pair()) out << ' ' << e.second;
		out << ' ' << e.filt << '\n';
	}
}

}  // namespace presimp
