// io.hpp
//
// Text formats.
//
// Complex file, one cell per line, ids implicit by line order from 0:
//     <dim> <filt> <k> <face_id_1> ... <face_id_k>
// Every face id must precede its coface line. Blank lines and `#`
// comments are ignored. Canonical files (as emitted here) round-trip
// byte-identically.
//
// Voxel file:      header `voxel <d> <n1> ... <nd>`, then prod(n_i)
//                  integers, row-major with the last axis fastest.
// Simplicial file: header `simplicial <num_vertices>`, one line of vertex
//                  values, then one maximal simplex per line.

#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "builders.hpp"
#include "core.hpp"

namespace presimp {

namespace detail {

inline std::string strip_comment(const std::string& line) {
	const std::size_t hash = line.find('#');
	return hash == std::string::npos ? line : line.substr(0, hash);
}

inline bool blank(const std::string& s) {
	return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] inline void fail_at(const std::string& context, std::size_t line_no, const std::string& what) {
	throw parse_error(context + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace detail

inline filtered_complex load_complex(std::istream& in, const std::string& context = "<stream>") {
	filtered_complex complex;
	std::string raw;
	std::size_t line_no = 0;
	while (std::getline(in, raw)) {
		++line_no;
		const std::string line = detail::strip_comment(raw);
		if (detail::blank(line)) continue;
		std::istringstream ls(line);
		std::int64_t dim = 0, filt = 0, k = 0;
		if (!(ls >> dim >> filt >> k) || dim < 0 || k < 0)
			detail::fail_at(context, line_no, "malformed cell line");
		std::vector<cell_id> faces;
		faces.reserve(static_cast<std::size_t>(k));
		for (std::int64_t i = 0; i < k; ++i) {
			std::int64_t f = 0;
			if (!(ls >> f) || f < 0) detail::fail_at(context, line_no, "malformed face id");
			if (static_cast<std::size_t>(f) >= complex.size())
				detail::fail_at(context, line_no,
				                "face id " + std::to_string(f) + " does not precede its coface");
			faces.push_back(static_cast<cell_id>(f));
		}
		std::string rest;
		if (ls >> rest) detail::fail_at(context, line_no, "trailing tokens");
		try {
			complex.add_cell(static_cast<std::int32_t>(dim), filt, std::move(faces));
		} catch (const error& e) {
			detail::fail_at(context, line_no, e.what());
		}
	}
	return complex;
}

/// Emits live cells in id order; a complex with dead cells is compacted
/// into the canonical (filt, dim, id) order first.
inline void save_complex(const filtered_complex& complex, std::ostream& out) {
	if (complex.live_count() != complex.size()) {
		save_complex(complex.compacted().complex, out);
		return;
	}
	for (cell_id c = 0; c < complex.size(); ++c) {
		std::vector<cell_id> faces(complex.faces(c).begin(), complex.faces(c).end());
		std::sort(faces.begin(), faces.end());
		out << complex.dim(c) << ' ' << complex.filt(c) << ' ' << faces.size();
		for (cell_id f : faces) out << ' ' << f;
		out << '\n';
	}
}

inline voxel_grid load_voxel(std::istream& in, const std::string& context = "<stream>") {
	voxel_grid grid;
	std::string raw;
	std::size_t line_no = 0;
	std::vector<std::string> lines;
	while (std::getline(in, raw)) {
		++line_no;
		const std::string line = detail::strip_comment(raw);
		if (!detail::blank(line)) lines.push_back(line);
	}
	if (lines.empty()) throw parse_error(context + ": empty voxel file");
	std::istringstream header(lines.front());
	std::string tag;
	std::int64_t d = 0;
	if (!(header >> tag >> d) || tag != "voxel" || d <= 0)
		throw parse_error(context + ": malformed voxel header");
	for (std::int64_t i = 0; i < d; ++i) {
		std::int64_t n = 0;
		if (!(header >> n) || n <= 0) throw parse_error(context + ": malformed voxel shape");
		grid.shape.push_back(static_cast<std::size_t>(n));
	}
	std::string body;
	for (std::size_t i = 1; i < lines.size(); ++i) body += lines[i] + ' ';
	std::istringstream values(body);
	filt_t v = 0;
	while (values >> v) grid.values.push_back(v);
	if (grid.values.size() != grid.value_count())
		throw parse_error(context + ": expected " + std::to_string(grid.value_count()) +
		                  " voxel values, found " + std::to_string(grid.values.size()));
	return grid;
}

inline simplex_spec load_simplicial(std::istream& in, const std::string& context = "<stream>") {
	simplex_spec spec;
	std::string raw;
	std::vector<std::string> lines;
	while (std::getline(in, raw)) {
		const std::string line = detail::strip_comment(raw);
		if (!detail::blank(line)) lines.push_back(line);
	}
	if (lines.empty()) throw parse_error(context + ": empty simplicial file");
	std::istringstream header(lines.front());
	std::string tag;
	std::int64_t nv = 0;
	if (!(header >> tag >> nv) || tag != "simplicial" || nv < 0)
		throw parse_error(context + ": malformed simplicial header");
	if (nv > 0) {
		if (lines.size() < 2) throw parse_error(context + ": missing vertex value line");
		std::istringstream vals(lines[1]);
		filt_t v = 0;
		while (vals >> v) spec.vertex_values.push_back(v);
		if (spec.vertex_values.size() != static_cast<std::size_t>(nv))
			throw parse_error(context + ": expected " + std::to_string(nv) + " vertex values");
	}
	for (std::size_t i = 2; i < lines.size(); ++i) {
		std::istringstream ls(lines[i]);
		std::vector<std::size_t> simplex;
		std::int64_t v = 0;
		while (ls >> v) {
			if (v < 0 || v >= nv) throw parse_error(context + ": vertex id out of range");
			simplex.push_back(static_cast<std::size_t>(v));
		}
		if (!simplex.empty()) spec.maximal_simplices.push_back(std::move(simplex));
	}
	return spec;
}

enum class input_format { complex_file, voxel, simplicial };

/// Sniffs the leading keyword; plain digit lines mean a complex file.
inline input_format detect_format(std::istream& in) {
	std::string raw;
	const std::streampos start = in.tellg();
	input_format result = input_format::complex_file;
	while (std::getline(in, raw)) {
		const std::string line = detail::strip_comment(raw);
		if (detail::blank(line)) continue;
		std::istringstream ls(line);
		std::string first;
		ls >> first;
		if (first == "voxel") result = input_format::voxel;
		else if (first == "simplicial") result = input_format::simplicial;
		break;
	}
	in.clear();
	in.seekg(start);
	return result;
}

inline filtered_complex load_any(std::istream& in, input_format format, const std::string& context = "<stream>") {
	switch (format) {
		case input_format::voxel:
			return build_cubical_lower_star(load_voxel(in, context));
		case input_format::simplicial:
			return build_simplicial_max(load_simplicial(in, context));
		default:
			return load_complex(in, context);
	}
}

inline std::ifstream open_input(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw parse_error(path + ": cannot open for reading");
	return in;
}

inline std::ofstream open_output(const std::string& path) {
	std::ofstream out(path);
	if (!out) throw parse_error(path + ": cannot open for writing");
	return out;
}

inline filtered_complex load_complex(const std::string& path) {
	std::ifstream in = open_input(path);
	return load_complex(in, path);
}

inline void save_complex(const filtered_complex& complex, const std::string& path) {
	std::ofstream out = open_output(path);
	save_complex(complex, out);
}

}  // namespace presimp
