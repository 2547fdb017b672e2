#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fixtures.hpp"
#include "presimp/presimp.hpp"

using namespace presimp;

namespace {

const char* const slow_lid_text =
    "0 0 0\n"
    "0 0 0\n"
    "0 0 0\n"
    "0 0 0\n"
    "1 0 2 0 1\n"
    "1 0 2 1 2\n"
    "1 0 2 2 3\n"
    "1 0 2 0 3\n"
    "2 10 4 4 5 6 7\n";

}  // namespace

TEST_CASE("canonical complex files round-trip byte-identically", "[io]") {
	std::istringstream in(slow_lid_text);
	const filtered_complex k = load_complex(in);
	CHECK(k.live_count() == 9);
	std::ostringstream out;
	save_complex(k, out);
	CHECK(out.str() == slow_lid_text);
}

TEST_CASE("comments and blank lines are ignored", "[io]") {
	std::istringstream in("# header\n\n0 0 0\n0 0 0  # trailing\n1 0 2 0 1\n");
	const filtered_complex k = load_complex(in);
	CHECK(k.live_count() == 3);
}

TEST_CASE("empty file loads as the empty complex", "[io]") {
	std::istringstream in("");
	CHECK(load_complex(in).live_count() == 0);
}

TEST_CASE("a face id at or past its own line is an ordering error", "[io]") {
	std::istringstream in("0 0 0\n1 0 2 0 1\n");  // face 1 is the line itself
	CHECK_THROWS_AS(load_complex(in), parse_error);
}

TEST_CASE("dangling face ids are rejected", "[io]") {
	std::istringstream in("0 0 0\n0 0 0\n1 0 2 0 7\n");
	CHECK_THROWS_AS(load_complex(in), parse_error);
}

TEST_CASE("malformed cell lines are rejected", "[io]") {
	std::istringstream a("0 zero 0\n");
	CHECK_THROWS_AS(load_complex(a), parse_error);
	std::istringstream b("0 0 0 9\n");  // trailing token
	CHECK_THROWS_AS(load_complex(b), parse_error);
	std::istringstream c("1 0 3 0\n");  // fewer faces than announced
	CHECK_THROWS_AS(load_complex(c), parse_error);
}

TEST_CASE("face dimension mismatches are rejected at load", "[io]") {
	std::istringstream in("0 0 0\n2 0 1 0\n");
	CHECK_THROWS_AS(load_complex(in), parse_error);
}

TEST_CASE("save then load is the identity on builder output", "[io]") {
	const filtered_complex k = build_cubical_lower_star(fixtures::ring_with_slow_center());
	std::ostringstream first;
	save_complex(k, first);
	std::istringstream in(first.str());
	std::ostringstream second;
	save_complex(load_complex(in), second);
	CHECK(first.str() == second.str());
}

TEST_CASE("voxel files parse shape and values", "[io]") {
	std::istringstream in("voxel 2 2 3\n0 1 2\n3 4 5\n");
	const voxel_grid grid = load_voxel(in);
	CHECK(grid.shape == std::vector<std::size_t>{2, 3});
	CHECK(grid.values == std::vector<filt_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("voxel value count must match the shape", "[io]") {
	std::istringstream in("voxel 2 2 3\n0 1 2 3\n");
	CHECK_THROWS_AS(load_voxel(in), parse_error);
}

TEST_CASE("simplicial files parse values and maximal simplices", "[io]") {
	std::istringstream in("simplicial 3\n0 5 3\n0 1\n1 2\n");
	const simplex_spec spec = load_simplicial(in);
	CHECK(spec.vertex_values == std::vector<filt_t>{0, 5, 3});
	REQUIRE(spec.maximal_simplices.size() == 2);
	CHECK(spec.maximal_simplices[0] == std::vector<std::size_t>{0, 1});
}

TEST_CASE("format detection keys on the header keyword", "[io]") {
	std::istringstream v("voxel 1 2\n0 1\n");
	CHECK(detect_format(v) == input_format::voxel);
	std::istringstream s("# comment\nsimplicial 1\n3\n0\n");
	CHECK(detect_format(s) == input_format::simplicial);
	std::istringstream c(slow_lid_text);
	CHECK(detect_format(c) == input_format::complex_file);
}

TEST_CASE("load_any builds complexes from every format", "[io]") {
	std::istringstream v("voxel 2 1 1\n7\n");
	CHECK(load_any(v, input_format::voxel).live_count() == 9);
	std::istringstream s("simplicial 1\n3\n0\n");
	CHECK(load_any(s, input_format::simplicial).live_count() == 1);
}

TEST_CASE("reduction logs serialize one event per line", "[io]") {
	reduction_log log;
	log.note("method collapse");
	log.events.push_back({reduction_rule::collapse, 8, 4, 0});
	log.events.push_back({reduction_rule::vertex_removal, 0, invalid_cell, 2});
	std::ostringstream out;
	write_log(log, out);
	CHECK(out.str() == "# method collapse\ncollapse 8 4 0\nvertex-removal 0 2\n");
}
