#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct command_result {
	int exit_code;
	std::string output;  // stdout only
};

const fs::path& work_dir() {
	static const fs::path dir = [] {
		const fs::path d = fs::temp_directory_path() / "presimp_cli_tests";
		fs::remove_all(d);
		fs::create_directories(d);
		return d;
	}();
	return dir;
}

command_result run_cli(const std::string& args) {
	const fs::path out_file = work_dir() / "stdout.txt";
	const std::string command =
	    std::string(PRESIMP_CLI_PATH) + " " + args + " > " + out_file.string() + " 2> /dev/null";
	const int status = std::system(command.c_str());
	std::ifstream in(out_file);
	std::stringstream buffer;
	buffer << in.rdbuf();
	return {WEXITSTATUS(status), buffer.str()};
}

fs::path write_file(const std::string& name, const std::string& content) {
	const fs::path path = work_dir() / name;
	std::ofstream out(path);
	out << content;
	return path;
}

std::string read_file(const fs::path& path) {
	std::ifstream in(path);
	std::stringstream buffer;
	buffer << in.rdbuf();
	return buffer.str();
}

const char* const slow_lid_text =
    "0 0 0\n0 0 0\n0 0 0\n0 0 0\n"
    "1 0 2 0 1\n1 0 2 1 2\n1 0 2 2 3\n1 0 2 0 3\n"
    "2 10 4 4 5 6 7\n";

}  // namespace

TEST_CASE("persist prints the diagram of a complex file", "[cli]") {
	const auto input = write_file("square.cplx", slow_lid_text);
	const command_result r = run_cli("persist " + input.string());
	CHECK(r.exit_code == 0);
	CHECK(r.output == "0 0 inf\n1 0 10\n");
}

TEST_CASE("persist handles voxel and simplicial inputs by sniffing", "[cli]") {
	const auto voxel = write_file("grid.vox", "voxel 2 1 1\n7\n");
	const command_result rv = run_cli("persist " + voxel.string());
	CHECK(rv.exit_code == 0);
	CHECK(rv.output == "0 7 inf\n");

	const auto simp = write_file("circle.simp", "simplicial 4\n0 0 0 0\n0 1\n1 2\n2 3\n3 0\n");
	const command_result rs = run_cli("persist " + simp.string());
	CHECK(rs.exit_code == 0);
	CHECK(rs.output == "0 0 inf\n1 0 inf\n");
}

TEST_CASE("persist agrees with and without the union-find path", "[cli]") {
	const auto input = write_file("square2.cplx", slow_lid_text);
	const command_result plain = run_cli("persist " + input.string());
	const command_result fast = run_cli("persist --dim0-unionfind " + input.string());
	const command_result cleared = run_cli("persist --clearing " + input.string());
	CHECK(plain.output == fast.output);
	CHECK(plain.output == cleared.output);
}

TEST_CASE("reduce writes complex, log and statistics", "[cli]") {
	const auto input = write_file("grid10.vox", [] {
		std::string content = "voxel 2 10 10\n";
		for (int i = 0; i < 100; ++i) content += "5 ";
		content += "\n";
		return content;
	}());
	const fs::path out = work_dir() / "grid10.reduced";
	const fs::path log = work_dir() / "grid10.log";
	const command_result r = run_cli("reduce " + input.string() + " --method all --out " + out.string() +
	                                 " --log " + log.string());
	CHECK(r.exit_code == 0);
	CHECK(r.output.find("cells before: 441") != std::string::npos);
	CHECK(r.output.find("reduction: 100.0%") != std::string::npos);
	CHECK(read_file(out).empty());  // fully reduced away
	const std::string log_text = read_file(log);
	CHECK(log_text.find("# method acyclic") != std::string::npos);
	CHECK(log_text.find("# acyclic subcomplex: 100 top cells, 441 closed cells") != std::string::npos);
	CHECK(log_text.find("# level 5: 100 admitted") != std::string::npos);
}

TEST_CASE("reduce on the slow-lid square with collapse is a no-op", "[cli]") {
	const auto input = write_file("square3.cplx", slow_lid_text);
	const fs::path out = work_dir() / "square3.reduced";
	const command_result r = run_cli("reduce " + input.string() + " --method collapse --out " + out.string());
	CHECK(r.exit_code == 0);
	CHECK(read_file(out) == slow_lid_text);
}

TEST_CASE("reduce emits the original dim-0 diagram next to coreduction output", "[cli]") {
	const auto input = write_file("path.simp", "simplicial 5\n0 5 3 4 2\n0 1\n1 2\n2 3\n3 4\n");
	const fs::path dgm = work_dir() / "path.dgm0";
	const fs::path reduced = work_dir() / "path.reduced";
	const command_result r = run_cli("reduce " + input.string() + " --method coreduce --out " +
	                                 reduced.string() + " --diagram " + dgm.string());
	CHECK(r.exit_code == 0);
	// union-find on the original complex, not the reduced one
	CHECK(read_file(dgm) == "0 0 inf\n0 2 5\n0 3 4\n");
}

TEST_CASE("diff exit codes distinguish equal and unequal diagrams", "[cli]") {
	const auto a = write_file("a.dgm", "0 0 inf\n1 0 10\n");
	const auto b = write_file("b.dgm", "0 0 inf\n");
	CHECK(run_cli("diff " + a.string() + " " + a.string()).exit_code == 0);
	const command_result unequal = run_cli("diff " + a.string() + " " + b.string());
	CHECK(unequal.exit_code == 1);
	CHECK(unequal.output.find("dim 1") != std::string::npos);
	// restricted to dimension 0 the two agree
	CHECK(run_cli("diff --dims 0 " + a.string() + " " + b.string()).exit_code == 0);
}

TEST_CASE("diff prints bottleneck distances per dimension", "[cli]") {
	const auto a = write_file("ba.dgm", "1 0 10\n");
	const auto b = write_file("bb.dgm", "1 1 10\n");
	const command_result r = run_cli("diff --bottleneck " + a.string() + " " + b.string());
	CHECK(r.exit_code == 0);
	CHECK(r.output == "dim 0: 0\ndim 1: 1\n");

	const auto c = write_file("bc.dgm", "1 0 9\n");
	const command_result half = run_cli("diff --bottleneck --dims 1 " + c.string() + " " +
	                                    write_file("bd.dgm", "").string());
	CHECK(half.output == "dim 1: 4.5\n");
}

TEST_CASE("reduce then persist then diff certifies the pipeline", "[cli]") {
	const auto input = write_file("ring.vox", "voxel 2 3 3\n0 0 0\n0 1 0\n0 0 0\n");
	const fs::path reduced = work_dir() / "ring.reduced";
	const fs::path full_dgm = work_dir() / "ring_full.dgm";
	const fs::path red_dgm = work_dir() / "ring_red.dgm";

	CHECK(run_cli("reduce " + input.string() + " --method all --out " + reduced.string()).exit_code == 0);
	CHECK(run_cli("persist " + input.string() + " --diagram " + full_dgm.string()).exit_code == 0);
	CHECK(run_cli("persist " + reduced.string() + " --diagram " + red_dgm.string()).exit_code == 0);
	CHECK(run_cli("diff --dims 1,2 " + full_dgm.string() + " " + red_dgm.string()).exit_code == 0);
}

TEST_CASE("missing files are data errors", "[cli]") {
	CHECK(run_cli("persist /nonexistent/input.cplx").exit_code == 3);
	CHECK(run_cli("diff /nonexistent/a.dgm /nonexistent/b.dgm").exit_code == 3);
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
	CHECK(run_cli("persist").exit_code == 2);
	CHECK(run_cli("reduce somefile").exit_code == 2);  // --method required
	const auto input = write_file("square4.cplx", slow_lid_text);
	CHECK(run_cli("reduce " + input.string() + " --method frobnicate").exit_code == 2);
	CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("invalid complexes are data errors", "[cli]") {
	const auto input = write_file("bad.cplx", "0 5 0\n0 5 0\n1 0 2 0 1\n");
	CHECK(run_cli("reduce " + input.string() + " --method collapse").exit_code == 3);
}

TEST_CASE("identical runs produce identical bytes", "[cli]") {
	const auto input = write_file("det.vox", "voxel 2 3 2\n3 1 4\n1 5 9\n");
	const fs::path out1 = work_dir() / "det1.reduced", out2 = work_dir() / "det2.reduced";
	const fs::path log1 = work_dir() / "det1.log", log2 = work_dir() / "det2.log";
	const std::string base = "reduce " + input.string() + " --method all --epsilon 1 ";
	const command_result r1 = run_cli(base + "--out " + out1.string() + " --log " + log1.string());
	const command_result r2 = run_cli(base + "--out " + out2.string() + " --log " + log2.string());
	CHECK(r1.exit_code == 0);
	CHECK(r1.output == r2.output);
	CHECK(read_file(out1) == read_file(out2));
	CHECK(read_file(log1) == read_file(log2));
}

TEST_CASE("smoothed pair reductions stay within the epsilon bound end to end", "[cli]") {
	const auto input = write_file("smooth.vox", "voxel 2 3 3\n1 2 1\n2 9 2\n1 2 1\n");
	const fs::path reduced = work_dir() / "smooth.reduced";
	const fs::path full = work_dir() / "smooth_full.dgm";
	const fs::path red = work_dir() / "smooth_red.dgm";
	CHECK(run_cli("reduce " + input.string() + " --method collapse --method coreduce --epsilon 2 --out " +
	              reduced.string())
	          .exit_code == 0);
	CHECK(run_cli("persist " + input.string() + " --diagram " + full.string()).exit_code == 0);
	CHECK(run_cli("persist " + reduced.string() + " --diagram " + red.string()).exit_code == 0);
	const command_result r = run_cli("diff --bottleneck --dims 1 " + full.string() + " " + red.string());
	CHECK(r.exit_code == 0);
	// "dim 1: <d>" with d <= 2
	REQUIRE(r.output.rfind("dim 1: ", 0) == 0);
	CHECK(std::stod(r.output.substr(7)) <= 2.0);
}

TEST_CASE("multiple inputs derive their own output names", "[cli]") {
	const auto a = write_file("multi_a.cplx", slow_lid_text);
	const auto b = write_file("multi_b.cplx", "0 0 0\n");
	const command_result r = run_cli("persist --jobs 2 " + a.string() + " " + b.string());
	CHECK(r.exit_code == 0);
	CHECK(read_file(work_dir() / "multi_a.cplx.dgm") == "0 0 inf\n1 0 10\n");
	CHECK(read_file(work_dir() / "multi_b.cplx.dgm") == "0 0 inf\n");
}
