// presimp command-line front end.
//
//   presimp reduce  — shrink a complex with acyclic-subspace, collapse and
//                     coreduction passes, optionally epsilon-smoothed
//   presimp persist — compute a persistence diagram
//   presimp diff    — compare two diagrams exactly or by bottleneck distance
//
// Exit codes: 0 success/equal, 1 unequal diagrams, 2 usage error, 3 data error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "presimp/presimp.hpp"

namespace {

using namespace presimp;

constexpr int exit_ok = 0;
constexpr int exit_unequal = 1;
constexpr int exit_usage = 2;
constexpr int exit_data = 3;

input_format parse_format(const std::string& name, const std::string& path) {
	if (name == "voxel") return input_format::voxel;
	if (name == "simplicial") return input_format::simplicial;
	if (name == "complex") return input_format::complex_file;
	std::ifstream probe = open_input(path);
	return detect_format(probe);
}

filtered_complex load_input(const std::string& path, const std::string& format) {
	const input_format fmt = parse_format(format, path);
	std::ifstream in = open_input(path);
	return load_any(in, fmt, path);
}

std::string format_percent(std::size_t removed, std::size_t total) {
	if (total == 0) return "0.0";
	const double pct = 100.0 * static_cast<double>(removed) / static_cast<double>(total);
	std::ostringstream os;
	os.setf(std::ios::fixed);
	os.precision(1);
	os << pct;
	return os.str();
}

std::string format_distance(double d) {
	if (std::isinf(d)) return "inf";
	std::ostringstream os;
	if (d == std::floor(d)) {
		os << static_cast<long long>(d);
	} else {
		os.setf(std::ios::fixed);
		os.precision(1);
		os << d;
	}
	return os.str();
}

void print_dim_counts(std::ostream& out, const std::vector<std::size_t>& counts) {
	for (std::size_t d = 0; d < counts.size(); ++d)
		out << "  dim " << d << ": " << counts[d] << '\n';
}

struct reduce_options {
	std::vector<std::string> inputs;
	std::string format = "auto";
	std::vector<std::string> methods;
	std::int64_t epsilon = -1;  // unset
	std::string out_path, log_path, diagram_path;
	unsigned jobs = 1;
};

struct persist_options {
	std::vector<std::string> inputs;
	std::string format = "auto";
	std::string diagram_path;
	bool dim0_unionfind = false;
	bool clearing = false;
	unsigned jobs = 1;
};

struct diff_options {
	std::string first, second;
	bool bottleneck = false;
	std::vector<std::int32_t> dims;
};

std::vector<std::string> expand_methods(const std::vector<std::string>& methods) {
	std::vector<std::string> expanded;
	for (const std::string& m : methods) {
		if (m == "all") {
			expanded.insert(expanded.end(), {"acyclic", "collapse", "coreduce"});
		} else if (m == "acyclic" || m == "collapse" || m == "coreduce") {
			expanded.push_back(m);
		} else {
			throw CLI::ValidationError("--method", "unknown method '" + m + "'");
		}
	}
	return expanded;
}

void write_method_log(std::ostream& out, const std::string& method, const reduction_log& log,
                      std::span<const perturbation> perturbations) {
	out << "# method " << method << '\n';
	write_log(log, out);
	for (const perturbation& p : perturbations)
		out << "perturb " << p.cell << ' ' << p.original << ' ' << p.current << '\n';
}

std::string run_reduce_one(const reduce_options& opt, const std::vector<std::string>& methods,
                           const std::string& input, const std::string& out_path,
                           const std::string& log_path, const std::string& diagram_path) {
	std::ostringstream status;
	filtered_complex complex = load_input(input, opt.format);
	const filtered_complex original = complex;

	const bool has_acyclic =
	    std::find(methods.begin(), methods.end(), "acyclic") != methods.end();
	const bool epsilon_set = opt.epsilon >= 0;

	status << "input: " << input << '\n';
	status << "cells before: " << complex.live_count() << '\n';
	print_dim_counts(status, complex.live_counts_per_dim());

	std::ostringstream log_stream;
	std::size_t perturbed_cells = 0;

	// Epsilon budget: with an acyclic pass the budget is consumed by level
	// quantization and the pair engines stay exact; otherwise collapse and
	// coreduction share one snapshot context, so the whole run still moves
	// no cell by more than epsilon.
	std::optional<perturbed_filtration> shared;
	if (epsilon_set && !has_acyclic) shared.emplace(complex, opt.epsilon);
	std::size_t shared_seen = 0;
	bool quantized_already = false;

	for (const std::string& method : methods) {
		reduction_log log;
		const std::size_t before = complex.live_count();
		std::vector<perturbation> perturbations;
		if (method == "acyclic") {
			if (epsilon_set && !quantized_already) {
				quantized_already = true;
				perturbed_filtration quantized = quantize_levels(complex, opt.epsilon);
				perturbations.assign(quantized.changes().begin(), quantized.changes().end());
			}
			const acyclic_subcomplex subcomplex = grow_acyclic(complex);
			log = excise(complex, subcomplex);
		} else if (method == "collapse") {
			if (shared) log = smooth_collapse(complex, *shared);
			else log = collapse_reduce(complex);
		} else {
			if (shared) log = smooth_coreduce(complex, *shared);
			else log = coreduce(complex);
		}
		if (shared) {
			const auto changes = shared->changes();
			perturbations.assign(changes.begin() + static_cast<std::ptrdiff_t>(shared_seen), changes.end());
			shared_seen = changes.size();
		}
		perturbed_cells += perturbations.size();

		std::size_t pairs = 0, singles = 0;
		for (const reduction_event& e : log.events) (e.is_pair() ? pairs : singles)++;
		status << "method " << method << ": removed " << (before - complex.live_count()) << " cells ("
		       << pairs << " pairs, " << singles << " single removals)" << '\n';
		write_method_log(log_stream, method, log, perturbations);
	}

	status << "perturbed cells: " << perturbed_cells << '\n';
	status << "cells after: " << complex.live_count() << '\n';
	print_dim_counts(status, complex.live_counts_per_dim());
	status << "reduction: " << format_percent(original.live_count() - complex.live_count(), original.live_count())
	       << "%" << '\n';

	if (!out_path.empty()) {
		std::ofstream out = open_output(out_path);
		save_complex(complex, out);
	}
	if (!log_path.empty()) {
		std::ofstream out = open_output(log_path);
		out << log_stream.str();
	}
	if (!diagram_path.empty()) {
		// Coreduction and excision destroy dimension-0 persistence, so the
		// dimension-0 diagram is recomputed from the original complex.
		std::ofstream out = open_output(diagram_path);
		write_diagram(zero_dim_unionfind(original), out);
	}
	return status.str();
}

std::string run_persist_one(const persist_options& opt, const std::string& input,
                            const std::string& diagram_path) {
	filtered_complex complex = load_input(input, opt.format);
	persistence_diagram diagram = compute_diagram(complex, opt.clearing);
	if (opt.dim0_unionfind) {
		persistence_diagram merged = zero_dim_unionfind(complex);
		for (const persistence_interval& i : diagram.intervals)
			if (i.dim >= 1) merged.intervals.push_back(i);
		merged.sort();
		diagram = std::move(merged);
	}
	std::ostringstream out;
	write_diagram(diagram, out);
	if (!diagram_path.empty()) {
		std::ofstream file = open_output(diagram_path);
		file << out.str();
		return "wrote " + diagram_path + " (" + std::to_string(diagram.intervals.size()) + " intervals)\n";
	}
	return out.str();
}

// Runs one task per input, at most `jobs` at a time, printing buffered
// results in input order.
template <typename Fn>
int run_batch(const std::vector<std::string>& inputs, unsigned jobs, Fn&& fn) {
	int code = exit_ok;
	std::vector<std::string> results(inputs.size());
	std::vector<std::string> errors(inputs.size());
	for (std::size_t base = 0; base < inputs.size(); base += jobs) {
		const std::size_t batch = std::min<std::size_t>(jobs, inputs.size() - base);
		std::vector<std::future<void>> tasks;
		for (std::size_t i = 0; i < batch; ++i) {
			tasks.push_back(std::async(std::launch::async, [&, idx = base + i] {
				try {
					results[idx] = fn(inputs[idx]);
				} catch (const std::exception& e) {
					errors[idx] = e.what();
				}
			}));
		}
		for (auto& t : tasks) t.wait();
	}
	for (std::size_t i = 0; i < inputs.size(); ++i) {
		if (!errors[i].empty()) {
			std::cerr << "error: " << errors[i] << '\n';
			code = exit_data;
		} else {
			std::cout << results[i];
		}
	}
	return code;
}

int run_reduce(const reduce_options& opt) {
	const bool multi = opt.inputs.size() > 1;
	if (multi && (!opt.out_path.empty() || !opt.log_path.empty() || !opt.diagram_path.empty()))
		throw CLI::ValidationError("reduce", "--out/--log/--diagram cannot combine with multiple inputs");
	const std::vector<std::string> methods = expand_methods(opt.methods);
	return run_batch(opt.inputs, std::max(1u, opt.jobs), [&](const std::string& input) {
		const std::string out = multi ? input + ".reduced" : opt.out_path;
		const std::string log = multi ? input + ".log" : opt.log_path;
		const std::string dgm = multi ? input + ".dgm0" : opt.diagram_path;
		return run_reduce_one(opt, methods, input, out, log, dgm);
	});
}

int run_persist(const persist_options& opt) {
	const bool multi = opt.inputs.size() > 1;
	if (multi && !opt.diagram_path.empty())
		throw CLI::ValidationError("persist", "--diagram cannot combine with multiple inputs");
	return run_batch(opt.inputs, std::max(1u, opt.jobs), [&](const std::string& input) {
		return run_persist_one(opt, input, multi ? input + ".dgm" : opt.diagram_path);
	});
}

int run_diff(const diff_options& opt) {
	std::ifstream first = open_input(opt.first);
	std::ifstream second = open_input(opt.second);
	const persistence_diagram d1 = read_diagram(first, opt.first);
	const persistence_diagram d2 = read_diagram(second, opt.second);

	if (opt.bottleneck) {
		std::vector<std::int32_t> dims = opt.dims;
		if (dims.empty()) {
			const std::int32_t top = std::max(d1.max_dim(), d2.max_dim());
			for (std::int32_t d = 0; d <= top; ++d) dims.push_back(d);
		}
		for (std::int32_t d : dims)
			std::cout << "dim " << d << ": " << format_distance(bottleneck_distance(d1, d2, d)) << '\n';
		return exit_ok;
	}

	const diagram_comparison cmp = diagrams_equal(d1, d2, opt.dims);
	if (cmp.equal) {
		std::cout << "equal\n";
		return exit_ok;
	}
	std::cout << "unequal: interval dim " << cmp.witness->dim << " [" << cmp.witness->birth << ", ";
	if (cmp.witness->finite()) std::cout << cmp.witness->death;
	else std::cout << "inf";
	std::cout << ") " << cmp.detail << '\n';
	return exit_unequal;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"persistence-preserving simplification of filtered cell complexes"};
	app.require_subcommand(1);

	reduce_options reduce_opt;
	CLI::App* reduce = app.add_subcommand("reduce", "reduce a complex before persistence computation");
	reduce->add_option("input", reduce_opt.inputs, "input file(s)")->required();
	reduce->add_option("--format", reduce_opt.format, "input format: auto|voxel|simplicial|complex")
	    ->check(CLI::IsMember({"auto", "voxel", "simplicial", "complex"}));
	reduce->add_option("--method", reduce_opt.methods, "reduction method, ordered and repeatable: acyclic|collapse|coreduce|all")
	    ->required();
	reduce->add_option("--epsilon", reduce_opt.epsilon, "smoothing tolerance (integer >= 0)")
	    ->check(CLI::NonNegativeNumber);
	reduce->add_option("--out", reduce_opt.out_path, "write the compacted reduced complex here");
	reduce->add_option("--log", reduce_opt.log_path, "write the reduction log here");
	reduce->add_option("--diagram", reduce_opt.diagram_path,
	                   "write the union-find dim-0 diagram of the original complex here");
	reduce->add_option("--jobs", reduce_opt.jobs, "parallel workers for multiple inputs")
	    ->check(CLI::PositiveNumber);

	persist_options persist_opt;
	CLI::App* persist = app.add_subcommand("persist", "compute a persistence diagram");
	persist->add_option("input", persist_opt.inputs, "input file(s)")->required();
	persist->add_option("--format", persist_opt.format, "input format: auto|voxel|simplicial|complex")
	    ->check(CLI::IsMember({"auto", "voxel", "simplicial", "complex"}));
	persist->add_option("--diagram", persist_opt.diagram_path, "output path (default: stdout)");
	persist->add_flag("--dim0-unionfind", persist_opt.dim0_unionfind,
	                  "compute dimension 0 with the union-find fast path");
	persist->add_flag("--clearing", persist_opt.clearing, "enable the clearing optimization");
	persist->add_option("--jobs", persist_opt.jobs, "parallel workers for multiple inputs")
	    ->check(CLI::PositiveNumber);

	diff_options diff_opt;
	CLI::App* diff = app.add_subcommand("diff", "compare two persistence diagrams");
	diff->add_option("first", diff_opt.first, "first diagram file")->required();
	diff->add_option("second", diff_opt.second, "second diagram file")->required();
	diff->add_flag("--bottleneck", diff_opt.bottleneck, "print bottleneck distance per dimension");
	diff->add_option("--dims", diff_opt.dims, "restrict comparison to these dimensions")
	    ->delimiter(',');

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return exit_usage;
	}

	try {
		if (reduce->parsed()) return run_reduce(reduce_opt);
		if (persist->parsed()) return run_persist(persist_opt);
		return run_diff(diff_opt);
	} catch (const CLI::ValidationError& e) {
		std::cerr << e.what() << '\n';
		return exit_usage;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_data;
	}
}
