#include "pers1d/circle_reducer.hpp"
#include "pers1d/image_reducer.hpp"
#include "pers1d/io.hpp"
#include "pers1d/oracle.hpp"
#include "pers1d/parallel.hpp"

#include "CLI11.hpp"

#include <thread>

using namespace pers1d;

int main(int argc, char** argv) {
	CLI::App app{"0-dimensional sublevel-set persistence of sampled PL functions"};
	app.require_subcommand(1);

	std::string input_path, f_path, g_path;
	std::string format = "csv";
	std::string output = "-";
	std::string generator = "random";
	bool circle = false, use_oracle = false;
	int threads = 1;
	uint64_t seed = 42;
	size_t bench_n = 0, reps = 5;

	CLI::App* diagram_cmd =
	    app.add_subcommand("diagram", "persistence diagram of one sampled function");
	diagram_cmd->add_option("input", input_path, "input file, - for standard input")->required();
	diagram_cmd->add_option("--format", format, "input format: csv (one value per line) or raw (float64 little endian)")
	    ->check(CLI::IsMember({"csv", "raw"}));
	diagram_cmd->add_flag("--circle", circle, "cyclic domain (first and last samples adjacent)");
	diagram_cmd->add_flag("--oracle", use_oracle, "compute with the union-find oracle instead of the reducer");
	diagram_cmd->add_option("--threads", threads, "reduce this many segments in parallel, 0 = auto; line domain only")
	    ->check(CLI::NonNegativeNumber);
	diagram_cmd->add_option("--output", output, "output file, - for standard output");

	CLI::App* image_cmd =
	    app.add_subcommand("image", "image persistence diagram of a dominated pair f <= g");
	image_cmd->add_option("f", f_path, "input file for f, - for standard input")->required();
	image_cmd->add_option("g", g_path, "input file for g")->required();
	image_cmd->add_option("--format", format, "input format: csv or raw")
	    ->check(CLI::IsMember({"csv", "raw"}));
	image_cmd->add_flag("--oracle", use_oracle, "compute with the union-find oracle instead of the reducer");
	image_cmd->add_option("--output", output, "output file, - for standard output");

	CLI::App* bench_cmd =
	    app.add_subcommand("bench", "time the reducer against the sort-based oracle baseline");
	bench_cmd->add_option("n", bench_n, "sample length")->required()->check(CLI::PositiveNumber);
	bench_cmd->add_option("--generator", generator, "input family")
	    ->check(CLI::IsMember({"random", "monotonic", "constant", "narrowing"}));
	bench_cmd->add_option("--reps", reps, "repetitions, medians reported")->check(CLI::PositiveNumber);
	bench_cmd->add_option("--seed", seed, "seed for the random generator");
	bench_cmd->add_option("--output", output, "output file, - for standard output");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 1;
	}

	try {
		if (*diagram_cmd) {
			input_spec in{input_path, format == "raw" ? input_format::raw : input_format::csv,
			              circle ? topology::circle : topology::line};
			diagram d;
			if (use_oracle) {
				std::vector<value_t> values = read_input(in);
				d = circle ? oracle_circle(values) : oracle_line(values);
			} else if (circle) {
				d = circle_diagram(read_input(in));
			} else if (threads != 1) {
				std::vector<value_t> values = read_input(in);
				size_t segments = threads > 0 ? (size_t)threads
				                              : std::max(1u, std::thread::hardware_concurrency());
				d = parallel_line_diagram(values, segments);
			} else {
				line_reducer r;
				stream_input(in, [&](std::span<const value_t> chunk) {
					for (value_t v : chunk) r.push(v);
				});
				d = r.finish();
			}
			write_text(output, diagram_to_csv(d));
		} else if (*image_cmd) {
			input_format fmt = format == "raw" ? input_format::raw : input_format::csv;
			function_pair pair;
			pair.f = read_input({f_path, fmt, topology::line});
			pair.g = read_input({g_path, fmt, topology::line});
			diagram d = use_oracle ? oracle_image(pair) : image_diagram(pair);
			write_text(output, diagram_to_csv(d));
		} else {
			bench_report report = run_bench(bench_n, *parse_generator(generator), reps, seed);
			write_text(output, format_bench(report));
		}
		return 0;
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	} catch (const std::logic_error& e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
}
