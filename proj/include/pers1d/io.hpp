#pragma once

#include "line_reducer.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string_view>

namespace pers1d {

enum class input_format { csv, raw };

struct input_spec {
	std::string path; // "-" reads standard input
	input_format format = input_format::csv;
	topology topo = topology::line;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
		s.remove_prefix(1);
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
		s.remove_suffix(1);
	return s;
}

template <typename Fn> void stream_csv(std::istream& in, Fn&& fn) {
	std::vector<value_t> buffer;
	buffer.reserve(1 << 16);
	std::string line;
	for (size_t lineno = 1; std::getline(in, line); ++lineno) {
		std::string_view s = trim(line);
		if (s.empty()) continue;
		value_t v;
		auto res = std::from_chars(s.data(), s.data() + s.size(), v);
		if (res.ec != std::errc() || res.ptr != s.data() + s.size())
			throw std::invalid_argument("malformed value at line " + std::to_string(lineno));
		buffer.push_back(v);
		if (buffer.size() >= (1 << 16)) {
			fn(std::span<const value_t>(buffer));
			buffer.clear();
		}
	}
	if (!buffer.empty()) fn(std::span<const value_t>(buffer));
}

template <typename Fn> void stream_raw(std::istream& in, Fn&& fn) {
	std::vector<value_t> buffer(1 << 16);
	size_t carry = 0; // bytes of a value split across reads
	for (;;) {
		char* dst = reinterpret_cast<char*>(buffer.data()) + carry;
		in.read(dst, (std::streamsize)(buffer.size() * sizeof(value_t) - carry));
		if (in.gcount() == 0) { // eof or dead stream
			if (carry != 0)
				throw std::invalid_argument("raw input size is not a multiple of 8 bytes");
			break;
		}
		size_t got = carry + (size_t)in.gcount();
		size_t whole = got / sizeof(value_t);
		carry = got - whole * sizeof(value_t);
		if (whole > 0) fn(std::span<const value_t>(buffer.data(), whole));
		if (in.eof()) {
			if (carry != 0)
				throw std::invalid_argument("raw input size is not a multiple of 8 bytes");
			break;
		}
		if (carry != 0)
			std::memmove(buffer.data(), reinterpret_cast<char*>(buffer.data()) + whole * sizeof(value_t),
			             carry);
	}
}

} // namespace detail

// feeds the input to fn in chunks; the whole sample never needs to be in
// memory at once
template <typename Fn> void stream_input(const input_spec& in, Fn&& fn) {
	if (in.path == "-") {
		if (in.format == input_format::raw)
			detail::stream_raw(std::cin, fn);
		else
			detail::stream_csv(std::cin, fn);
		return;
	}
	std::ifstream file(in.path, in.format == input_format::raw ? std::ios::binary : std::ios::in);
	if (!file) throw std::runtime_error("cannot open input file: " + in.path);
	if (in.format == input_format::raw)
		detail::stream_raw(file, fn);
	else
		detail::stream_csv(file, fn);
}

inline std::vector<value_t> read_input(const input_spec& in) {
	std::vector<value_t> out;
	stream_input(in, [&](std::span<const value_t> chunk) {
		out.insert(out.end(), chunk.begin(), chunk.end());
	});
	return out;
}

inline void write_text(const std::string& path, std::string_view text) {
	if (path.empty() || path == "-") {
		std::cout.write(text.data(), (std::streamsize)text.size());
		std::cout.flush();
		return;
	}
	std::ofstream file(path, std::ios::binary);
	if (!file) throw std::runtime_error("cannot open output file: " + path);
	file.write(text.data(), (std::streamsize)text.size());
}

inline void write_raw(const std::string& path, std::span<const value_t> values) {
	std::ofstream file(path, std::ios::binary);
	if (!file) throw std::runtime_error("cannot open output file: " + path);
	file.write(reinterpret_cast<const char*>(values.data()),
	           (std::streamsize)(values.size() * sizeof(value_t)));
}

// ---- benchmark harness ----

enum class generator_kind { random_values, monotonic, constant, narrowing };

inline const char* generator_name(generator_kind k) {
	switch (k) {
	case generator_kind::random_values: return "random";
	case generator_kind::monotonic: return "monotonic";
	case generator_kind::constant: return "constant";
	default: return "narrowing";
	}
}

inline std::optional<generator_kind> parse_generator(std::string_view s) {
	if (s == "random") return generator_kind::random_values;
	if (s == "monotonic") return generator_kind::monotonic;
	if (s == "constant") return generator_kind::constant;
	if (s == "narrowing") return generator_kind::narrowing;
	return std::nullopt;
}

inline void generate_values(std::vector<value_t>& out, size_t n, generator_kind kind,
                            uint64_t seed) {
	out.resize(n);
	switch (kind) {
	case generator_kind::random_values: {
		std::mt19937_64 rng(seed);
		// top 53 bits scaled to [0,1); identical across platforms, unlike
		// uniform_real_distribution
		for (size_t i = 0; i < n; ++i) out[i] = (value_t)(rng() >> 11) * 0x1.0p-53;
		break;
	}
	case generator_kind::monotonic:
		for (size_t i = 0; i < n; ++i) out[i] = (value_t)i;
		break;
	case generator_kind::constant:
		for (size_t i = 0; i < n; ++i) out[i] = 0.5;
		break;
	case generator_kind::narrowing:
		// minima ascend the even indices while maxima descend: the reducer
		// stack grows to n/2, the documented worst case
		for (size_t i = 0; i < n; ++i)
			out[i] = (i % 2 == 0) ? (value_t)i : (value_t)(2 * n - i);
		break;
	}
}

inline double elapsed_seconds(std::chrono::steady_clock::time_point t0) {
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct bench_times {
	double generation = 0, reducer = 0, oracle = 0, copy = 0;
};

struct bench_report {
	size_t n = 0;
	generator_kind kind = generator_kind::random_values;
	size_t repetitions = 0;
	uint64_t seed = 0;
	std::vector<bench_times> runs;
	bench_times median;
	size_t reducer_pairs = 0, oracle_pairs = 0;
	value_t check = 0; // keeps the timed copies observable
};

inline double median_of(std::vector<double> v) {
	std::sort(v.begin(), v.end());
	size_t m = v.size() / 2;
	return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

inline bench_report run_bench(size_t n, generator_kind kind, size_t repetitions, uint64_t seed) {
	if (n < 1) throw std::invalid_argument("n must be positive");
	if (repetitions < 1) throw std::invalid_argument("repetitions must be positive");
	bench_report report;
	report.n = n;
	report.kind = kind;
	report.repetitions = repetitions;
	report.seed = seed;

	std::vector<value_t> values;
	for (size_t r = 0; r < repetitions; ++r) {
		bench_times t;
		auto t0 = std::chrono::steady_clock::now();
		generate_values(values, n, kind, seed);
		t.generation = elapsed_seconds(t0);

		t0 = std::chrono::steady_clock::now();
		{
			diagram d = line_diagram(values);
			t.reducer = elapsed_seconds(t0);
			report.reducer_pairs = d.pairs.size();
		}

		t0 = std::chrono::steady_clock::now();
		{
			diagram d = oracle_line(values);
			t.oracle = elapsed_seconds(t0);
			report.oracle_pairs = d.pairs.size();
		}

		t0 = std::chrono::steady_clock::now();
		{
			std::vector<value_t> copied(values);
			t.copy = elapsed_seconds(t0);
			report.check += copied.back();
		}
		report.runs.push_back(t);
	}

	std::vector<double> g, rd, orc, cp;
	for (const bench_times& t : report.runs) {
		g.push_back(t.generation);
		rd.push_back(t.reducer);
		orc.push_back(t.oracle);
		cp.push_back(t.copy);
	}
	report.median = {median_of(g), median_of(rd), median_of(orc), median_of(cp)};
	return report;
}

inline std::string format_bench(const bench_report& r) {
	char buf[256];
	std::string out;
	std::snprintf(buf, sizeof buf, "bench n=%zu generator=%s repetitions=%zu seed=%llu\n", r.n,
	              generator_name(r.kind), r.repetitions, (unsigned long long)r.seed);
	out += buf;
	out += "run        generation      reducer       oracle         copy\n";
	for (size_t i = 0; i < r.runs.size(); ++i) {
		const bench_times& t = r.runs[i];
		std::snprintf(buf, sizeof buf, "%-6zu %12.6f %12.6f %12.6f %12.6f\n", i, t.generation,
		              t.reducer, t.oracle, t.copy);
		out += buf;
	}
	std::snprintf(buf, sizeof buf, "median %12.6f %12.6f %12.6f %12.6f\n", r.median.generation,
	              r.median.reducer, r.median.oracle, r.median.copy);
	out += buf;
	std::snprintf(buf, sizeof buf, "pairs: reducer=%zu oracle=%zu check=%g\n", r.reducer_pairs,
	              r.oracle_pairs, (double)r.check);
	out += buf;
	return out;
}

} // namespace pers1d
