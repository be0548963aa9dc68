#include "test_support.hpp"

#include "doctest.h"

using namespace pers1d;
using namespace testutil;

TEST_CASE("circle diagrams") {
	CHECK(diagram_equal(circle_diagram(std::vector<value_t>{0, 3, 1, 2}),
	                    diagram{{{1, 2, 2, 3}, {0, inf_value, 0, -1}}},
	                    diagram_mode::values_and_indices));
	CHECK(diagram_equal(circle_diagram(std::vector<value_t>{5}),
	                    diagram{{{5, inf_value, 0, -1}}}, diagram_mode::values_and_indices));
	// cyclically monotone ramp: the single max closes the loop, kills nothing
	CHECK(diagram_equal(circle_diagram(std::vector<value_t>{1, 2, 3, 4}),
	                    diagram{{{1, inf_value, 0, -1}}}, diagram_mode::values_and_indices));
	CHECK(diagram_equal(circle_diagram(std::vector<value_t>{0, 9, 2, 7, 4, 5}),
	                    diagram{{{4, 5, 4, 5}, {2, 7, 2, 3}, {0, inf_value, 0, -1}}},
	                    diagram_mode::values_and_indices));

	// runs wrapping around the seam
	CHECK(diagram_equal(circle_diagram(std::vector<value_t>{9, 2, 9, 3, 9}),
	                    diagram{{{3, 9, 3, 2}, {2, inf_value, 1, -1}}},
	                    diagram_mode::values_and_indices));
	CHECK(diagram_equal(circle_diagram(std::vector<value_t>{8, 1, 9, 3, 8}),
	                    diagram{{{3, 8, 3, 4}, {1, inf_value, 1, -1}}},
	                    diagram_mode::values_and_indices));
	CHECK(diagram_equal(circle_diagram(std::vector<value_t>{2, 5, 2}),
	                    diagram{{{2, inf_value, 0, -1}}}, diagram_mode::values_and_indices));

	CHECK_THROWS_WITH_AS(circle_diagram(std::vector<value_t>{}), "empty sample",
	                     std::invalid_argument);
}

// mirrors circle_diagram step by step to expose the working stack
static diagram junction_probe(std::span<const value_t> v, std::vector<plateau>& first_pass,
                              size_t& final_size) {
	const index_t n = (index_t)v.size();
	index_t m = 0;
	for (index_t i = 1; i < n; ++i)
		if (v[i] < v[m]) m = i;
	diagram d;
	reducer_stack stack(false, d.pairs);
	for (index_t k = 0, i = m; k < n; ++k) {
		stack.push({v[i], i, i});
		if (++i == n) i = 0;
	}
	first_pass = stack.items;
	if (stack.items.size() >= 3 && stack.items.size() % 2 == 1) stack.drop_top();
	while (stack.items.size() > 2) stack.pair_top_two();
	final_size = stack.items.size();
	d.pairs.push_back({stack.items[0].value, inf_value, stack.items[0].first, -1});
	return d;
}

TEST_CASE("junction reduces to two values") {
	std::mt19937_64 rng(31);
	for (int t = 0; t < 500; ++t) {
		size_t n = 1 + rng() % 64;
		std::vector<value_t> v = random_levels(rng, n, 4);
		CAPTURE(format_values(v));

		std::vector<plateau> first_pass;
		size_t final_size = 0;
		diagram d = junction_probe(v, first_pass, final_size);
		CHECK(diagram_equal(d, circle_diagram(v), diagram_mode::values_and_indices));

		// after the first pass the cut sequence is narrowing: the invariant
		// shape with the global minimum at the bottom
		std::string why;
		CHECK_MESSAGE(check_full_stack(first_pass, &why), why);
		CHECK(first_pass[0].value == *std::min_element(v.begin(), v.end()));

		// a reduced cyclic sequence with both kinds of strict extrema has
		// exactly 2 elements left
		bool constant = std::all_of(v.begin(), v.end(), [&](value_t x) { return x == v[0]; });
		CHECK(final_size == (constant || n == 1 ? 1u : 2u));
	}
}

TEST_CASE("rotation invariance") {
	std::mt19937_64 rng(37);
	for (int t = 0; t < 200; ++t) {
		size_t n = 1 + rng() % 48;
		std::vector<value_t> v = random_levels(rng, n, 5);
		diagram base = circle_diagram(v);
		std::vector<value_t> w = v;
		for (size_t r = 1; r < n; ++r) {
			std::rotate(w.begin(), w.begin() + 1, w.end());
			CAPTURE(format_values(v));
			CAPTURE(r);
			REQUIRE(diagram_equal(circle_diagram(w), base, diagram_mode::values_only));
		}
	}
}

TEST_CASE("circle reducer equals the oracle exhaustively") {
	// every value sequence of length 1..9 over the alphabet {1..5}
	size_t checked = 0, failures = 0;
	std::string first_failure;
	std::vector<value_t> v;
	for (size_t n = 1; n <= 9; ++n) {
		v.assign(n, 1);
		for (uint64_t code = 0;; ++code) {
			uint64_t c = code;
			for (size_t i = 0; i < n; ++i, c /= 5) v[i] = (value_t)(1 + c % 5);
			if (c > 0) break;
			++checked;
			if (!diagram_equal(circle_diagram(v), oracle_circle(v),
			                   diagram_mode::values_and_indices) &&
			    ++failures == 1)
				first_failure = format_values(v);
		}
	}
	CHECK(checked == 2441405); // 5 + 5^2 + ... + 5^9
	CHECK_MESSAGE(failures == 0, "first mismatch on " << first_failure);
}

TEST_CASE("circle reducer equals the oracle on random arrays") {
	std::mt19937_64 rng(41);
	std::string why;
	for (int t = 0; t < 300; ++t) {
		size_t n = 1 + rng() % 200;
		std::vector<value_t> v =
		    t % 2 ? random_levels(rng, n, 8) : random_continuous(rng, n);
		CAPTURE(format_values(v));
		diagram d = circle_diagram(v);
		REQUIRE(diagram_equal(d, oracle_circle(v), diagram_mode::values_and_indices));
		REQUIRE_MESSAGE(check_diagram_invariants(d, v, topology::circle, &why), why);
	}
}
