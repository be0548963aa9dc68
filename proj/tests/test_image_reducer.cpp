#include "test_support.hpp"

#include "doctest.h"

using namespace pers1d;
using namespace testutil;

TEST_CASE("image diagrams") {
	function_pair p{{0, 2, 1, 3}, {0, 2, 1, 3}};
	CHECK(diagram_equal(image_diagram(p), line_diagram(p.f), diagram_mode::values_and_indices));

	p = {{0, 3, 1, 2, 0}, {0, 5, 1, 4, 2}}; // trailing g-min absorbed: max f after it is 2 <= 2
	CHECK(diagram_equal(image_diagram(p), diagram{{{1, 3, 2, 1}, {0, inf_value, 0, -1}}},
	                    diagram_mode::values_and_indices));

	p = {{0, 0, 0}, {9, 9, 9}}; // one g component, nothing ever merges
	CHECK(diagram_equal(image_diagram(p), diagram{{{9, inf_value, 0, -1}}},
	                    diagram_mode::values_and_indices));

	p = {{0, 5, 0}, {5, 9, 0}}; // the merge over f=5 kills the g-min 5: zero persistence
	CHECK(diagram_equal(image_diagram(p), diagram{{{0, inf_value, 2, -1}}},
	                    diagram_mode::values_and_indices));

	p = {{0, 9, 0}, {9, 9, 1}}; // f-max before the first g-min merges nothing visible
	CHECK(diagram_equal(image_diagram(p), diagram{{{1, inf_value, 2, -1}}},
	                    diagram_mode::values_and_indices));

	CHECK_THROWS_WITH_AS(image_diagram({{1, 2}, {1, 2, 3}}), "length mismatch",
	                     std::invalid_argument);
	CHECK_THROWS_WITH_AS(image_diagram({{1, 5, 2}, {1, 4, 2}}), "dominance violated at index 1",
	                     std::invalid_argument);
}

TEST_CASE("between consecutive minima of g") {
	// m1=1, m2=2, max f between is 2 <= m2: the m2 minimum is deleted
	CHECK(reduce_between_minima({{1, 2, 2}, {1, 9, 2}}, 0, 2) == std::optional<index_t>(2));
	// m_f=5 stands between them, nothing deleted
	CHECK(reduce_between_minima({{1, 5, 2}, {1, 9, 2}}, 0, 2) == std::nullopt);
	// equal minima: the later one is m2 by the simplicity order and is deleted
	CHECK(reduce_between_minima({{0, 0, 0}, {0, 9, 0}}, 0, 2) == std::optional<index_t>(2));
	// equal m_f = m2 but the f-max lies later than the surviving minimum m2=t1
	CHECK(reduce_between_minima({{2, 2, 1}, {2, 9, 1}}, 0, 2) == std::nullopt);
}

TEST_CASE("between consecutive maxima of f") {
	// m1=3, m2=4, min g between is 3.5 >= m1: the m1 maximum is deleted
	CHECK(reduce_between_maxima({{0, 3, 0, 4, 0}, {0.5, 3.5, 3.5, 4, 9}}, 1, 3) ==
	      std::optional<index_t>(1));
	// m_g=0 stands between them, nothing deleted
	CHECK(reduce_between_maxima({{0, 3, 0, 4, 0}, {9, 3, 0, 4, 9}}, 1, 3) == std::nullopt);
	// equal maxima: the later one is m2 by the simplicity order, m1 is deleted
	CHECK(reduce_between_maxima({{0, 3, 0, 3, 0}, {9, 3, 9, 3, 9}}, 1, 3) ==
	      std::optional<index_t>(1));
}

TEST_CASE("event reduction leaves an interleaved sequence") {
	std::mt19937_64 rng(43);
	for (int t = 0; t < 400; ++t) {
		size_t n = 1 + rng() % 120;
		function_pair p = random_pair(rng, n, 6, 3);
		critical_list reduced = reduce_events(extract_events(p));
		CAPTURE(format_values(p.f));
		CAPTURE(format_values(p.g));

		REQUIRE(!reduced.events.empty());
		CHECK(reduced.events.front().kind == event_kind::g_min);
		CHECK(reduced.events.back().kind == event_kind::g_min);
		for (size_t i = 0; i + 1 < reduced.events.size(); ++i) {
			CHECK(reduced.events[i].kind != reduced.events[i + 1].kind); // alternation
			const critical_event& mx =
			    reduced.events[i].kind == event_kind::f_max ? reduced.events[i]
			                                                : reduced.events[i + 1];
			const critical_event& mn =
			    reduced.events[i].kind == event_kind::f_max ? reduced.events[i + 1]
			                                                : reduced.events[i];
			CHECK(event_before(mn, mx)); // every max exceeds its adjacent mins
		}

		// matching property: the reduced events, read as one value array, give
		// the image diagram back through the plain line reducer
		std::vector<value_t> arr;
		for (const critical_event& e : reduced.events) arr.push_back(e.value);
		CHECK(diagram_equal(line_diagram(arr), image_diagram(p), diagram_mode::values_only));
	}
}

TEST_CASE("image equals the oracle on random dominated pairs") {
	std::mt19937_64 rng(47);
	for (int t = 0; t < 400; ++t) {
		size_t n = 1 + rng() % 200;
		function_pair p = random_pair(rng, n, 8, 4);
		CAPTURE(format_values(p.f));
		CAPTURE(format_values(p.g));
		diagram got = image_diagram(p);
		diagram want = oracle_image(p);
		CAPTURE(format_diagram(got));
		CAPTURE(format_diagram(want));
		REQUIRE(diagram_equal(got, want, diagram_mode::values_only));

		// birth indices sample g, death indices sample f
		for (const persistence_pair& pr : got.pairs) {
			CHECK(p.g[pr.birth_index] == pr.birth_value);
			if (!pr.essential()) CHECK(p.f[pr.death_index] == pr.death_value);
		}
	}

	// degeneracy: f = g collapses to the plain line diagram, indices included
	for (int t = 0; t < 200; ++t) {
		std::vector<value_t> v = random_levels(rng, 1 + rng() % 150, 5);
		function_pair p{v, v};
		REQUIRE(diagram_equal(image_diagram(p), line_diagram(v),
		                      diagram_mode::values_and_indices));
	}
}

TEST_CASE("the local-graph shortcut is wrong") {
	// nodes at the minima of g joined by edges at the max of f between them:
	// the low f-max between two inner minima hides the merge that matters on
	// the enclosing interval
	function_pair p{{0, 2, 0, 4, 0, 2, 0}, {0, 9, 1, 9, 6, 9, 3}};
	diagram truth = oracle_image(p);
	CHECK(diagram_equal(truth, diagram{{{1, 2, 2, 1}, {3, 4, 6, 3}, {0, inf_value, 0, -1}}},
	                    diagram_mode::values_and_indices));
	CHECK(diagram_equal(image_diagram(p), truth, diagram_mode::values_and_indices));
	CHECK(!diagram_equal(wrong_image_diagram(p), truth, diagram_mode::values_only));
}
