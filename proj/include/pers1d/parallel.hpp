#pragma once

#include "line_reducer.hpp"

#include <future>

namespace pers1d {

// partial reduction of a detached slice: boundary rules stay off because the
// neighbors are unknown, so the slice keeps a 2-phase (expanding, then
// narrowing) remnant and only interior 1324/4231 pairs are final
struct segment_result {
	std::vector<plateau> two_phase;
	std::vector<persistence_pair> pairs;
	reduce_stats stats;
};

inline segment_result reduce_segment(std::span<const value_t> values, index_t base = 0) {
	segment_result r;
	reducer_stack stack(false, r.pairs);
	for (size_t k = 0; k < values.size(); ++k) {
		index_t i = base + (index_t)k;
		stack.push({values[k], i, i});
	}
	r.two_phase = std::move(stack.items);
	r.stats = stack.stats;
	return r;
}

inline segment_result reduce_segment(std::span<const plateau> items) {
	segment_result r;
	reducer_stack stack(false, r.pairs);
	for (const plateau& p : items) stack.push(p);
	r.two_phase = std::move(stack.items);
	r.stats = stack.stats;
	return r;
}

namespace detail {

// position of the phase-change minimum inside a 2-phase remnant
inline size_t phase_change(const std::vector<plateau>& items) {
	size_t m = 0;
	for (size_t i = 1; i < items.size(); ++i)
		if (before(items[i], items[m])) m = i;
	return m;
}

} // namespace detail

// fork-join heuristic: reduce equal slices in parallel, optionally re-split
// the concatenated remnants at their phase-change minima and reduce again,
// then finish with the sequential reducer. Collection order is fixed by the
// slice order, so the result never depends on scheduling; runs straddling a
// slice boundary are re-absorbed when the remnants are concatenated.
inline diagram parallel_line_diagram(std::span<const value_t> values, size_t segments,
                                     int resplit = 1) {
	validate_values(values);
	if (segments == 0) throw std::invalid_argument("segments must be positive");
	segments = std::min(segments, values.size());
	if (segments <= 1) return line_diagram(values);

	const size_t n = values.size();
	diagram d;
	d.pairs.reserve(count_strict_min_runs(values, topology::line));

	std::vector<segment_result> parts(segments);
	{
		std::vector<std::future<segment_result>> jobs;
		jobs.reserve(segments);
		for (size_t s = 0; s < segments; ++s) {
			size_t lo = n * s / segments, hi = n * (s + 1) / segments;
			jobs.push_back(std::async(std::launch::async, [values, lo, hi] {
				return reduce_segment(values.subspan(lo, hi - lo), (index_t)lo);
			}));
		}
		for (size_t s = 0; s < segments; ++s) parts[s] = jobs[s].get();
	}
	for (const segment_result& part : parts)
		d.pairs.insert(d.pairs.end(), part.pairs.begin(), part.pairs.end());

	std::vector<plateau> items;
	for (const segment_result& part : parts)
		items.insert(items.end(), part.two_phase.begin(), part.two_phase.end());

	for (int it = 0; it < resplit && parts.size() > 1; ++it) {
		std::vector<size_t> cuts;
		cuts.push_back(0);
		size_t off = 0;
		for (const segment_result& part : parts) {
			if (!part.two_phase.empty()) {
				size_t c = off + detail::phase_change(part.two_phase);
				if (c > cuts.back()) cuts.push_back(c);
			}
			off += part.two_phase.size();
		}
		cuts.push_back(items.size());
		if (cuts.size() <= 2) break; // a single slice, nothing to re-split

		std::vector<std::future<segment_result>> jobs;
		jobs.reserve(cuts.size() - 1);
		std::span<const plateau> all(items);
		for (size_t s = 0; s + 1 < cuts.size(); ++s)
			jobs.push_back(std::async(std::launch::async, [all, lo = cuts[s], hi = cuts[s + 1]] {
				return reduce_segment(all.subspan(lo, hi - lo));
			}));
		parts.clear();
		for (auto& job : jobs) parts.push_back(job.get());

		std::vector<plateau> next;
		for (const segment_result& part : parts) {
			d.pairs.insert(d.pairs.end(), part.pairs.begin(), part.pairs.end());
			next.insert(next.end(), part.two_phase.begin(), part.two_phase.end());
		}
		items = std::move(next);
	}

	// sequential finish with the boundary rules back on
	reducer_stack stack(true, d.pairs);
	for (const plateau& p : items) stack.push(p);
	d.pairs.push_back(stack.teardown());
	return d;
}

} // namespace pers1d
