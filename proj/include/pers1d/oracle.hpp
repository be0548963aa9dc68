#pragma once

#include "core.hpp"

#include <numeric>

namespace pers1d {

// textbook union-find with path halving and union by rank, kept deliberately
// separate from the reducer logic; 32-bit node ids keep the 1e8-element
// benchmark baseline inside memory
struct disjoint_set {
	static constexpr uint32_t nil = UINT32_MAX;
	std::vector<uint32_t> parent;
	std::vector<uint8_t> rank_;

	explicit disjoint_set(size_t n) : parent(n, nil), rank_(n, 0) {}

	bool active(uint32_t x) const { return parent[x] != nil; }
	void activate(uint32_t x) { parent[x] = x; }
	uint32_t find(uint32_t x) {
		while (parent[x] != x) x = parent[x] = parent[parent[x]];
		return x;
	}
	uint32_t link(uint32_t a, uint32_t b) {
		if (rank_[a] < rank_[b]) std::swap(a, b);
		parent[b] = a;
		if (rank_[a] == rank_[b]) ++rank_[a];
		return a;
	}
};

namespace detail {

// sort vertices by the simplicity order, activate in order, union with active
// neighbors; a union of two born components kills the younger birth
inline diagram oracle_sweep(std::span<const value_t> values, topology topo) {
	validate_values(values);
	if (values.size() >= disjoint_set::nil)
		throw std::invalid_argument("sample too large for oracle");
	const uint32_t n = (uint32_t)values.size();

	std::vector<uint32_t> order(n);
	std::iota(order.begin(), order.end(), 0u);
	std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
		return values[a] < values[b] || (values[a] == values[b] && a < b);
	});

	disjoint_set ds(n);
	std::vector<uint32_t> birth(n); // oldest vertex of the component, valid at roots
	diagram d;
	d.pairs.reserve(count_strict_min_runs(values, topo));

	for (uint32_t pos = 0; pos < n; ++pos) {
		const uint32_t i = order[pos];
		ds.activate(i);
		birth[i] = i;
		const uint32_t neighbors[2] = {
		    topo == topology::circle ? (i + n - 1) % n : (i == 0 ? n : i - 1),
		    topo == topology::circle ? (i + 1) % n : i + 1};
		for (uint32_t nb : neighbors) {
			if (nb >= n || nb == i || !ds.active(nb)) continue;
			uint32_t ra = ds.find(i), rb = ds.find(nb);
			if (ra == rb) continue;
			uint32_t ba = birth[ra], bb = birth[rb];
			if (ordered_value{values[bb], (index_t)bb} < ordered_value{values[ba], (index_t)ba})
				std::swap(ba, bb);
			if (values[bb] != values[i])
				d.pairs.push_back({values[bb], values[i], (index_t)bb, (index_t)i});
			birth[ds.link(ra, rb)] = ba;
		}
	}

	const uint32_t r = ds.find(order[0]);
	d.pairs.push_back({values[birth[r]], inf_value, (index_t)birth[r], -1});
	return d;
}

} // namespace detail

inline diagram oracle_line(std::span<const value_t> values) {
	return detail::oracle_sweep(values, topology::line);
}

inline diagram oracle_circle(std::span<const value_t> values) {
	return detail::oracle_sweep(values, topology::circle);
}

inline diagram oracle_diagram(const function_sample& sample) {
	return detail::oracle_sweep(sample.values, sample.topo);
}

// joint sweep over the critical events of f and g: components of the f
// sublevel set carry the smallest g-value already reached inside them; a
// component is visible in the image once it carries a birth, and an f-merge
// of two visible components kills the younger birth
inline diagram oracle_image(const function_pair& pair) {
	validate_pair(pair);
	if (pair.f.size() >= disjoint_set::nil)
		throw std::invalid_argument("sample too large for oracle");
	const uint32_t n = (uint32_t)pair.f.size();
	const std::vector<value_t>& f = pair.f;
	const std::vector<value_t>& g = pair.g;

	struct event {
		value_t value;
		uint32_t index;
		uint8_t kind; // 0 = f reaches level, 1 = g reaches level
	};
	std::vector<event> events;
	events.reserve(2 * (size_t)n);
	for (uint32_t i = 0; i < n; ++i) {
		events.push_back({f[i], i, 0});
		events.push_back({g[i], i, 1});
	}
	std::sort(events.begin(), events.end(), [](const event& a, const event& b) {
		return std::tie(a.value, a.index, a.kind) < std::tie(b.value, b.index, b.kind);
	});

	disjoint_set ds(n);
	std::vector<uint32_t> birth(n, disjoint_set::nil); // g-vertex born in the component
	diagram d;
	d.pairs.reserve(count_strict_min_runs(g, topology::line));

	for (const event& e : events) {
		if (e.kind == 1) {
			// f[i] <= g[i], so vertex i is already active in the f sweep
			uint32_t r = ds.find(e.index);
			if (birth[r] == disjoint_set::nil) birth[r] = e.index;
			continue;
		}
		const uint32_t i = e.index;
		ds.activate(i);
		for (uint32_t nb : {i == 0 ? n : i - 1, i + 1}) {
			if (nb >= n || !ds.active(nb)) continue;
			uint32_t ra = ds.find(i), rb = ds.find(nb);
			if (ra == rb) continue;
			uint32_t ba = birth[ra], bb = birth[rb];
			if (ba != disjoint_set::nil && bb != disjoint_set::nil) {
				if (ordered_value{g[bb], (index_t)bb} < ordered_value{g[ba], (index_t)ba})
					std::swap(ba, bb);
				if (g[bb] != f[i]) d.pairs.push_back({g[bb], f[i], (index_t)bb, (index_t)i});
			} else if (ba == disjoint_set::nil) {
				ba = bb;
			}
			birth[ds.link(ra, rb)] = ba;
		}
	}

	const uint32_t r = ds.find(0);
	d.pairs.push_back({g[birth[r]], inf_value, (index_t)birth[r], -1});
	return d;
}

} // namespace pers1d
