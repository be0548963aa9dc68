#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace pers1d {

typedef double value_t;
typedef int64_t index_t;

enum class topology { line, circle };

inline constexpr value_t inf_value = std::numeric_limits<value_t>::infinity();

// (value, position in the original input array) under the simplicity total
// order: equal values are disambiguated by index, the later occurrence is the
// larger one.
struct ordered_value {
	value_t value;
	index_t index;
};

inline bool operator<(const ordered_value& a, const ordered_value& b) {
	return a.value < b.value || (a.value == b.value && a.index < b.index);
}

inline bool operator==(const ordered_value& a, const ordered_value& b) {
	return a.value == b.value && a.index == b.index;
}

enum class ordering { less, greater };

// strict outcome for distinct indices; never "equal"
inline ordering compare(const ordered_value& a, const ordered_value& b) {
	return a < b ? ordering::less : ordering::greater;
}

// death_value is +infinity and death_index is -1 for the essential pair
struct persistence_pair {
	value_t birth_value;
	value_t death_value;
	index_t birth_index;
	index_t death_index;

	bool essential() const { return death_index < 0; }
};

inline bool operator==(const persistence_pair& a, const persistence_pair& b) {
	return a.birth_value == b.birth_value && a.death_value == b.death_value &&
	       a.birth_index == b.birth_index && a.death_index == b.death_index;
}

// multiset of pairs; exactly one essential pair for a connected domain
struct diagram {
	std::vector<persistence_pair> pairs;

	const persistence_pair& essential() const {
		for (const persistence_pair& p : pairs)
			if (p.essential()) return p;
		throw std::logic_error("diagram has no essential pair");
	}
	size_t finite_count() const {
		size_t c = 0;
		for (const persistence_pair& p : pairs) c += !p.essential();
		return c;
	}
};

enum class diagram_mode { values_only, values_and_indices };

inline bool diagram_equal(const diagram& d1, const diagram& d2, diagram_mode mode) {
	if (d1.pairs.size() != d2.pairs.size()) return false;
	auto key = [mode](const persistence_pair& p) {
		return mode == diagram_mode::values_only
		           ? std::tuple<value_t, value_t, index_t, index_t>(p.birth_value, p.death_value, 0, 0)
		           : std::tuple<value_t, value_t, index_t, index_t>(p.birth_value, p.death_value,
		                                                            p.birth_index, p.death_index);
	};
	std::vector<std::tuple<value_t, value_t, index_t, index_t>> k1, k2;
	k1.reserve(d1.pairs.size());
	k2.reserve(d2.pairs.size());
	for (const persistence_pair& p : d1.pairs) k1.push_back(key(p));
	for (const persistence_pair& p : d2.pairs) k2.push_back(key(p));
	std::sort(k1.begin(), k1.end());
	std::sort(k2.begin(), k2.end());
	return k1 == k2;
}

struct function_sample {
	std::vector<value_t> values;
	topology topo = topology::line;
};

inline void validate_values(std::span<const value_t> values) {
	if (values.empty()) throw std::invalid_argument("empty sample");
	for (size_t i = 0; i < values.size(); ++i)
		if (!std::isfinite(values[i]))
			throw std::invalid_argument("non-finite value at index " + std::to_string(i));
}

// dominated pair f <= g on a common line domain
struct function_pair {
	std::vector<value_t> f;
	std::vector<value_t> g;
};

inline void validate_pair(const function_pair& pair) {
	if (pair.f.size() != pair.g.size()) throw std::invalid_argument("length mismatch");
	validate_values(pair.f);
	validate_values(pair.g);
	for (size_t i = 0; i < pair.f.size(); ++i)
		if (pair.f[i] > pair.g[i])
			throw std::invalid_argument("dominance violated at index " + std::to_string(i));
}

// maximal runs of equal consecutive values that are strict local minima of the
// step sequence; every finite pair kills one such run, the essential class is
// the last one
inline size_t count_strict_min_runs(std::span<const value_t> v, topology topo) {
	const size_t n = v.size();
	if (n <= 1) return n;
	size_t count = 0;
	if (topo == topology::line) {
		for (size_t i = 0; i < n;) {
			size_t j = i;
			while (j + 1 < n && v[j + 1] == v[i]) ++j;
			if ((i == 0 || v[i - 1] > v[i]) && (j == n - 1 || v[j + 1] > v[i])) ++count;
			i = j + 1;
		}
	} else {
		size_t start = 0;
		while (start < n && v[start] == v[(start + n - 1) % n]) ++start;
		if (start == n) return 1;
		for (size_t i = start, seen = 0; seen < n;) {
			size_t len = 1;
			while (len < n && v[(i + len) % n] == v[i % n]) ++len;
			if (v[(i + n - 1) % n] > v[i % n] && v[(i + len) % n] > v[i % n]) ++count;
			i += len;
			seen += len;
		}
	}
	return count;
}

// shortest decimal representation that round-trips to the same double
inline void append_value(std::string& out, value_t v) {
	if (v == inf_value) {
		out += "inf";
		return;
	}
	char buf[32];
	auto res = std::to_chars(buf, buf + sizeof buf, v);
	out.append(buf, res.ptr);
}

// rows sorted by (birth_value, birth_index), essential pair last, so the
// output is byte-deterministic however the pairs were produced
inline std::string diagram_to_csv(const diagram& d) {
	std::vector<const persistence_pair*> rows;
	rows.reserve(d.pairs.size());
	for (const persistence_pair& p : d.pairs) rows.push_back(&p);
	std::sort(rows.begin(), rows.end(), [](const persistence_pair* a, const persistence_pair* b) {
		if (a->essential() != b->essential()) return b->essential();
		return std::tie(a->birth_value, a->birth_index) < std::tie(b->birth_value, b->birth_index);
	});
	std::string out;
	for (const persistence_pair* p : rows) {
		append_value(out, p->birth_value);
		out += ',';
		append_value(out, p->death_value);
		out += ',';
		out += std::to_string(p->birth_index);
		out += ',';
		if (!p->essential()) out += std::to_string(p->death_index);
		out += '\n';
	}
	return out;
}

} // namespace pers1d
