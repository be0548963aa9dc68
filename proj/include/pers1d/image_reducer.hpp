#pragma once

#include "line_reducer.hpp"

#include <optional>

namespace pers1d {

// components of the image are created by local minima of g and merged by
// local maxima of f; everything else is noise the event reduction removes
enum class event_kind : uint8_t { f_max, g_min };

struct critical_event {
	value_t value;
	index_t index;
	event_kind kind;
};

// f-before-g at an exact (value, index) tie, mirroring the joint sweep order
inline bool event_before(const critical_event& a, const critical_event& b) {
	return std::tie(a.value, a.index, a.kind) < std::tie(b.value, b.index, b.kind);
}

struct critical_list {
	std::vector<critical_event> events;
};

// strict minimum runs of g (boundary included, first index of the run) and
// strict interior maximum runs of f (last index of the run), in index order
// with the f event first at a shared index; boundary maxima of f merge
// nothing and are not events
inline critical_list extract_events(const function_pair& pair) {
	const std::vector<value_t>& f = pair.f;
	const std::vector<value_t>& g = pair.g;
	const index_t n = (index_t)f.size();

	std::vector<critical_event> gmins, fmaxs;
	for (index_t i = 0; i < n;) {
		index_t j = i;
		while (j + 1 < n && g[j + 1] == g[i]) ++j;
		if ((i == 0 || g[i - 1] > g[i]) && (j == n - 1 || g[j + 1] > g[i]))
			gmins.push_back({g[i], i, event_kind::g_min});
		i = j + 1;
	}
	for (index_t i = 0; i < n;) {
		index_t j = i;
		while (j + 1 < n && f[j + 1] == f[i]) ++j;
		if (i > 0 && j < n - 1 && f[i - 1] < f[i] && f[j + 1] < f[i])
			fmaxs.push_back({f[i], j, event_kind::f_max});
		i = j + 1;
	}

	critical_list out;
	out.events.resize(gmins.size() + fmaxs.size());
	std::merge(fmaxs.begin(), fmaxs.end(), gmins.begin(), gmins.end(), out.events.begin(),
	           [](const critical_event& a, const critical_event& b) {
		           return a.index < b.index || (a.index == b.index && a.kind < b.kind);
	           });
	return out;
}

// one greedy left-to-right pass with a stack of pending events; each event is
// pushed and popped at most once. Between two pending minima the larger one
// is removable whenever f stays at or below it on the stretch between them;
// between two maxima the smaller one is removable whenever g stays at or
// above it. The stack keeps exactly the events where neither applies, so the
// survivors alternate and every maximum exceeds its adjacent minima.
inline critical_list reduce_events(const critical_list& raw) {
	critical_list out;
	std::vector<critical_event>& st = out.events;
	st.reserve(raw.events.size());
	for (const critical_event& e : raw.events) {
		for (;;) {
			if (st.empty()) {
				// a maximum before the first surviving minimum merges nothing
				// visible in the image
				if (e.kind == event_kind::g_min) st.push_back(e);
				break;
			}
			const critical_event& t = st.back();
			if (t.kind == e.kind) {
				bool pop_t = e.kind == event_kind::g_min ? event_before(e, t) : event_before(t, e);
				if (pop_t) {
					st.pop_back();
					continue;
				}
				break; // the incoming event is the removable one
			}
			if (e.kind == event_kind::g_min ? !event_before(e, t) : event_before(e, t))
				break; // a minimum merged at or above its level / a maximum below its neighbor
			st.push_back(e);
			break;
		}
	}
	// a trailing maximum has no g-born class on its right to merge
	if (!st.empty() && st.back().kind == event_kind::f_max) st.pop_back();
	return out;
}

// conceptually lower g on [t1, t2] to min(g, max(m2, m_f)): when the maximum
// of f between two consecutive minima of g stays at or below the larger
// minimum, that minimum stops being one. Returns the removed index.
inline std::optional<index_t> reduce_between_minima(const function_pair& pair, index_t t1,
                                                    index_t t2) {
	assert(t1 >= 0 && t1 < t2 && t2 < (index_t)pair.g.size());
	index_t tm = ordered_value{pair.g[t1], t1} < ordered_value{pair.g[t2], t2} ? t2 : t1;
	index_t j = t1;
	for (index_t i = t1 + 1; i <= t2; ++i)
		if (pair.f[i] >= pair.f[j]) j = i;
	bool removes = pair.f[j] < pair.g[tm] || (pair.f[j] == pair.g[tm] && j <= tm);
	return removes ? std::optional<index_t>(tm) : std::nullopt;
}

// symmetric rule: conceptually raise f on [t1, t2] to max(f, min(m1, m_g));
// the smaller of two consecutive maxima of f is removed when g stays at or
// above it in between (the swallowed component lives only in the cokernel)
inline std::optional<index_t> reduce_between_maxima(const function_pair& pair, index_t t1,
                                                    index_t t2) {
	assert(t1 >= 0 && t1 < t2 && t2 < (index_t)pair.f.size());
	index_t tm = ordered_value{pair.f[t1], t1} < ordered_value{pair.f[t2], t2} ? t1 : t2;
	index_t j = t1;
	for (index_t i = t1 + 1; i <= t2; ++i)
		if (pair.g[i] < pair.g[j]) j = i;
	bool removes = !(pair.g[j] < pair.f[tm] || (pair.g[j] == pair.f[tm] && j < tm));
	return removes ? std::optional<index_t>(tm) : std::nullopt;
}

// after the reduction the surviving events match up like a single function:
// minima of g and maxima of f alternate, so the line machinery computes the
// image diagram directly, with birth indices taken from g and death indices
// from f
inline diagram image_diagram(const function_pair& pair) {
	validate_pair(pair);
	critical_list matched = reduce_events(extract_events(pair));
	assert(!matched.events.empty());

	diagram d;
	reducer_stack stack(true, d.pairs);
	for (const critical_event& e : matched.events) stack.push({e.value, e.index, e.index});
	d.pairs.push_back(stack.teardown());
	return d;
}

} // namespace pers1d
