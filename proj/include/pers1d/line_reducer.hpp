#pragma once

#include "core.hpp"

#include <cassert>

namespace pers1d {

// maximal run of equal consecutive values, compared by its first index under
// the simplicity order; runs of distinct items cover disjoint index ranges so
// this is consistent with comparing any representative
struct plateau {
	value_t value;
	index_t first;
	index_t last;
};

inline bool before(const plateau& a, const plateau& b) {
	return a.value < b.value || (a.value == b.value && a.first < b.first);
}

struct reduce_stats {
	uint64_t pushes = 0;
	uint64_t pops = 0;
};

// the invariant-carrying working sequence: plateaus strictly alternate
// minimum/maximum roles (minimum at the bottom), minima increase and maxima
// decrease towards the top, every minimum is below every maximum. With
// boundary rules on, a conceptual +infinity sentinel precedes the bottom:
// a drop below the bottom is a 321 through the sentinel and a descent past
// the only minimum left of a maximum is a 4231 through the sentinel. With
// boundary rules off (detached segments) those reductions are suppressed and
// the stack may keep an expanding prefix instead.
struct reducer_stack {
	std::vector<plateau> items;
	reduce_stats stats;

	reducer_stack(bool boundary_rules, std::vector<persistence_pair>& out)
	    : boundary_(boundary_rules), out_(out) {}

	void push(plateau p) {
		if (!items.empty()) {
			plateau& t = items.back();
			if (t.value == p.value && t.last + 1 == p.first) { // pattern 11: extend the run
				t.last = p.last;
				return;
			}
		}
		for (;;) {
			const size_t k = items.size();
			if (k == 0) {
				push_item(p);
				return;
			}
			const plateau t = items[k - 1];
			if (k == 1) {
				if (boundary_ && before(p, t)) { // start 21: 321 through the sentinel
					pop_item();
					continue;
				}
				push_item(p);
				return;
			}
			const plateau u = items[k - 2];
			if (before(u, t)) { // top is a maximum
				if (before(t, p)) { // 123: drop the middle
					pop_item();
					continue;
				}
				if (before(u, p)) { // new narrowing minimum
					push_item(p);
					return;
				}
				if (k == 2 ? boundary_ : before(t, items[k - 3])) { // start 231 / 4231: pair 2 and 3
					emit(u, t);
					pop_item();
					pop_item();
					continue;
				}
				push_item(p); // expanding head of a detached segment
				return;
			} else { // top is a minimum
				if (before(p, t)) { // 321: drop the middle
					pop_item();
					continue;
				}
				if (before(p, u)) { // new narrowing maximum
					push_item(p);
					return;
				}
				if (k >= 3 && before(items[k - 3], t)) { // 1324: pair 3 and 2
					emit(t, u);
					pop_item();
					pop_item();
					continue;
				}
				push_item(p);
				return;
			}
		}
	}

	// right extremity: a trailing maximum kills nothing; then each terminal
	// 132 pairs the top minimum with the maximum below it
	persistence_pair teardown() {
		assert(!items.empty());
		size_t k = items.size();
		if (k >= 2 && before(items[k - 2], items[k - 1])) pop_item();
		while (items.size() > 1) {
			emit(items[items.size() - 1], items[items.size() - 2]);
			pop_item();
			pop_item();
		}
		return {items[0].value, inf_value, items[0].first, -1};
	}

	// junction helpers for the cyclic case
	void drop_top() { pop_item(); }
	void pair_top_two() {
		assert(items.size() >= 2);
		emit(items[items.size() - 2], items[items.size() - 1]);
		pop_item();
		pop_item();
	}

private:
	bool boundary_;
	std::vector<persistence_pair>& out_;

	void push_item(const plateau& p) {
		items.push_back(p);
		++stats.pushes;
	}
	void pop_item() {
		items.pop_back();
		++stats.pops;
	}
	void emit(const plateau& mn, const plateau& mx) {
		assert(!before(mx, mn));
		if (mn.value != mx.value) // zero-persistence pairs are never emitted
			out_.push_back({mn.value, mx.value, mn.first, mx.last});
	}
};

// streaming single-pass reducer; values may be fed chunk by chunk
struct line_reducer {
	line_reducer() : stack_(true, result_.pairs) {}

	void push(value_t v) {
		if (!std::isfinite(v))
			throw std::invalid_argument("non-finite value at index " + std::to_string(count_));
		stack_.push({v, count_, count_});
		++count_;
	}

	diagram finish() {
		if (count_ == 0) throw std::invalid_argument("empty sample");
		result_.pairs.push_back(stack_.teardown());
		return std::move(result_);
	}

	void reserve_pairs(size_t n) { result_.pairs.reserve(n); }
	index_t count() const { return count_; }
	const reducer_stack& stack() const { return stack_; }

private:
	diagram result_;
	index_t count_ = 0;
	reducer_stack stack_;
};

inline diagram line_diagram(std::span<const value_t> values) {
	line_reducer r;
	r.reserve_pairs(count_strict_min_runs(values, topology::line));
	for (value_t v : values) r.push(v);
	return r.finish();
}

} // namespace pers1d
