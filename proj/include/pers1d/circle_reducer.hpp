#pragma once

#include "line_reducer.hpp"

namespace pers1d {

// cut the circle at the global minimum and reduce the rotated sequence; since
// the scan starts at the global minimum the boundary rules can never fire, and
// the wrap-around edge is resolved afterwards at the junction
inline diagram circle_diagram(std::span<const value_t> values) {
	validate_values(values);
	const index_t n = (index_t)values.size();

	index_t m = 0;
	for (index_t i = 1; i < n; ++i)
		if (values[i] < values[m]) m = i;

	diagram d;
	d.pairs.reserve(count_strict_min_runs(values, topology::circle));
	reducer_stack stack(false, d.pairs);
	for (index_t k = 0, i = m; k < n; ++k) {
		stack.push({values[i], i, i});
		if (++i == n) i = 0;
	}

	// junction: the reduced sequence is cyclically closed by the bottom
	// minimum; a trailing minimum is a 321 across the junction, then each
	// terminal (minimum, maximum) is a 4231 across the junction until only
	// the global minimum and the global maximum remain
	if (stack.items.size() >= 3 && stack.items.size() % 2 == 1) stack.drop_top();
	while (stack.items.size() > 2) stack.pair_top_two();

	d.pairs.push_back({stack.items[0].value, inf_value, stack.items[0].first, -1});
	return d;
}

} // namespace pers1d
