#pragma once

#include "orbitq/root_system.hpp"

#include <algorithm>
#include <vector>

namespace orbitq::testing {

// exponents of the simple types, as listed in standard tables
inline std::vector<int> exponent_fixture(CartanType ct)
{
	int l = ct.rank();
	std::vector<int> e;
	switch (ct.family()) {
	case Family::A:
		for (int i = 1; i <= l; ++i)
			e.push_back(i);
		return e;
	case Family::B:
	case Family::C:
		for (int i = 1; i <= l; ++i)
			e.push_back(2 * i - 1);
		return e;
	case Family::D:
		for (int i = 1; i < l; ++i)
			e.push_back(2 * i - 1);
		e.push_back(l - 1);
		std::sort(e.begin(), e.end());
		return e;
	case Family::E:
		if (l == 6)
			return {1, 4, 5, 7, 8, 11};
		if (l == 7)
			return {1, 5, 7, 9, 11, 13, 17};
		return {1, 7, 11, 13, 17, 19, 23, 29};
	case Family::F: return {1, 5, 7, 11};
	case Family::G: return {1, 5};
	}
	return e;
}

} // namespace orbitq::testing
