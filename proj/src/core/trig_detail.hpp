#pragma once

#include <array>

#include "core/trigpoly.hpp"

namespace huygens::detail {

// Product-to-sum expansion of a pair of single-angle harmonics. Each entry
// carries an integer sign; the overall factor 1/2 is applied by the caller.
// Frequencies may come back negative; callers fold them.
struct Expanded {
    Kind kind;
    long freq;
    int sign;
};

std::array<Expanded, 2> expand_product(Kind ka, long fa, Kind kb, long fb);

}  // namespace huygens::detail
