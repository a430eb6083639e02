#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "core/kdata.hpp"
#include "core/trigpoly.hpp"

namespace huygens {

// The i-th basis function c_i cos(k_i phi) - s_i sin(k_i phi), i.e. the
// cosine of k_i phi shifted by the i-th phase.
TrigPoly basis_function(const KData& data, size_t i);

// Wronskian determinant det[ d^r f_c / d phi^r ]. The empty list yields the
// constant 1 (in the supplied mode), which keeps one-element data reducing
// to the free operator.
TrigPoly wronskian(const std::vector<TrigPoly>& funcs, Mode empty_mode = Mode::exact,
                   unsigned empty_bits = 0);

// Wronskian of the basis-function list with the given indices removed,
// remaining order preserved.
TrigPoly reduced_wronskian(const KData& data, const std::set<size_t>& omit);

// Wronskian of the full basis-function list.
TrigPoly full_wronskian(const KData& data);

}  // namespace huygens
