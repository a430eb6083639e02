#pragma once

#include <vector>

#include "core/scalar.hpp"

namespace huygens {

// The defining datum of a potential: a strictly increasing integer sequence
// k_0 < k_1 < ... < k_m starting at 0, with a unit-circle phase point per
// entry and the first phase pinned to (1, 0).
class KData {
  public:
    KData(std::vector<long> k, std::vector<UnitPoint> phases);

    // All phases (1, 0): the fully symmetric family.
    static KData trivial(std::vector<long> k);

    const std::vector<long>& k() const { return k_; }
    const std::vector<UnitPoint>& phases() const { return phases_; }
    size_t size() const { return k_.size(); }  // m + 1
    long k_max() const { return k_.back(); }

    Mode mode() const { return mode_; }
    unsigned precision_bits() const { return prec_; }

    bool operator==(const KData& rhs) const;

  private:
    std::vector<long> k_;
    std::vector<UnitPoint> phases_;
    Mode mode_;
    unsigned prec_;
};

}  // namespace huygens
