#include "core/kdata.hpp"

#include <string>

#include "core/errors.hpp"

namespace huygens {

KData::KData(std::vector<long> k, std::vector<UnitPoint> phases)
    : k_(std::move(k)), phases_(std::move(phases)) {
    if (k_.empty()) throw InvalidArgumentError("k sequence must be non-empty");
    if (k_.size() != phases_.size())
        throw InvalidArgumentError("k sequence and phase list differ in length");
    if (k_.front() != 0)
        throw InvalidArgumentError("k sequence must start at 0, got " +
                                   std::to_string(k_.front()));
    for (size_t i = 1; i < k_.size(); ++i)
        if (k_[i] <= k_[i - 1])
            throw InvalidArgumentError("k sequence must be strictly increasing at index " +
                                       std::to_string(i));
    if (!phases_.front().is_one())
        throw InvalidArgumentError("the first phase must be the trivial point (1, 0)");

    mode_ = phases_.front().c.mode();
    prec_ = 0;
    for (const UnitPoint& p : phases_) {
        if (p.c.mode() != mode_ || p.s.mode() != mode_)
            throw ModeMismatchError("phases mix exact and floating scalars");
        if (mode_ == Mode::floating)
            prec_ = std::max({prec_, p.c.precision_bits(), p.s.precision_bits()});
    }
}

KData KData::trivial(std::vector<long> k) {
    std::vector<UnitPoint> phases(k.size(), UnitPoint::one());
    return KData(std::move(k), std::move(phases));
}

bool KData::operator==(const KData& rhs) const {
    if (k_ != rhs.k_ || phases_.size() != rhs.phases_.size()) return false;
    for (size_t i = 0; i < phases_.size(); ++i)
        if (phases_[i].c != rhs.phases_[i].c || phases_[i].s != rhs.phases_[i].s)
            return false;
    return true;
}

}  // namespace huygens
