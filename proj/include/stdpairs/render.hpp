#pragma once

#include "stdpairs/pairs_engine.hpp"

#include <string>

namespace stdpairs {

// SVG picture of a planar ideal: ideal points filled, standard monomials
// outlined, holes as small open circles, standard pairs as segments along
// their faces. Covers the points of witness degree <= bound.
// UnsupportedDimension unless the configuration has two rows.
std::string render_2d(const MonomialIdeal &ideal, const StandardPairSet &s,
                      Int bound);

} // namespace stdpairs
