// rate_query.hpp — One rate evaluation request

#pragma once

#include "gaplaw/spectral.hpp"

namespace gaplaw {

struct RateQuery {
    double delta_e;     // energy gap, cm^-1
    double j_coupling;  // electronic coupling, cm^-1
    Bath bath;
};

}  // namespace gaplaw
