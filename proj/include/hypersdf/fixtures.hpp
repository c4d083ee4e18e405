#pragma once

#include <string_view>

#include "hypersdf/hyperring.hpp"

namespace hypersdf {

// The two four-element reference hyperrings on Z4. R1 has 1 o 1 = Z4; R2 has
// 1 o 1 = {1,3}. Both designate 1 as the identity.
std::string_view r1_document();
std::string_view r2_document();

HyperRing fixture_r1();
HyperRing fixture_r2();

}  // namespace hypersdf
