#include "hypersdf/fixtures.hpp"

#include "hypersdf/ring_format.hpp"

namespace hypersdf {

std::string_view r1_document() {
  return R"(ring R1
order 4
zero 0
one 1
add
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
mul
{0} {0} {0} {0}
{0} {0,1,2,3} {0,2} {0,1,2,3}
{0} {0,2} {0} {0,2}
{0} {0,1,2,3} {0,2} {0,1,2,3}
end
)";
}

std::string_view r2_document() {
  return R"(ring R2
order 4
zero 0
one 1
add
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
mul
{0} {0} {0} {0}
{0} {1,3} {2} {1,3}
{0} {2} {0} {2}
{0} {1,3} {2} {1,3}
end
)";
}

HyperRing fixture_r1() { return parse_ring_or_throw(r1_document()); }
HyperRing fixture_r2() { return parse_ring_or_throw(r2_document()); }

}  // namespace hypersdf
