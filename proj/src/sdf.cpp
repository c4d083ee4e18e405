#include "hypersdf/sdf.hpp"

#include "hypersdf/ideals.hpp"

namespace hypersdf {

namespace {

std::vector<Element> nonzero_elements(std::size_t order, Element zero) {
  std::vector<Element> out;
  for (Element x = 0; x < order; ++x) {
    if (x != zero) {
      out.push_back(x);
    }
  }
  return out;
}

void require_proper(HyperRing const& ring, Subset const& p) {
  if (!is_proper_hyperideal(ring, p)) {
    throw PreconditionError("sdf check: argument is not a proper hyperideal");
  }
}

}  // namespace

Subset diff_of_squares(HyperRing const& ring, Element x, Element y) {
  return ring.difference(ring.power(x, 2), ring.power(y, 2));
}

SdfResult scan_sdf(HyperRing const& ring, Subset const& p, SdfVariant variant, ScanMode mode) {
  require_proper(ring, p);
  return detail::scan(ring, p, nonzero_elements(ring.order(), ring.zero()), variant, mode);
}

SdfResult is_sdf_absorbing(HyperRing const& ring, Subset const& p, ScanMode mode) {
  return scan_sdf(ring, p, SdfVariant::sdf, mode);
}

SdfResult is_weakly_sdf_absorbing(HyperRing const& ring, Subset const& p, ScanMode mode) {
  return scan_sdf(ring, p, SdfVariant::weakly, mode);
}

SdfResult sdf_both_membership(HyperRing const& ring, Subset const& p, ScanMode mode) {
  return scan_sdf(ring, p, SdfVariant::both, mode);
}

SdfResult scan_matrix_sdf(MatrixRing const& matrices, Subset const& base_ideal, SdfVariant variant,
                          ScanMode mode) {
  require_proper(matrices.base(), base_ideal);
  return detail::scan(matrices, matrices.lift(base_ideal),
                      nonzero_elements(matrices.order(), matrices.zero()), variant, mode);
}

SdfResult scan_corner_sdf(MatrixRing const& matrices, Subset const& base_ideal, SdfVariant variant,
                          ScanMode mode) {
  HyperRing const& base = matrices.base();
  require_proper(base, base_ideal);
  std::vector<Element> corners;
  std::vector<Element> base_of(matrices.order(), 0);
  for (Element x : nonzero_elements(base.order(), base.zero())) {
    corners.push_back(matrices.corner(x));
    base_of[corners.back()] = x;
  }
  SdfResult result = detail::scan(matrices, matrices.lift(base_ideal), corners, variant, mode);
  for (auto& [x, y] : result.firing) {
    x = base_of[x];
    y = base_of[y];
  }
  for (SdfWitness& w : result.violations) {
    w.x = base_of[w.x];
    w.y = base_of[w.y];
  }
  return result;
}

}  // namespace hypersdf
