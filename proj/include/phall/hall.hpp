#pragma once

#include "phall/linear.hpp"
#include "phall/repcat.hpp"

#include <utility>

namespace phall {

using HallElt = LinearCombination<IsoClassId>;

/// u_[M] K_α, always written with the K on the right.
struct ExtBasis {
  IsoClassId cls;
  KClass kappa;
  auto operator<=>(const ExtBasis&) const = default;
};
using ExtHallElt = LinearCombination<ExtBasis>;

HallElt hall_unit(const RepCategory& cat);
ExtHallElt ext_unit(const RepCategory& cat);

/// u_M ⋄ u_N = Σ_L |Ext¹(M,N)_L| / |Hom(M,N)| u_L.
HallElt product_untwisted(RepCategory& cat, const HallElt& x, const HallElt& y);
/// u_M u_N = v^⟨M,N⟩ u_M ⋄ u_N.
HallElt product_twisted(RepCategory& cat, const HallElt& x, const HallElt& y);
/// Twisted product extended by K_α K_β = K_{α+β}, K_α u_M = v^{(α,M)} u_M K_α.
ExtHallElt product_extended(RepCategory& cat, const ExtHallElt& x, const ExtHallElt& y);

/// The two sides of Green's formula for (M, N, M', N').
std::pair<Scalar, Scalar> green_sides(RepCategory& cat, const IsoClassId& m, const IsoClassId& n,
                                      const IsoClassId& m2, const IsoClassId& n2);

/// Componentwise minimum of two dimension vectors.
DimVector dim_min(const DimVector& a, const DimVector& b);

}  // namespace phall
