#include "phall/hall.hpp"

#include <algorithm>

namespace phall {

HallElt hall_unit(const RepCategory& cat) { return HallElt::basis(cat.zero()); }

ExtHallElt ext_unit(const RepCategory& cat) { return ExtHallElt::basis({cat.zero(), cat.zero_k()}); }

DimVector dim_min(const DimVector& a, const DimVector& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(a[i], b[i]);
  return DimVector(std::move(c));
}

namespace {

HallElt basis_product(RepCategory& cat, const IsoClassId& m, const IsoClassId& n, bool twisted) {
  HallElt out;
  Scalar scale = Scalar(q_pow(cat.q(), -cat.hom_dim(m, n)));
  if (twisted) scale *= v_pow(cat.q(), cat.euler_form(m, n));
  for (const auto& [l, count] : cat.ext_fibers(m, n)) out.add_term(l, scale * Scalar(static_cast<long long>(count)));
  return out;
}

HallElt bilinear(RepCategory& cat, const HallElt& x, const HallElt& y, bool twisted) {
  HallElt out;
  for (const auto& [m, a] : x.terms()) {
    for (const auto& [n, b] : y.terms()) out += basis_product(cat, m, n, twisted).scaled(a * b);
  }
  return out;
}

}  // namespace

HallElt product_untwisted(RepCategory& cat, const HallElt& x, const HallElt& y) { return bilinear(cat, x, y, false); }

HallElt product_twisted(RepCategory& cat, const HallElt& x, const HallElt& y) { return bilinear(cat, x, y, true); }

ExtHallElt product_extended(RepCategory& cat, const ExtHallElt& x, const ExtHallElt& y) {
  ExtHallElt out;
  for (const auto& [bx, a] : x.terms()) {
    for (const auto& [by, b] : y.terms()) {
      // u_M K_α u_N K_β = v^{(α,N)} (u_M u_N) K_{α+β}
      Scalar c = a * b * v_pow(cat.q(), cat.symmetric_form(bx.kappa, to_k(by.cls.dim)));
      KClass kappa = bx.kappa + by.kappa;
      const auto product_terms = basis_product(cat, bx.cls, by.cls, true);
      for (const auto& [l, s] : product_terms.terms()) out.add_term({l, kappa}, c * s);
    }
  }
  return out;
}

std::pair<Scalar, Scalar> green_sides(RepCategory& cat, const IsoClassId& m, const IsoClassId& n,
                                      const IsoClassId& m2, const IsoClassId& n2) {
  auto a = [&](const IsoClassId& x) { return Rational(cat.aut_order(x)); };
  auto g = [&](const IsoClassId& l, const IsoClassId& x, const IsoClassId& y) { return Rational(cat.hall_number(l, x, y)); };

  Rational lhs = 0;
  if (m.dim + n.dim == m2.dim + n2.dim) {
    for (const IsoClassId& l : cat.enumerate_classes(m.dim + n.dim)) {
      Rational gg = g(l, m, n) * g(l, m2, n2);
      if (gg != 0) lhs += gg / a(l);
    }
    lhs *= a(m) * a(n) * a(m2) * a(n2);
  }

  Rational rhs = 0;
  for (const IsoClassId& ca : cat.classes_within(dim_min(m.dim, m2.dim))) {
    DimVector da2 = dim_difference(m.dim, ca.dim);
    DimVector db = dim_difference(m2.dim, ca.dim);
    if (!fits_within(db, n.dim) || !fits_within(da2, n2.dim)) continue;
    DimVector db2 = dim_difference(n.dim, db);
    if (da2 + db2 != n2.dim) continue;
    for (const IsoClassId& ca2 : cat.enumerate_classes(da2)) {
      Rational g1 = g(m, ca, ca2);
      if (g1 == 0) continue;
      for (const IsoClassId& cb : cat.enumerate_classes(db)) {
        Rational g3 = g(m2, ca, cb);
        if (g3 == 0) continue;
        for (const IsoClassId& cb2 : cat.enumerate_classes(db2)) {
          Rational term = g1 * g3 * g(n, cb, cb2) * g(n2, ca2, cb2);
          if (term == 0) continue;
          term *= a(ca) * a(ca2) * a(cb) * a(cb2) * q_pow(cat.q(), -cat.euler_form(ca, cb2));
          rhs += term;
        }
      }
    }
  }
  return {Scalar(lhs), Scalar(rhs)};
}

}  // namespace phall
