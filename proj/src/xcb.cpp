#include "phall/xcb.hpp"

#include <stdexcept>

namespace phall {

namespace {

int wrap(int i, int m) { return ((i % m) + m) % m; }

void require_odd(int m) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("odd period required");
}

}  // namespace

long long bracket_exponent(RepCategory& cat, const Graded& x, const Graded& y) {
  const int m = static_cast<int>(x.size());
  if (y.size() != x.size() || m < 1) throw std::invalid_argument("graded objects of different periods");
  long long e = 0;
  for (int i = 1; i <= m; ++i) {
    long long ei = 0;
    for (int j = 0; j < m; ++j) {
      const IsoClassId& a = x[wrap(j - i, m)];
      ei += cat.hom_dim(a, y[j]) + cat.ext1_dim(a, y[wrap(j + 1, m)]);
    }
    e += (i % 2 == 0) ? ei : -ei;
  }
  return e;
}

Scalar bracket(RepCategory& cat, const Graded& x, const Graded& y) {
  require_odd(static_cast<int>(x.size()));
  return Scalar(q_pow(cat.q(), bracket_exponent(cat, x, y)));
}

XuChen::XuChen(oracle::Oracle& oracle, OddPeriodicHallAlgebra& odd)
    : oracle_(oracle), odd_(odd), cat_(odd.category()), m_(odd.m()) {
  require_odd(m_);
}

Scalar XuChen::sqrt_bracket(const Graded& x, const Graded& y) { return v_pow(cat_.q(), bracket_exponent(cat_, x, y)); }

Scalar XuChen::curly_H(const Graded& x, const Graded& y, const Graded& l) {
  return odd_.product(x, y).coefficient(l);
}

Scalar XuChen::curly_H_direct(const Graded& x, const Graded& y, const Graded& l) {
  const std::uint64_t ext = oracle_.dm_cone_count(x, oracle::shift(y, 1), oracle::shift(l, 1));
  if (ext == 0) return Scalar(0);
  const Rational hom(oracle::dm_hom_count(cat_, x, y));
  return Scalar(Rational(ext) / hom) / sqrt_bracket(x, y);
}

Scalar XuChen::curly_F(const Graded& x, const Graded& y, const Graded& l) {
  const Scalar h = curly_H(x, y, l);
  if (h.is_zero()) return h;
  const Rational auts = Rational(oracle_.dm_aut_count(l)) / (Rational(oracle_.dm_aut_count(x)) * oracle_.dm_aut_count(y));
  return h * Scalar(auts) * sqrt_bracket(l, l) / (sqrt_bracket(x, x) * sqrt_bracket(y, y));
}

Scalar XuChen::curly_F_toen(const Graded& x, const Graded& y, const Graded& l) {
  const std::uint64_t n = oracle_.dm_cone_count(y, l, x);
  if (n == 0) return Scalar(0);
  return Scalar(Rational(n) / oracle_.dm_aut_count(y)) * sqrt_bracket(y, l) / sqrt_bracket(y, y);
}

Scalar XuChen::curly_F_toen_dual(const Graded& x, const Graded& y, const Graded& l) {
  const std::uint64_t n = oracle_.dm_cone_count(l, x, oracle::shift(y, 1));
  if (n == 0) return Scalar(0);
  return Scalar(Rational(n) / oracle_.dm_aut_count(x)) * sqrt_bracket(l, x) / sqrt_bracket(x, x);
}

Rational gamma(RepCategory& cat, const IsoClassId& a, const IsoClassId& b, const IsoClassId& m, const IsoClassId& n) {
  if (!fits_within(m.dim, a.dim) || !fits_within(n.dim, b.dim)) return 0;
  const DimVector di = dim_difference(a.dim, m.dim);
  if (dim_difference(b.dim, n.dim) != di) return 0;
  Rational s = 0;
  for (const IsoClassId& i : cat.enumerate_classes(di)) {
    const std::uint64_t g1 = cat.hall_number(a, i, m);
    if (g1 == 0) continue;
    s += Rational(cat.aut_order(i)) * g1 * cat.hall_number(b, n, i);
  }
  if (s == 0) return 0;
  return s * cat.aut_order(m) * cat.aut_order(n) / (Rational(cat.aut_order(a)) * cat.aut_order(b));
}

PeriodicElt phi_image(PeriodicHallAlgebra& alg, const BridgelandWord& w) {
  RepCategory& cat = alg.category();
  PeriodicElt r = alg.unit();
  for (const BridgelandGen& g : w) {
    if (const auto* e = std::get_if<EGen>(&g)) {
      const Scalar c = Scalar(Rational(1) / cat.aut_order(e->cls));
      r = alg.product(r, PeriodicElt::basis(alg.u(e->cls, e->degree), c));
    } else {
      const auto& k = std::get<KGen>(g);
      r = alg.product(r, PeriodicElt::basis(alg.k(k.alpha, k.degree)));
    }
  }
  return r;
}

PeriodicElt phi_image(PeriodicHallAlgebra& alg, const std::vector<std::pair<Scalar, BridgelandWord>>& combo) {
  PeriodicElt r;
  for (const auto& [c, w] : combo) r += phi_image(alg, w).scaled(c);
  return r;
}

namespace {

std::string e_label(const IsoClassId& a, int i) { return "e(" + a.label() + "," + std::to_string(i) + ")"; }
std::string k_label(const KClass& a, int i) { return "K(" + to_string(a) + "," + std::to_string(i) + ")"; }

}  // namespace

std::vector<RelationInstance> check_bridgeland_relations(PeriodicHallAlgebra& alg, const DimVector& bound,
                                                         const std::vector<KClass>& kappas) {
  RepCategory& cat = alg.category();
  const int m = alg.m();
  const int q = cat.q();
  if (m <= 2) throw std::invalid_argument("the presentation needs m > 2");
  std::vector<IsoClassId> gens;
  for (const IsoClassId& c : cat.classes_within(bound)) {
    if (!c.is_zero()) gens.push_back(c);
  }
  std::vector<RelationInstance> out;
  using Combo = std::vector<std::pair<Scalar, BridgelandWord>>;
  auto add = [&](const std::string& rel, const std::string& inst, const BridgelandWord& lhs, const Combo& rhs) {
    out.push_back({rel, inst, phi_image(alg, lhs), phi_image(alg, rhs)});
  };

  // (5.1)
  for (const KClass& a : kappas) {
    for (const KClass& b : kappas) {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          const std::string inst = k_label(a, i) + " " + k_label(b, j);
          if (i == j) {
            add("5.1", inst, {KGen{a, i}, KGen{b, j}}, {{Scalar(1), {KGen{a + b, i}}}});
            continue;
          }
          int e = 0;
          if (i == wrap(j + 1, m)) e = cat.symmetric_form(a, b);
          if (i == wrap(j - 1, m)) e = -cat.symmetric_form(a, b);
          add("5.1", inst, {KGen{a, i}, KGen{b, j}}, {{v_pow(q, e), {KGen{b, j}, KGen{a, i}}}});
        }
      }
    }
  }
  // (5.2)
  for (const KClass& a : kappas) {
    for (const IsoClassId& g : gens) {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          int e = 0;
          if (i == j) e = cat.symmetric_form(a, to_k(g.dim));
          if (i == wrap(j - 1, m)) e = -cat.symmetric_form(a, to_k(g.dim));
          add("5.2", k_label(a, i) + " " + e_label(g, j), {KGen{a, i}, EGen{g, j}},
              {{v_pow(q, e), {EGen{g, j}, KGen{a, i}}}});
        }
      }
    }
  }
  for (const IsoClassId& a : gens) {
    for (const IsoClassId& b : gens) {
      for (int i = 0; i < m; ++i) {
        // (5.3)
        Combo rhs3;
        for (const IsoClassId& mm : cat.enumerate_classes(a.dim + b.dim)) {
          const std::uint64_t g = cat.hall_number(mm, a, b);
          if (g == 0) continue;
          rhs3.push_back({v_pow(q, cat.euler_form(a, b)) * Scalar(static_cast<long long>(g)), {EGen{mm, i}}});
        }
        add("5.3", e_label(a, i) + " " + e_label(b, i), {EGen{a, i}, EGen{b, i}}, rhs3);

        // (5.4)
        const int i1 = wrap(i + 1, m);
        Combo rhs4;
        for (const IsoClassId& mm : cat.classes_within(a.dim)) {
          const DimVector di = dim_difference(a.dim, mm.dim);
          if (!fits_within(di, b.dim)) continue;
          for (const IsoClassId& nn : cat.enumerate_classes(dim_difference(b.dim, di))) {
            const Rational gm = gamma(cat, a, b, mm, nn);
            if (gm == 0) continue;
            const KClass ka = to_k(di);
            const int e = cat.euler_form(ka, to_k(mm.dim) - to_k(nn.dim));
            BridgelandWord w{KGen{ka, i}};
            if (!nn.is_zero()) w.push_back(EGen{nn, i});
            if (!mm.is_zero()) w.push_back(EGen{mm, i1});
            rhs4.push_back({v_pow(q, e) * Scalar(gm), w});
          }
        }
        add("5.4", e_label(a, i1) + " " + e_label(b, i), {EGen{a, i1}, EGen{b, i}}, rhs4);

        // (5.5)
        for (int j = 0; j < m; ++j) {
          const int d = wrap(i - j, m);
          if (d == 0 || d == 1 || d == m - 1) continue;
          add("5.5", e_label(a, i) + " " + e_label(b, j), {EGen{a, i}, EGen{b, j}},
              {{Scalar(1), {EGen{b, j}, EGen{a, i}}}});
        }
      }
    }
  }
  return out;
}

}  // namespace phall
