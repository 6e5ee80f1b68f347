#include "phall/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace phall::oracle {

namespace {

/// ⊕ P_g with its path basis: basis[v] lists (summand, path index) pairs.
struct Projective {
  std::vector<int> generators;
  Rep rep;
  std::vector<std::vector<std::pair<int, int>>> basis;
};

Projective build_projective(const Quiver& q, const std::vector<int>& generators) {
  const int n = q.vertex_count();
  Projective p{generators, {}, std::vector<std::vector<std::pair<int, int>>>(static_cast<std::size_t>(n))};
  std::vector<std::vector<int>> position(generators.size());
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& paths = q.paths_from(generators[k]);
    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
      int v = q.path_target(generators[k], paths[pi]);
      position[k].push_back(static_cast<int>(p.basis[v].size()));
      p.basis[v].emplace_back(static_cast<int>(k), static_cast<int>(pi));
    }
  }
  std::vector<int> dims(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) dims[v] = static_cast<int>(p.basis[v].size());
  p.rep.dim = DimVector(dims);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    Matrix m(static_cast<std::size_t>(dims[ar.target]), static_cast<std::size_t>(dims[ar.source]));
    for (std::size_t col = 0; col < p.basis[ar.source].size(); ++col) {
      auto [k, pi] = p.basis[ar.source][col];
      std::vector<int> extended = q.paths_from(generators[k])[pi];
      extended.push_back(static_cast<int>(a));
      const auto& paths = q.paths_from(generators[k]);
      auto it = std::find(paths.begin(), paths.end(), extended);
      m(static_cast<std::size_t>(position[k][static_cast<std::size_t>(it - paths.begin())]), col) = 1;
    }
    p.rep.arrows.push_back(std::move(m));
  }
  return p;
}

/// The morphism P → R sending the k-th generator to images[k] ∈ R_{g_k}.
RepMorphism from_projective(const Projective& p, const Rep& r, const std::vector<Matrix>& images, const Quiver& q,
                            const FieldOrder& field) {
  RepMorphism f;
  for (int v = 0; v < q.vertex_count(); ++v) {
    Matrix c(static_cast<std::size_t>(r.dim[v]), p.basis[v].size());
    for (std::size_t col = 0; col < p.basis[v].size(); ++col) {
      auto [k, pi] = p.basis[v][col];
      int g = p.generators[k];
      Matrix image = multiply(path_matrix(r, q.paths_from(g)[pi], g, field), images[k], field);
      for (std::size_t row = 0; row < c.rows; ++row) c(row, col) = image(row, 0);
    }
    f.components.push_back(std::move(c));
  }
  return f;
}

/// Projective cover P → R generated by a basis of the top of R.
std::pair<Projective, RepMorphism> projective_cover(const Rep& r, const Quiver& q, const FieldOrder& field) {
  std::vector<int> generators;
  std::vector<Matrix> images;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const std::size_t dv = static_cast<std::size_t>(r.dim[v]);
    Matrix radical(dv, 0);
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      if (q.arrows()[a].target == v) radical = hstack(radical, r.arrows[a]);
    }
    Matrix top = complement_basis(image_basis(radical, field), dv, field);
    for (std::size_t j = 0; j < top.cols; ++j) {
      generators.push_back(v);
      images.push_back(column_slice(top, j, 1));
    }
  }
  Projective p = build_projective(q, generators);
  RepMorphism pi = from_projective(p, r, images, q, field);
  return {std::move(p), std::move(pi)};
}

struct TwoTerm {
  Rep p1;
  Rep p0;
  RepMorphism d;
};

TwoTerm resolve(RepCategory& cat, const IsoClassId& m) {
  const Quiver& q = cat.quiver();
  const FieldOrder& field = cat.field();
  const Rep& r = cat.representative(m);
  auto [p0, pi] = projective_cover(r, q, field);
  std::vector<Matrix> kernel;
  for (int v = 0; v < q.vertex_count(); ++v) kernel.push_back(kernel_basis(pi.components[v], field));
  std::vector<int> kdims;
  for (const Matrix& k : kernel) kdims.push_back(static_cast<int>(k.cols));
  Rep k_rep{DimVector(kdims), {}};
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    k_rep.arrows.push_back(coordinates_in(kernel[ar.target], multiply(p0.rep.arrows[a], kernel[ar.source], field), field));
  }
  auto [p1, sigma] = projective_cover(k_rep, q, field);
  RepMorphism d;
  for (int v = 0; v < q.vertex_count(); ++v) d.components.push_back(multiply(kernel[v], sigma.components[v], field));
  return {p1.rep, p0.rep, d};
}

int mod(int a, int m) { return ((a % m) + m) % m; }

/// Assembles resolutions of the given stalks; slot_of maps a degree to its slot.
template <class SlotOf>
ProjComplex assemble(RepCategory& cat, const std::vector<std::pair<int, IsoClassId>>& stalks, int slots,
                     SlotOf slot_of) {
  const Quiver& q = cat.quiver();
  const int n = q.vertex_count();
  struct Block {
    const Rep* rep;
    int slot;
    std::vector<int> offset;
  };
  std::vector<TwoTerm> res;
  for (const auto& s : stalks) res.push_back(resolve(cat, s.second));
  std::vector<Block> p1_blocks;
  std::vector<Block> p0_blocks;
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(slots), std::vector<int>(static_cast<std::size_t>(n), 0));
  ProjComplex c;
  c.terms.assign(static_cast<std::size_t>(slots), Rep::zero(q));
  auto place = [&](const Rep& rep, int slot) {
    Block b{&rep, slot, fill[slot]};
    c.terms[slot] = direct_sum(c.terms[slot], rep, q);
    for (int v = 0; v < n; ++v) fill[slot][v] += rep.dim[v];
    return b;
  };
  for (std::size_t i = 0; i < stalks.size(); ++i) {
    const int shift = stalks[i].first;
    p1_blocks.push_back(place(res[i].p1, slot_of(-shift - 1)));
    p0_blocks.push_back(place(res[i].p0, slot_of(-shift)));
  }
  for (int k = 0; k < slots; ++k) {
    const int next = (k + 1) % slots;
    RepMorphism d;
    for (int v = 0; v < n; ++v) {
      d.components.emplace_back(static_cast<std::size_t>(c.terms[next].dim[v]), static_cast<std::size_t>(c.terms[k].dim[v]));
    }
    for (std::size_t i = 0; i < stalks.size(); ++i) {
      if (p1_blocks[i].slot != k) continue;
      for (int v = 0; v < n; ++v) {
        const Matrix& block = res[i].d.components[v];
        for (std::size_t r = 0; r < block.rows; ++r) {
          for (std::size_t col = 0; col < block.cols; ++col) {
            d.components[v](static_cast<std::size_t>(p0_blocks[i].offset[v]) + r,
                            static_cast<std::size_t>(p1_blocks[i].offset[v]) + col) = block(r, col);
          }
        }
      }
    }
    c.d.push_back(std::move(d));
  }
  return c;
}

/// Flat layout of the per-slot, per-vertex blocks Mat(Y^k_v × X^k_v).
struct Layout {
  std::vector<std::vector<std::size_t>> offset;
  std::size_t size = 0;
};

Layout chain_layout(const ProjComplex& x, const ProjComplex& y, int n, int shift = 0) {
  Layout l;
  const int p = x.slots();
  for (int k = 0; k < p; ++k) {
    std::vector<std::size_t> row;
    const Rep& yk = y.terms[mod(k + shift, p)];
    for (int v = 0; v < n; ++v) {
      row.push_back(l.size);
      l.size += static_cast<std::size_t>(yk.dim[v] * x.terms[k].dim[v]);
    }
    l.offset.push_back(std::move(row));
  }
  return l;
}

Matrix block_of(const std::vector<int>& flat, std::size_t offset, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  std::copy(flat.begin() + static_cast<std::ptrdiff_t>(offset),
            flat.begin() + static_cast<std::ptrdiff_t>(offset + rows * cols), m.entries.begin());
  return m;
}

}  // namespace

Rep projective_rep(const Quiver& q, const std::vector<int>& generators) { return build_projective(q, generators).rep; }

ProjComplex proj_resolution(RepCategory& cat, const IsoClassId& m) {
  return bounded_complex(cat, StalkSum::stalk(m, 0), -1, 0);
}

ProjComplex bounded_complex(RepCategory& cat, const StalkSum& x, int lo, int hi) {
  std::vector<std::pair<int, IsoClassId>> stalks(x.summands().begin(), x.summands().end());
  for (const auto& [shift, m] : stalks) {
    if (-shift - 1 < lo || -shift > hi) throw std::invalid_argument("stalk outside the complex frame");
  }
  ProjComplex c = assemble(cat, stalks, hi - lo + 1, [lo](int degree) { return degree - lo; });
  c.periodic = false;
  c.lowest = lo;
  return c;
}

ProjComplex periodic_complex(RepCategory& cat, const Graded& x) {
  const int m = static_cast<int>(x.size());
  if (m < 1) throw std::invalid_argument("period must be positive");
  std::vector<std::pair<int, IsoClassId>> stalks;
  for (int i = 0; i < m; ++i) {
    if (!x[i].is_zero()) stalks.emplace_back(i, x[i]);
  }
  ProjComplex c = assemble(cat, stalks, m, [m](int degree) { return mod(degree, m); });
  c.periodic = true;
  return c;
}

bool is_complex(const ProjComplex& c, const FieldOrder& field) {
  const int p = c.slots();
  for (int k = 0; k < p; ++k) {
    const RepMorphism dd = compose(c.d[(k + 1) % p], c.d[k], field);
    for (const Matrix& m : dd.components) {
      if (!m.is_zero()) return false;
    }
  }
  return true;
}

std::vector<IsoClassId> homology(RepCategory& cat, const ProjComplex& c) {
  const FieldOrder& field = cat.field();
  const int p = c.slots();
  std::vector<IsoClassId> out;
  for (int k = 0; k < p; ++k) {
    const int prev = mod(k - 1, p);
    std::vector<Matrix> cycles;
    std::vector<Matrix> boundaries;
    for (int v = 0; v < cat.n(); ++v) {
      cycles.push_back(kernel_basis(c.d[k].components[v], field));
      boundaries.push_back(image_basis(c.d[prev].components[v], field));
    }
    out.push_back(cat.canonical_id(subquotient(c.terms[k], boundaries, cycles, cat.quiver(), field)));
  }
  return out;
}

HomotopyHom homotopy_hom(const ProjComplex& x, const ProjComplex& y, const Quiver& q, const FieldOrder& field) {
  const int p = x.slots();
  const int n = q.vertex_count();
  const Layout lay = chain_layout(x, y, n);

  // Equations: intertwiner condition per slot and arrow, then the chain
  // condition d_Y f^k = f^{k+1} d_X per slot and vertex.
  std::vector<std::vector<std::pair<std::size_t, int>>> rows;
  for (int k = 0; k < p; ++k) {
    const Rep& xk = x.terms[k];
    const Rep& yk = y.terms[k];
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const Arrow& ar = q.arrows()[a];
      const std::size_t yt = static_cast<std::size_t>(yk.dim[ar.target]);
      const std::size_t xs = static_cast<std::size_t>(xk.dim[ar.source]);
      const std::size_t xt = static_cast<std::size_t>(xk.dim[ar.target]);
      const std::size_t ys = static_cast<std::size_t>(yk.dim[ar.source]);
      for (std::size_t r = 0; r < yt; ++r) {
        for (std::size_t col = 0; col < xs; ++col) {
          std::vector<std::pair<std::size_t, int>> eq;
          for (std::size_t j = 0; j < xt; ++j) {
            int coef = xk.arrows[a](j, col);
            if (coef) eq.emplace_back(lay.offset[k][ar.target] + r * xt + j, coef);
          }
          for (std::size_t j = 0; j < ys; ++j) {
            int coef = yk.arrows[a](r, j);
            if (coef) eq.emplace_back(lay.offset[k][ar.source] + j * xs + col, field.neg(coef));
          }
          rows.push_back(std::move(eq));
        }
      }
    }
    const int next = (k + 1) % p;
    for (int v = 0; v < n; ++v) {
      const Matrix& dy = y.d[k].components[v];  // Y^k_v → Y^{k+1}_v
      const Matrix& dx = x.d[k].components[v];  // X^k_v → X^{k+1}_v
      const std::size_t xkv = static_cast<std::size_t>(x.terms[k].dim[v]);
      const std::size_t xnv = static_cast<std::size_t>(x.terms[next].dim[v]);
      const std::size_t ykv = static_cast<std::size_t>(y.terms[k].dim[v]);
      const std::size_t ynv = static_cast<std::size_t>(y.terms[next].dim[v]);
      for (std::size_t r = 0; r < ynv; ++r) {
        for (std::size_t col = 0; col < xkv; ++col) {
          std::vector<std::pair<std::size_t, int>> eq;
          for (std::size_t j = 0; j < ykv; ++j) {
            if (dy(r, j)) eq.emplace_back(lay.offset[k][v] + j * xkv + col, dy(r, j));
          }
          for (std::size_t j = 0; j < xnv; ++j) {
            if (dx(j, col)) eq.emplace_back(lay.offset[next][v] + r * xnv + j, field.neg(dx(j, col)));
          }
          rows.push_back(std::move(eq));
        }
      }
    }
  }
  Matrix system(rows.size(), lay.size);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [col, coef] : rows[r]) system(r, col) = field.add(system(r, col), coef);
  }
  Matrix chains = kernel_basis(system, field);

  // Null-homotopic maps: h^k : X^k → Y^{k-1} contributes d_Y h^k to f^k and
  // h^k d_X to f^{k-1}.
  Matrix nulls(lay.size, 0);
  for (int k = 0; k < p; ++k) {
    const int prev = mod(k - 1, p);
    const Rep& xk = x.terms[k];
    const Rep& yp = y.terms[prev];
    Matrix hb = kernel_basis(intertwiner_matrix(xk, yp, q, field), field);
    for (std::size_t b = 0; b < hb.cols; ++b) {
      std::vector<int> hflat(hb.rows);
      for (std::size_t r = 0; r < hb.rows; ++r) hflat[r] = hb(r, b);
      RepMorphism h = unpack_morphism(hflat, xk, yp, q);
      Matrix col(lay.size, 1);
      for (int v = 0; v < n; ++v) {
        Matrix fk = multiply(y.d[prev].components[v], h.components[v], field);
        for (std::size_t i = 0; i < fk.entries.size(); ++i) {
          std::size_t pos = lay.offset[k][v] + i;
          col(pos, 0) = field.add(col(pos, 0), fk.entries[i]);
        }
        Matrix fp = multiply(h.components[v], x.d[prev].components[v], field);
        for (std::size_t i = 0; i < fp.entries.size(); ++i) {
          std::size_t pos = lay.offset[prev][v] + i;
          col(pos, 0) = field.add(col(pos, 0), fp.entries[i]);
        }
      }
      nulls = hstack(nulls, col);
    }
  }

  HomotopyHom out;
  out.chain_dim = chains.cols;
  RowEchelon e = rref(hstack(nulls, chains), field);
  std::vector<std::size_t> picked;
  std::size_t null_rank = 0;
  for (std::size_t piv : e.pivots) {
    if (piv < nulls.cols) {
      ++null_rank;
    } else {
      picked.push_back(piv - nulls.cols);
    }
  }
  out.null_dim = null_rank;
  if (null_rank + picked.size() != chains.cols) throw std::logic_error("null-homotopic maps are not chain maps");
  out.complement = Matrix(lay.size, picked.size());
  for (std::size_t j = 0; j < picked.size(); ++j) {
    for (std::size_t r = 0; r < lay.size; ++r) out.complement(r, j) = chains(r, picked[j]);
  }
  return out;
}

ProjComplex cone(const ProjComplex& x, const ProjComplex& y, const std::vector<int>& f, const Quiver& q,
                 const FieldOrder& field) {
  const int p = x.slots();
  const int n = q.vertex_count();
  const Layout lay = chain_layout(x, y, n);
  ProjComplex c;
  c.periodic = x.periodic;
  c.lowest = x.lowest;
  for (int k = 0; k < p; ++k) c.terms.push_back(direct_sum(x.terms[(k + 1) % p], y.terms[k], q));
  for (int k = 0; k < p; ++k) {
    const int k1 = (k + 1) % p;
    const int k2 = (k + 2) % p;
    RepMorphism d;
    for (int v = 0; v < n; ++v) {
      const std::size_t x1 = static_cast<std::size_t>(x.terms[k1].dim[v]);
      const std::size_t x2 = static_cast<std::size_t>(x.terms[k2].dim[v]);
      const std::size_t y0 = static_cast<std::size_t>(y.terms[k].dim[v]);
      const std::size_t y1 = static_cast<std::size_t>(y.terms[k1].dim[v]);
      Matrix m(x2 + y1, x1 + y0);
      const Matrix& dx = x.d[k1].components[v];
      const Matrix& dy = y.d[k].components[v];
      const Matrix fk = block_of(f, lay.offset[k1][v], y1, x1);
      for (std::size_t r = 0; r < x2; ++r) {
        for (std::size_t col = 0; col < x1; ++col) m(r, col) = field.neg(dx(r, col));
      }
      for (std::size_t r = 0; r < y1; ++r) {
        for (std::size_t col = 0; col < x1; ++col) m(x2 + r, col) = fk(r, col);
        for (std::size_t col = 0; col < y0; ++col) m(x2 + r, x1 + col) = dy(r, col);
      }
      d.components.push_back(std::move(m));
    }
    c.d.push_back(std::move(d));
  }
  return c;
}

namespace {

template <class Visit>
std::uint64_t for_each_morphism(RepCategory& cat, const ProjComplex& x, const ProjComplex& y, Visit visit) {
  const FieldOrder& field = cat.field();
  HomotopyHom hom = homotopy_hom(x, y, cat.quiver(), field);
  std::uint64_t count = 0;
  for (const Matrix& coeffs : enumerate_matrices(hom.complement.cols, 1, field, cat.budget())) {
    Matrix f = multiply(hom.complement, coeffs, field);
    visit(cone(x, y, f.entries, cat.quiver(), field));
    ++count;
  }
  return count;
}

void degree_range(const StalkSum& x, int& lo, int& hi) {
  for (const auto& [shift, m] : x.summands()) {
    lo = std::min(lo, -shift - 1);
    hi = std::max(hi, -shift);
  }
}

}  // namespace

const std::map<StalkSum, std::uint64_t>& Oracle::db_cone_tally(const StalkSum& x, const StalkSum& y) {
  auto key = std::make_pair(x, y);
  auto it = db_.find(key);
  if (it != db_.end()) return it->second;
  int xlo = 0, xhi = 0, ylo = 0, yhi = 0;
  degree_range(x, xlo, xhi);
  degree_range(y, ylo, yhi);
  const int lo = std::min(xlo - 1, ylo) - 1;
  const int hi = std::max(xhi, yhi) + 1;
  ProjComplex cx = bounded_complex(cat_, x, lo, hi);
  ProjComplex cy = bounded_complex(cat_, y, lo, hi);
  std::map<StalkSum, std::uint64_t> tally;
  for_each_morphism(cat_, cx, cy, [&](const ProjComplex& c) {
    std::vector<IsoClassId> h = homology(cat_, c);
    StalkSum z;
    for (int k = 0; k < c.slots(); ++k) z.set(-c.degree_of_slot(k), h[k]);
    ++tally[z];
  });
  return db_.emplace(key, std::move(tally)).first->second;
}

std::uint64_t Oracle::db_cone_count(const StalkSum& x, const StalkSum& y, const StalkSum& z) {
  const auto& t = db_cone_tally(x, y);
  auto it = t.find(z);
  return it == t.end() ? 0 : it->second;
}

std::uint64_t Oracle::db_hom_count(const StalkSum& x, const StalkSum& y) {
  std::uint64_t s = 0;
  for (const auto& [z, c] : db_cone_tally(x, y)) s += c;
  return s;
}

std::uint64_t Oracle::db_aut_count(const StalkSum& x) { return db_cone_count(x, x, StalkSum()); }

const std::map<Graded, std::uint64_t>& Oracle::dm_cone_tally(const Graded& x, const Graded& y) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("graded objects of different periods");
  auto key = std::make_pair(x, y);
  auto it = dm_.find(key);
  if (it != dm_.end()) return it->second;
  const int m = static_cast<int>(x.size());
  ProjComplex cx = periodic_complex(cat_, x);
  ProjComplex cy = periodic_complex(cat_, y);
  std::map<Graded, std::uint64_t> tally;
  for_each_morphism(cat_, cx, cy, [&](const ProjComplex& c) {
    std::vector<IsoClassId> h = homology(cat_, c);
    Graded z(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) z[mod(-k, m)] = h[k];
    ++tally[z];
  });
  return dm_.emplace(key, std::move(tally)).first->second;
}

std::uint64_t Oracle::dm_cone_count(const Graded& x, const Graded& y, const Graded& z) {
  const auto& t = dm_cone_tally(x, y);
  auto it = t.find(z);
  return it == t.end() ? 0 : it->second;
}

std::uint64_t Oracle::dm_hom_count_enumerated(const Graded& x, const Graded& y) {
  ProjComplex cx = periodic_complex(cat_, x);
  ProjComplex cy = periodic_complex(cat_, y);
  HomotopyHom h = homotopy_hom(cx, cy, cat_.quiver(), cat_.field());
  return checked_pow(static_cast<std::uint64_t>(cat_.q()), h.complement.cols);
}

std::uint64_t Oracle::dm_aut_count(const Graded& x) {
  return dm_cone_count(x, x, zero_graded(cat_, static_cast<int>(x.size())));
}

std::uint64_t dm_hom_count(RepCategory& cat, const Graded& x, const Graded& y) {
  const int m = static_cast<int>(x.size());
  if (m < 1 || y.size() != x.size()) throw std::invalid_argument("graded objects of different periods");
  std::uint64_t e = 0;
  for (int i = 0; i < m; ++i) {
    e += static_cast<std::uint64_t>(cat.hom_dim(x[i], y[i]));
    e += static_cast<std::uint64_t>(cat.ext1_dim(x[i], y[(i + 1) % m]));
  }
  return checked_pow(static_cast<std::uint64_t>(cat.q()), e);
}

Graded shift(const Graded& x, int k) {
  const int m = static_cast<int>(x.size());
  Graded r(x.size());
  for (int i = 0; i < m; ++i) r[mod(i + k, m)] = x[i];
  return r;
}

Graded zero_graded(const RepCategory& cat, int m) { return Graded(static_cast<std::size_t>(m), cat.zero()); }

std::string graded_label(const Graded& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += x[i].label();
  }
  return s + ")";
}

}  // namespace phall::oracle
