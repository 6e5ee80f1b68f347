#pragma once

#include "phall/derived.hpp"
#include "phall/repcat.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace phall::oracle {

using phall::Graded;

/// A complex of projective representations, stored on a cycle of `slots`
/// terms; d[k] maps term k to term k+1 (mod slots).
///
/// Periodic complexes use slots = m and slot k holds degree k mod m.
/// Bounded complexes sit in a frame of slots degrees starting at `lowest`,
/// padded with zero terms at both ends so the wrap-around map is zero.
struct ProjComplex {
  bool periodic = false;
  int lowest = 0;
  std::vector<Rep> terms;
  std::vector<RepMorphism> d;

  int slots() const { return static_cast<int>(terms.size()); }
  int degree_of_slot(int k) const { return lowest + k; }
};

/// ⊕ P_{g} for the listed vertices, realized on paths.
Rep projective_rep(const Quiver& q, const std::vector<int>& generators);

/// Minimal projective resolution of M as a bounded complex in degrees -1, 0.
ProjComplex proj_resolution(RepCategory& cat, const IsoClassId& m);

/// ⊕_i M_i[i] realized on resolutions, in a frame covering degrees [lo, hi].
ProjComplex bounded_complex(RepCategory& cat, const StalkSum& x, int lo, int hi);
/// ⊕_i M_i[i] as an m-periodic complex of projectives.
ProjComplex periodic_complex(RepCategory& cat, const Graded& x);

bool is_complex(const ProjComplex& c, const FieldOrder& field);
/// Homology class at every slot.
std::vector<IsoClassId> homology(RepCategory& cat, const ProjComplex& c);

/// Homotopy classes of chain maps X → Y: a basis of chain maps modulo
/// null-homotopic ones, as flat vectors over the per-slot, per-vertex
/// component layout.
struct HomotopyHom {
  std::size_t chain_dim = 0;
  std::size_t null_dim = 0;
  Matrix complement;  // columns: representatives of a basis of the quotient
};
HomotopyHom homotopy_hom(const ProjComplex& x, const ProjComplex& y, const Quiver& q, const FieldOrder& field);

/// Cone of the chain map with flat component vector f.
ProjComplex cone(const ProjComplex& x, const ProjComplex& y, const std::vector<int>& f, const Quiver& q,
                 const FieldOrder& field);

/// Brute-force counting in D^b(A) and in the m-periodic category.
class Oracle {
 public:
  explicit Oracle(RepCategory& cat) : cat_(cat) {}
  RepCategory& category() noexcept { return cat_; }

  /// Number of morphisms X → Y in D^b, by cone class.
  const std::map<StalkSum, std::uint64_t>& db_cone_tally(const StalkSum& x, const StalkSum& y);
  std::uint64_t db_cone_count(const StalkSum& x, const StalkSum& y, const StalkSum& z);
  std::uint64_t db_hom_count(const StalkSum& x, const StalkSum& y);
  std::uint64_t db_aut_count(const StalkSum& x);

  const std::map<Graded, std::uint64_t>& dm_cone_tally(const Graded& x, const Graded& y);
  std::uint64_t dm_cone_count(const Graded& x, const Graded& y, const Graded& z);
  /// |Hom| by enumeration of chain maps modulo homotopy.
  std::uint64_t dm_hom_count_enumerated(const Graded& x, const Graded& y);
  std::uint64_t dm_aut_count(const Graded& x);

 private:
  RepCategory& cat_;
  std::map<std::pair<StalkSum, StalkSum>, std::map<StalkSum, std::uint64_t>> db_;
  std::map<std::pair<Graded, Graded>, std::map<Graded, std::uint64_t>> dm_;
};

/// |Hom_{D_m}(⊕A_i[i], ⊕B_i[i])| = ∏_i |Hom(A_i,B_i)| |Ext¹(A_i,B_{i+1})|.
std::uint64_t dm_hom_count(RepCategory& cat, const Graded& x, const Graded& y);

/// Shift X[k]: the summand A_i[i] moves to shift i + k.
Graded shift(const Graded& x, int k);
Graded zero_graded(const RepCategory& cat, int m);
std::string graded_label(const Graded& x);

}  // namespace phall::oracle
