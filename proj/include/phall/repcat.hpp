#pragma once

#include "phall/ffla.hpp"
#include "phall/quiver.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <tuple>
#include <utility>
#include <vector>

namespace phall {

/// Matrix of f ↦ (f_t M_a − N_a f_s)_a from ⊕_v Hom(M_v, N_v) to
/// ⊕_a Hom(M_s, N_t). Variables are ordered by vertex, then row-major; the
/// equations by arrow, then row-major.
Matrix intertwiner_matrix(const Rep& m, const Rep& n, const Quiver& q, const FieldOrder& field);

/// Unpacks a variable vector of intertwiner_matrix into vertex components.
RepMorphism unpack_morphism(const std::vector<int>& x, const Rep& m, const Rep& n, const Quiver& q);

/// Representations of a fixed acyclic quiver over F_q, with memoized class
/// tables and counting functions. One instance is not safe for concurrent
/// use; independent instances are.
class RepCategory {
 public:
  RepCategory(Quiver quiver, int q, std::uint64_t budget = kDefaultBudget);

  const Quiver& quiver() const noexcept { return quiver_; }
  const FieldOrder& field() const noexcept { return field_; }
  int q() const noexcept { return field_.q(); }
  int n() const noexcept { return quiver_.vertex_count(); }
  std::uint64_t budget() const noexcept { return budget_; }

  IsoClassId zero() const { return IsoClassId::zero(n()); }
  DimVector zero_dim() const { return DimVector::zero(n()); }
  KClass zero_k() const { return KClass::zero(n()); }

  std::vector<IsoClassId> enumerate_classes(const DimVector& d);
  std::size_t class_count(const DimVector& d);
  /// Every class whose dimension vector is componentwise <= bound.
  std::vector<IsoClassId> classes_within(const DimVector& bound);
  /// The canonical (lexicographically minimal) representative.
  const Rep& representative(const IsoClassId& id);
  IsoClassId canonical_id(const Rep& r);
  /// Size of the GL(d)-orbit of the class.
  std::uint64_t orbit_size(const IsoClassId& id);

  int hom_dim(const IsoClassId& m, const IsoClassId& n);
  int ext1_dim(const IsoClassId& m, const IsoClassId& n);
  int euler_form(const KClass& a, const KClass& b) const;
  int symmetric_form(const KClass& a, const KClass& b) const;
  int euler_form(const IsoClassId& a, const IsoClassId& b) const { return euler_form(to_k(a.dim), to_k(b.dim)); }

  /// |Aut(M)| via orbit–stabilizer on the class table.
  std::uint64_t aut_order(const IsoClassId& m);
  /// |Aut(M)| by enumerating End(M) and counting invertible elements.
  std::uint64_t aut_order_enumerated(const IsoClassId& m);

  /// g^L_{M,N}: subrepresentations X ⊆ L with X ≅ N and L/X ≅ M.
  std::uint64_t hall_number(const IsoClassId& l, const IsoClassId& m, const IsoClassId& n);

  /// Representatives of Ext¹(M,N): each column is an element of
  /// ⊕_a Hom(M_s, N_t) laid out like the equations of intertwiner_matrix.
  const Matrix& ext_basis(const IsoClassId& m, const IsoClassId& n);
  /// Middle term of the extension with the given coordinates in ext_basis.
  IsoClassId ext_middle(const IsoClassId& m, const IsoClassId& n, const std::vector<int>& cocycle);
  /// |Ext¹(M,N)_L|.
  std::uint64_t ext_class_count(const IsoClassId& m, const IsoClassId& n, const IsoClassId& l);
  const std::map<IsoClassId, std::uint64_t>& ext_fibers(const IsoClassId& m, const IsoClassId& n);

  /// Middle term of 0 → N → L → M → 0 built from arrow blocks [[N_a, e_a], [0, M_a]].
  Rep extension_rep(const Rep& m, const Rep& n, const Matrix& cocycle) const;

 private:
  struct ClassTable {
    std::vector<std::uint32_t> class_of_code;
    std::vector<std::uint64_t> canonical_codes;
    std::vector<std::uint64_t> orbit_sizes;
    std::vector<Rep> representatives;
  };

  const ClassTable& table(const DimVector& d);
  std::uint64_t encode(const Rep& r) const;
  Rep decode(const DimVector& d, std::uint64_t code) const;
  using SubTally = std::map<std::pair<IsoClassId, IsoClassId>, std::uint64_t>;
  const SubTally& sub_tally(const IsoClassId& l, const DimVector& sub_dim);
  void hom_ext(const IsoClassId& m, const IsoClassId& n, int& hom, int& ext);

  Quiver quiver_;
  FieldOrder field_;
  std::uint64_t budget_;
  std::map<DimVector, std::unique_ptr<ClassTable>> tables_;
  std::map<std::pair<IsoClassId, IsoClassId>, std::pair<int, int>> hom_ext_;
  std::map<IsoClassId, std::uint64_t> aut_;
  std::map<std::pair<IsoClassId, DimVector>, SubTally> sub_tallies_;
  std::map<std::pair<IsoClassId, IsoClassId>, Matrix> ext_bases_;
  std::map<std::pair<IsoClassId, IsoClassId>, std::map<IsoClassId, std::uint64_t>> ext_fibers_;
};

}  // namespace phall
