#pragma once

#include "phall/ffla.hpp"

#include <compare>
#include <string>
#include <vector>

namespace phall {

struct Arrow {
  int source = 0;
  int target = 0;
  auto operator<=>(const Arrow&) const = default;
};

/// A finite quiver without oriented cycles; vertices are 0..n-1.
class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  static Quiver a1() { return Quiver(1, {}); }
  /// Two vertices with one arrow 0 -> 1.
  static Quiver a2() { return Quiver(2, {{0, 1}}); }
  /// "A1", "A2", "1->2", or "n:s-t,s-t,..." with 0-based vertices.
  static Quiver parse(const std::string& text);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  /// Every path as a list of arrow indices, grouped by source vertex; the
  /// trivial path at each vertex comes first.
  const std::vector<std::vector<int>>& paths_from(int vertex) const { return paths_[vertex]; }
  int path_target(int source, const std::vector<int>& path) const;
  std::string name() const;

  bool operator==(const Quiver& o) const { return n_ == o.n_ && arrows_ == o.arrows_; }

 private:
  int n_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::vector<int>>> paths_;
};

/// Integer vector indexed by vertices; the tag separates dimension vectors
/// from general Grothendieck classes.
template <class Tag>
class VertexVector {
 public:
  VertexVector() = default;
  explicit VertexVector(std::vector<int> c) : c_(std::move(c)) { Tag::check(c_); }
  static VertexVector zero(int n) { return VertexVector(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int operator[](std::size_t i) const { return c_[i]; }
  std::size_t size() const noexcept { return c_.size(); }
  const std::vector<int>& values() const noexcept { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  int total() const {
    int s = 0;
    for (int x : c_) s += x;
    return s;
  }
  bool is_zero() const {
    for (int x : c_) {
      if (x != 0) return false;
    }
    return true;
  }

  auto operator<=>(const VertexVector&) const = default;

 private:
  std::vector<int> c_;
};

struct DimTag {
  static void check(const std::vector<int>& c);
};
struct KTag {
  static void check(const std::vector<int>&) {}
};

using DimVector = VertexVector<DimTag>;
using KClass = VertexVector<KTag>;

KClass to_k(const DimVector& d);
KClass operator+(const KClass& a, const KClass& b);
KClass operator-(const KClass& a, const KClass& b);
KClass operator-(const KClass& a);
DimVector operator+(const DimVector& a, const DimVector& b);
/// Componentwise a <= b.
bool fits_within(const DimVector& a, const DimVector& b);
/// b - a when a fits within b.
DimVector dim_difference(const DimVector& b, const DimVector& a);
std::string to_string(const DimVector& d);
std::string to_string(const KClass& k);

/// All dimension vectors componentwise <= bound, in lexicographic order.
std::vector<DimVector> dims_within(const DimVector& bound);

/// Iso class: dimension vector plus index into the class list of that vector.
struct IsoClassId {
  DimVector dim;
  std::uint32_t index = 0;

  static IsoClassId zero(int n) { return {DimVector::zero(n), 0}; }
  bool is_zero() const { return dim.is_zero(); }
  /// "d(1,1)#0".
  std::string label() const;
  static IsoClassId parse_label(const std::string& text, int n);

  auto operator<=>(const IsoClassId&) const = default;
};

/// A representation: one space per vertex, one matrix per arrow
/// (shape target-dim × source-dim).
struct Rep {
  DimVector dim;
  std::vector<Matrix> arrows;

  static Rep zero(const Quiver& q);
  void validate(const Quiver& q) const;
  auto operator<=>(const Rep&) const = default;
};

/// Vertexwise linear maps.
struct RepMorphism {
  std::vector<Matrix> components;
};

Rep direct_sum(const Rep& x, const Rep& y, const Quiver& q);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f, const FieldOrder& field);
bool is_morphism(const RepMorphism& f, const Rep& x, const Rep& y, const Quiver& q, const FieldOrder& field);
bool is_isomorphism(const RepMorphism& f, const FieldOrder& field);

/// W/U where U ⊆ W are subrepresentations of R, each given per vertex by a
/// matrix whose columns are a basis (U's columns lie in the span of W's).
Rep subquotient(const Rep& r, const std::vector<Matrix>& u, const std::vector<Matrix>& w, const Quiver& q,
                const FieldOrder& field);

/// Linear map along a path (product of arrow matrices).
Matrix path_matrix(const Rep& r, const std::vector<int>& path, int source, const FieldOrder& field);

}  // namespace phall
