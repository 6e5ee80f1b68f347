#pragma once

#include "phall/hall.hpp"
#include "phall/periodic.hpp"
#include "phall/suites.hpp"

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace phall {

/// Malformed literal; the message carries the offending position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& text, std::size_t pos, const std::string& why);
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

enum class Algebra { Hall, HallTwisted, HallExtended, PeriodicExtended, PeriodicOdd };

/// "hall", "hall-tw", "hall-ext", "periodic-ext", "periodic-odd".
Algebra parse_algebra(const std::string& name);
const std::vector<std::string>& algebra_names();

/// Basis literals: factors joined by '*', each a class label "d(1,0)#0" or
/// a K-class "K[1,-1]" (round brackets also accepted), followed by "@i" for
/// the periodic algebras. "1" is the unit.
IsoClassId parse_class_literal(RepCategory& cat, const std::string& text);
ExtBasis parse_ext_literal(RepCategory& cat, const std::string& text);
PeriodicBasisElt parse_periodic_literal(RepCategory& cat, int m, const std::string& text);
Graded parse_odd_literal(RepCategory& cat, int m, const std::string& text);

/// {"a": "p/r", "b": "s/t"} for a + b v.
nlohmann::json scalar_json(const Scalar& s);
nlohmann::json basis_json(const PeriodicBasisElt& b);

/// Exact product of two literals, as JSON text.
std::string cmd_product(const RunConfig& cfg, const std::string& lhs, const std::string& rhs,
                        const std::string& algebra);
/// Structure constants among all bounded basis elements (K-parts zero), as
/// CSV with one row per nonzero term, in basis order.
std::string cmd_table(const RunConfig& cfg, const std::string& algebra);
/// Iso classes within the bound, one per line with dimension and |Aut|.
std::string cmd_list_classes(const RunConfig& cfg);

}  // namespace phall
