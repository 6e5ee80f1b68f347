#include "phall/io.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace phall {

using nlohmann::json;

ParseError::ParseError(const std::string& text, std::size_t pos, const std::string& why)
    : std::invalid_argument("parse error at position " + std::to_string(pos) + " in '" + text + "': " + why),
      pos_(pos) {}

const std::vector<std::string>& algebra_names() {
  static const std::vector<std::string> names{"hall", "hall-tw", "hall-ext", "periodic-ext", "periodic-odd"};
  return names;
}

Algebra parse_algebra(const std::string& name) {
  if (name == "hall") return Algebra::Hall;
  if (name == "hall-tw") return Algebra::HallTwisted;
  if (name == "hall-ext") return Algebra::HallExtended;
  if (name == "periodic-ext") return Algebra::PeriodicExtended;
  if (name == "periodic-odd") return Algebra::PeriodicOdd;
  throw std::invalid_argument("unknown algebra: " + name);
}

namespace {

/// One '*'-separated factor of a literal.
struct Factor {
  bool is_k = false;
  IsoClassId cls;
  KClass kappa;
  std::optional<int> degree;
  std::size_t pos = 0;
};

bool blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<int> parse_ints(const std::string& text, std::size_t pos, const std::string& body, bool allow_sign) {
  std::vector<int> out;
  std::size_t i = 0;
  while (true) {
    std::size_t start = i;
    if (allow_sign && i < body.size() && (body[i] == '-' || body[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
    if (i == digits) throw ParseError(text, pos + start, "expected an integer");
    if (i - digits > 6) throw ParseError(text, pos + start, "integer too large");
    out.push_back(std::stoi(body.substr(start, i - start)));
    if (i == body.size()) return out;
    if (body[i] != ',') throw ParseError(text, pos + i, "expected ','");
    ++i;
  }
}

std::vector<Factor> parse_factors(RepCategory& cat, const std::string& text) {
  std::vector<Factor> out;
  std::size_t start = 0;
  bool saw_unit = false;
  while (true) {
    std::size_t end = text.find('*', start);
    if (end == std::string::npos) end = text.size();
    std::size_t a = start, b = end;
    while (a < b && blank(text[a])) ++a;
    while (b > a && blank(text[b - 1])) --b;
    if (a == b) throw ParseError(text, a, "empty factor");
    std::string tok = text.substr(a, b - a);
    Factor f;
    f.pos = a;
    auto at = tok.rfind('@');
    if (at != std::string::npos) {
      const std::string deg = tok.substr(at + 1);
      if (deg.empty() || deg.size() > 6 || deg.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(text, a + at + 1, "expected a degree after '@'");
      }
      f.degree = std::stoi(deg);
      tok = tok.substr(0, at);
    }
    if (tok == "1") {
      if (f.degree) throw ParseError(text, a, "the unit takes no degree");
      saw_unit = true;
    } else if (!tok.empty() && tok[0] == 'K') {
      const char open = tok.size() > 1 ? tok[1] : '\0';
      const char close = open == '[' ? ']' : ')';
      if ((open != '[' && open != '(') || tok.back() != close) {
        throw ParseError(text, a, "expected K[...] with comma-separated integers");
      }
      std::vector<int> c = parse_ints(text, a + 2, tok.substr(2, tok.size() - 3), true);
      if (static_cast<int>(c.size()) != cat.n()) throw ParseError(text, a, "K-class length differs from vertex count");
      f.is_k = true;
      f.kappa = KClass(c);
      out.push_back(f);
    } else {
      try {
        f.cls = IsoClassId::parse_label(tok, cat.n());
      } catch (const std::invalid_argument& e) {
        throw ParseError(text, a, e.what());
      }
      if (f.cls.index >= cat.class_count(f.cls.dim)) throw ParseError(text, a, "no class with this index");
      out.push_back(f);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (saw_unit && !out.empty()) throw ParseError(text, 0, "the unit cannot be combined with other factors");
  return out;
}

void require_degree(const std::string& text, const Factor& f, int m) {
  if (!f.degree) throw ParseError(text, f.pos, "missing '@degree'");
  if (*f.degree >= m) throw ParseError(text, f.pos, "degree must be below m = " + std::to_string(m));
}

void forbid_degree(const std::string& text, const Factor& f) {
  if (f.degree) throw ParseError(text, f.pos, "degrees are only meaningful in the periodic algebras");
}

}  // namespace

IsoClassId parse_class_literal(RepCategory& cat, const std::string& text) {
  const auto fs = parse_factors(cat, text);
  if (fs.empty()) return cat.zero();
  if (fs.size() > 1) throw ParseError(text, fs[1].pos, "a single class expected");
  forbid_degree(text, fs[0]);
  if (fs[0].is_k) throw ParseError(text, fs[0].pos, "K-classes need the extended algebra");
  return fs[0].cls;
}

ExtBasis parse_ext_literal(RepCategory& cat, const std::string& text) {
  ExtBasis b{cat.zero(), cat.zero_k()};
  bool have_cls = false, have_k = false;
  for (const Factor& f : parse_factors(cat, text)) {
    forbid_degree(text, f);
    if (f.is_k) {
      if (have_k) throw ParseError(text, f.pos, "repeated K-factor");
      have_k = true;
      b.kappa = f.kappa;
    } else {
      if (have_cls || have_k) throw ParseError(text, f.pos, "write the class before the K-factor, once");
      have_cls = true;
      b.cls = f.cls;
    }
  }
  return b;
}

PeriodicBasisElt parse_periodic_literal(RepCategory& cat, int m, const std::string& text) {
  PeriodicBasisElt b{Graded(static_cast<std::size_t>(m), cat.zero()),
                     std::vector<KClass>(static_cast<std::size_t>(m), cat.zero_k())};
  std::vector<bool> cls_seen(static_cast<std::size_t>(m)), k_seen(static_cast<std::size_t>(m));
  bool in_k = false;
  for (const Factor& f : parse_factors(cat, text)) {
    require_degree(text, f, m);
    const auto i = static_cast<std::size_t>(*f.degree);
    if (f.is_k) {
      if (k_seen[i]) throw ParseError(text, f.pos, "duplicate K-degree");
      k_seen[i] = true;
      in_k = true;
      b.kappa[i] = f.kappa;
    } else {
      if (in_k) throw ParseError(text, f.pos, "class factors come before K-factors");
      if (cls_seen[i]) throw ParseError(text, f.pos, "duplicate degree");
      cls_seen[i] = true;
      b.classes[i] = f.cls;
    }
  }
  return b;
}

Graded parse_odd_literal(RepCategory& cat, int m, const std::string& text) {
  Graded g(static_cast<std::size_t>(m), cat.zero());
  std::vector<bool> seen(static_cast<std::size_t>(m));
  for (const Factor& f : parse_factors(cat, text)) {
    if (f.is_k) throw ParseError(text, f.pos, "the odd periodic algebra has no K-factors");
    require_degree(text, f, m);
    const auto i = static_cast<std::size_t>(*f.degree);
    if (seen[i]) throw ParseError(text, f.pos, "duplicate degree");
    seen[i] = true;
    g[i] = f.cls;
  }
  return g;
}

json scalar_json(const Scalar& s) { return json{{"a", rational_fraction(s.a())}, {"b", rational_fraction(s.b())}}; }

json basis_json(const PeriodicBasisElt& b) {
  json classes = json::array(), kappa = json::array();
  for (const IsoClassId& c : b.classes) classes.push_back(c.label());
  for (const KClass& k : b.kappa) kappa.push_back(k.values());
  return json{{"classes", classes}, {"kappa", kappa}};
}

namespace {

std::string ext_label(const ExtBasis& b) {
  std::string s;
  if (!b.cls.is_zero()) s = b.cls.label();
  if (!b.kappa.is_zero()) s += (s.empty() ? "" : " * ") + ("K" + to_string(b.kappa));
  return s.empty() ? "1" : s;
}

std::string odd_label(const Graded& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) continue;
    if (!s.empty()) s += " * ";
    s += g[i].label() + "@" + std::to_string(i);
  }
  return s.empty() ? "1" : s;
}

std::string class_label(const IsoClassId& c) { return c.is_zero() ? "1" : c.label(); }

/// A product table or single product, uniform over the algebras.
struct Row {
  std::string term;
  json basis;
  Scalar coef;
};

class Engine {
 public:
  Engine(const RunConfig& cfg, Algebra alg)
      : cfg_(cfg), alg_(alg), cat_(Quiver::parse(cfg.quiver), cfg.q, cfg.budget), dn_(cat_) {
    if (cfg.m < 1) throw std::invalid_argument("m must be at least 1");
    if (alg == Algebra::PeriodicExtended) ext_.emplace(dn_, cfg.m);
    if (alg == Algebra::PeriodicOdd) odd_.emplace(dn_, cfg.m);
  }

  RepCategory& category() { return cat_; }

  /// Canonical literals of the bounded basis, in basis order.
  std::vector<std::string> basis() {
    std::vector<std::string> out;
    const DimVector bound = cfg_.bound(cat_.n());
    switch (alg_) {
      case Algebra::Hall:
      case Algebra::HallTwisted:
        for (const IsoClassId& c : cat_.classes_within(bound)) out.push_back(class_label(c));
        break;
      case Algebra::HallExtended:
        for (const IsoClassId& c : cat_.classes_within(bound)) out.push_back(ext_label({c, cat_.zero_k()}));
        break;
      case Algebra::PeriodicExtended:
        for (const Graded& g : graded_within(cat_, cfg_.m, bound, cfg_.max_total)) {
          out.push_back(periodic_label(ext_->u(g)));
        }
        break;
      case Algebra::PeriodicOdd:
        for (const Graded& g : graded_within(cat_, cfg_.m, bound, cfg_.max_total)) out.push_back(odd_label(g));
        break;
    }
    return out;
  }

  std::vector<Row> product(const std::string& lhs, const std::string& rhs) {
    std::vector<Row> rows;
    switch (alg_) {
      case Algebra::Hall:
      case Algebra::HallTwisted: {
        const HallElt x = HallElt::basis(parse_class_literal(cat_, lhs));
        const HallElt y = HallElt::basis(parse_class_literal(cat_, rhs));
        const HallElt p = alg_ == Algebra::Hall ? product_untwisted(cat_, x, y) : product_twisted(cat_, x, y);
        for (const auto& [c, s] : p.terms()) rows.push_back({class_label(c), json{{"class", c.label()}}, s});
        break;
      }
      case Algebra::HallExtended: {
        const ExtHallElt x = ExtHallElt::basis(parse_ext_literal(cat_, lhs));
        const ExtHallElt y = ExtHallElt::basis(parse_ext_literal(cat_, rhs));
        const auto product_terms = product_extended(cat_, x, y);
        for (const auto& [b, s] : product_terms.terms()) {
          rows.push_back({ext_label(b), json{{"class", b.cls.label()}, {"kappa", b.kappa.values()}}, s});
        }
        break;
      }
      case Algebra::PeriodicExtended: {
        const PeriodicBasisElt x = parse_periodic_literal(cat_, cfg_.m, lhs);
        const PeriodicBasisElt y = parse_periodic_literal(cat_, cfg_.m, rhs);
        const auto product_terms = ext_->product(x, y);
        for (const auto& [b, s] : product_terms.terms()) rows.push_back({periodic_label(b), basis_json(b), s});
        break;
      }
      case Algebra::PeriodicOdd: {
        const Graded x = parse_odd_literal(cat_, cfg_.m, lhs);
        const Graded y = parse_odd_literal(cat_, cfg_.m, rhs);
        const auto product_terms = odd_->product(x, y);
        for (const auto& [g, s] : product_terms.terms()) {
          json classes = json::array();
          for (const IsoClassId& c : g) classes.push_back(c.label());
          rows.push_back({odd_label(g), json{{"classes", classes}}, s});
        }
        break;
      }
    }
    return rows;
  }

 private:
  RunConfig cfg_;
  Algebra alg_;
  RepCategory cat_;
  DerivedNumbers dn_;
  std::optional<PeriodicHallAlgebra> ext_;
  std::optional<OddPeriodicHallAlgebra> odd_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string cmd_product(const RunConfig& cfg, const std::string& lhs, const std::string& rhs,
                        const std::string& algebra) {
  Engine e(cfg, parse_algebra(algebra));
  json terms = json::array();
  for (const Row& r : e.product(lhs, rhs)) {
    terms.push_back(json{{"term", r.term}, {"basis", r.basis}, {"coefficient", scalar_json(r.coef)}});
  }
  const json out{{"algebra", algebra}, {"config", cfg.label()}, {"lhs", lhs}, {"rhs", rhs}, {"terms", terms}};
  return out.dump(2) + "\n";
}

std::string cmd_table(const RunConfig& cfg, const std::string& algebra) {
  Engine e(cfg, parse_algebra(algebra));
  std::ostringstream out;
  out << "lhs,rhs,term,a,b\n";
  const auto basis = e.basis();
  for (const std::string& x : basis) {
    for (const std::string& y : basis) {
      for (const Row& r : e.product(x, y)) {
        out << csv_field(x) << ',' << csv_field(y) << ',' << csv_field(r.term) << ',' << rational_fraction(r.coef.a())
            << ',' << rational_fraction(r.coef.b()) << '\n';
      }
    }
  }
  return out.str();
}

std::string cmd_list_classes(const RunConfig& cfg) {
  RepCategory cat(Quiver::parse(cfg.quiver), cfg.q, cfg.budget);
  std::ostringstream out;
  for (const IsoClassId& c : cat.classes_within(cfg.bound(cat.n()))) {
    out << c.label() << " dim=" << to_string(c.dim) << " aut=" << cat.aut_order(c) << '\n';
  }
  return out.str();
}

}  // namespace phall
