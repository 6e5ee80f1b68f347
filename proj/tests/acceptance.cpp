// Runs the acceptance criteria with exact arithmetic and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include "phall/io.hpp"
#include "phall/oracle.hpp"
#include "phall/suites.hpp"
#include "phall/xcb.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace phall;

namespace {

RunConfig grid(const std::string& quiver, int q, int m, std::vector<int> max_dim, int max_total = -1,
               int k_samples = 0) {
  RunConfig c;
  c.quiver = quiver;
  c.q = q;
  c.m = m;
  c.max_dim = std::move(max_dim);
  c.max_total = max_total;
  c.k_samples = k_samples;
  return c;
}

struct Outcome {
  bool ok = true;
  std::uint64_t instances = 0;
  std::ostringstream notes;

  void suite(const std::string& name, const RunConfig& cfg) {
    const SuiteReport r = run_suite(name, cfg);
    instances += r.instances;
    if (!r.passed()) {
      ok = false;
      notes << " [" << name << " " << cfg.label() << ": " << r.failures << " failures";
      if (!r.witnesses.empty()) notes << ", e.g. " << r.witnesses.front().dump();
      notes << "]";
    }
  }
  void check(bool cond, const std::string& what) {
    ++instances;
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

bool run(int n, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.notes << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    o.ok = false;
    o.notes << " [runtime above " << limit_s << " s]";
  }
  std::cout << "CRITERION " << n << ": " << (o.ok ? "PASS" : "FAIL") << " (" << o.instances << " checks, "
            << static_cast<int>(secs * 1000) << " ms)" << o.notes.str() << std::endl;
  return o.ok;
}

/// The abelian grids: A_1 up to dimension 3 and 1→2 up to (2,2), q ∈ {2,3}.
void abelian(Outcome& o, const std::string& suite) {
  for (int q : {2, 3}) {
    o.suite(suite, grid("A1", q, 1, {3}));
    o.suite(suite, grid("1->2", q, 1, {2, 2}));
  }
}

/// Per-object dims ≤ (1,1) on 1→2 and total dim ≤ 2 on A_1, q ∈ {2,3}.
void derived_grid(Outcome& o, const std::string& suite) {
  for (int q : {2, 3}) {
    o.suite(suite, grid("1->2", q, 1, {1, 1}));
    o.suite(suite, grid("A1", q, 1, {2}, 2));
  }
}

const IsoClassId kF{DimVector({1}), 0};
const IsoClassId kF2{DimVector({2}), 0};

}  // namespace

int main() {
  bool all = true;

  all &= run(1, 60, [](Outcome& o) { abelian(o, "classical"); });
  all &= run(2, 300, [](Outcome& o) { abelian(o, "green"); });
  all &= run(3, 60, [](Outcome& o) { abelian(o, "euler"); });
  all &= run(4, 600, [](Outcome& o) { derived_grid(o, "derived-lemmas"); });
  all &= run(5, 600, [](Outcome& o) { derived_grid(o, "toen"); });

  all &= run(6, 600, [](Outcome& o) {
    for (int q : {2, 3}) {
      for (int m : {1, 2, 3}) o.suite("assoc-ext", grid("A1", q, m, {2}, 2));
    }
    RepCategory cat(Quiver::a1(), 2);
    DerivedNumbers dn(cat);
    PeriodicHallAlgebra alg(dn, 1);
    const Scalar half_v = v_pow(2, 1) * Scalar(Rational(1, 2));
    const PeriodicElt want = PeriodicElt::basis(alg.u(kF2, 0), half_v) +
                             PeriodicElt::basis(alg.k(KClass(std::vector<int>{1}), 0), half_v);
    o.check(alg.product(alg.u(kF, 0), alg.u(kF, 0)) == want, "spot value u_F u_F at m=1");
  });

  all &= run(7, 600, [](Outcome& o) {
    for (int q : {2, 3}) {
      for (int m : {1, 3}) o.suite("assoc-odd", grid("A1", q, m, {2}, 2));
      o.suite("assoc-odd-even-m", grid("A1", q, 2, {2}, 2));
    }
  });

  all &= run(8, 300, [](Outcome& o) {
    for (int q : {2, 3}) o.suite("cor44", grid("A1", q, 3, {2}, 2));
  });

  all &= run(9, 600, [](Outcome& o) { o.suite("prop45", grid("A1", 2, 3, {1})); });

  all &= run(10, 600, [](Outcome& o) {
    for (int m : {1, 3}) o.suite("thm48", grid("A1", 2, m, {1}));
    RepCategory cat(Quiver::a1(), 2);
    DerivedNumbers dn(cat);
    oracle::Oracle orc(cat);
    OddPeriodicHallAlgebra odd(dn, 3);
    XuChen xc(orc, odd);
    const IsoClassId z = cat.zero();
    const Scalar half_v = v_pow(2, 1) * Scalar(Rational(1, 2));
    o.check(xc.curly_H_direct(Graded{kF, z, z}, Graded{kF, z, z}, Graded{kF2, z, z}) == half_v,
            "spot value H^{F2[0]}_{F[0],F[0]}");
  });

  all &= run(11, 300, [](Outcome& o) { o.suite("lemma46", grid("A1", 2, 3, {1})); });

  all &= run(12, 600, [](Outcome& o) {
    o.suite("straighten", grid("A1", 2, 3, {2}, 2));
    o.suite("straighten", grid("1->2", 2, 3, {2, 2}, 2));
  });

  all &= run(13, 600, [](Outcome& o) {
    for (int q : {2, 3}) {
      for (int m : {3, 5}) {
        o.suite("bridgeland", grid("1->2", q, m, {1, 1}));
        o.suite("bridgeland", grid("A1", q, m, {1}));
      }
      for (int m : {1, 2, 3}) o.suite("kfacts", grid("A1", q, m, {2}, 2));
    }
  });

  all &= run(14, 60, [](Outcome& o) {
    o.check(cmd_table(grid("A1", 2, 3, {1}), "periodic-ext") == cmd_table(grid("A1", 2, 3, {1}), "periodic-ext"),
            "periodic-ext table differs between runs");
    o.suite("determinism", grid("1->2", 2, 3, {1, 1}, 2));
    o.suite("determinism", grid("A1", 3, 1, {2}));
  });

  return all ? 0 : 1;
}
