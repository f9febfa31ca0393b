// Runs the acceptance criteria for the core library and prints one line
// per criterion. Exit status is nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "cg/brz.hpp"
#include "cg/codes.hpp"
#include "cg/design_search.hpp"
#include "cg/groupoid.hpp"
#include "cg/subset_orbits.hpp"
#include "cg/symplectic.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace cg;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[FAILED " << what << "] ";
    }
  }
};

std::string str(const BigInt& x) { return x.str(); }

template <typename T>
std::string tuple(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void c1(Outcome& o) {
  const Design d = build_p3();
  const PermGroup pi = hole_stabilizer(d, 0);
  o.expect(pi.order() == 95040, "order");
  o.expect(groupoid_size(d, 0) == 1235520, "groupoid size");
  const auto naive = oracle::group_order(hole_stabilizer_generators(PairIndex(d), 0), 13);
  o.expect(naive == 95040u, "naive closure");
  o.detail << "|pi|=" << str(pi.order()) << " |L|=" << str(groupoid_size(d, 0));
}

void c2(Outcome& o) {
  struct Want {
    Design d;
    unsigned n, lambda;
  };
  const std::array<Want, 4> cases{Want{build_sp_design(3, true), 28, 5}, Want{build_sp_design(3, false), 36, 9},
                                  Want{build_sp_design(4, true), 120, 27}, Want{build_affine_design(3), 64, 15}};
  for (const auto& w : cases) {
    const auto r = validate(w.d);
    const bool ok = r.ok() && w.d.n() == w.n && r.lambda == w.lambda;
    o.expect(ok, w.d.name());
    o.detail << w.d.name() << "=2-(" << w.d.n() << ",4," << (r.lambda ? std::to_string(*r.lambda) : "?") << ")"
             << (r.is_supersimple ? " supersimple; " : " NOT supersimple; ");
  }
}

void c3(Outcome& o) {
  const std::array<std::pair<Design, BigInt>, 3> cases{std::pair{build_sp_design(3, true), BigInt(1451520)},
                                                       std::pair{build_sp_design(3, false), BigInt(1451520)},
                                                       std::pair{build_affine_design(3), BigInt(92897280)}};
  o.expect(sp_order(3) == 1451520, "sp_order(3)");
  o.expect(oracle::sp_order_u64(3) == 1451520u, "naive sp order");
  for (const auto& [d, want] : cases) {
    const auto s = summarize_groupoid(d, 0);
    o.expect(s.move_group_order == want, d.name() + " order");
    o.expect(s.is_group, d.name() + " is_group");
    o.expect(s.pi_order * d.n() == s.move_group_order, d.name() + " n|pi|");
    o.detail << d.name() << " |M|=" << str(s.move_group_order) << (s.is_group ? " group; " : " not a group; ");
  }
}

void check_code(Outcome& o, const Design& d, std::size_t dim, unsigned rho, const std::vector<std::uint64_t>& mu,
                const IntersectionArray& arr) {
  const LinearCode c = incidence_code(d);
  o.expect(c.dimension() == dim, d.name() + " dimension");
  o.expect(oracle::rank(oracle::incidence_rows(d)) == dim, d.name() + " naive rank");
  const auto dist = min_distance(c);
  o.expect(dist == 4u, d.name() + " distance");
  const auto cols = oracle::columns(oracle::kernel(oracle::incidence_rows(d)));
  // The kernel of the incidence rows spans the dual code, so its columns
  // are the syndromes of the unit vectors.
  const CosetTable t = coset_analysis(c);
  o.expect(t.covering_radius() == rho, d.name() + " covering radius");
  o.expect(t.mu() == mu, d.name() + " mu");
  const auto got = t.intersection_array();
  o.expect(got.has_value() && *got == arr, d.name() + " intersection array");
  o.expect(t.completely_regular(), d.name() + " completely regular");
  o.expect(t.counting_identity_holds(), d.name() + " counting identity");
  if (cols.size() == d.n() && t.redundancy() <= 24)
    o.expect(oracle::coset_weights(cols, static_cast<unsigned>(t.redundancy())) == mu, d.name() + " naive mu");
  o.detail << d.name() << " k=" << c.dimension() << " d=" << (dist ? std::to_string(*dist) : "?")
           << " rho=" << t.covering_radius() << " mu=" << tuple(t.mu())
           << " array=" << (got ? got->to_string() : "none") << "; ";
}

void c4(Outcome& o) {
  check_code(o, build_sp_design(3, true), 21, 3, {1, 28, 63, 36}, {{28, 27, 16}, {1, 12, 28}});
  check_code(o, build_sp_design(3, false), 29, 3, {1, 36, 63, 28}, {{36, 35, 16}, {1, 20, 36}});
}

void c5(Outcome& o) {
  check_code(o, build_affine_design(3), 56, 4, {1, 64, 126, 64, 1}, {{64, 63, 32, 1}, {1, 32, 63, 64}});
}

void c6(Outcome& o) {
  const SymplecticSpace s(3);
  const std::array<std::pair<Design, CodeFamily>, 3> cases{std::pair{build_sp_design(3, true), CodeFamily::sp(true)},
                                                           std::pair{build_sp_design(3, false), CodeFamily::sp(false)},
                                                           std::pair{build_affine_design(3), CodeFamily::affine()}};
  for (const auto& [d, fam] : cases) {
    const bool eq = span_equals(incidence_code(d), LinearCode::from_parity_check(characterization_parity_check(s, fam)));
    o.expect(eq, d.name());
    o.detail << d.name() << (eq ? " equal; " : " differ; ");
  }
}

void c7(Outcome& o) {
  const auto e = brz_equivalence(3);
  unsigned agree = 0;
  for (Word v = 0; v < 64; ++v) {
    const F2Vector x = F2Vector::from_word(6, v);
    // v Q v^T as the plain double sum.
    bool q = false;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) q ^= x[i] && x[j] && e.q_form.get(i, j);
    if (oracle::theta0(e.a.left_multiply(x), 3) == q) ++agree;
  }
  o.expect(e.a.rank() == 6, "A invertible");
  o.expect(agree == 64, "form identity");
  o.expect(e.form_identity && e.same_code_for_q, "library flags");
  o.expect(e.codes_equal, "code equality");
  o.detail << "theta0(vA)=q(v) on " << agree << "/64, codes " << (e.codes_equal ? "equal" : "differ");
}

std::vector<Permutation> form_transvections(const Design& d, const SymplecticSpace& s) {
  std::vector<Permutation> out;
  for (Word c = 1; c < s.order(); ++c) {
    const auto cv = F2Vector::from_word(s.dim(), c);
    out.push_back(label_permutation(d, [&](const F2Vector& a) { return s.transvection_on_form(cv, a); }));
  }
  return out;
}

template <typename Invariant>
void check_triple_orbits(Outcome& o, const Design& d, const std::vector<Permutation>& gens, Invariant invariant) {
  const auto orbits = orbit_partition_k_subsets(gens, d.n(), 3);
  const auto& labels = *d.labels();
  std::set<bool> seen;
  bool constant = true;
  std::vector<std::size_t> sizes;
  for (const auto& orbit : orbits) {
    sizes.push_back(orbit.size());
    std::set<bool> inside;
    for (const auto& t : orbit) inside.insert(invariant(std::array<F2Vector, 3>{labels[t[0]], labels[t[1]], labels[t[2]]}));
    constant = constant && inside.size() == 1;
    seen.insert(*inside.begin());
  }
  o.expect(orbits.size() == 2, d.name() + " orbit count");
  o.expect(constant && seen.size() == orbits.size(), d.name() + " invariant labels");
  o.detail << d.name() << " orbits " << tuple(sizes) << "; ";
}

void c8(Outcome& o) {
  const SymplecticSpace s(3);
  for (bool eps : {true, false}) {
    const Design d = build_sp_design(3, eps);
    check_triple_orbits(o, d, form_transvections(d, s),
                        [&](const std::array<F2Vector, 3>& t) { return form_triple_invariant(s, t); });
  }
  const Design a = build_affine_design(3);
  std::vector<Permutation> gens;
  for (Word c = 1; c < s.order(); ++c) {
    const auto cv = F2Vector::from_word(6, c);
    gens.push_back(label_permutation(a, [&](const F2Vector& x) { return s.apply_transvection(cv, x); }));
  }
  gens.push_back(label_permutation(a, [](const F2Vector& x) { return x + F2Vector::unit(6, 0); }));
  check_triple_orbits(o, a, gens, [&](const std::array<F2Vector, 3>& t) { return vector_triple_invariant(s, t); });
}

void c9(Outcome& o) {
  const std::array<std::pair<unsigned, bool>, 3> cases{std::pair{3u, true}, std::pair{3u, false}, std::pair{4u, true}};
  for (const auto& [m, eps] : cases) {
    const bool ok = coset_classification_check(SymplecticSpace(m), eps);
    o.expect(ok, "m=" + std::to_string(m));
    o.detail << "m=" << m << " eps=" << eps << (ok ? " ok; " : " fails; ");
  }
}

void c10(Outcome& o) {
  const auto eight = search_designs(8, 3);
  o.expect(eight.size() == 1, "n=8 count");
  o.detail << "n=8: " << eight.size() << " design(s)";
  if (eight.size() == 1) {
    o.expect(canonical_form(eight[0]) == canonical_form(build_boolean(3)), "n=8 isomorphic to Boolean");
    const auto ord = hole_stabilizer(eight[0], 0).order();
    o.expect(ord == 1, "n=8 trivial");
    o.detail << ", |pi|=" << str(ord);
  }
  const auto nine = search_designs(9, 3);
  o.expect(nine.size() == 1, "n=9 count");
  o.detail << "; n=9: " << nine.size() << " design(s)";
  if (nine.size() != 1) return;
  const PermGroup g = hole_stabilizer(nine[0], 0);
  o.expect(g.order() == 288, "n=9 order");
  std::vector<Point> rest;
  for (Point x = 1; x < 9; ++x) rest.push_back(x);
  const PermGroup on_rest = g.restricted_to(rest);
  std::vector<std::size_t> sizes;
  for (const auto& orb : on_rest.orbits()) sizes.push_back(orb.size());
  o.detail << ", |pi|=" << str(g.order()) << ", orbits off the hole " << tuple(sizes);
  o.expect(on_rest.is_transitive(), "n=9 transitive");
  if (on_rest.is_transitive()) {
    const auto blocks = on_rest.blocks_of_imprimitivity();
    o.expect(!blocks.empty() && blocks.front().size() == 4, "n=9 blocks of size 4");
  } else {
    o.expect(false, "n=9 imprimitive (needs transitivity)");
  }
}

void c11(Outcome& o) {
  const std::array<Design, 8> built{build_p3(),           build_boolean(3),          build_boolean(4),
                                    build_sp_design(3, true), build_sp_design(3, false), build_sp_design(4, true),
                                    build_affine_design(2),   build_affine_design(3)};
  for (const Design& d : built) {
    const unsigned lambda = *validate(d).lambda;
    if (d.n() <= 4 * lambda + 1) continue;
    const auto orbs = orbits(hole_stabilizer_generators(PairIndex(d), 0), d.n());
    const bool ok = orbs.size() == 2;
    o.expect(ok, d.name());
    o.detail << d.name() << (ok ? " transitive; " : " NOT transitive; ");
  }
}

void c12(Outcome& o) {
  for (const auto& r : props::all(20261016, 1000)) {
    o.expect(r.ok() && r.cases == 1000, r.name + ": " + r.first_failure);
    o.detail << r.name << " " << r.cases - r.failures << "/" << r.cases << "; ";
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{{1, 5, c1},   {2, 60, c2},  {3, 120, c3}, {4, 30, c4},
                                        {5, 30, c5},  {6, 10, c6},  {7, 10, c7},  {8, 60, c8},
                                        {9, 30, c9},  {10, 120, c10}, {11, 30, c11}, {12, 60, c12}};
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("criterion %d: %s (%.2f s, limit %.0f s%s) %s\n", c.id, pass ? "PASS" : "FAIL", secs, c.limit_s,
                in_time ? "" : ", over time", o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
