#include "cg/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "cg/brz.hpp"
#include "cg/codes.hpp"
#include "cg/design_search.hpp"
#include "cg/errors.hpp"
#include "cg/groupoid.hpp"
#include "cg/symplectic.hpp"

namespace cg {

bool BooleanStructureReport::ok() const {
  return hypothesis_met && alpha && lambda_design_ok &&
         std::all_of(subdesigns.begin(), subdesigns.end(), [](const auto& s) { return s.is_sqs && s.is_boolean; });
}

BooleanStructureReport boolean_structure(const Design& d) {
  BooleanStructureReport r;
  const auto report = validate(d);
  if (!report.ok()) throw InvalidInput("boolean_structure: design is not a supersimple 2-design");
  const unsigned lambda = *report.lambda;
  const std::uint32_t n = d.n();
  const PairIndex index(d);

  std::vector<std::optional<Permutation>> moves(static_cast<std::size_t>(n) * n);
  auto move = [&](Point a, Point b) -> const Permutation& {
    auto& slot = moves[static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b)];
    if (!slot) slot = elementary_move(index, a, b);
    return *slot;
  };

  r.hypothesis_met = true;
  for (Point a = 0; a < n && r.hypothesis_met; ++a)
    for (Point b = a + 1; b < n && r.hypothesis_met; ++b)
      for (Point c : index.closure(a, b)) {
        if (c == a || c == b) continue;
        if (!(move(c, a) * move(a, b) * move(b, c)).is_identity()) {
          r.hypothesis_met = false;
          r.witness = std::array<Point, 3>{c, a, b};
          break;
        }
      }
  if (!r.hypothesis_met) return r;
  if (!std::has_single_bit(lambda + 1)) return r;
  r.alpha = static_cast<unsigned>(std::countr_zero(lambda + 1));

  std::map<std::vector<Point>, std::pair<Point, Point>> closures;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b) closures.emplace(index.closure(a, b), std::pair{a, b});

  for (const auto& [pts, pair] : closures) {
    SubdesignCheck s;
    s.pair = pair;
    s.points = pts;
    std::vector<std::int64_t> local(n, -1);
    for (std::size_t i = 0; i < pts.size(); ++i) local[pts[i]] = static_cast<std::int64_t>(i);
    std::vector<Block> inner;
    for (const auto& blk : d.blocks())
      if (std::all_of(blk.begin(), blk.end(), [&](Point p) { return local[p] >= 0; }))
        inner.push_back({Point(local[blk[0]]), Point(local[blk[1]]), Point(local[blk[2]]), Point(local[blk[3]])});
    const auto k = static_cast<std::uint32_t>(pts.size());
    std::map<std::array<Point, 3>, unsigned> triple_count;
    for (const auto& blk : inner)
      for (int skip = 0; skip < 4; ++skip) {
        std::array<Point, 3> t{};
        int j = 0;
        for (int i = 0; i < 4; ++i)
          if (i != skip) t[j++] = blk[i];
        ++triple_count[t];
      }
    const std::uint64_t triples = static_cast<std::uint64_t>(k) * (k - 1) * (k - 2) / 6;
    s.is_sqs = triple_count.size() == triples &&
               std::all_of(triple_count.begin(), triple_count.end(), [](const auto& e) { return e.second == 1; });
    if (s.is_sqs) s.is_boolean = hole_stabilizer(Design("closure", k, inner), 0).is_trivial();
    r.subdesigns.push_back(std::move(s));
  }

  const std::size_t block_size = std::size_t{2} << *r.alpha;
  std::vector<unsigned> cover(static_cast<std::size_t>(n) * n, 0);
  bool sizes_ok = true;
  for (const auto& [pts, pair] : closures) {
    sizes_ok = sizes_ok && pts.size() == block_size;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) ++cover[static_cast<std::size_t>(pts[i]) * n + pts[j]];
  }
  r.lambda_design_ok = sizes_ok;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      if (cover[static_cast<std::size_t>(a) * n + b] != 1) r.lambda_design_ok = false;
  return r;
}

std::vector<CatalanSolution> catalan_solutions(unsigned max_exponent) {
  if (max_exponent > 40) throw ScaleError("catalan_solutions: max_exponent > 40");
  const std::uint64_t top = (std::uint64_t{1} << max_exponent) + 1;  // largest admissible p^a
  std::uint64_t limit = 1;
  while ((limit + 1) * (limit + 1) <= top) ++limit;
  std::vector<bool> composite(limit + 1, false);
  std::vector<CatalanSolution> out;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    if (p == 2) continue;
    std::uint64_t power = p * p;
    for (unsigned a = 2; power <= top; ++a, power *= p) {
      for (char sign : {'-', '+'}) {
        const std::uint64_t v = sign == '-' ? power - 1 : power + 1;
        if (std::has_single_bit(v)) {
          const auto b = static_cast<unsigned>(std::countr_zero(v));
          if (b >= 1 && b <= max_exponent) out.push_back({p, a, b, sign});
        }
      }
      if (power > top / p) break;
    }
  }
  return out;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

void SuiteReport::add(std::string name, bool ok, std::string expected, std::string measured) {
  checks.push_back({std::move(name), ok, std::move(expected), std::move(measured)});
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"measured", c.measured}});
  return j;
}

std::string SuiteReport::to_table() const {
  std::size_t w = 5;
  for (const auto& c : checks) w = std::max(w, c.name.size());
  std::ostringstream out;
  out << "suite " << suite << "\n";
  for (const auto& c : checks)
    out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(w)) << c.name
        << "  expected " << c.expected << "  measured " << c.measured << "\n";
  std::size_t failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

namespace {

std::string str(const BigInt& x) { return to_decimal(x); }

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::string params(const Design& d, const ValidationReport& r) {
  std::ostringstream out;
  out << "2-(" << d.n() << ",4," << (r.lambda ? std::to_string(*r.lambda) : "?") << ")"
      << (r.is_supersimple ? " supersimple" : " not supersimple") << ", " << d.blocks().size() << " blocks";
  return out.str();
}

std::string params(unsigned n, unsigned lambda, std::size_t blocks) {
  return "2-(" + std::to_string(n) + ",4," + std::to_string(lambda) + ") supersimple, " + std::to_string(blocks) +
         " blocks";
}

void check_design(SuiteReport& rep, const std::string& name, const Design& d, unsigned lambda) {
  const auto r = validate(d);
  const std::size_t blocks = static_cast<std::size_t>(d.n()) * (d.n() - 1) * lambda / 12;
  rep.add(name, r.ok() && r.lambda == lambda && d.blocks().size() == blocks, params(d.n(), lambda, blocks),
          params(d, r));
}

SuiteReport suite_a() {
  SuiteReport rep{"A", {}};
  check_design(rep, "sp(3,1) parameters", build_sp_design(3, true), 5);
  check_design(rep, "sp(3,0) parameters", build_sp_design(3, false), 9);
  check_design(rep, "sp(4,1) parameters", build_sp_design(4, true), 27);
  check_design(rep, "affine(3) parameters", build_affine_design(3), 15);
  check_design(rep, "P3 parameters", build_p3(), 1);

  const SymplecticSpace space(3);
  for (bool eps : {true, false}) {
    const Design d = build_sp_design(3, eps);
    std::size_t good = 0;
    for (Word c = 1; c < space.order(); ++c) {
      const auto cv = F2Vector::from_word(space.dim(), c);
      auto p = label_permutation(d, [&](const F2Vector& a) { return space.transvection_on_form(cv, a); });
      good += automorphism_check(d, p);
    }
    rep.add(std::string("sp(3,") + (eps ? "1" : "0") + ") transvections are automorphisms", good == 63, "63/63",
            std::to_string(good) + "/63");
  }
  const Design a = build_affine_design(3);
  std::size_t good = 0;
  for (Word c = 1; c < space.order(); ++c) {
    const auto cv = F2Vector::from_word(space.dim(), c);
    good += automorphism_check(a, label_permutation(a, [&](const F2Vector& x) { return space.apply_transvection(cv, x); }));
    good += automorphism_check(a, label_permutation(a, [&](const F2Vector& x) { return x + cv; }));
  }
  rep.add("affine(3) transvections and translations are automorphisms", good == 126, "126/126",
          std::to_string(good) + "/126");
  return rep;
}

SuiteReport suite_b() {
  SuiteReport rep{"B", {}};
  const BigInt sp3 = sp_order(3);
  auto run = [&](const std::string& name, const Design& d, const BigInt& expected) {
    const PairIndex index(d);
    const BigInt mg = move_group(index).order();
    const BigInt pi = hole_stabilizer(index, 0).order();
    rep.add(name + " move group order", mg == expected, str(expected), str(mg));
    rep.add(name + " is a group (n |pi| = |<moves>|)", pi * d.n() == mg, str(mg), str(pi * d.n()));
  };
  run("sp(3,1)", build_sp_design(3, true), sp3);
  run("sp(3,0)", build_sp_design(3, false), sp3);
  run("affine(3)", build_affine_design(3), sp3 * 64);
  const Design p3 = build_p3();
  const auto s = summarize_groupoid(p3, 0);
  rep.add("P3 hole stabilizer order", s.pi_order == 95040, "95040", str(s.pi_order));
  rep.add("P3 groupoid size", s.groupoid_size == 1235520, "1235520", str(s.groupoid_size));
  rep.add("P3 move group exceeds the groupoid", s.move_group_order > s.groupoid_size && !s.is_group,
          "> 1235520, not a group", str(s.move_group_order));
  return rep;
}

SuiteReport suite_c() {
  SuiteReport rep{"C", {}};
  struct Expect {
    std::string name;
    Design design;
    CodeFamily family;
    std::size_t k;
    unsigned rho;
    std::vector<std::uint64_t> mu;
    IntersectionArray array;
  };
  const SymplecticSpace space(3);
  std::vector<Expect> cases{
      {"C^1(m=3)", build_sp_design(3, true), CodeFamily::sp(true), 21, 3, {1, 28, 63, 36}, {{28, 27, 16}, {1, 12, 28}}},
      {"C^0(m=3)", build_sp_design(3, false), CodeFamily::sp(false), 29, 3, {1, 36, 63, 28}, {{36, 35, 16}, {1, 20, 36}}},
      {"C^a(m=3)", build_affine_design(3), CodeFamily::affine(), 56, 4, {1, 64, 126, 64, 1},
       {{64, 63, 32, 1}, {1, 32, 63, 64}}},
  };
  for (const auto& e : cases) {
    const LinearCode code = incidence_code(e.design);
    rep.add(e.name + " dimension", code.dimension() == e.k, std::to_string(e.k), std::to_string(code.dimension()));
    const auto d = min_distance(code);
    rep.add(e.name + " minimum distance", d == 4u, "4", d ? std::to_string(*d) : ">8");
    const CosetTable t = coset_analysis(code);
    rep.add(e.name + " covering radius", t.covering_radius() == e.rho, std::to_string(e.rho),
            std::to_string(t.covering_radius()));
    rep.add(e.name + " coset weights", t.mu() == e.mu, join(e.mu), join(t.mu()));
    const auto arr = t.intersection_array();
    rep.add(e.name + " completely regular with array", arr && *arr == e.array, e.array.to_string(),
            arr ? arr->to_string() : "not completely regular");
    rep.add(e.name + " b_i mu_i = c_{i+1} mu_{i+1}", t.counting_identity_holds(), "holds",
            t.counting_identity_holds() ? "holds" : "fails");
    const bool eq = span_equals(code, LinearCode::from_parity_check(characterization_parity_check(space, e.family)));
    rep.add(e.name + " equals the characterization kernel", eq, "true", eq ? "true" : "false");
  }
  {
    const SymplecticSpace s4(4);
    const bool eq = span_equals(incidence_code(build_sp_design(4, true)),
                                LinearCode::from_parity_check(characterization_parity_check(s4, CodeFamily::sp(true))));
    rep.add("C^1(m=4) equals the characterization kernel", eq, "true", eq ? "true" : "false");
  }
  for (auto [m, eps] : {std::pair{3u, true}, {3u, false}, {4u, true}}) {
    const bool ok = coset_classification_check(SymplecticSpace(m), eps);
    rep.add("coset classification m=" + std::to_string(m) + " eps=" + (eps ? "1" : "0"), ok, "true",
            ok ? "true" : "false");
  }
  const auto brz = brz_equivalence(3);
  rep.add("BRZ m=3: theta_0(vA) = q(v) for all v", brz.form_identity && brz.a.is_invertible(), "true",
          brz.form_identity && brz.a.is_invertible() ? "true" : "false");
  rep.add("BRZ m=3: rho_A maps the code onto the affine code", brz.codes_equal, "true",
          brz.codes_equal ? "true" : "false");
  return rep;
}

struct NamedDesign {
  std::string name;
  Design design;
};

std::vector<NamedDesign> built_designs() {
  std::vector<NamedDesign> out{{"P3", build_p3()},
                               {"boolean(3)", build_boolean(3)},
                               {"boolean(4)", build_boolean(4)},
                               {"sp(3,1)", build_sp_design(3, true)},
                               {"sp(3,0)", build_sp_design(3, false)},
                               {"sp(4,1)", build_sp_design(4, true)},
                               {"sp(4,0)", build_sp_design(4, false)},
                               {"affine(2)", build_affine_design(2)},
                               {"affine(3)", build_affine_design(3)}};
  for (auto& d : search_designs(9, 3)) out.push_back({"search(9,3)", d});
  return out;
}

SuiteReport suite_e1() {
  SuiteReport rep{"E1", {}};
  for (const auto& [name, d] : built_designs()) {
    const unsigned lambda = *validate(d).lambda;
    if (d.n() <= 4 * lambda + 1) continue;
    const auto gens = hole_stabilizer_generators(PairIndex(d), 0);
    const auto orbs = orbits(gens, d.n());
    // One orbit for the hole, one for everything else.
    const bool transitive = orbs.size() == 2;
    std::vector<std::size_t> sizes;
    for (const auto& o : orbs) sizes.push_back(o.size());
    rep.add(name + " (n=" + std::to_string(d.n()) + " > 4*" + std::to_string(lambda) + "+1) transitive off the hole",
            transitive, "orbits (1," + std::to_string(d.n() - 1) + ")", "orbits " + join(sizes));
  }
  return rep;
}

SuiteReport suite_smallcases() {
  SuiteReport rep{"SMALLCASES", {}};
  const auto eight = search_designs(8, 3);
  rep.add("n=8 lambda=3 designs", eight.size() == 1, "1", std::to_string(eight.size()));
  if (eight.size() == 1) {
    const bool iso = canonical_form(eight[0]) == canonical_form(build_boolean(3));
    rep.add("n=8 design is the Boolean one", iso, "true", iso ? "true" : "false");
    const auto ord = hole_stabilizer(eight[0], 0).order();
    rep.add("n=8 hole stabilizer trivial", ord == 1, "1", str(ord));
  }
  const auto nine = search_designs(9, 3);
  rep.add("n=9 lambda=3 designs", nine.size() == 1, "1", std::to_string(nine.size()));
  if (nine.size() == 1) {
    const PermGroup g = hole_stabilizer(nine[0], 0);
    rep.add("n=9 hole stabilizer order", g.order() == 288, "288", str(g.order()));
    std::vector<Point> rest;
    for (Point x = 1; x < 9; ++x) rest.push_back(x);
    const PermGroup on_rest = g.restricted_to(rest);
    std::vector<std::size_t> sizes;
    for (const auto& o : on_rest.orbits()) sizes.push_back(o.size());
    rep.add("n=9 hole stabilizer transitive off the hole", on_rest.is_transitive(), "orbits (8)",
            "orbits " + join(sizes));
    std::string measured = "not transitive";
    bool ok = false;
    if (on_rest.is_transitive()) {
      const auto blocks = on_rest.blocks_of_imprimitivity();
      ok = !blocks.empty() && blocks.front().size() == 4;
      measured = blocks.empty() ? "primitive" : "least block size " + std::to_string(blocks.front().size());
    }
    rep.add("n=9 hole stabilizer imprimitive with blocks of size 4", ok, "blocks of size 4", measured);
  }
  return rep;
}

SuiteReport suite_d() {
  SuiteReport rep{"D", {}};
  for (unsigned k : {3u, 4u}) {
    const auto r = boolean_structure(build_boolean(k));
    rep.add("boolean(" + std::to_string(k) + ") structure", r.ok() && r.alpha == k - 1,
            "hypothesis met, alpha=" + std::to_string(k - 1),
            std::string(r.hypothesis_met ? "hypothesis met" : "hypothesis fails") +
                (r.alpha ? ", alpha=" + std::to_string(*r.alpha) : ""));
  }
  const auto p3 = boolean_structure(build_p3());
  rep.add("P3 structure", p3.ok() && p3.alpha == 1u && p3.subdesigns.size() == 13, "alpha=1, 13 closures",
          std::string(p3.ok() ? "ok" : "fails") + ", " + std::to_string(p3.subdesigns.size()) + " closures");
  const auto sp = boolean_structure(build_sp_design(3, true));
  rep.add("sp(3,1) hypothesis fails", !sp.hypothesis_met && sp.witness.has_value(), "fails with witness",
          sp.hypothesis_met ? "met" : "fails with witness");
  for (unsigned bound : {10u, 20u, 40u}) {
    const auto sols = catalan_solutions(bound);
    const bool ok = sols == std::vector<CatalanSolution>{{3, 2, 3, '-'}};
    std::ostringstream m;
    for (const auto& s : sols) m << "(" << s.p << "," << s.a << "," << s.b << "," << s.sign << ")";
    rep.add("p^a +- 1 = 2^b below 2^" + std::to_string(bound), ok, "(3,2,3,-)", m.str());
  }
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"A", "B", "C", "D", "E1", "SMALLCASES", "all"};
  return names;
}

SuiteReport theorem_suite(const std::string& name) {
  static const std::map<std::string, std::function<SuiteReport()>> suites{
      {"A", suite_a}, {"B", suite_b}, {"C", suite_c}, {"D", suite_d}, {"E1", suite_e1}, {"SMALLCASES", suite_smallcases}};
  if (name == "all") {
    SuiteReport all{"all", {}};
    for (const auto& [key, run] : suites)
      for (auto& c : run().checks) all.checks.push_back({key + ": " + c.name, c.passed, c.expected, c.measured});
    return all;
  }
  auto it = suites.find(name);
  if (it == suites.end()) throw InvalidInput("theorem_suite: unknown suite '" + name + "'");
  return it->second();
}

}  // namespace cg
