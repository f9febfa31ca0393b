#pragma once

// Structure checks and the named verification suites.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cg/design.hpp"

namespace cg {

struct SubdesignCheck {
  std::pair<Point, Point> pair;  // a pair spanning the closure
  std::vector<Point> points;     // the closure
  bool is_sqs = false;           // every 3-subset in exactly one inner block
  bool is_boolean = false;       // trivial hole stabilizer
};

struct BooleanStructureReport {
  bool hypothesis_met = false;
  /// (c, a, b) with c in closure(a, b) and [c, a, b, c] != 1.
  std::optional<std::array<Point, 3>> witness;
  /// Present iff hypothesis_met and lambda = 2^alpha - 1.
  std::optional<unsigned> alpha;
  std::vector<SubdesignCheck> subdesigns;
  /// The distinct closures form a 2-(n, 2^{alpha+1}, 1) design.
  bool lambda_design_ok = false;

  bool ok() const;
};

/// Tests [c, a, b, c] = 1 for every pair a < b and every c in closure(a, b)
/// outside {a, b}; on success checks each closure sub-design and the
/// design of closures.
BooleanStructureReport boolean_structure(const Design& d);

struct CatalanSolution {
  std::uint64_t p;
  unsigned a;
  unsigned b;
  char sign;  // '-' for p^a - 1 = 2^b, '+' for p^a + 1 = 2^b
  friend bool operator==(const CatalanSolution&, const CatalanSolution&) = default;
};

/// Odd primes p, a >= 2, b <= max_exponent with p^a +- 1 = 2^b, ordered by
/// (p, a, sign). max_exponent <= 40.
std::vector<CatalanSolution> catalan_solutions(unsigned max_exponent);

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string measured;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool passed() const;
  void add(std::string name, bool passed, std::string expected, std::string measured);
  nlohmann::json to_json() const;
  std::string to_table() const;
};

/// Suites: "A" (design parameters), "B" (move group orders), "C" (codes),
/// "E1" (transitivity when n > 4 lambda + 1), "SMALLCASES" (n = 8, 9), "D"
/// (Boolean structure and the Catalan check) and "all". InvalidInput for
/// any other name.
SuiteReport theorem_suite(const std::string& name);

const std::vector<std::string>& suite_names();

}  // namespace cg
