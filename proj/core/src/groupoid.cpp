#include "cg/groupoid.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "cg/errors.hpp"

namespace cg {

Permutation elementary_move(const PairIndex& index, Point a, Point b) {
  const auto n = index.n();
  if (a >= n || b >= n) throw InvalidInput("elementary_move: point out of range");
  if (a == b) throw InvalidInput("elementary_move: points must be distinct");
  std::vector<Point> img(n);
  std::vector<bool> assigned(n, false);
  for (Point x = 0; x < n; ++x) img[x] = x;
  auto swap_pair = [&](Point x, Point y) {
    if (assigned[x] || assigned[y])
      throw IllDefinedMove("elementary_move: point " + std::to_string(assigned[x] ? x : y) +
                           " lies on two blocks through the pair");
    assigned[x] = assigned[y] = true;
    img[x] = y;
    img[y] = x;
  };
  swap_pair(a, b);
  for (auto [c, d] : index.partners(a, b)) swap_pair(c, d);
  return Permutation(std::move(img));
}

Permutation elementary_move(const Design& d, Point a, Point b) { return elementary_move(PairIndex(d), a, b); }

Permutation move_sequence(const PairIndex& index, std::span<const Point> path) {
  if (path.empty()) throw InvalidInput("move_sequence: empty path");
  Permutation p(index.n());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) p *= elementary_move(index, path[i], path[i + 1]);
  return p;
}

Permutation move_sequence(const Design& d, std::span<const Point> path) { return move_sequence(PairIndex(d), path); }

namespace {

std::vector<Permutation> dedupe(std::vector<Permutation> perms) {
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> out;
  for (auto& p : perms)
    if (seen.insert(p).second) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<Permutation> hole_stabilizer_generators(const PairIndex& index, Point inf) {
  const auto n = index.n();
  if (inf >= n) throw InvalidInput("hole_stabilizer: hole out of range");
  std::vector<Permutation> to(n);
  for (Point a = 0; a < n; ++a)
    if (a != inf) to[a] = elementary_move(index, inf, a);
  std::vector<Permutation> gens;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b) {
      if (a == inf || b == inf) continue;
      // [inf,a][a,b][b,inf]
      auto g = to[a] * elementary_move(index, a, b) * to[b];
      if (!g.is_identity()) gens.push_back(std::move(g));
    }
  return dedupe(std::move(gens));
}

PermGroup hole_stabilizer(const PairIndex& index, Point inf) {
  return PermGroup(index.n(), hole_stabilizer_generators(index, inf));
}

PermGroup hole_stabilizer(const Design& d, Point inf) { return hole_stabilizer(PairIndex(d), inf); }

std::vector<Permutation> elementary_moves(const PairIndex& index) {
  std::vector<Permutation> moves;
  for (Point a = 0; a < index.n(); ++a)
    for (Point b = a + 1; b < index.n(); ++b) moves.push_back(elementary_move(index, a, b));
  return dedupe(std::move(moves));
}

PermGroup move_group(const PairIndex& index) { return PermGroup(index.n(), elementary_moves(index)); }

PermGroup move_group(const Design& d) { return move_group(PairIndex(d)); }

BigInt groupoid_size(const Design& d, Point inf) { return BigInt(d.n()) * hole_stabilizer(d, inf).order(); }

GroupoidIndex::GroupoidIndex(const Design& d, Point inf, Words words)
    : inf_(inf), index_(d), pi_(cg::hole_stabilizer(index_, inf)) {
  const auto n = index_.n();
  paths_.resize(n);
  inverse_words_.resize(n);
  for (Point b = 0; b < n; ++b) {
    if (b == inf) {
      paths_[b] = {inf};
    } else if (words == Words::Direct || n < 3) {
      paths_[b] = {inf, b};
    } else {
      Point c = 0;
      while (c == inf || c == b) ++c;
      paths_[b] = {inf, c, b};
    }
    inverse_words_[b] = move_sequence(index_, paths_[b]).inverse();
  }
}

bool GroupoidIndex::contains(const Permutation& p) const {
  if (p.degree() != n()) throw DimensionError("groupoid_contains: degree mismatch");
  return pi_.contains(p * inverse_words_[p[inf_]]);
}

Permutation GroupoidIndex::random_element(std::mt19937_64& rng, unsigned steps) const {
  std::uniform_int_distribution<Point> pick(0, n() - 2);
  Permutation p(n());
  Point at = inf_;
  for (unsigned s = 0; s < steps; ++s) {
    Point next = pick(rng);
    if (next >= at) ++next;
    p *= elementary_move(index_, at, next);
    at = next;
  }
  return p;
}

bool groupoid_contains(const Design& d, Point inf, const Permutation& p) { return GroupoidIndex(d, inf).contains(p); }

std::optional<std::pair<Permutation, Permutation>> composition_counterexample(const GroupoidIndex& index,
                                                                              std::mt19937_64& rng,
                                                                              unsigned tries) {
  std::uniform_int_distribution<unsigned> len(1, 6);
  for (unsigned t = 0; t < tries; ++t) {
    auto g = index.random_element(rng, len(rng));
    auto h = index.random_element(rng, len(rng));
    if (!index.contains(g * h)) return std::pair{std::move(g), std::move(h)};
  }
  return std::nullopt;
}

GroupoidSummary summarize_groupoid(const Design& d, Point inf) {
  GroupoidSummary s;
  s.n = d.n();
  s.hole = inf;
  const PairIndex index(d);
  const PermGroup pi = hole_stabilizer(index, inf);
  s.pi_order = pi.order();
  s.groupoid_size = BigInt(s.n) * s.pi_order;
  s.move_group_order = move_group(index).order();
  s.is_group = s.move_group_order == s.groupoid_size;

  std::vector<Point> rest;
  for (Point x = 0; x < s.n; ++x)
    if (x != inf) rest.push_back(x);
  const PermGroup on_rest = pi.restricted_to(rest);
  s.transitive = on_rest.is_transitive();
  if (s.transitive) s.primitive = on_rest.is_primitive();

  const BigInt sym = factorial(s.n - 1);
  if (s.pi_order == sym) {
    s.contains_alternating = true;
  } else if (s.pi_order * 2 == sym) {
    s.contains_alternating = true;
    for (Point b : rest)
      if (elementary_move(index, inf, b).is_odd()) s.contains_alternating = false;
  }
  return s;
}

Permutation label_permutation(const Design& d, const std::function<F2Vector(const F2Vector&)>& f) {
  if (!d.labels()) throw InvalidInput("label_permutation: design has no labels");
  const auto& labels = *d.labels();
  std::unordered_map<F2Vector, Point> where;
  for (Point p = 0; p < labels.size(); ++p) where.emplace(labels[p], p);
  std::vector<Point> img(labels.size());
  for (Point p = 0; p < labels.size(); ++p) {
    auto it = where.find(f(labels[p]));
    if (it == where.end()) throw InvalidInput("label_permutation: image is not a point label");
    img[p] = it->second;
  }
  return Permutation(std::move(img));
}

}  // namespace cg
