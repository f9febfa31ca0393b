#include "cg/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "cg/detail/union_find.hpp"
#include "cg/errors.hpp"

namespace cg {

PermGroup::PermGroup(std::size_t degree) : degree_(degree) {}

PermGroup::PermGroup(std::size_t degree, std::span<const Permutation> generators) : degree_(degree) {
  for (const auto& g : generators) add_generator(g);
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

BigInt PermGroup::order() const {
  BigInt r = 1;
  for (const auto& l : levels_) r *= l.orbit.size();
  return r;
}

std::pair<Permutation, std::size_t> PermGroup::sift(const Permutation& g) const {
  if (g.degree() != degree_) throw DimensionError("sift: degree mismatch");
  Permutation h = g;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& l = levels_[i];
    auto idx = l.orbit_index[h[l.base_point]];
    if (idx < 0) return {std::move(h), i};
    h *= l.inverse[idx];
  }
  return {std::move(h), levels_.size()};
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).first.is_identity();
}

void PermGroup::rebuild_level(std::size_t i) {
  auto& l = levels_[i];
  l.gens.clear();
  for (std::size_t s = 0; s < strong_.size(); ++s) {
    bool fixes = true;
    for (std::size_t j = 0; j < i && fixes; ++j) fixes = strong_[s][base_[j]] == base_[j];
    if (fixes) l.gens.push_back(s);
  }
  l.orbit.assign(1, l.base_point);
  l.orbit_index.assign(degree_, -1);
  l.orbit_index[l.base_point] = 0;
  l.transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    for (auto s : l.gens) {
      Point next = strong_[s][l.orbit[k]];
      if (l.orbit_index[next] >= 0) continue;
      l.orbit_index[next] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(next);
      l.transversal.push_back(l.transversal[k] * strong_[s]);
    }
  }
  l.inverse.clear();
  l.inverse.reserve(l.transversal.size());
  for (const auto& u : l.transversal) l.inverse.push_back(u.inverse());
}

// h fixes the first `level` base points. When level == base size a new base
// point is appended: the least point h moves.
void PermGroup::insert_strong(const Permutation& h, std::size_t level) {
  strong_.push_back(h);
  if (level == base_.size()) {
    Point b = h.support().front();
    base_.push_back(b);
    levels_.push_back(Level{b, {}, {}, {}, {}, {}});
  }
  for (std::size_t i = 0; i <= level && i < levels_.size(); ++i) rebuild_level(i);
}

// Levels above from_level are complete. Walk down, checking every Schreier
// generator; a non-sifting one is added where it dropped out and the walk
// resumes there.
void PermGroup::complete(std::size_t from_level) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(std::min(from_level, levels_.size() - 1));
  while (i >= 0) {
    bool extended = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !extended; ++k) {
      for (std::size_t gi = 0; gi < levels_[li].gens.size(); ++gi) {
        const auto& l = levels_[li];
        const auto& s = strong_[l.gens[gi]];
        Point image = s[l.orbit[k]];
        Permutation sg = l.transversal[k] * s * l.inverse[l.orbit_index[image]];
        if (sg.is_identity()) continue;
        // Sift through the levels below li only.
        std::size_t j = li + 1;
        for (; j < levels_.size(); ++j) {
          auto idx = levels_[j].orbit_index[sg[levels_[j].base_point]];
          if (idx < 0) break;
          sg *= levels_[j].inverse[idx];
        }
        if (sg.is_identity()) continue;
        insert_strong(sg, j);
        i = static_cast<std::ptrdiff_t>(std::min(j, levels_.size() - 1));
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

bool PermGroup::add_generator(const Permutation& g) {
  auto [h, level] = sift(g);
  if (h.is_identity()) return false;
  generators_.push_back(g);
  insert_strong(h, level);
  complete(level);
  return true;
}

bool PermGroup::verify_chain() const {
  BigInt product = 1;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& l = levels_[i];
    if (l.base_point != base_[i]) return false;
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      if (l.transversal[k][l.base_point] != l.orbit[k]) return false;
      if (!(l.transversal[k] * l.inverse[k]).is_identity()) return false;
    }
    product *= l.orbit.size();
  }
  for (const auto& s : strong_)
    if (!contains(s)) return false;
  for (const auto& g : generators_)
    if (!contains(g)) return false;
  return product == order();
}

std::vector<std::vector<Point>> orbits(std::span<const Permutation> generators, std::size_t degree) {
  detail::UnionFind uf(degree);
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DimensionError("orbits: degree mismatch");
    for (Point x = 0; x < degree; ++x) uf.unite(x, g[x]);
  }
  return uf.classes();
}

std::vector<std::vector<Point>> PermGroup::orbits() const { return cg::orbits(generators_, degree_); }

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_) throw InvalidInput("orbit: point out of range");
  std::vector<Point> out{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators_) {
      Point y = g[out[k]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbit(0).size() == degree_; }

std::vector<Point> PermGroup::moved_points() const {
  std::vector<bool> moved(degree_, false);
  for (const auto& g : generators_)
    for (Point x = 0; x < degree_; ++x)
      if (g[x] != x) moved[x] = true;
  std::vector<Point> out;
  for (Point x = 0; x < degree_; ++x)
    if (moved[x]) out.push_back(x);
  return out;
}

PermGroup PermGroup::restricted_to(std::span<const Point> domain) const {
  std::vector<std::int64_t> index(degree_, -1);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] >= degree_ || index[domain[i]] >= 0) throw InvalidInput("restricted_to: bad domain");
    index[domain[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Permutation> gens;
  for (const auto& g : generators_) {
    std::vector<Point> img(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      auto j = index[g[domain[i]]];
      if (j < 0) throw InvalidInput("restricted_to: domain is not invariant");
      img[i] = static_cast<Point>(j);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(domain.size(), gens);
}

std::vector<Point> PermGroup::minimal_block(Point alpha, Point beta) const {
  if (alpha >= degree_ || beta >= degree_) throw InvalidInput("minimal_block: point out of range");
  if (!is_transitive()) throw InvalidInput("minimal_block: group is not transitive");
  detail::UnionFind uf(degree_);
  // Every union is recorded as a pair; the generated equivalence is
  // invariant once the images of all recorded pairs are joined.
  std::deque<std::pair<Point, Point>> queue;
  if (uf.unite(alpha, beta)) queue.emplace_back(alpha, beta);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) {
      Point u = uf.find(g[x]), v = uf.find(g[y]);
      if (uf.unite(u, v)) queue.emplace_back(u, v);
    }
  }
  std::vector<Point> block;
  const Point root = uf.find(alpha);
  for (Point x = 0; x < degree_; ++x)
    if (uf.find(x) == root) block.push_back(x);
  return block;
}

std::vector<std::vector<Point>> PermGroup::blocks_of_imprimitivity() const {
  std::vector<std::vector<Point>> out;
  for (Point beta = 1; beta < degree_; ++beta) {
    auto b = minimal_block(0, beta);
    if (b.size() < degree_ && std::find(out.begin(), out.end(), b) == out.end()) out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool PermGroup::is_primitive() const {
  if (!is_transitive()) return false;
  for (Point beta = 1; beta < degree_; ++beta)
    if (minimal_block(0, beta).size() < degree_) return false;
  return true;
}

bool contains_alternating(const PermGroup& g, std::size_t n) {
  const BigInt full = factorial(static_cast<unsigned>(n));
  const BigInt ord = g.order();
  return ord == full || ord * 2 == full;
}

}  // namespace cg
