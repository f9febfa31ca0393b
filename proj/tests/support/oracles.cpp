#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace cg::oracle {

Perm images(const Permutation& p) {
  Perm out(p.degree());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = p[i];
  return out;
}

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

std::optional<std::uint64_t> group_order(const std::vector<Permutation>& gens, std::size_t degree,
                                         std::uint64_t limit) {
  Perm id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::vector<Perm> g;
  for (const auto& p : gens) g.push_back(images(p));
  std::unordered_set<Perm, PermHash> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : g) {
      Perm y(degree);
      for (std::size_t i = 0; i < degree; ++i) y[i] = s[x[i]];
      if (seen.insert(y).second) {
        if (seen.size() > limit) return std::nullopt;
        queue.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

std::vector<std::set<std::uint32_t>> point_orbits(const std::vector<Permutation>& gens, std::size_t degree) {
  std::vector<std::set<std::uint32_t>> out;
  std::vector<bool> done(degree, false);
  for (std::uint32_t x = 0; x < degree; ++x) {
    if (done[x]) continue;
    std::set<std::uint32_t> orbit{x};
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto y : std::vector<std::uint32_t>(orbit.begin(), orbit.end()))
        for (const auto& g : gens) grew |= orbit.insert(g[y]).second;
    }
    for (auto y : orbit) done[y] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

std::optional<Perm> move(const Design& d, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t unset = d.n();
  Perm p(d.n(), unset);
  auto assign = [&](std::uint32_t x, std::uint32_t y) {
    if (p[x] != unset && p[x] != y) return false;
    p[x] = y;
    return true;
  };
  if (!assign(a, b) || !assign(b, a)) return std::nullopt;
  for (const auto& blk : d.blocks()) {
    if (std::count(blk.begin(), blk.end(), a) == 0 || std::count(blk.begin(), blk.end(), b) == 0) continue;
    std::vector<std::uint32_t> rest;
    for (auto x : blk)
      if (x != a && x != b) rest.push_back(x);
    if (!assign(rest[0], rest[1]) || !assign(rest[1], rest[0])) return std::nullopt;
  }
  for (std::uint32_t x = 0; x < d.n(); ++x)
    if (p[x] == unset) p[x] = x;
  return p;
}

std::map<unsigned, unsigned> pair_count_histogram(const Design& d) {
  std::vector<std::vector<unsigned>> count(d.n(), std::vector<unsigned>(d.n(), 0));
  for (const auto& blk : d.blocks())
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) ++count[blk[i]][blk[j]];
  std::map<unsigned, unsigned> hist;
  for (std::uint32_t a = 0; a < d.n(); ++a)
    for (std::uint32_t b = a + 1; b < d.n(); ++b) ++hist[count[a][b]];
  return hist;
}

unsigned max_triple_multiplicity(const Design& d) {
  std::map<std::vector<std::uint32_t>, unsigned> count;
  for (const auto& blk : d.blocks())
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<std::uint32_t> t;
      for (int i = 0; i < 4; ++i)
        if (i != skip) t.push_back(blk[i]);
      std::sort(t.begin(), t.end());
      ++count[t];
    }
  unsigned best = 0;
  for (const auto& [t, c] : count) best = std::max(best, c);
  return best;
}

std::size_t rank(std::vector<std::vector<std::uint8_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c])
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] ^= rows[r][j];
    ++r;
  }
  return r;
}

std::vector<std::vector<std::uint8_t>> incidence_rows(const Design& d) {
  std::vector<std::vector<std::uint8_t>> rows;
  for (const auto& blk : d.blocks()) {
    std::vector<std::uint8_t> row(d.n(), 0);
    for (auto x : blk) row[x] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::uint64_t> coset_weights(const std::vector<std::uint32_t>& cols, unsigned r) {
  const std::uint64_t total = std::uint64_t{1} << r;
  std::vector<int> weight(total, -1);
  std::uint64_t reached = 0;
  std::vector<std::uint64_t> mu;
  const std::size_t n = cols.size();
  for (unsigned w = 0; reached < total && w <= n; ++w) {
    mu.push_back(0);
    // Walk all w-subsets of the columns in lexicographic order.
    std::vector<std::size_t> idx(w);
    for (unsigned i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      std::uint32_t s = 0;
      for (auto i : idx) s ^= cols[i];
      if (weight[s] < 0) {
        weight[s] = static_cast<int>(w);
        ++mu.back();
        ++reached;
      }
      int i = static_cast<int>(w) - 1;
      while (i >= 0 && idx[i] == n - w + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (unsigned j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return mu;
}

unsigned min_weight_by_enumeration(const std::vector<std::vector<std::uint8_t>>& generators) {
  const std::size_t k = generators.size();
  const std::size_t n = generators.empty() ? 0 : generators[0].size();
  std::vector<std::uint8_t> word(n, 0);
  unsigned best = static_cast<unsigned>(n) + 1;
  // Gray code: step g flips generator ctz(g).
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << k); ++g) {
    const auto& row = generators[static_cast<std::size_t>(__builtin_ctzll(g))];
    unsigned w = 0;
    for (std::size_t j = 0; j < n; ++j) w += (word[j] ^= row[j]);
    if (w != 0) best = std::min(best, w);
  }
  return best;
}

std::vector<std::vector<std::uint8_t>> kernel(const std::vector<std::vector<std::uint8_t>>& input) {
  std::vector<std::vector<std::uint8_t>> rows = input;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c])
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] ^= rows[r][j];
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<std::uint8_t>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint8_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = rows[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::uint32_t> columns(const std::vector<std::vector<std::uint8_t>>& rows) {
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::vector<std::uint32_t> out(n, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rows[i][j]) out[j] |= std::uint32_t{1} << i;
  return out;
}

std::optional<unsigned> least_dependent_columns(const std::vector<std::uint32_t>& cols, unsigned max_w) {
  const std::size_t n = cols.size();
  if (max_w >= 1)
    for (auto c : cols)
      if (c == 0) return 1;
  if (max_w >= 2)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (cols[i] == cols[j]) return 2;
  if (max_w >= 3)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if ((cols[i] ^ cols[j] ^ cols[k]) == 0) return 3;
  if (max_w >= 4)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          for (std::size_t l = k + 1; l < n; ++l)
            if ((cols[i] ^ cols[j] ^ cols[k] ^ cols[l]) == 0) return 4;
  return std::nullopt;
}

std::uint64_t sp_order_u64(unsigned m) {
  std::uint64_t order = std::uint64_t{1} << (m * m);
  for (unsigned i = 1; i <= m; ++i) order *= (std::uint64_t{1} << (2 * i)) - 1;
  return order;
}

bool theta0(const F2Vector& v, unsigned m) {
  unsigned s = 0;
  for (unsigned i = 0; i < m; ++i) s += v.get(i) && v.get(i + m);
  return s % 2;
}

bool phi(const F2Vector& u, const F2Vector& v, unsigned m) {
  unsigned s = 0;
  for (unsigned i = 0; i < m; ++i) s += (u.get(i) && v.get(i + m)) + (u.get(i + m) && v.get(i));
  return s % 2;
}

}  // namespace cg::oracle
