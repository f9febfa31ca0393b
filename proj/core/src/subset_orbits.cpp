#include "cg/subset_orbits.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_map>

#include "cg/detail/union_find.hpp"
#include "cg/errors.hpp"

namespace cg {

namespace {

// Colexicographic rank of an ascending subset: sum_i C(s_i, i+1).
class SubsetRanker {
 public:
  SubsetRanker(std::size_t n, std::size_t k) : k_(k), binom_(n + 1, std::vector<std::uint64_t>(k + 2, 0)) {
    for (std::size_t a = 0; a <= n; ++a) {
      binom_[a][0] = 1;
      for (std::size_t b = 1; b <= std::min(a, k + 1); ++b)
        binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
    }
  }
  std::uint64_t count(std::size_t n) const { return binom_[n][k_]; }
  std::uint64_t rank(const Subset& s) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binom_[s[i]][i + 1];
    return r;
  }
  Subset unrank(std::uint64_t r, std::size_t n) const {
    Subset s(k_);
    std::size_t x = n;
    for (std::size_t i = k_; i-- > 0;) {
      while (binom_[x][i + 1] > r) --x;
      s[i] = static_cast<Point>(x);
      r -= binom_[x][i + 1];
    }
    return s;
  }

 private:
  std::size_t k_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

}  // namespace

std::vector<std::vector<Subset>> orbit_partition_k_subsets(std::span<const Permutation> generators, std::size_t n,
                                                           std::size_t k) {
  if (k == 0 || k > n) throw InvalidInput("orbit_partition_k_subsets: need 1 <= k <= n");
  const SubsetRanker ranker(n, k);
  const std::uint64_t total = ranker.count(n);
  if (total > 10'000'000) throw ScaleError("orbit_partition_k_subsets: more than 10^7 subsets");
  for (const auto& g : generators)
    if (g.degree() != n) throw DimensionError("orbit_partition_k_subsets: degree mismatch");

  detail::UnionFind uf(total);
  Subset image(k);
  for (std::uint64_t r = 0; r < total; ++r) {
    const Subset s = ranker.unrank(r, n);
    for (const auto& g : generators) {
      for (std::size_t i = 0; i < k; ++i) image[i] = g[s[i]];
      std::sort(image.begin(), image.end());
      uf.unite(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(ranker.rank(image)));
    }
  }
  std::vector<std::vector<Subset>> out;
  for (const auto& cls : uf.classes()) {
    std::vector<Subset> orbit;
    orbit.reserve(cls.size());
    for (auto r : cls) orbit.push_back(ranker.unrank(r, n));
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

F2Vector act_on_form(const SymplecticSpace& space, const TransvectionWord& w, const F2Vector& a) {
  F2Vector x = a;
  for (const auto& c : w.c) x = space.transvection_on_form(c, x);
  return x;
}

bool form_triple_invariant(const SymplecticSpace& space, std::span<const F2Vector, 3> t) {
  return space.theta0(t[0] + t[1] + t[2]);
}

bool vector_triple_invariant(const SymplecticSpace& space, std::span<const F2Vector, 3> t) {
  return space.phi(t[0], t[1]) ^ space.phi(t[0], t[2]) ^ space.phi(t[1], t[2]);
}

namespace {

using Triple = std::array<Word, 3>;

// Transvections taking `from` to `to` on forms while fixing every point of
// `fixed`. t_c fixes theta_f iff theta_f(c) = 1; t_{from+to} swaps the two.
// Otherwise goes through w with theta_f(from + w) = theta_f(w + to) = 1,
// which for w in V^eps reads phi(w, x + f) = 1 + phi(x, f) for x = from, to.
std::optional<std::vector<Word>> place_point(const SymplecticSpace& space, bool eps, Word from, Word to,
                                             std::span<const Word> fixed) {
  if (from == to) return std::vector<Word>{};
  auto fixes_all = [&](Word c) {
    return std::all_of(fixed.begin(), fixed.end(), [&](Word f) { return space.theta_w(f, c); });
  };
  if (fixes_all(from ^ to)) return std::vector<Word>{from ^ to};
  std::vector<SymplecticSpace::PhiConstraint> cons;
  for (Word x : {from, to})
    for (Word f : fixed) cons.push_back({F2Vector::from_word(space.dim(), x ^ f), !space.phi_w(x, f)});
  try {
    Word w = space.solve_affine_theta(cons, eps).to_word();
    if (w == from || w == to || !fixes_all(from ^ w) || !fixes_all(w ^ to)) return std::nullopt;
    return std::vector<Word>{from ^ w, w ^ to};
  } catch (const Error&) {
    return std::nullopt;
  }
}

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

std::optional<std::vector<Word>> direct_route(const SymplecticSpace& space, bool eps, const Triple& t1,
                                              Triple t2) {
  std::sort(t2.begin(), t2.end());
  do {
    Triple cur = t1;
    std::vector<Word> word;
    bool ok = true;
    for (std::size_t i = 0; i < 3 && ok; ++i) {
      auto steps = place_point(space, eps, cur[i], t2[i], std::span<const Word>(t2.data(), i));
      if (!steps) {
        ok = false;
        break;
      }
      for (Word c : *steps) {
        for (auto& x : cur) x = space.transvection_on_form_w(c, x);
        word.push_back(c);
      }
    }
    if (ok) return word;
  } while (std::next_permutation(t2.begin(), t2.end()));
  return std::nullopt;
}

std::vector<Word> search_route(const SymplecticSpace& space, const Triple& t1, const Triple& t2) {
  if (space.m() > 4) throw ScaleError("witness_map_3subsets: search fallback limited to m <= 4");
  const unsigned bits = space.dim();
  auto key = [&](const Triple& t) { return (t[0] << (2 * bits)) | (t[1] << bits) | t[2]; };
  const Triple start = sorted(t1), goal = sorted(t2);
  std::unordered_map<Word, std::pair<Word, Word>> parent;  // key -> (parent key, c)
  parent.emplace(key(start), std::pair{key(start), 0});
  std::deque<Triple> queue{start};
  while (!queue.empty()) {
    Triple t = queue.front();
    queue.pop_front();
    if (t == goal) break;
    for (Word c = 1; c < space.order(); ++c) {
      Triple u = sorted({space.transvection_on_form_w(c, t[0]), space.transvection_on_form_w(c, t[1]),
                         space.transvection_on_form_w(c, t[2])});
      if (parent.emplace(key(u), std::pair{key(t), c}).second) queue.push_back(u);
    }
  }
  if (!parent.count(key(goal))) throw NoMap("witness_map_3subsets: target not in the orbit");
  std::vector<Word> word;
  for (Word k = key(goal); k != key(start);) {
    auto [p, c] = parent.at(k);
    word.push_back(c);
    k = p;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

TransvectionWord witness_map_3subsets(const SymplecticSpace& space, bool eps, std::span<const F2Vector, 3> t1,
                                      std::span<const F2Vector, 3> t2) {
  Triple a{}, b{};
  for (std::size_t i = 0; i < 3; ++i) {
    space.check(t1[i]);
    space.check(t2[i]);
    if (space.theta0(t1[i]) != eps || space.theta0(t2[i]) != eps)
      throw InvalidInput("witness_map_3subsets: labels must lie in V^eps");
    a[i] = t1[i].to_word();
    b[i] = t2[i].to_word();
  }
  if (sorted(a)[0] == sorted(a)[1] || sorted(a)[1] == sorted(a)[2] || sorted(b)[0] == sorted(b)[1] ||
      sorted(b)[1] == sorted(b)[2])
    throw InvalidInput("witness_map_3subsets: subsets need three distinct points");
  if (form_triple_invariant(space, t1) != form_triple_invariant(space, t2))
    throw NoMap("witness_map_3subsets: the subsets have different invariants");

  std::vector<Word> word;
  if (auto direct = direct_route(space, eps, a, b))
    word = std::move(*direct);
  else
    word = search_route(space, a, b);

  TransvectionWord w;
  w.matrix = F2Matrix::identity(space.dim());
  for (Word c : word) {
    w.c.push_back(F2Vector::from_word(space.dim(), c));
    w.matrix = w.matrix * space.transvection_matrix(w.c.back());
  }
  Triple image = a;
  for (auto& x : image)
    for (Word c : word) x = space.transvection_on_form_w(c, x);
  if (sorted(image) != sorted(b)) throw Error("witness_map_3subsets: constructed word failed verification");
  return w;
}

}  // namespace cg
