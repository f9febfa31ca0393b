#include "cg/design.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "cg/errors.hpp"
#include "cg/symplectic.hpp"

namespace cg {

Design::Design(std::string name, std::uint32_t n, std::vector<Block> blocks,
               std::optional<std::vector<F2Vector>> labels, std::optional<unsigned> lambda)
    : name_(std::move(name)), n_(n), blocks_(std::move(blocks)), labels_(std::move(labels)), lambda_(lambda) {
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    if (b[3] >= n_) throw InvalidInput("Design: block point out of range");
    if (b[0] == b[1] || b[1] == b[2] || b[2] == b[3]) throw InvalidInput("Design: block has a repeated point");
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (labels_ && labels_->size() != n_) throw InvalidInput("Design: label count differs from n");
}

bool Design::has_block(const Block& b) const { return std::binary_search(blocks_.begin(), blocks_.end(), b); }

std::string ValidationReport::summary() const {
  std::ostringstream out;
  if (is_2design)
    out << "2-design with lambda=" << *lambda;
  else if (pair_witness)
    out << "not a 2-design: pair {" << pair_witness->first << "," << pair_witness->second
        << "} has a different block count";
  else
    out << "not a 2-design";
  out << "; ";
  if (is_supersimple)
    out << "supersimple";
  else if (block_witness)
    out << "not supersimple: blocks #" << block_witness->first << " and #" << block_witness->second
        << " share three or more points";
  else
    out << "not supersimple";
  return out.str();
}

ValidationReport validate(const Design& d) {
  ValidationReport r;
  const std::uint32_t n = d.n();

  std::vector<std::uint32_t> count(static_cast<std::size_t>(n) * n, 0);
  for (const auto& b : d.blocks())
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) ++count[static_cast<std::size_t>(b[i]) * n + b[j]];
  if (n >= 2) {
    const std::uint32_t ref = count[1];
    r.is_2design = ref > 0;
    for (Point a = 0; a < n && r.is_2design; ++a)
      for (Point b = a + 1; b < n; ++b)
        if (count[static_cast<std::size_t>(a) * n + b] != ref) {
          r.is_2design = false;
          r.pair_witness = std::pair{a, b};
          break;
        }
    if (r.is_2design) r.lambda = ref;
  }

  // Two blocks meet in >= 3 points iff they share a 3-subset.
  r.is_supersimple = true;
  std::unordered_map<std::uint64_t, std::size_t> triple_owner;
  triple_owner.reserve(d.blocks().size() * 4);
  for (std::size_t bi = 0; bi < d.blocks().size() && r.is_supersimple; ++bi) {
    const auto& b = d.blocks()[bi];
    for (int skip = 3; skip >= 0; --skip) {
      std::uint64_t key = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) key = key * n + b[i];
      auto [it, inserted] = triple_owner.emplace(key, bi);
      if (!inserted && it->second != bi) {
        r.is_supersimple = false;
        r.block_witness = std::pair{it->second, bi};
        break;
      }
    }
  }
  return r;
}

Design build_p3() {
  using Triple = std::array<int, 3>;
  std::vector<Triple> pts;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        Triple t{x, y, z};
        auto lead = std::find_if(t.begin(), t.end(), [](int c) { return c != 0; });
        if (lead != t.end() && *lead == 1) pts.push_back(t);
      }
  std::sort(pts.begin(), pts.end());
  std::vector<Block> blocks;
  for (const auto& normal : pts) {
    Block b{};
    std::size_t k = 0;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      int dot = normal[0] * pts[p][0] + normal[1] * pts[p][1] + normal[2] * pts[p][2];
      if (dot % 3 == 0) b[k++] = static_cast<Point>(p);
    }
    blocks.push_back(b);
  }
  return Design("P3", 13, std::move(blocks), std::nullopt, 1);
}

Design build_boolean(unsigned k) {
  if (k < 2 || k > 10) throw InvalidInput("build_boolean: k must lie in [2, 10]");
  const std::uint32_t n = 1u << k;
  std::vector<Block> blocks;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      for (Point c = b + 1; c < n; ++c) {
        Point d = a ^ b ^ c;
        if (d > c) blocks.push_back({a, b, c, d});
      }
  std::vector<F2Vector> labels;
  for (Point p = 0; p < n; ++p) labels.push_back(F2Vector::from_word(k, p));
  return Design("boolean(k=" + std::to_string(k) + ")", n, std::move(blocks), std::move(labels),
                (1u << (k - 1)) - 1);
}

namespace {

// Blocks {p_i, p_j, p_k, p_l} with i < j < k < l whose labels sum to zero,
// filtered by `keep` on the first three labels.
template <typename Keep>
std::vector<Block> xor_quadruples(const std::vector<Word>& labels, std::uint64_t space_size, Keep keep) {
  std::vector<std::int32_t> index(space_size, -1);
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<std::int32_t>(i);
  std::vector<Block> blocks;
  const auto n = static_cast<std::int32_t>(labels.size());
  for (std::int32_t i = 0; i < n; ++i)
    for (std::int32_t j = i + 1; j < n; ++j)
      for (std::int32_t k = j + 1; k < n; ++k) {
        std::int32_t l = index[labels[i] ^ labels[j] ^ labels[k]];
        if (l > k && keep(labels[i], labels[j], labels[k]))
          blocks.push_back({Point(i), Point(j), Point(k), Point(l)});
      }
  return blocks;
}

std::vector<F2Vector> to_labels(const std::vector<Word>& words, unsigned dim) {
  std::vector<F2Vector> out;
  out.reserve(words.size());
  for (auto w : words) out.push_back(F2Vector::from_word(dim, w));
  return out;
}

}  // namespace

Design build_sp_design(unsigned m, bool eps) {
  if (m < 2) throw InvalidInput("build_sp_design: m must be at least 2");
  if (m > 6) throw ScaleError("build_sp_design: m > 6 is beyond desk scale");
  if (m == 2) std::clog << "warning: build_sp_design with m=2 is below the m >= 3 range of the construction\n";
  const SymplecticSpace space(m);
  const auto pts = space.v_epsilon_w(eps);
  auto blocks = xor_quadruples(pts, space.order(), [](Word, Word, Word) { return true; });
  const unsigned lambda = static_cast<unsigned>(v_epsilon_count(m - 1, eps) - 1);
  return Design("sp(m=" + std::to_string(m) + ",eps=" + std::to_string(eps ? 1 : 0) + ")",
                static_cast<std::uint32_t>(pts.size()), std::move(blocks), to_labels(pts, space.dim()), lambda);
}

Design build_affine_design(unsigned m) {
  if (m < 2) throw InvalidInput("build_affine_design: m must be at least 2");
  if (m > 4) throw ScaleError("build_affine_design: m > 4 is beyond desk scale");
  const SymplecticSpace space(m);
  std::vector<Word> pts(space.order());
  for (Word v = 0; v < space.order(); ++v) pts[v] = v;
  auto blocks = xor_quadruples(pts, space.order(), [&](Word a, Word b, Word c) {
    return (space.theta0_w(a) ^ space.theta0_w(b) ^ space.theta0_w(c)) == space.theta0_w(a ^ b ^ c);
  });
  const unsigned lambda = (1u << (2 * m - 2)) - 1;
  return Design("affine(m=" + std::to_string(m) + ")", static_cast<std::uint32_t>(pts.size()), std::move(blocks),
                to_labels(pts, space.dim()), lambda);
}

std::vector<Point> closure(const Design& d, Point a, Point b) {
  if (a == b) throw InvalidInput("closure: points must be distinct");
  if (a >= d.n() || b >= d.n()) throw InvalidInput("closure: point out of range");
  std::vector<Point> out;
  for (const auto& blk : d.blocks()) {
    bool has_a = std::find(blk.begin(), blk.end(), a) != blk.end();
    bool has_b = std::find(blk.begin(), blk.end(), b) != blk.end();
    if (has_a && has_b) out.insert(out.end(), blk.begin(), blk.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool automorphism_check(const Design& d, const Permutation& p) {
  if (p.degree() != d.n()) throw DimensionError("automorphism_check: degree differs from point count");
  for (const auto& b : d.blocks()) {
    Block img{p[b[0]], p[b[1]], p[b[2]], p[b[3]]};
    std::sort(img.begin(), img.end());
    if (!d.has_block(img)) return false;
  }
  return true;
}

PairIndex::PairIndex(const Design& d) : n_(d.n()), blocks_(d.blocks()) {
  const std::size_t slots = static_cast<std::size_t>(n_) * n_;
  std::vector<std::uint32_t> count(slots + 1, 0);
  for (const auto& b : blocks_)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) ++count[slot(b[i], b[j])];
  offsets_.assign(slots + 1, 0);
  for (std::size_t s = 0; s < slots; ++s) offsets_[s + 1] = offsets_[s] + count[s];
  entries_.resize(offsets_.back());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t bi = 0; bi < blocks_.size(); ++bi) {
    const auto& b = blocks_[bi];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) entries_[fill[slot(b[i], b[j])]++] = bi;
  }
}

std::span<const std::uint32_t> PairIndex::blocks_through(Point a, Point b) const {
  if (a >= n_ || b >= n_) throw InvalidInput("PairIndex: point out of range");
  const auto s = slot(a, b);
  return {entries_.data() + offsets_[s], offsets_[s + 1] - offsets_[s]};
}

std::vector<std::pair<Point, Point>> PairIndex::partners(Point a, Point b) const {
  std::vector<std::pair<Point, Point>> out;
  for (auto bi : blocks_through(a, b)) {
    Point other[2];
    int k = 0;
    for (auto p : blocks_[bi])
      if (p != a && p != b) other[k++] = p;
    out.emplace_back(other[0], other[1]);
  }
  return out;
}

std::vector<Point> PairIndex::closure(Point a, Point b) const {
  if (a == b) throw InvalidInput("closure: points must be distinct");
  std::vector<Point> out;
  for (auto bi : blocks_through(a, b)) out.insert(out.end(), blocks_[bi].begin(), blocks_[bi].end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cg
