#include "cg/design_search.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "cg/errors.hpp"

namespace cg {

namespace {

class Canonizer {
 public:
  explicit Canonizer(const Design& d) : n_(d.n()), blocks_(d.blocks()), label_(n_, kUnset) {}

  std::vector<Block> run() {
    extend(0);
    return best_;
  }

 private:
  static constexpr Point kUnset = ~Point{0};

  // Each block's final sorted image dominates (known labels, then t, t+1,
  // ... for the unlabelled points), so the sorted list of those bounds
  // dominates the final list.
  std::vector<Block> lower_bound(Point t) const {
    std::vector<Block> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) {
      Block img{};
      Point next = t;
      for (int i = 0; i < 4; ++i) img[i] = label_[b[i]] == kUnset ? next++ : label_[b[i]];
      std::sort(img.begin(), img.end());
      out.push_back(img);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void extend(Point t) {
    auto bound = lower_bound(t);
    if (have_best_ && !(bound < best_)) return;
    if (t == n_) {
      best_ = std::move(bound);
      have_best_ = true;
      return;
    }
    for (Point p = 0; p < n_; ++p) {
      if (label_[p] != kUnset) continue;
      label_[p] = t;
      extend(t + 1);
      label_[p] = kUnset;
    }
  }

  Point n_;
  std::vector<Block> blocks_;
  std::vector<Point> label_;
  std::vector<Block> best_;
  bool have_best_ = false;
};

class Search {
 public:
  Search(unsigned n, unsigned lambda)
      : n_(n), lambda_(lambda), pair_(n * n, 0), triple_(n * n * n, false) {}

  std::vector<std::vector<Block>> run() {
    for (Point k = 0; k < lambda_; ++k)
      if (!place({0, 1, 2 + 2 * k, 3 + 2 * k})) return {};
    recurse();
    return found_;
  }

 private:
  bool fits(const Block& b) const {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (pair_[b[i] * n_ + b[j]] >= lambda_) return false;
    for (int skip = 0; skip < 4; ++skip)
      if (triple_[triple_key(b, skip)]) return false;
    return true;
  }

  std::size_t triple_key(const Block& b, int skip) const {
    std::size_t key = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) key = key * n_ + b[i];
    return key;
  }

  bool place(const Block& b) {
    if (!fits(b)) return false;
    toggle(b, true);
    stack_.push_back(b);
    first_short_pair_at_push_.emplace_back(n_, n_);
    return true;
  }

  void toggle(const Block& b, bool on) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) pair_[b[i] * n_ + b[j]] += on ? 1 : -1;
    for (int skip = 0; skip < 4; ++skip) triple_[triple_key(b, skip)] = on;
  }

  void recurse() {
    std::optional<std::pair<Point, Point>> target;
    for (Point a = 0; a < n_ && !target; ++a)
      for (Point b = a + 1; b < n_; ++b)
        if (pair_[a * n_ + b] < lambda_) {
          target = std::pair{a, b};
          break;
        }
    if (!target) {
      auto blocks = stack_;
      std::sort(blocks.begin(), blocks.end());
      found_.push_back(std::move(blocks));
      return;
    }
    auto [a, b] = *target;
    // Blocks through the target pair are added in increasing order, so each
    // block set is reached along exactly one path.
    std::optional<Block> floor;
    if (!stack_.empty() && first_short_pair_at_push_.back() == *target) floor = stack_.back();
    for (Point c = 0; c < n_; ++c) {
      if (c == a || c == b) continue;
      for (Point d = c + 1; d < n_; ++d) {
        if (d == a || d == b) continue;
        Block blk{a, b, c, d};
        std::sort(blk.begin(), blk.end());
        if (floor && !(*floor < blk)) continue;
        if (!fits(blk)) continue;
        toggle(blk, true);
        stack_.push_back(blk);
        first_short_pair_at_push_.push_back(*target);
        recurse();
        first_short_pair_at_push_.pop_back();
        stack_.pop_back();
        toggle(blk, false);
      }
    }
  }

  Point n_;
  unsigned lambda_;
  std::vector<unsigned> pair_;
  std::vector<bool> triple_;
  std::vector<Block> stack_;
  std::vector<std::pair<Point, Point>> first_short_pair_at_push_;
  std::vector<std::vector<Block>> found_;
};

}  // namespace

std::vector<Block> canonical_form(const Design& d) {
  if (d.n() > 12) throw ScaleError("canonical_form: n > 12");
  return Canonizer(d).run();
}

std::vector<Design> search_designs(unsigned n, unsigned lambda) {
  if (n > 9) throw ScaleError("search_designs: n > 9 is beyond exhaustive search");
  if (n < 4 || lambda == 0) throw InvalidInput("search_designs: need n >= 4 and lambda >= 1");
  // Replication number, block count, and room for the lambda disjoint partner
  // pairs of a supersimple design.
  if ((lambda * (n - 1)) % 3 != 0 || (lambda * n * (n - 1)) % 12 != 0 || 2 * lambda + 2 > n) return {};

  std::set<std::vector<Block>> canon;
  for (auto& blocks : Search(n, lambda).run()) canon.insert(canonical_form(Design("", n, std::move(blocks))));

  std::vector<Design> out;
  for (const auto& blocks : canon)
    out.emplace_back("search(n=" + std::to_string(n) + ",lambda=" + std::to_string(lambda) + ")#" +
                         std::to_string(out.size()),
                     n, blocks, std::nullopt, lambda);
  return out;
}

}  // namespace cg
