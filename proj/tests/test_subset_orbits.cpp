#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cg/errors.hpp"
#include "cg/groupoid.hpp"
#include "cg/subset_orbits.hpp"
#include "cg/symplectic.hpp"

using namespace cg;

namespace {

std::vector<Permutation> form_transvections(const Design& d, const SymplecticSpace& s) {
  std::vector<Permutation> out;
  for (Word c = 1; c < s.order(); ++c) {
    const auto cv = F2Vector::from_word(s.dim(), c);
    out.push_back(label_permutation(d, [&](const F2Vector& a) { return s.transvection_on_form(cv, a); }));
  }
  return out;
}

}  // namespace

TEST(SubsetOrbits, TwoOrbitsOnFormTriples) {
  const SymplecticSpace s(3);
  for (bool eps : {true, false}) {
    SCOPED_TRACE(eps);
    const Design d = build_sp_design(3, eps);
    const auto& labels = *d.labels();
    const auto orbits = orbit_partition_k_subsets(form_transvections(d, s), d.n(), 3);
    ASSERT_EQ(orbits.size(), 2u);
    std::set<bool> invariants;
    for (const auto& orbit : orbits) {
      std::set<bool> inside;
      for (const auto& t : orbit) {
        const std::array<F2Vector, 3> v{labels[t[0]], labels[t[1]], labels[t[2]]};
        inside.insert(form_triple_invariant(s, v));
      }
      ASSERT_EQ(inside.size(), 1u);
      invariants.insert(*inside.begin());
    }
    EXPECT_EQ(invariants.size(), 2u);
    // The move group gives the same partition.
    const auto by_moves = orbit_partition_k_subsets(elementary_moves(PairIndex(d)), d.n(), 3);
    EXPECT_EQ(by_moves, orbits);
  }
}

TEST(SubsetOrbits, TwoOrbitsOnVectorTriples) {
  const SymplecticSpace s(3);
  const Design a = build_affine_design(3);
  const auto& labels = *a.labels();
  std::vector<Permutation> gens;
  for (Word c = 1; c < s.order(); ++c) {
    const auto cv = F2Vector::from_word(6, c);
    gens.push_back(label_permutation(a, [&](const F2Vector& x) { return s.apply_transvection(cv, x); }));
  }
  gens.push_back(label_permutation(a, [&](const F2Vector& x) { return x + F2Vector::unit(6, 0); }));
  const auto orbits = orbit_partition_k_subsets(gens, 64, 3);
  ASSERT_EQ(orbits.size(), 2u);
  std::set<bool> invariants;
  for (const auto& orbit : orbits) {
    std::set<bool> inside;
    for (const auto& t : orbit) {
      const std::array<F2Vector, 3> v{labels[t[0]], labels[t[1]], labels[t[2]]};
      inside.insert(vector_triple_invariant(s, v));
    }
    ASSERT_EQ(inside.size(), 1u);
    invariants.insert(*inside.begin());
  }
  EXPECT_EQ(invariants.size(), 2u);
  EXPECT_EQ(orbits[0].size() + orbits[1].size(), 41664u);
}

TEST(SubsetOrbits, WitnessMapsBetweenTriples) {
  std::mt19937_64 rng(51);
  for (unsigned m : {3u, 4u}) {
    const SymplecticSpace s(m);
    for (bool eps : {true, false}) {
      const auto pts = s.v_epsilon(eps);
      std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
      auto triple = [&] {
        std::set<std::size_t> idx;
        while (idx.size() < 3) idx.insert(pick(rng));
        auto it = idx.begin();
        return std::array<F2Vector, 3>{pts[*it], pts[*std::next(it)], pts[*std::next(it, 2)]};
      };
      int mapped = 0, refused = 0;
      for (int t = 0; t < 100; ++t) {
        const auto t1 = triple(), t2 = triple();
        if (form_triple_invariant(s, t1) != form_triple_invariant(s, t2)) {
          EXPECT_THROW(witness_map_3subsets(s, eps, t1, t2), NoMap);
          ++refused;
          continue;
        }
        const auto w = witness_map_3subsets(s, eps, t1, t2);
        std::set<Word> image, target;
        for (const auto& x : t1) image.insert(act_on_form(s, w, x).to_word());
        for (const auto& x : t2) target.insert(x.to_word());
        ASSERT_EQ(image, target);
        EXPECT_TRUE(s.sp_membership(w.matrix));
        ++mapped;
      }
      EXPECT_GT(mapped, 10);
      EXPECT_GT(refused, 5);
    }
  }
}

TEST(SubsetOrbits, Limits) {
  EXPECT_THROW(orbit_partition_k_subsets({}, 5, 0), InvalidInput);
  EXPECT_THROW(orbit_partition_k_subsets({}, 200, 5), ScaleError);
  const auto trivial = orbit_partition_k_subsets({}, 5, 2);
  EXPECT_EQ(trivial.size(), 10u);
}
