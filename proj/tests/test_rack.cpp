#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "collapse_lab/error.hpp"
#include "collapse_lab/group.hpp"
#include "collapse_lab/rack.hpp"

using namespace clab;

namespace {

std::shared_ptr<const ConjClass> s4_three_cycles() {
  const auto ctx = GroupContext::linear(Field::create(2), 4);
  return std::make_shared<const ConjClass>(
      conj_class(ctx, symmetric_group_generators(4), permutation_from_cycles(4, "(1,2,3)")));
}

std::vector<std::uint32_t> all_of(const Rack& r) {
  std::vector<std::uint32_t> v(r.size());
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

void expect_axioms(const Rack& r) {
  const auto n = static_cast<std::uint32_t>(r.size());
  for (std::uint32_t x = 0; x < n; ++x) {
    EXPECT_EQ(r.act(x, x), x);
    std::set<std::uint32_t> img;
    for (std::uint32_t y = 0; y < n; ++y) {
      img.insert(r.act(x, y));
      EXPECT_EQ(r.act_inv(x, r.act(x, y)), y);
      if (r.act(x, y) == y) EXPECT_EQ(r.act(y, x), x);
      for (std::uint32_t z = 0; z < n; ++z)
        ASSERT_EQ(r.act(x, r.act(y, z)), r.act(r.act(x, y), r.act(x, z)));
    }
    EXPECT_EQ(img.size(), n);
  }
}

}  // namespace

TEST(Rack, CubeRackAxioms) {
  const auto c = s4_three_cycles();
  const Rack r = Rack::from_class(c);
  EXPECT_EQ(r.size(), 8u);
  expect_axioms(r);
  EXPECT_EQ(r.provenance(), c);
}

TEST(Rack, ConjugationTableMatchesGroup) {
  const auto c = s4_three_cycles();
  const Rack r = Rack::from_class(c);
  for (std::uint32_t i = 0; i < r.size(); ++i)
    for (std::uint32_t j = 0; j < r.size(); ++j)
      EXPECT_EQ(c->element(r.act(i, j)), c->ctx()->conj(c->element(i), c->element(j)));
}

TEST(Rack, CentralClassIsTrivial) {
  const auto g = sl_group(2, 7);
  const auto c = std::make_shared<const ConjClass>(conj_class(g, Matrix::scalar(2, 6)));
  const Rack r = Rack::from_class(c);
  EXPECT_EQ(r.size(), 1u);
  EXPECT_TRUE(is_abelian(r, {0}));
  EXPECT_TRUE(is_indecomposable(r, {0}));
}

TEST(Rack, PSL2Over7InvolutionRack) {
  const auto quo = CentralQuotient(std::make_shared<const GroupHandle>(sl_group(2, 7)));
  const auto psl = quo.image();
  const auto c = std::make_shared<const ConjClass>(conj_class(psl, quo.project(Matrix{{0, 1}, {6, 0}})));
  const Rack r = Rack::from_class(c);
  EXPECT_EQ(r.size(), 21u);
  expect_axioms(r);
  EXPECT_TRUE(is_indecomposable(r, all_of(r)));
}

TEST(Rack, FromTableRejectsBadTables) {
  // Not idempotent.
  EXPECT_THROW(Rack::from_table(2, {1, 1, 0, 0}), InvariantViolation);
  // Row is not a bijection.
  EXPECT_THROW(Rack::from_table(3, {0, 0, 2, 0, 1, 2, 0, 1, 2}), InvariantViolation);
  EXPECT_THROW(Rack::from_table(2, {0, 1, 0}), InvalidArgument);
  // Trivial rack is fine.
  EXPECT_EQ(Rack::from_table(3, {0, 1, 2, 0, 1, 2, 0, 1, 2}).size(), 3u);
}

TEST(Rack, DihedralQuandleFromTable) {
  // Reflections of a triangle: i |> j = 2i - j mod 3.
  std::vector<std::uint32_t> op;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) op.push_back(static_cast<std::uint32_t>(((2 * i - j) % 3 + 3) % 3));
  const Rack r = Rack::from_table(3, op);
  expect_axioms(r);
  EXPECT_TRUE(is_indecomposable(r, {0, 1, 2}));
  EXPECT_FALSE(is_abelian(r, {0, 1, 2}));
}

TEST(InnOrbit, CubeRackSplitsIntoTwoTetrahedra) {
  const Rack r = Rack::from_class(s4_three_cycles());
  const auto all = all_of(r);
  const auto orbits = inn_orbits(r, all);
  ASSERT_EQ(orbits.size(), 2u);
  for (const auto& o : orbits) {
    EXPECT_EQ(o.size(), 4u);
    EXPECT_TRUE(is_subrack(r, o));
    EXPECT_TRUE(is_indecomposable(r, o));
    EXPECT_FALSE(is_abelian(r, o));
  }
  EXPECT_FALSE(is_indecomposable(r, all));
  EXPECT_FALSE(is_abelian(r, all));
  const auto c = r.provenance();
  const auto x = *c->index_of(permutation_from_cycles(4, "(1,2,3)"));
  EXPECT_EQ(inn_orbit(r, all, x).size(), 4u);
}

TEST(InnOrbit, AbelianSubrackHasSingletonOrbits) {
  const auto c = std::make_shared<const ConjClass>(conj_class(sl_group(2, 7), Matrix{{3, 0}, {0, 5}}));
  const Rack r = Rack::from_class(c);
  std::vector<std::uint32_t> diag;
  for (std::uint32_t i = 0; i < c->size(); ++i) {
    const Matrix& m = c->element(i);
    if (m(0, 1) == 0 && m(1, 0) == 0) diag.push_back(i);
  }
  ASSERT_EQ(diag.size(), 2u);
  EXPECT_TRUE(is_abelian(r, diag));
  for (auto x : diag) EXPECT_EQ(inn_orbit(r, diag, x), std::vector<std::uint32_t>{x});
}

TEST(InnOrbit, RequiresMembership) {
  const Rack r = Rack::from_class(s4_three_cycles());
  EXPECT_THROW(inn_orbit(r, {0, 1}, 5), InvalidArgument);
  EXPECT_THROW(is_indecomposable(r, {}), InvalidArgument);
}

TEST(InnOrbit, PartitionAndStability) {
  const auto g = sl_group(3, 2);
  std::mt19937 rng(21);
  for (const auto& cls : all_classes(g)) {
    const auto c = std::make_shared<const ConjClass>(cls);
    const Rack r = Rack::from_class(c);
    for (int trial = 0; trial < 10; ++trial) {
      const auto seed = subrack_closure(r, {static_cast<std::uint32_t>(rng() % r.size()),
                                            static_cast<std::uint32_t>(rng() % r.size())});
      const auto& Y = seed.members;
      const auto orbits = inn_orbits(r, Y);
      std::vector<std::uint32_t> joined;
      for (const auto& o : orbits) {
        joined.insert(joined.end(), o.begin(), o.end());
        for (auto y : Y)
          for (auto x : o) EXPECT_TRUE(std::binary_search(o.begin(), o.end(), r.act(y, x)));
      }
      std::sort(joined.begin(), joined.end());
      EXPECT_EQ(joined, Y);
    }
  }
}

TEST(InnOrbit, MatchesGroupOrbitsOfGeneratedSubgroup) {
  // For Y a union of L-classes with L generated by Y, Inn(Y)-orbits are L-orbits.
  const auto f2 = Field::create(2);
  const auto ctx = GroupContext::linear(f2, 3);
  const Matrix x{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}, y{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, z{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}};
  const auto c = std::make_shared<const ConjClass>(conj_class(sl_group(3, 2), x));
  const Rack r = Rack::from_class(c);
  const auto L = closure(ctx, {x, y, z});
  std::vector<std::uint32_t> Y;
  for (std::uint32_t i = 0; i < c->size(); ++i)
    if (L.contains(c->element(i))) Y.push_back(i);
  for (const Matrix& e : {x, y, z}) {
    const auto rack_orbit = inn_orbit(r, Y, *c->index_of(e));
    const auto group_orbit = conj_class(ctx, L.generators(), e);
    EXPECT_EQ(rack_orbit.size(), group_orbit.size());
    for (auto i : rack_orbit) EXPECT_TRUE(group_orbit.contains(c->element(i)));
  }
  EXPECT_EQ(inn_orbit(r, Y, *c->index_of(x)).size(), 3u);
}

TEST(SubrackClosure, Examples) {
  const Rack r = Rack::from_class(s4_three_cycles());
  EXPECT_EQ(subrack_closure(r, {3}).members, std::vector<std::uint32_t>{3});
  bool saw_commuting = false, saw_noncommuting = false;
  for (std::uint32_t a = 0; a < r.size(); ++a)
    for (std::uint32_t b = a + 1; b < r.size(); ++b) {
      const auto s = subrack_closure(r, {a, b});
      EXPECT_TRUE(is_subrack(r, s.members));
      EXPECT_EQ(s.parent, &r);
      if (r.commute(a, b)) {
        EXPECT_EQ(s.members, (std::vector<std::uint32_t>{a, b}));
        saw_commuting = true;
      } else {
        EXPECT_GE(s.members.size(), 4u);
        saw_noncommuting = true;
      }
    }
  EXPECT_TRUE(saw_commuting);
  EXPECT_TRUE(saw_noncommuting);
}

TEST(Morphism, IdentityAndConstant) {
  const Rack r = Rack::from_class(s4_three_cycles());
  RackMorphism id{&r, &r, all_of(r)};
  EXPECT_TRUE(id.is_morphism());
  EXPECT_TRUE(id.is_surjective());
  const Rack pt = Rack::from_table(1, {0});
  RackMorphism collapse{&r, &pt, std::vector<std::uint32_t>(r.size(), 0)};
  EXPECT_TRUE(collapse.is_morphism());
  EXPECT_TRUE(collapse.is_surjective());
  RackMorphism partial{&r, &r, std::vector<std::uint32_t>(r.size(), 0)};
  EXPECT_FALSE(partial.is_surjective());
}

TEST(ProjectRack, SL2Over7) {
  const auto sl = std::make_shared<const GroupHandle>(sl_group(2, 7));
  const CentralQuotient quo(sl);
  const ConjClass big = conj_class(*sl, Matrix{{0, 1}, {6, 0}});
  ASSERT_EQ(big.size(), 42u);
  const ConjClass x2p1 = conj_class(*sl, companion(sl->ctx()->field(), Poly({1, 0, 1})));
  ASSERT_EQ(x2p1.size(), 42u);
  const auto proj = project_rack(x2p1, quo);
  EXPECT_EQ(proj.image.size(), 21u);
  EXPECT_EQ(proj.fiber, 2u);
  const Rack src = Rack::from_class(std::make_shared<const ConjClass>(x2p1));
  RackMorphism pi{&src, &proj.image, proj.map};
  EXPECT_TRUE(pi.is_morphism());
  EXPECT_TRUE(pi.is_surjective());

  const auto split = project_rack(conj_class(*sl, Matrix{{3, 0}, {0, 5}}), quo);
  EXPECT_EQ(split.fiber, 1u);
  EXPECT_EQ(split.image.size(), 56u);
}

TEST(ProjectRack, TrivialCenterIsIdentical) {
  const auto sl = std::make_shared<const GroupHandle>(sl_group(3, 2));
  const CentralQuotient quo(sl);
  for (const auto& c : all_classes(*sl)) {
    const auto proj = project_rack(c, quo);
    EXPECT_EQ(proj.fiber, 1u);
    const Rack src = Rack::from_class(std::make_shared<const ConjClass>(c));
    EXPECT_EQ(proj.image.size(), src.size());
    for (std::uint32_t a = 0; a < src.size(); ++a)
      for (std::uint32_t b = 0; b < src.size(); ++b)
        ASSERT_EQ(proj.map[src.act(a, b)], proj.image.act(proj.map[a], proj.map[b]));
  }
}
