#include "collapse_lab/rack.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "collapse_lab/error.hpp"

namespace clab {

Rack::Rack(std::size_t n, std::vector<std::uint32_t> op, std::shared_ptr<const ConjClass> prov)
    : n_(n), op_(std::move(op)), provenance_(std::move(prov)) {
  if (op_.size() != n_ * n_) throw InvalidArgument("Rack: table size must be n^2");
  for (auto v : op_)
    if (v >= n_) throw InvariantViolation("Rack: table entry out of range");
  build_inverse();
  verify_axioms();
}

Rack Rack::from_table(std::size_t n, std::vector<std::uint32_t> op) { return Rack(n, std::move(op), nullptr); }

Rack Rack::from_class(std::shared_ptr<const ConjClass> c) {
  const auto& ctx = *c->ctx();
  const auto& f = ctx.field();
  const std::size_t n = c->size();
  std::vector<Matrix> inverses;
  inverses.reserve(n);
  for (const auto& x : c->elements()) inverses.push_back(mat_inv(f, x));
  std::vector<std::uint32_t> op(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix y = ctx.canon(mat_mul(f, mat_mul(f, c->element(i), c->element(j)), inverses[i]));
      const auto k = c->index_of(y);
      if (!k) throw InvariantViolation("Rack::from_class: class not closed under conjugation");
      op[i * n + j] = *k;
    }
  return Rack(n, std::move(op), std::move(c));
}

void Rack::build_inverse() {
  inv_.assign(n_ * n_, static_cast<std::uint32_t>(n_));
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) {
      auto& slot = inv_[x * n_ + op_[x * n_ + y]];
      if (slot != n_) throw InvariantViolation("Rack: phi_x is not a bijection");
      slot = static_cast<std::uint32_t>(y);
    }
}

void Rack::verify_axioms() const {
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (act(x, x) != x) throw InvariantViolation("Rack: x |> x != x");
    for (std::uint32_t y = 0; y < n_; ++y)
      if (act(x, y) == y && act(y, x) != x) throw InvariantViolation("Rack: crossed-set condition fails");
  }
  auto check = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    if (act(x, act(y, z)) != act(act(x, y), act(x, z))) throw InvariantViolation("Rack: self-distributivity fails");
  };
  if (n_ <= 200) {
    for (std::uint32_t x = 0; x < n_; ++x)
      for (std::uint32_t y = 0; y < n_; ++y)
        for (std::uint32_t z = 0; z < n_; ++z) check(x, y, z);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n_ - 1));
    for (int t = 0; t < 100'000; ++t) check(pick(rng), pick(rng), pick(rng));
  }
}

std::vector<std::uint32_t> inn_orbit(const Rack& r, const std::vector<std::uint32_t>& Y, std::uint32_t x) {
  if (std::find(Y.begin(), Y.end(), x) == Y.end())
    throw InvalidArgument("inn_orbit: x is not in Y");
  std::vector<char> seen(r.size(), 0);
  std::vector<std::uint32_t> orbit{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (auto y : Y)
      for (auto z : {r.act(y, orbit[i]), r.act_inv(y, orbit[i])})
        if (!seen[z]) {
          seen[z] = 1;
          orbit.push_back(z);
        }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<std::uint32_t>> inn_orbits(const Rack& r, const std::vector<std::uint32_t>& Y) {
  std::vector<char> done(r.size(), 0);
  std::vector<std::uint32_t> sorted = Y;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<std::uint32_t>> out;
  for (auto x : sorted) {
    if (done[x]) continue;
    auto o = inn_orbit(r, sorted, x);
    for (auto z : o) done[z] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

bool is_abelian(const Rack& r, const std::vector<std::uint32_t>& Y) {
  for (auto x : Y)
    for (auto y : Y)
      if (!r.commute(x, y)) return false;
  return true;
}

bool is_indecomposable(const Rack& r, const std::vector<std::uint32_t>& Y) {
  if (Y.empty()) throw InvalidArgument("is_indecomposable: empty set");
  return inn_orbit(r, Y, Y.front()).size() == std::set<std::uint32_t>(Y.begin(), Y.end()).size();
}

bool is_subrack(const Rack& r, const std::vector<std::uint32_t>& Y) {
  std::vector<char> in(r.size(), 0);
  for (auto y : Y) in[y] = 1;
  for (auto x : Y)
    for (auto y : Y)
      if (!in[r.act(x, y)] || !in[r.act_inv(x, y)]) return false;
  return true;
}

Subrack subrack_closure(const Rack& r, std::vector<std::uint32_t> seed) {
  std::vector<char> in(r.size(), 0);
  std::vector<std::uint32_t> members;
  for (auto s : seed) {
    if (s >= r.size()) throw InvalidArgument("subrack_closure: seed outside the rack");
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  }
  // Each new element is paired with every earlier one, both ways.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const auto a = members[i], b = members[j];
      for (auto z : {r.act(a, b), r.act(b, a), r.act_inv(a, b), r.act_inv(b, a)})
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
        }
    }
  std::sort(members.begin(), members.end());
  return {&r, std::move(members)};
}

bool RackMorphism::is_morphism() const {
  if (map.size() != src->size()) return false;
  for (std::uint32_t a = 0; a < src->size(); ++a)
    for (std::uint32_t b = 0; b < src->size(); ++b)
      if (map[src->act(a, b)] != dst->act(map[a], map[b])) return false;
  return true;
}

bool RackMorphism::is_surjective() const {
  std::vector<char> hit(dst->size(), 0);
  for (auto v : map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

ProjectedRack project_rack(const ConjClass& c, const CentralQuotient& quo) {
  if (c.ctx()->is_projective() || c.ctx()->dim() != quo.ctx()->dim() || !c.ctx()->field().same(quo.ctx()->field()))
    throw InvalidArgument("project_rack: class must live in the quotient's parent");
  std::vector<Matrix> gens;
  for (const auto& g : c.ambient_generators()) gens.push_back(quo.project(g));
  auto image_class = std::make_shared<const ConjClass>(conj_class(quo.ctx(), gens, quo.project(c.base())));
  ProjectedRack out{image_class, Rack::from_class(image_class), 0, {}};
  std::vector<std::size_t> counts(image_class->size(), 0);
  for (const auto& x : c.elements()) {
    const auto k = image_class->index_of(quo.project(x));
    if (!k) throw InvariantViolation("project_rack: image outside the projected class");
    out.map.push_back(*k);
    ++counts[*k];
  }
  out.fiber = counts.front();
  for (auto k : counts)
    if (k != out.fiber) throw InvariantViolation("project_rack: fibers are not uniform");
  // pi(a |> b) = pi(a) |> pi(b): exhaustive on small classes, sampled above.
  const auto& lctx = *c.ctx();
  auto check = [&](std::uint32_t a, std::uint32_t b) {
    const auto k = image_class->index_of(quo.project(lctx.conj(c.element(a), c.element(b))));
    if (!k || *k != out.image.act(out.map[a], out.map[b]))
      throw InvariantViolation("project_rack: projection is not a rack morphism");
  };
  const auto n = static_cast<std::uint32_t>(c.size());
  if (n <= 300) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) check(a, b);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    for (int t = 0; t < 10'000; ++t) check(pick(rng), pick(rng));
  }
  return out;
}

}  // namespace clab
