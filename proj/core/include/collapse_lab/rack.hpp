#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "collapse_lab/group.hpp"

namespace clab {

// Finite crossed set with dense tables: op[i*n + j] = index of x_i |> x_j.
class Rack {
 public:
  // Verifies the axioms (exhaustive up to 200 elements, 10^5 sampled triples above).
  // Throws InvariantViolation on failure.
  static Rack from_table(std::size_t n, std::vector<std::uint32_t> op);
  static Rack from_class(std::shared_ptr<const ConjClass> c);

  std::size_t size() const { return n_; }
  std::uint32_t act(std::uint32_t x, std::uint32_t y) const { return op_[std::size_t{x} * n_ + y]; }
  std::uint32_t act_inv(std::uint32_t x, std::uint32_t y) const { return inv_[std::size_t{x} * n_ + y]; }
  bool commute(std::uint32_t x, std::uint32_t y) const { return act(x, y) == y; }
  const std::vector<std::uint32_t>& table() const { return op_; }
  const std::shared_ptr<const ConjClass>& provenance() const { return provenance_; }

 private:
  Rack(std::size_t n, std::vector<std::uint32_t> op, std::shared_ptr<const ConjClass> prov);
  void build_inverse();
  void verify_axioms() const;

  std::size_t n_ = 0;
  std::vector<std::uint32_t> op_;
  std::vector<std::uint32_t> inv_;
  std::shared_ptr<const ConjClass> provenance_;
};

// Member set of a rack; sorted, duplicate-free.
struct Subrack {
  const Rack* parent = nullptr;
  std::vector<std::uint32_t> members;
};

// Orbit of x under <phi_y : y in Y>, restricted to Y. Requires x in Y.
std::vector<std::uint32_t> inn_orbit(const Rack& r, const std::vector<std::uint32_t>& Y, std::uint32_t x);
// Partition of Y into Inn(Y)-orbits, each sorted, ordered by least element.
std::vector<std::vector<std::uint32_t>> inn_orbits(const Rack& r, const std::vector<std::uint32_t>& Y);
bool is_abelian(const Rack& r, const std::vector<std::uint32_t>& Y);
bool is_indecomposable(const Rack& r, const std::vector<std::uint32_t>& Y);  // throws on empty Y
// Y closed under |> and its inverse.
bool is_subrack(const Rack& r, const std::vector<std::uint32_t>& Y);
Subrack subrack_closure(const Rack& r, std::vector<std::uint32_t> seed);

struct RackMorphism {
  const Rack* src = nullptr;
  const Rack* dst = nullptr;
  std::vector<std::uint32_t> map;

  bool is_morphism() const;  // f(a |> b) = f(a) |> f(b) for all pairs
  bool is_surjective() const;
};

struct ProjectedRack {
  std::shared_ptr<const ConjClass> image_class;
  Rack image;
  std::size_t fiber = 0;
  std::vector<std::uint32_t> map;  // source index -> image index
};

// Image of a linear class under x -> canonical projective representative.
// Checks uniform fibers and that the map is a rack morphism.
ProjectedRack project_rack(const ConjClass& c, const CentralQuotient& quo);

}  // namespace clab
