#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "collapse_lab/arena.hpp"
#include "collapse_lab/group.hpp"
#include "collapse_lab/rack.hpp"

namespace clab {

struct SearchBounds {
  std::uint64_t pair_budget = 50'000'000;  // ordered pairs, type D and odd-order C scans
  std::uint64_t quad_budget = 200'000'000;
  std::uint64_t lattice_cap = 200'000;  // subgroup nodes
  std::uint64_t group_cap = kDefaultGroupCap;
  unsigned threads = 1;
};

// What was searched and whether "nothing found" is a proof.
struct BoundsRecord {
  std::uint64_t pairs_scanned = 0;
  bool pairs_complete = true;
  std::uint64_t quads_scanned = 0;
  bool quads_complete = true;
  std::uint64_t lattice_nodes = 0;
  bool lattice_complete = true;
  bool lattice_used = false;
  bool odd_order_shortcut = false;
  bool closure_truncated = false;

  bool complete() const { return pairs_complete && quads_complete && lattice_complete && !closure_truncated; }
  // "complete-pair-scan", "odd-order-pair-scan", "class-generated-lattice", "bounded"
  std::string regime() const;
};

struct WitnessD {
  Matrix r, s;
  std::uint32_t r_index = 0, s_index = 0;  // class indices, when searched
  std::uint64_t subgroup_order = 0;        // |<r,s>|, 0 when not materialized
  std::size_t orbit_r = 0, orbit_s = 0;    // in <r,s>
};

struct WitnessF {
  std::array<Matrix, 4> r;
  std::array<std::uint32_t, 4> index{};
  std::uint64_t subgroup_order = 0;
  std::array<std::size_t, 4> orbit{};
};

struct WitnessC {
  std::vector<Matrix> generators;  // of H
  Matrix r, s;
  std::size_t orbit_r = 0, orbit_s = 0;  // |O_r^H|, |O_s^H|
  std::uint64_t subgroup_order = 0;
  bool odd_shortcut = false;  // H = <r,s> with ord r odd; the size test is implied
};

enum class VerdictTag { TypeD, TypeF, TypeC, NoWitnessWithinBounds };
std::string to_string(VerdictTag t);

struct Verdict {
  VerdictTag tag = VerdictTag::NoWitnessWithinBounds;
  std::variant<std::monostate, WitnessD, WitnessF, WitnessC> witness;
  BoundsRecord bounds;
};

// Search ops require a rack built from a conjugacy class.
std::optional<WitnessD> check_type_d(const Rack& rack, const SearchBounds& b, BoundsRecord& rec);
// r1 is pinned to class element 0: every quadruple is conjugate to one containing it.
std::optional<WitnessF> check_type_f(const Rack& rack, const SearchBounds& b, BoundsRecord& rec);

// A subgroup generated by class elements, recorded by the class elements it contains.
struct LatticeNode {
  std::vector<std::uint32_t> generators;  // class indices
  std::vector<std::uint32_t> members;     // class indices in H, sorted
  std::uint64_t order = 0;
};

struct SubgroupLattice {
  std::vector<LatticeNode> nodes;  // sorted by (order, members)
  bool complete = true;
  bool closure_truncated = false;
};

// Fixed point of H -> <H, y>, y in the class, seeded by the cyclic groups.
// `ambient`, when given, must contain the class; products then come from its table.
SubgroupLattice class_subgroup_lattice(const ConjClass& c, std::uint64_t node_cap,
                                       std::uint64_t group_cap = kDefaultGroupCap,
                                       const GroupHandle* ambient = nullptr);

std::optional<WitnessC> check_type_c(const Rack& rack, const SearchBounds& b, BoundsRecord& rec,
                                     const GroupHandle* ambient = nullptr);

// D, then F, then C. Classes with at most two elements short-circuit to a complete "none".
Verdict classify(const Rack& rack, const SearchBounds& b, const GroupHandle* ambient = nullptr);

// Membership oracle for the class a witness claims to live in.
class ClassRef {
 public:
  explicit ClassRef(std::shared_ptr<const ConjClass> c);
  // Semisimple class of `base` in SL_n (linear ctx) or PSL_n (projective ctx): same
  // characteristic polynomial up to a scalar of the quotient, semisimple, det 1.
  static ClassRef semisimple(CtxPtr ctx, const Matrix& base);

  const CtxPtr& ctx() const { return ctx_; }
  bool contains(const Matrix& m) const;

 private:
  ClassRef() = default;
  CtxPtr ctx_;
  std::shared_ptr<const ConjClass> cls_;
  Poly chi_;
};

// Re-derives every invariant from scratch. Never throws.
bool verify_witness(const WitnessD& w, const ClassRef& c, std::uint64_t cap = kDefaultGroupCap);
bool verify_witness(const WitnessF& w, const ClassRef& c, std::uint64_t cap = kDefaultGroupCap);
bool verify_witness(const WitnessC& w, const ClassRef& c, std::uint64_t cap = kDefaultGroupCap);
bool verify_verdict(const Verdict& v, const ClassRef& c, std::uint64_t cap = kDefaultGroupCap);

// Type C at rack level: Y = R u S a subrack, R = O_r^{Inn Y}, S = O_s^{Inn Y}.
struct RackTypeC {
  std::uint32_t r = 0, s = 0;
  std::vector<std::uint32_t> R, S;  // sorted
};
bool verify_rack_type_c(const Rack& rack, const RackTypeC& w);
// Class-level witness -> rack-level data on the witness's own class rack.
RackTypeC to_rack_type_c(const Rack& rack, const WitnessC& w);
// Lift along a surjective morphism by the decreasing preimage/orbit iteration.
// Throws InvalidArgument if the morphism is not surjective or w does not verify.
RackTypeC pullback_type_c(const RackMorphism& pi, const RackTypeC& w);

struct AustereReport {
  bool pass = true;
  bool complete = true;
  std::uint64_t pairs_checked = 0;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> counterexample;
  std::size_t counterexample_size = 0;  // size of the offending 2-generated subrack
};
// Every 2-generated subrack is abelian or indecomposable. One member of each pair is
// pinned to an Inn-orbit representative.
AustereReport austere_check(const Rack& rack, std::uint64_t pair_budget = 50'000'000);

struct QuasiRealData {
  std::uint64_t order = 0;
  bool real = false;
  std::vector<std::uint64_t> j_witnesses;  // x^j in the class, x^j != x, 0 < j < ord
  bool j_squared_escapes = false;          // some witness with x^{j^2} != x
  bool quasi_real() const { return !j_witnesses.empty(); }
};
QuasiRealData quasi_real_data(const ConjClass& c);

enum class ScreenVerdict { AllRepsInfinite, NeedsRhoMinusOne, Inconclusive };
std::string to_string(ScreenVerdict v);
// torus_order: order of the maximal torus holding the element when it is irreducible,
// 0 when not applicable. An even torus with an even-order element defeats the screen.
ScreenVerdict abelian_screen(const QuasiRealData& d, std::uint64_t torus_order = 0);

}  // namespace clab
