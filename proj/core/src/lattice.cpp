#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "collapse_lab/criteria.hpp"
#include "collapse_lab/error.hpp"

namespace clab {

namespace {

// Subgroups generated by class elements, keyed by the class elements they contain.
// Two class-generated subgroups with the same class members are equal.
class ClassClosures {
 public:
  ClassClosures(const ConjClass& c, std::uint64_t group_cap, const GroupHandle* ambient)
      : arena_(ambient ? ElementArena(*ambient) : ElementArena(c.ctx())), cap_(group_cap) {
    ids_.reserve(c.size());
    for (std::uint32_t i = 0; i < c.size(); ++i) {
      const std::uint32_t id = arena_.intern(c.element(i));
      ids_.push_back(id);
      to_class_.emplace(id, i);
    }
  }

  struct Result {
    std::vector<std::uint32_t> members;
    std::uint64_t order = 0;
  };

  // Throws CapExceeded.
  const Result& generate(std::vector<std::uint32_t> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;
    std::vector<std::uint32_t> g;
    for (auto x : gens) g.push_back(ids_[x]);
    const auto elems = arena_.closure(g, cap_);
    Result r;
    r.order = elems.size();
    for (auto e : elems)
      if (auto it = to_class_.find(e); it != to_class_.end()) r.members.push_back(it->second);
    std::sort(r.members.begin(), r.members.end());
    return memo_.emplace(std::move(gens), std::move(r)).first->second;
  }

 private:
  ElementArena arena_;
  std::uint64_t cap_;
  std::vector<std::uint32_t> ids_;
  std::unordered_map<std::uint32_t, std::uint32_t> to_class_;
  std::map<std::vector<std::uint32_t>, Result> memo_;
};

SubgroupLattice build_lattice(const ConjClass& c, ClassClosures& cc, std::uint64_t node_cap) {
  SubgroupLattice lat;
  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  std::deque<std::size_t> work;
  auto add = [&](std::vector<std::uint32_t> gens) -> bool {
    try {
      const auto& res = cc.generate(gens);
      if (seen.count(res.members)) return true;
      if (lat.nodes.size() >= node_cap) {
        lat.complete = false;
        return false;
      }
      seen.emplace(res.members, lat.nodes.size());
      lat.nodes.push_back({std::move(gens), res.members, res.order});
      work.push_back(lat.nodes.size() - 1);
    } catch (const CapExceeded&) {
      lat.complete = false;
      lat.closure_truncated = true;
    }
    return true;
  };

  const auto n = static_cast<std::uint32_t>(c.size());
  for (std::uint32_t x = 0; x < n; ++x)
    if (!add({x})) break;
  while (!work.empty() && lat.complete) {
    const std::size_t k = work.front();
    work.pop_front();
    const auto gens = lat.nodes[k].generators;
    const auto members = lat.nodes[k].members;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (std::binary_search(members.begin(), members.end(), y)) continue;
      auto g = gens;
      g.push_back(y);
      if (!add(std::move(g))) break;
    }
  }
  std::sort(lat.nodes.begin(), lat.nodes.end(), [](const LatticeNode& a, const LatticeNode& b) {
    return std::tie(a.order, a.members) < std::tie(b.order, b.members);
  });
  return lat;
}

std::optional<WitnessC> odd_order_scan(const Rack& rack, const ConjClass& cls, const SearchBounds& b,
                                       BoundsRecord& rec) {
  const std::size_t n = rack.size();
  const std::uint64_t total = std::uint64_t{n} * (n - 1) / 2;
  std::uint64_t scanned = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (scanned >= b.pair_budget) {
        rec.pairs_scanned += scanned;
        rec.pairs_complete = rec.pairs_complete && scanned >= total;
        return std::nullopt;
      }
      ++scanned;
      if (rack.commute(i, j)) continue;
      const std::vector<std::uint32_t> Y = subrack_closure(rack, {i, j}).members;
      const auto R = inn_orbit(rack, Y, i);
      if (std::binary_search(R.begin(), R.end(), j)) continue;
      const auto S = inn_orbit(rack, Y, j);
      rec.pairs_scanned += scanned;
      WitnessC w;
      w.r = cls.element(i);
      w.s = cls.element(j);
      w.generators = {w.r, w.s};
      w.orbit_r = R.size();
      w.orbit_s = S.size();
      w.odd_shortcut = true;
      try {
        w.subgroup_order = closure(cls.ctx(), w.generators, b.group_cap).size();
      } catch (const CapExceeded&) {
        w.subgroup_order = 0;
      }
      return w;
    }
  }
  rec.pairs_scanned += scanned;
  return std::nullopt;
}

}  // namespace

SubgroupLattice class_subgroup_lattice(const ConjClass& c, std::uint64_t node_cap, std::uint64_t group_cap,
                                       const GroupHandle* ambient) {
  ClassClosures cc(c, group_cap, ambient);
  return build_lattice(c, cc, node_cap);
}

std::optional<WitnessC> check_type_c(const Rack& rack, const SearchBounds& b, BoundsRecord& rec,
                                     const GroupHandle* ambient) {
  if (!rack.provenance()) throw InvalidArgument("check_type_c: rack has no class provenance");
  const ConjClass& cls = *rack.provenance();
  if (rack.size() <= 2) return std::nullopt;

  // Odd order: a class is of type C iff some noncommuting pair has distinct orbits in
  // <r, s>, so the pair scan alone decides.
  if (cls.ctx()->order(cls.base()) % 2 == 1) {
    rec.odd_order_shortcut = true;
    return odd_order_scan(rack, cls, b, rec);
  }

  rec.lattice_used = true;
  ClassClosures cc(cls, b.group_cap, ambient);
  const SubgroupLattice lat = build_lattice(cls, cc, b.lattice_cap);
  rec.lattice_nodes += lat.nodes.size();
  if (!lat.complete) rec.lattice_complete = false;
  if (lat.closure_truncated) rec.closure_truncated = true;

  for (const LatticeNode& node : lat.nodes) {
    const auto orbits = inn_orbits(rack, node.members);
    for (std::size_t a = 0; a < orbits.size(); ++a) {
      for (std::size_t bb = a + 1; bb < orbits.size(); ++bb) {
        const auto& A = orbits[a];
        const auto& B = orbits[bb];
        std::optional<std::pair<std::uint32_t, std::uint32_t>> rs;
        for (auto r : A) {
          for (auto s : B)
            if (!rack.commute(r, s)) {
              rs = {r, s};
              break;
            }
          if (rs) break;
        }
        if (!rs) continue;
        // Shrink to H' = <A u B> and test there.
        std::vector<std::uint32_t> AB(A);
        AB.insert(AB.end(), B.begin(), B.end());
        try {
          const auto sub = cc.generate(AB);
          const auto R = inn_orbit(rack, sub.members, rs->first);
          if (std::binary_search(R.begin(), R.end(), rs->second)) continue;
          const auto S = inn_orbit(rack, sub.members, rs->second);
          std::vector<std::uint32_t> RS(R);
          RS.insert(RS.end(), S.begin(), S.end());
          const auto gen = cc.generate(RS);
          if (gen.members != sub.members) continue;
          const std::size_t lo = std::min(R.size(), S.size()), hi = std::max(R.size(), S.size());
          if (!(lo > 2 || hi > 4)) continue;
          WitnessC w;
          for (auto x : RS) w.generators.push_back(cls.element(x));
          w.r = cls.element(rs->first);
          w.s = cls.element(rs->second);
          w.orbit_r = R.size();
          w.orbit_s = S.size();
          w.subgroup_order = gen.order;
          return w;
        } catch (const CapExceeded&) {
          rec.closure_truncated = true;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace clab
