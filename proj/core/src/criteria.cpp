#include "collapse_lab/criteria.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "collapse_lab/error.hpp"

namespace clab {

namespace {

const ConjClass& require_class(const Rack& rack, const char* op) {
  if (!rack.provenance()) throw InvalidArgument(std::string(op) + ": rack has no class provenance");
  return *rack.provenance();
}

// Orbit of x under the group generated by phi_g, g in gens. `seen` is scratch of size n.
std::size_t orbit_size_under(const Rack& rack, const std::uint32_t* gens, std::size_t ng, std::uint32_t x,
                             std::uint32_t target, bool& hit, std::vector<std::uint32_t>& seen,
                             std::uint32_t stamp, std::vector<std::uint32_t>& queue) {
  queue.clear();
  queue.push_back(x);
  seen[x] = stamp;
  hit = x == target;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::uint32_t y = queue[h];
    for (std::size_t k = 0; k < ng; ++k) {
      for (std::uint32_t z : {rack.act(gens[k], y), rack.act_inv(gens[k], y)}) {
        if (seen[z] == stamp) continue;
        seen[z] = stamp;
        if (z == target) hit = true;
        queue.push_back(z);
      }
    }
  }
  return queue.size();
}

struct Scratch {
  std::vector<std::uint32_t> seen;
  std::vector<std::uint32_t> queue;
  std::uint32_t stamp = 0;
  explicit Scratch(std::size_t n) : seen(n, 0) {}
  std::uint32_t next() {
    if (++stamp == 0) {
      std::fill(seen.begin(), seen.end(), 0);
      stamp = 1;
    }
    return stamp;
  }
};

std::size_t orbit_of(const Rack& rack, std::initializer_list<std::uint32_t> gens, std::uint32_t x, Scratch& sc) {
  bool hit = false;
  const std::vector<std::uint32_t> g(gens);
  return orbit_size_under(rack, g.data(), g.size(), x, x, hit, sc.seen, sc.next(), sc.queue);
}

std::uint64_t subgroup_order_or_zero(const CtxPtr& ctx, std::vector<Matrix> gens, std::uint64_t cap) {
  try {
    return closure(ctx, std::move(gens), cap).size();
  } catch (const CapExceeded&) {
    return 0;
  }
}

template <class F>
void run_strided(unsigned threads, std::size_t count, F&& body) {
  const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (t == 1) {
    body(0u, 1u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < t; ++k) pool.emplace_back([&, k] { body(k, t); });
  for (auto& th : pool) th.join();
}

void atomic_min(std::atomic<std::uint64_t>& a, std::uint64_t v) {
  std::uint64_t cur = a.load();
  while (v < cur && !a.compare_exchange_weak(cur, v)) {
  }
}

Poly radical(const Field& f, const Poly& chi) {
  Poly out({f.one()});
  for (const auto& [p, mult] : poly_factor(f, chi)) out = poly_mul(f, out, p);
  return out;
}

}  // namespace

std::string BoundsRecord::regime() const {
  if (!complete()) return "bounded";
  if (lattice_used) return "class-generated-lattice";
  if (odd_order_shortcut) return "odd-order-pair-scan";
  return "complete-pair-scan";
}

std::string to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::TypeD: return "TypeD";
    case VerdictTag::TypeF: return "TypeF";
    case VerdictTag::TypeC: return "TypeC";
    case VerdictTag::NoWitnessWithinBounds: return "NoWitnessWithinBounds";
  }
  return "?";
}

std::string to_string(ScreenVerdict v) {
  switch (v) {
    case ScreenVerdict::AllRepsInfinite: return "AllRepsInfinite";
    case ScreenVerdict::NeedsRhoMinusOne: return "NeedsRhoMinusOne";
    case ScreenVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::optional<WitnessD> check_type_d(const Rack& rack, const SearchBounds& b, BoundsRecord& rec) {
  const ConjClass& cls = require_class(rack, "check_type_d");
  const std::size_t n = rack.size();
  if (n <= 2) return std::nullopt;
  const std::uint64_t total = std::uint64_t{n} * (n - 1);
  const std::uint64_t limit = std::min(total, b.pair_budget);
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};

  // Rank of (i, j), j != i, in row-major order over ordered pairs.
  run_strided(b.threads, n, [&](unsigned k, unsigned t) {
    Scratch sc(n);
    for (std::uint32_t i = k; i < n; i += t) {
      const std::uint64_t row = std::uint64_t{i} * (n - 1);
      if (row >= limit || row >= best.load()) break;
      for (std::uint32_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const std::uint64_t rank = row + j - (j > i ? 1 : 0);
        if (rank >= limit || rank >= best.load()) break;
        if (rack.commute(i, j)) continue;
        // (rs)^2 = (sr)^2  <=>  r |> (s |> (r |> s)) = s
        if (rack.act(i, rack.act(j, rack.act(i, j))) == j) continue;
        bool hit = false;
        const std::uint32_t g[2] = {i, j};
        orbit_size_under(rack, g, 2, i, j, hit, sc.seen, sc.next(), sc.queue);
        if (!hit) atomic_min(best, rank);
      }
    }
  });

  const std::uint64_t found = best.load();
  if (found == kNone) {
    rec.pairs_scanned += limit;
    if (limit < total) rec.pairs_complete = false;
    return std::nullopt;
  }
  rec.pairs_scanned += found + 1;
  const auto i = static_cast<std::uint32_t>(found / (n - 1));
  std::uint32_t j = static_cast<std::uint32_t>(found % (n - 1));
  if (j >= i) ++j;
  WitnessD w;
  w.r = cls.element(i);
  w.s = cls.element(j);
  w.r_index = i;
  w.s_index = j;
  Scratch sc(n);
  w.orbit_r = orbit_of(rack, {i, j}, i, sc);
  w.orbit_s = orbit_of(rack, {i, j}, j, sc);
  w.subgroup_order = subgroup_order_or_zero(cls.ctx(), {w.r, w.s}, b.group_cap);
  return w;
}

std::optional<WitnessF> check_type_f(const Rack& rack, const SearchBounds& b, BoundsRecord& rec) {
  const ConjClass& cls = require_class(rack, "check_type_f");
  const std::size_t n = rack.size();
  if (n < 4) return std::nullopt;
  std::vector<std::uint32_t> cand;
  for (std::uint32_t j = 1; j < n; ++j)
    if (!rack.commute(0, j)) cand.push_back(j);
  const std::size_t m = cand.size();
  auto choose2 = [](std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; };

  // Deterministic truncation: a prefix of first-free-element choices whose worst-case
  // triple count fits the budget.
  std::size_t b_limit = 0;
  std::uint64_t budgeted = 0;
  while (b_limit < m) {
    const std::uint64_t here = choose2(m - 1 - b_limit);
    if (budgeted + here > b.quad_budget) break;
    budgeted += here;
    ++b_limit;
  }
  const bool truncated = b_limit < m;

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  std::atomic<std::uint64_t> examined{0};
  const std::uint64_t M = m;
  run_strided(b.threads, b_limit, [&](unsigned k, unsigned t) {
    Scratch sc(n);
    std::uint64_t local = 0;
    for (std::size_t bi = k; bi < b_limit; bi += t) {
      if (bi * M * M >= best.load()) break;
      const std::uint32_t x2 = cand[bi];
      for (std::size_t ci = bi + 1; ci < m; ++ci) {
        const std::uint32_t x3 = cand[ci];
        if (rack.commute(x2, x3)) continue;
        for (std::size_t di = ci + 1; di < m; ++di) {
          const std::uint32_t x4 = cand[di];
          if (rack.commute(x2, x4) || rack.commute(x3, x4)) continue;
          const std::uint64_t rank = (bi * M + ci) * M + di;
          if (rank >= best.load()) break;
          ++local;
          const std::uint32_t g[4] = {0, x2, x3, x4};
          bool distinct = true;
          for (int a = 0; a < 3 && distinct; ++a) {
            bool unused = false;
            orbit_size_under(rack, g, 4, g[a], g[a], unused, sc.seen, sc.next(), sc.queue);
            for (int c = a + 1; c < 4; ++c)
              if (sc.seen[g[c]] == sc.stamp) distinct = false;
          }
          if (distinct) atomic_min(best, rank);
        }
      }
    }
    examined += local;
  });

  const std::uint64_t found = best.load();
  if (found == kNone) {
    rec.quads_scanned += examined.load();
    if (truncated) rec.quads_complete = false;
    return std::nullopt;
  }
  const std::size_t bi = found / (M * M), ci = (found / M) % M, di = found % M;
  // Count in canonical order so the report does not depend on the thread count.
  std::uint64_t upto = 0;
  for (std::size_t x = 0; x <= bi; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      if (rack.commute(cand[x], cand[y])) continue;
      for (std::size_t z = y + 1; z < m; ++z) {
        if (rack.commute(cand[x], cand[z]) || rack.commute(cand[y], cand[z])) continue;
        if ((x * M + y) * M + z > found) break;
        ++upto;
      }
    }
  rec.quads_scanned += upto;

  WitnessF w;
  w.index = {0, cand[bi], cand[ci], cand[di]};
  std::vector<Matrix> gens;
  Scratch sc(n);
  for (int a = 0; a < 4; ++a) {
    w.r[a] = cls.element(w.index[a]);
    gens.push_back(w.r[a]);
  }
  for (int a = 0; a < 4; ++a) {
    bool hit = false;
    w.orbit[a] = orbit_size_under(rack, w.index.data(), 4, w.index[a], w.index[a], hit, sc.seen, sc.next(),
                                  sc.queue);
  }
  w.subgroup_order = subgroup_order_or_zero(cls.ctx(), gens, b.group_cap);
  return w;
}

Verdict classify(const Rack& rack, const SearchBounds& b, const GroupHandle* ambient) {
  require_class(rack, "classify");
  Verdict v;
  if (rack.size() <= 2) return v;
  if (auto d = check_type_d(rack, b, v.bounds)) {
    v.tag = VerdictTag::TypeD;
    v.witness = std::move(*d);
    return v;
  }
  if (auto f = check_type_f(rack, b, v.bounds)) {
    v.tag = VerdictTag::TypeF;
    v.witness = std::move(*f);
    return v;
  }
  if (auto c = check_type_c(rack, b, v.bounds, ambient)) {
    v.tag = VerdictTag::TypeC;
    v.witness = std::move(*c);
  }
  return v;
}

// ---- verification ---------------------------------------------------------------

ClassRef::ClassRef(std::shared_ptr<const ConjClass> c) : ctx_(c->ctx()), cls_(std::move(c)) {}

ClassRef ClassRef::semisimple(CtxPtr ctx, const Matrix& base) {
  ClassRef out;
  out.ctx_ = std::move(ctx);
  out.chi_ = char_poly(out.ctx_->field(), base);
  return out;
}

bool ClassRef::contains(const Matrix& m) const {
  if (cls_) return cls_->contains(m);
  const Field& f = ctx_->field();
  if (m.dim() != ctx_->dim()) return false;
  for (Field::Elem lam : ctx_->scalars()) {
    const Matrix x = mat_scale(f, m, lam);
    if (det(f, x) != f.one()) continue;
    const Poly chi = char_poly(f, x);
    if (chi != chi_) continue;
    const Matrix z = poly_eval_matrix(f, radical(f, chi), x);
    if (std::all_of(z.data().begin(), z.data().end(), [](auto e) { return e == 0; })) return true;
  }
  return false;
}

bool verify_witness(const WitnessD& w, const ClassRef& c, std::uint64_t cap) {
  try {
    const auto& ctx = c.ctx();
    if (!c.contains(w.r) || !c.contains(w.s)) return false;
    const Matrix rs = ctx->mul(w.r, w.s), sr = ctx->mul(w.s, w.r);
    if (ctx->mul(rs, rs) == ctx->mul(sr, sr)) return false;
    const ConjClass orb_r = conj_class(ctx, {w.r, w.s}, w.r, cap);
    if (orb_r.contains(w.s)) return false;
    if (w.orbit_r && orb_r.size() != w.orbit_r) return false;
    if (w.orbit_s && conj_class(ctx, {w.r, w.s}, w.s, cap).size() != w.orbit_s) return false;
    if (w.subgroup_order && closure(ctx, {w.r, w.s}, cap).size() != w.subgroup_order) return false;
    return true;
  } catch (...) {
    return false;
  }
}

bool verify_witness(const WitnessF& w, const ClassRef& c, std::uint64_t cap) {
  try {
    const auto& ctx = c.ctx();
    const std::vector<Matrix> gens(w.r.begin(), w.r.end());
    for (int a = 0; a < 4; ++a) {
      if (!c.contains(w.r[a])) return false;
      for (int b = a + 1; b < 4; ++b)
        if (ctx->commute(w.r[a], w.r[b])) return false;
    }
    for (int a = 0; a < 4; ++a) {
      const ConjClass orb = conj_class(ctx, gens, w.r[a], cap);
      if (w.orbit[a] && orb.size() != w.orbit[a]) return false;
      for (int b = 0; b < 4; ++b)
        if (b != a && orb.contains(w.r[b])) return false;
    }
    if (w.subgroup_order && closure(ctx, gens, cap).size() != w.subgroup_order) return false;
    return true;
  } catch (...) {
    return false;
  }
}

bool verify_witness(const WitnessC& w, const ClassRef& c, std::uint64_t cap) {
  try {
    const auto& ctx = c.ctx();
    if (!c.contains(w.r) || !c.contains(w.s)) return false;
    if (ctx->commute(w.r, w.s)) return false;
    const GroupHandle H = closure(ctx, w.generators, cap);
    if (!H.contains(w.r) || !H.contains(w.s)) return false;
    const ConjClass orb_r = conj_class(ctx, H.generators(), w.r, cap);
    const ConjClass orb_s = conj_class(ctx, H.generators(), w.s, cap);
    if (orb_r.contains(w.s)) return false;
    std::vector<Matrix> both = orb_r.elements();
    both.insert(both.end(), orb_s.elements().begin(), orb_s.elements().end());
    if (closure(ctx, both, cap).size() != H.size()) return false;
    const std::size_t lo = std::min(orb_r.size(), orb_s.size()), hi = std::max(orb_r.size(), orb_s.size());
    if (!(lo > 2 || hi > 4)) return false;
    if (w.orbit_r && w.orbit_r != orb_r.size()) return false;
    if (w.orbit_s && w.orbit_s != orb_s.size()) return false;
    if (w.subgroup_order && w.subgroup_order != H.size()) return false;
    return true;
  } catch (...) {
    return false;
  }
}

bool verify_verdict(const Verdict& v, const ClassRef& c, std::uint64_t cap) {
  switch (v.tag) {
    case VerdictTag::TypeD: {
      const auto* w = std::get_if<WitnessD>(&v.witness);
      return w && verify_witness(*w, c, cap);
    }
    case VerdictTag::TypeF: {
      const auto* w = std::get_if<WitnessF>(&v.witness);
      return w && verify_witness(*w, c, cap);
    }
    case VerdictTag::TypeC: {
      const auto* w = std::get_if<WitnessC>(&v.witness);
      return w && verify_witness(*w, c, cap);
    }
    case VerdictTag::NoWitnessWithinBounds:
      return std::holds_alternative<std::monostate>(v.witness);
  }
  return false;
}

// ---- rack-level type C and pullback ---------------------------------------------

bool verify_rack_type_c(const Rack& rack, const RackTypeC& w) {
  if (w.R.empty() || w.S.empty()) return false;
  if (!std::is_sorted(w.R.begin(), w.R.end()) || !std::is_sorted(w.S.begin(), w.S.end())) return false;
  std::vector<std::uint32_t> Y;
  std::set_union(w.R.begin(), w.R.end(), w.S.begin(), w.S.end(), std::back_inserter(Y));
  if (Y.size() != w.R.size() + w.S.size()) return false;
  if (Y.back() >= rack.size() || !is_subrack(rack, Y)) return false;
  if (!std::binary_search(w.R.begin(), w.R.end(), w.r) || !std::binary_search(w.S.begin(), w.S.end(), w.s))
    return false;
  if (rack.commute(w.r, w.s)) return false;
  if (inn_orbit(rack, Y, w.r) != w.R || inn_orbit(rack, Y, w.s) != w.S) return false;
  const std::size_t lo = std::min(w.R.size(), w.S.size()), hi = std::max(w.R.size(), w.S.size());
  return lo > 2 || hi > 4;
}

RackTypeC to_rack_type_c(const Rack& rack, const WitnessC& w) {
  const ConjClass& cls = require_class(rack, "to_rack_type_c");
  const auto& ctx = cls.ctx();
  auto indices = [&](const ConjClass& orb) {
    std::vector<std::uint32_t> out;
    for (const auto& m : orb.elements()) {
      const auto k = cls.index_of(m);
      if (!k) throw InvalidArgument("to_rack_type_c: orbit leaves the class");
      out.push_back(*k);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  RackTypeC out;
  const auto r = cls.index_of(w.r), s = cls.index_of(w.s);
  if (!r || !s) throw InvalidArgument("to_rack_type_c: witness not in the class");
  out.r = *r;
  out.s = *s;
  out.R = indices(conj_class(ctx, w.generators, w.r));
  out.S = indices(conj_class(ctx, w.generators, w.s));
  return out;
}

RackTypeC pullback_type_c(const RackMorphism& pi, const RackTypeC& w) {
  if (!pi.src || !pi.dst || pi.map.size() != pi.src->size()) throw InvalidArgument("pullback_type_c: bad morphism");
  if (!pi.is_surjective()) throw InvalidArgument("pullback_type_c: morphism is not surjective");
  if (!verify_rack_type_c(*pi.dst, w)) throw InvalidArgument("pullback_type_c: witness does not verify");
  const Rack& Z = *pi.src;

  std::vector<std::uint32_t> R, S;
  std::vector<char> inR(pi.dst->size(), 0), inS(pi.dst->size(), 0);
  for (auto x : w.R) inR[x] = 1;
  for (auto x : w.S) inS[x] = 1;
  std::optional<std::uint32_t> rt, st;
  for (std::uint32_t z = 0; z < Z.size(); ++z) {
    const auto x = pi.map[z];
    if (inR[x]) R.push_back(z);
    if (inS[x]) S.push_back(z);
    if (x == w.r && !rt) rt = z;
    if (x == w.s && !st) st = z;
  }
  // R_j = O_{r~}^{K_{j-1}}, S_j = O_{s~}^{K_{j-1}}, K_j generated by phi_y, y in Y_j.
  std::vector<std::uint32_t> Y;
  std::set_union(R.begin(), R.end(), S.begin(), S.end(), std::back_inserter(Y));
  for (;;) {
    auto R2 = inn_orbit(Z, Y, *rt);
    auto S2 = inn_orbit(Z, Y, *st);
    std::vector<std::uint32_t> Y2;
    std::set_union(R2.begin(), R2.end(), S2.begin(), S2.end(), std::back_inserter(Y2));
    R = std::move(R2);
    S = std::move(S2);
    if (Y2 == Y) break;
    Y = std::move(Y2);
  }
  RackTypeC out{*rt, *st, R, S};
  if (!verify_rack_type_c(Z, out) || R.size() < w.R.size() || S.size() < w.S.size())
    throw InvariantViolation("pullback_type_c: stabilized decomposition does not verify");
  return out;
}

// ---- austere and abelian screens --------------------------------------------------

AustereReport austere_check(const Rack& rack, std::uint64_t pair_budget) {
  AustereReport rep;
  const std::size_t n = rack.size();
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
  // Inner automorphisms carry <a, b> onto <g a, g b>, so a ranges over orbit representatives.
  for (const auto& orbit : inn_orbits(rack, all)) {
    const std::uint32_t a = orbit.front();
    for (std::uint32_t b = 0; b < n; ++b) {
      if (b == a) continue;
      if (rep.pairs_checked >= pair_budget) {
        rep.complete = false;
        return rep;
      }
      ++rep.pairs_checked;
      if (rack.commute(a, b) && rack.commute(b, a)) continue;  // {a, b} is already an abelian subrack
      const Subrack y = subrack_closure(rack, {a, b});
      if (is_abelian(rack, y.members) || is_indecomposable(rack, y.members)) continue;
      rep.pass = false;
      rep.counterexample = {std::min(a, b), std::max(a, b)};
      rep.counterexample_size = y.members.size();
      return rep;
    }
  }
  return rep;
}

QuasiRealData quasi_real_data(const ConjClass& c) {
  const auto& ctx = c.ctx();
  const Matrix& x = c.base();
  if (ctx->is_identity(x)) throw InvalidArgument("quasi_real_data: identity base point");
  QuasiRealData d;
  d.order = ctx->order(x);
  std::vector<Matrix> pw{ctx->identity()};
  for (std::uint64_t j = 1; j < d.order; ++j) pw.push_back(ctx->mul(pw.back(), x));
  d.real = c.contains(pw[d.order - 1]);
  for (std::uint64_t j = 2; j < d.order; ++j) {
    if (pw[j] == pw[1] || !c.contains(pw[j])) continue;
    d.j_witnesses.push_back(j);
    if (pw[(j * j) % d.order] != pw[1]) d.j_squared_escapes = true;
  }
  return d;
}

ScreenVerdict abelian_screen(const QuasiRealData& d, std::uint64_t torus_order) {
  const bool odd = d.order % 2 == 1;
  // Finite dimension forces rho(x) = -1, impossible at odd order.
  if (odd && (d.real || (d.quasi_real() && d.j_squared_escapes))) return ScreenVerdict::AllRepsInfinite;
  if (!odd && (d.real || d.quasi_real())) {
    if (torus_order != 0 && torus_order % 2 == 0) return ScreenVerdict::Inconclusive;
    return ScreenVerdict::NeedsRhoMinusOne;
  }
  return ScreenVerdict::Inconclusive;
}

}  // namespace clab
