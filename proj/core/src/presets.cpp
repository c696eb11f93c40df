#include "collapse_lab/presets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "collapse_lab/error.hpp"
#include "collapse_lab/ssclass.hpp"

namespace clab {

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

void claim(PresetReport& rep, std::string id, std::string expected, std::string observed) {
  const bool ok = expected == observed;
  rep.claims.push_back({std::move(id), ok, std::move(expected), std::move(observed)});
}

std::string set_text(std::vector<Matrix> ms) {
  std::sort(ms.begin(), ms.end());
  std::string out = "{";
  for (std::size_t i = 0; i < ms.size(); ++i) out += (i ? " " : "") + format_matrix(ms[i]);
  return out + "}";
}

std::string perm_set_text(std::vector<Matrix> ms) {
  std::vector<std::string> s;
  for (const auto& m : ms) s.push_back(permutation_cycles(m));
  std::sort(s.begin(), s.end());
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + s[i];
  return out + "}";
}

std::shared_ptr<const ConjClass> make_class(const CtxPtr& ctx, const std::vector<Matrix>& gens, const Matrix& x,
                                            std::uint64_t cap) {
  return std::make_shared<const ConjClass>(conj_class(ctx, gens, x, cap));
}

GroupHandle symmetric_group(int n, std::uint64_t cap) {
  return closure(GroupContext::linear(Field::create(2), n), symmetric_group_generators(n), cap);
}

std::string verdict_text(const Verdict& v) {
  if (v.tag != VerdictTag::NoWitnessWithinBounds) return to_string(v.tag);
  return v.bounds.complete() ? "kthulhu" : "NoWitnessWithinBounds";
}

// ---- SL_3(2), transvections ----------------------------------------------------

struct Sl32 {
  FieldPtr f = Field::create(2);
  CtxPtr ctx = GroupContext::linear(f, 3);
  Matrix x{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}};
  Matrix y{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  Matrix z{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}};
  Matrix v{{0, 1, 0}, {1, 0, 1}, {1, 0, 0}};
  Matrix w{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
};

PresetReport sl3_2_transvection(const SearchBounds& b) {
  PresetReport rep{"sl3-2-transvection", {}};
  const Sl32 s;
  const auto& ctx = s.ctx;
  claim(rep, "y = v x v^-1", "true", yes(ctx->conj(s.v, s.x) == s.y));
  claim(rep, "z = w x w^-1", "true", yes(ctx->conj(s.w, s.x) == s.z));
  const auto cls = make_class(ctx, sl_generators(*s.f, 3), s.x, b.group_cap);
  claim(rep, "class size", "21", std::to_string(cls->size()));

  const std::vector<Matrix> H{s.x, s.y, s.z};
  const ConjClass ox = conj_class(ctx, H, s.x), oy = conj_class(ctx, H, s.y);
  claim(rep, "|O_x^H|", "3", std::to_string(ox.size()));
  const Matrix e12{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, e12_13{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}};
  claim(rep, "O_x^H", set_text({s.x, e12, e12_13}), set_text(ox.elements()));
  claim(rep, "O_y^H = O_z^H", "true", yes(oy.contains(s.z)));
  const Matrix yz = ctx->conj(s.y, s.z);
  claim(rep, "y |> z = z^T, distinct from y and z", "true",
        yes(yz == transpose(s.z) && yz != s.z && yz != s.y && oy.contains(yz)));
  claim(rep, "O_x^H != O_y^H", "true", yes(!ox.contains(s.y)));
  claim(rep, "|O_y^H|", "6", std::to_string(oy.size()));

  WitnessC w{H, s.x, s.y, ox.size(), oy.size(), closure(ctx, H).size(), false};
  claim(rep, "published witness verifies (type C)", "true", yes(verify_witness(w, ClassRef(cls), b.group_cap)));

  const Rack rack = Rack::from_class(cls);
  const auto ambient = sl_group(s.f, 3, b.group_cap);
  BoundsRecord rec;
  claim(rep, "type D scan", "none", check_type_d(rack, b, rec) ? "found" : "none");
  claim(rep, "type F scan", "none", check_type_f(rack, b, rec) ? "found" : "none");
  const auto found = check_type_c(rack, b, rec, &ambient);
  claim(rep, "type C search verifies", "true", yes(found && verify_witness(*found, ClassRef(cls), b.group_cap)));
  claim(rep, "scans complete", "true", yes(rec.complete()));
  return rep;
}

// ---- Sp_4(3), type (2,2) ---------------------------------------------------------

struct Sp43 {
  FieldPtr f = Field::create(3);
  CtxPtr ctx = GroupContext::linear(f, 4);
  Matrix w{{1, 0, 0, 2}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  Matrix z{{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  Matrix y{{2, 0, 0, 2}, {0, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 0}};
  Matrix v{{1, 1, 1, 1}, {0, 0, 2, 1}, {1, 2, 0, 0}, {1, 1, 0, 0}};
  Matrix form = sp_preset_form(*f, 4);
};

PresetReport sp4_3_pair(const SearchBounds& b) {
  PresetReport rep{"sp4-3-pair", {}};
  const Sp43 s;
  const auto& ctx = s.ctx;
  const auto forms = invariant_alternating_forms(*s.f, {s.w, s.z, s.y, s.v});
  claim(rep, "invariant alternating forms", "1-dim, preset",
        forms.size() == 1 && (forms[0] == s.form || forms[0] == mat_scale(*s.f, s.form, 2)) ? "1-dim, preset"
                                                                                           : std::to_string(forms.size()) + "-dim");
  bool all_sp = true;
  for (const auto& m : {s.w, s.z, s.y, s.v}) all_sp = all_sp && sp_form_check(*s.f, m, s.form);
  claim(rep, "w, z, y, v preserve the form", "true", yes(all_sp));
  claim(rep, "y = v z v^-1", "true", yes(ctx->conj(s.v, s.z) == s.y));
  claim(rep, "ord z", "3", std::to_string(ctx->order(s.z)));

  const auto gens = sp_generators(*s.f, s.form);
  const auto zcls = make_class(ctx, gens, s.z, b.group_cap);
  claim(rep, "y in O_z", "true", yes(zcls->contains(s.y)));
  const ConjClass oz = conj_class(ctx, {s.z, s.y}, s.z), oy = conj_class(ctx, {s.z, s.y}, s.y);
  claim(rep, "O_z^<z,y> != O_y^<z,y>", "true", yes(!oz.contains(s.y)));
  WitnessC wc{{s.z, s.y}, s.z, s.y, oz.size(), oy.size(), 0, true};
  claim(rep, "pair verifies (type C, odd order)", "true", yes(verify_witness(wc, ClassRef(zcls), b.group_cap)));

  const auto wcls = make_class(ctx, gens, s.w, b.group_cap);
  claim(rep, "w and z in distinct classes", "true", yes(!wcls->contains(s.z)));
  BoundsRecord rec;
  const auto d = check_type_d(Rack::from_class(wcls), b, rec);
  claim(rep, "w class: type D witness verifies", "true", yes(d && verify_witness(*d, ClassRef(wcls), b.group_cap)));
  BoundsRecord zrec;
  claim(rep, "z class: type D scan", "none", check_type_d(Rack::from_class(zcls), b, zrec) ? "found" : "none");
  return rep;
}

// ---- S_6 = Sp_4(2), double transpositions ---------------------------------------

PresetReport s6_double_transpositions(const SearchBounds& b) {
  PresetReport rep{"s6-double-transpositions", {}};
  const auto f = Field::create(2);
  const auto ctx = GroupContext::linear(f, 6);
  auto p = [](const char* c) { return permutation_from_cycles(6, c); };
  const Matrix x = p("(1,2)(3,4)"), y = p("(3,6)(4,5)"), z = p("(1,6)(2,5)");
  const auto cls = make_class(ctx, symmetric_group_generators(6), x, b.group_cap);
  claim(rep, "class size", "45", std::to_string(cls->size()));
  const std::vector<Matrix> H{x, y, z};
  const ConjClass ox = conj_class(ctx, H, x), oy = conj_class(ctx, H, y);
  claim(rep, "|O_x^H|, |O_y^H|", "3,6", std::to_string(ox.size()) + "," + std::to_string(oy.size()));
  claim(rep, "O_x^H", perm_set_text({x, p("(1,2)(5,6)"), p("(3,4)(5,6)")}), perm_set_text(ox.elements()));
  claim(rep, "O_y^H",
        perm_set_text({y, z, p("(1,3)(2,4)"), p("(3,5)(4,6)"), p("(1,5)(2,6)"), p("(1,4)(2,3)")}),
        perm_set_text(oy.elements()));
  claim(rep, "y |> x", permutation_cycles(p("(1,2)(5,6)")), permutation_cycles(ctx->conj(y, x)));
  claim(rep, "z |> x", permutation_cycles(p("(3,4)(5,6)")), permutation_cycles(ctx->conj(z, x)));
  const auto Hg = closure(ctx, H);
  claim(rep, "H is a proper subgroup", "true", yes(Hg.size() < 720));
  WitnessC w{H, x, y, ox.size(), oy.size(), Hg.size(), false};
  claim(rep, "witness verifies (type C)", "true", yes(verify_witness(w, ClassRef(cls), b.group_cap)));
  return rep;
}

// ---- Sp_6(2), W(1) + W(2) via the SL_3 embedding --------------------------------

PresetReport sp6_2_embedding(const SearchBounds& b) {
  PresetReport rep{"sp6-2-embedding", {}};
  const Sl32 s;
  const auto& f = s.f;
  const auto ctx = GroupContext::linear(f, 6);
  const Matrix form = sp_preset_form(*f, 6);
  const Matrix x12{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  const Matrix ix = symplectic_embedding(*f, x12);
  Matrix expect = Matrix::identity(6);
  expect(0, 1) = 1;
  expect(4, 5) = 1;
  claim(rep, "iota(I+e12) = I+e12+e56", "true", yes(ix == expect));
  claim(rep, "iota(I+e12) preserves the form", "true", yes(sp_form_check(*f, ix, form)));

  const auto cls = make_class(ctx, sp_generators(*f, form), ix, b.group_cap);
  std::vector<Matrix> H;
  for (const auto& m : {s.x, s.y, s.z}) H.push_back(symplectic_embedding(*f, m));
  const ConjClass ox = conj_class(ctx, H, H[0]), oy = conj_class(ctx, H, H[1]);
  WitnessC w{H, H[0], H[1], ox.size(), oy.size(), closure(ctx, H).size(), false};
  claim(rep, "|O_x^H|, |O_y^H|", "3,6", std::to_string(ox.size()) + "," + std::to_string(oy.size()));
  claim(rep, "embedded witness verifies (type C)", "true", yes(verify_witness(w, ClassRef(cls), b.group_cap)));

  // The literal I + e12 + 2 e54 reduces mod 2 to a rank-one transvection.
  Matrix u = Matrix::identity(6);
  u(0, 1) = 1;
  claim(rep, "literal u mod 2 differs from iota(x)", "true", yes(u != ix && !cls->contains(u)));
  return rep;
}

// ---- Cube rack ---------------------------------------------------------------------

PresetReport cube_rack(const SearchBounds& b) {
  PresetReport rep{"cube-rack", {}};
  const auto f = Field::create(2);
  const auto ctx = GroupContext::linear(f, 4);
  const auto s4 = symmetric_group(4, b.group_cap);
  const auto cls = make_class(ctx, s4.generators(), permutation_from_cycles(4, "(1,2,3)"), b.group_cap);
  const Rack rack = Rack::from_class(cls);
  claim(rep, "size", "8", std::to_string(rack.size()));
  BoundsRecord rec;
  const auto c = check_type_c(rack, b, rec, &s4);
  claim(rep, "type C witness sizes", "4,4",
        c ? std::to_string(c->orbit_r) + "," + std::to_string(c->orbit_s) : "none");
  claim(rep, "witness verifies", "true", yes(c && verify_witness(*c, ClassRef(cls), b.group_cap)));
  if (c) {
    const RackTypeC rw = to_rack_type_c(rack, *c);
    claim(rep, "rack-level decomposition verifies", "true", yes(verify_rack_type_c(rack, rw)));
  }
  BoundsRecord drec;
  claim(rep, "type D scan", "none", check_type_d(rack, b, drec) ? "found" : "none");
  claim(rep, "type F scan", "none", check_type_f(rack, b, drec) ? "found" : "none");
  claim(rep, "scans complete", "true", yes(drec.complete() && rec.complete()));
  const auto aus = austere_check(rack);
  claim(rep, "austere", "fail", aus.pass ? "pass" : "fail");
  return rep;
}

// ---- SL_4(q), two equal blocks of X^2+1 -------------------------------------------

PresetReport sl4_7_involution(const SearchBounds& b) {
  PresetReport rep{"sl4-7-involution", {}};
  const auto f = Field::create(7);
  const auto lctx = GroupContext::linear(f, 4), pctx = GroupContext::projective(f, 4);
  const Field::Elem z = f->multiplicative_generator();
  claim(rep, "least generator of GF(7)^x", "3", std::to_string(z));
  const Field::Elem zi = f->inv(z), m1 = f->neg(1);
  const Matrix r{{0, f->neg(z), 0, 0}, {zi, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, m1, 0}};
  const Matrix s{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, m1, 0, 0}, {m1, 0, 0, 0}};
  const Poly target({1, 0, 2, 0, 1});  // (X^2+1)^2
  claim(rep, "chi(r) = chi(s) = (X^2+1)^2", "true",
        yes(char_poly(*f, r) == target && char_poly(*f, s) == target));
  const Matrix rs = lctx->mul(r, s);
  claim(rep, "(rs)^2", format_matrix(Matrix{{3, 0, 0, 0}, {0, 5, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 5}}),
        format_matrix(lctx->mul(rs, rs)));
  claim(rep, "ord pi(rs)", "6", std::to_string(pctx->order(rs)));

  const Matrix A = companion(*f, Poly({1, 0, 1}));
  const auto red = reduction_witness(f, block_diag({A, A}), b.group_cap);
  claim(rep, "reduction case", to_string(ReductionCase::TwoEqualBlocksOrder2), to_string(red.tag));
  const auto* wd = std::get_if<WitnessD>(&red.witness);
  claim(rep, "type D witness verifies in PSL_4(7)", "true",
        yes(wd && verify_witness(*wd, ClassRef::semisimple(pctx, red.normalized), b.group_cap)));
  return rep;
}

PresetReport sl4_3_involution(const SearchBounds& b) {
  PresetReport rep{"sl4-3-involution", {}};
  const auto f = Field::create(3);
  const auto lctx = GroupContext::linear(f, 4), pctx = GroupContext::projective(f, 4);
  const Matrix A{{0, 2}, {1, 0}};
  claim(rep, "A is the companion of X^2+1", "true", yes(A == companion(*f, Poly({1, 0, 1}))));
  const Matrix T = block_diag({A, A});
  const Matrix v{{1, 0, 0, 1}, {1, 1, 2, 1}, {1, 1, 0, 0}, {0, 0, 0, 1}};
  const Matrix s = lctx->conj(v, T);
  claim(rep, "s = v T v^-1", format_matrix(Matrix{{1, 2, 0, 0}, {2, 2, 0, 0}, {2, 0, 2, 1}, {0, 2, 1, 1}}),
        format_matrix(s));
  const Matrix Ts = lctx->mul(T, s);
  claim(rep, "ord(T s)", "12", std::to_string(lctx->order(Ts)));
  const auto po = pctx->order(Ts);
  claim(rep, "ord pi(T s) in {6,12}", "true", yes(po == 6 || po == 12));
  const auto red = reduction_witness(f, T, b.group_cap);
  claim(rep, "reduction case", to_string(ReductionCase::SL4Q3), to_string(red.tag));
  const auto* wd = std::get_if<WitnessD>(&red.witness);
  claim(rep, "type D witness verifies in PSL_4(3)", "true",
        yes(wd && verify_witness(*wd, ClassRef::semisimple(pctx, T), b.group_cap)));
  return rep;
}

// ---- PSL_2(q) involutions ----------------------------------------------------------

struct Psl2Involutions {
  std::shared_ptr<const GroupHandle> group;
  std::shared_ptr<const ConjClass> cls;
};

Psl2Involutions psl2_involutions(std::uint64_t q, std::uint64_t cap) {
  const auto f = Field::of_order(q);
  const auto sl = std::make_shared<const GroupHandle>(sl_group(f, 2, cap));
  const CentralQuotient quo(sl);
  auto g = std::make_shared<const GroupHandle>(quo.image(cap));
  const Matrix x = quo.project(semisimple_label(f, Poly({1, 0, 1})).representative);
  return {g, std::make_shared<const ConjClass>(conj_class(*g, x, cap))};
}

PresetReport psl2_7_involutions(const SearchBounds& b) {
  PresetReport rep{"psl2-7-involutions", {}};
  const auto inv = psl2_involutions(7, b.group_cap);
  claim(rep, "|PSL_2(7)|", "168", std::to_string(inv.group->size()));
  claim(rep, "class size", "21", std::to_string(inv.cls->size()));
  const Rack rack = Rack::from_class(inv.cls);
  BoundsRecord rec;
  claim(rep, "type D scan", "none", check_type_d(rack, b, rec) ? "found" : "none");
  claim(rep, "pairs scanned", "420", std::to_string(rec.pairs_scanned));
  claim(rep, "type F scan", "none", check_type_f(rack, b, rec) ? "found" : "none");
  claim(rep, "type C search", "none", check_type_c(rack, b, rec, inv.group.get()) ? "found" : "none");
  claim(rep, "all scans complete", "true", yes(rec.complete()));
  const auto lat = class_subgroup_lattice(*inv.cls, b.lattice_cap, b.group_cap, inv.group.get());
  std::set<std::uint64_t> orders;
  for (const auto& n : lat.nodes) orders.insert(n.order);
  claim(rep, "lattice holds orders 6, 8, 24", "true", yes(orders.count(6) && orders.count(8) && orders.count(24)));
  claim(rep, "verdict", "kthulhu", verdict_text(classify(rack, b, inv.group.get())));
  return rep;
}

PresetReport psl2_involutions_d(std::uint64_t q, const SearchBounds& b) {
  PresetReport rep{"psl2-" + std::to_string(q) + "-involutions", {}};
  const auto inv = psl2_involutions(q, b.group_cap);
  claim(rep, "class size", std::to_string(q % 4 == 1 ? q * (q + 1) / 2 : q * (q - 1) / 2),
        std::to_string(inv.cls->size()));
  BoundsRecord rec;
  const auto d = check_type_d(Rack::from_class(inv.cls), b, rec);
  claim(rep, "type D witness", "found", d ? "found" : "none");
  claim(rep, "witness verifies", "true", yes(d && verify_witness(*d, ClassRef(inv.cls), b.group_cap)));
  return rep;
}

PresetReport psl2_7_centralizer(const SearchBounds& b) {
  PresetReport rep{"psl2-7-centralizer", {}};
  const auto inv = psl2_involutions(7, b.group_cap);
  const auto& ctx = inv.group->ctx();
  const Matrix& x = inv.cls->base();
  std::vector<Matrix> cent;
  for (const auto& g : inv.group->elements())
    if (ctx->commute(g, x)) cent.push_back(g);
  claim(rep, "|C(x)|", "8", std::to_string(cent.size()));
  claim(rep, "|G| / |O|", "8", std::to_string(inv.group->size() / inv.cls->size()));
  std::size_t involutions = 0, order4 = 0;
  bool abelian = true;
  for (const auto& g : cent) {
    const auto o = ctx->order(g);
    involutions += o == 2;
    order4 += o == 4;
    for (const auto& h : cent) abelian = abelian && ctx->commute(g, h);
  }
  claim(rep, "C(x) is dihedral of order 8", "true", yes(!abelian && involutions == 5 && order4 == 2));
  claim(rep, "x is real", "true", yes(quasi_real_data(*inv.cls).real));
  claim(rep, "abelian screen", to_string(ScreenVerdict::NeedsRhoMinusOne),
        to_string(abelian_screen(quasi_real_data(*inv.cls))));
  return rep;
}

}  // namespace

bool PresetReport::pass() const {
  return !claims.empty() && std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{
      "sl3-2-transvection", "sp4-3-pair",           "s6-double-transpositions", "sp6-2-embedding",
      "cube-rack",          "sl4-7-involution",     "sl4-3-involution",         "psl2-7-involutions",
      "psl2-11-involutions", "psl2-13-involutions", "psl2-7-centralizer"};
  return names;
}

PresetReport run_preset(const std::string& name, const SearchBounds& b) {
  if (name == "sl3-2-transvection") return sl3_2_transvection(b);
  if (name == "sp4-3-pair") return sp4_3_pair(b);
  if (name == "s6-double-transpositions") return s6_double_transpositions(b);
  if (name == "sp6-2-embedding") return sp6_2_embedding(b);
  if (name == "cube-rack") return cube_rack(b);
  if (name == "sl4-7-involution") return sl4_7_involution(b);
  if (name == "sl4-3-involution") return sl4_3_involution(b);
  if (name == "psl2-7-involutions") return psl2_7_involutions(b);
  if (name == "psl2-11-involutions") return psl2_involutions_d(11, b);
  if (name == "psl2-13-involutions") return psl2_involutions_d(13, b);
  if (name == "psl2-7-centralizer") return psl2_7_centralizer(b);
  throw InvalidArgument("unknown preset: " + name);
}

std::vector<TableRow> count_vs_verdict_tables(const SearchBounds& b) {
  std::vector<TableRow> rows;
  auto add = [&](std::string id, std::string group, std::string cls, std::string expected, std::string observed) {
    const bool m = expected == observed;
    rows.push_back({std::move(id), std::move(group), std::move(cls), std::move(expected), std::move(observed), m});
  };
  auto preset_verdict = [&](const std::string& name, const std::string& ok) {
    return run_preset(name, b).pass() ? ok : std::string("mismatch");
  };

  {
    const auto f = Field::create(2);
    const auto g = sl_group(f, 3, b.group_cap);
    const Matrix reg{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
    const auto cls = std::make_shared<const ConjClass>(conj_class(g, reg));
    add("sl3-2-unipotent-3", "SL3(2)", "unipotent (3)", "kthulhu", verdict_text(classify(Rack::from_class(cls), b, &g)));
    const Matrix tv{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto tcls = std::make_shared<const ConjClass>(conj_class(g, tv));
    add("sl3-2-unipotent-21", "SL3(2)", "unipotent (2,1)", "TypeC",
        verdict_text(classify(Rack::from_class(tcls), b, &g)));
    const auto odd = std::make_shared<const ConjClass>(conj_class(g, companion(*f, Poly({1, 1, 0, 1}))));
    add("psl3-2-irreducible-7", "PSL3(2)", "irreducible X^3+X+1", "kthulhu",
        verdict_text(classify(Rack::from_class(odd), b, &g)));
  }
  {
    const auto s6 = symmetric_group(6, b.group_cap);
    const auto cls = std::make_shared<const ConjClass>(conj_class(s6, permutation_from_cycles(6, "(1,2)(3,4)")));
    add("sp4-2-v2-squared", "Sp4(2) = S6", "V(2)^2, double transpositions", "TypeC",
        verdict_text(classify(Rack::from_class(cls), b, &s6)));
  }
  add("sp4-3-22", "Sp4(3)", "(2,2), classes of z and w", "TypeC/TypeD", preset_verdict("sp4-3-pair", "TypeC/TypeD"));
  add("sp6-2-w1w2", "Sp6(2)", "W(1)+W(2)", "TypeC", preset_verdict("sp6-2-embedding", "TypeC"));
  add("s4-cube", "S4", "3-cycles (cube rack)", "TypeC", preset_verdict("cube-rack", "TypeC"));
  for (std::uint64_t q : {7, 11, 13}) {
    const auto inv = psl2_involutions(q, b.group_cap);
    const auto v = classify(Rack::from_class(inv.cls), b, inv.group.get());
    add("psl2-" + std::to_string(q) + "-involutions", "PSL2(" + std::to_string(q) + ")", "involutions",
        q == 7 ? "kthulhu" : "TypeD", verdict_text(v));
  }
  return rows;
}

}  // namespace clab
