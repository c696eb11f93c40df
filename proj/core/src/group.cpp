#include "collapse_lab/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <set>
#include <unordered_set>

#include "collapse_lab/error.hpp"

namespace clab {

GroupContext::GroupContext(FieldPtr field, int n, bool projective)
    : field_(std::move(field)), n_(n), projective_(projective) {
  if (n < 1) throw InvalidArgument("GroupContext: dimension must be positive");
  scalars_.push_back(1);
  if (projective_)
    for (Field::Elem l = 2; l < field_->q(); ++l)
      if (field_->pow(l, static_cast<std::uint64_t>(n)) == 1) scalars_.push_back(l);
  std::sort(scalars_.begin(), scalars_.end());
}

std::shared_ptr<const GroupContext> GroupContext::linear(FieldPtr field, int n) {
  return std::make_shared<const GroupContext>(std::move(field), n, false);
}

std::shared_ptr<const GroupContext> GroupContext::projective(FieldPtr field, int n) {
  return std::make_shared<const GroupContext>(std::move(field), n, true);
}

Matrix GroupContext::canon(const Matrix& m) const {
  if (scalars_.size() == 1) return m;
  Matrix best = m;
  for (auto l : scalars_) {
    if (l == 1) continue;
    Matrix c = mat_scale(*field_, m, l);
    if (c < best) best = std::move(c);
  }
  return best;
}

Matrix GroupContext::conj(const Matrix& g, const Matrix& x) const {
  return canon(mat_mul(*field_, mat_mul(*field_, g, x), mat_inv(*field_, g)));
}

std::uint64_t GroupContext::order(const Matrix& a) const {
  const Matrix e = identity();
  const Matrix c = canon(a);
  Matrix x = c;
  for (std::uint64_t k = 1; k <= 100'000'000; ++k) {
    if (x == e) return k;
    x = mul(x, c);
  }
  throw CapExceeded("element order exceeds iteration bound", 100'000'000);
}

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::SL: return "SL";
    case GroupKind::Sp: return "Sp";
    case GroupKind::PSL: return "PSL";
    case GroupKind::Closure: return "closure";
  }
  return "?";
}

GroupHandle::GroupHandle(CtxPtr ctx, GroupKind kind, std::vector<Matrix> gens, std::vector<Matrix> elems,
                         std::optional<Matrix> form)
    : ctx_(std::move(ctx)), kind_(kind), gens_(std::move(gens)), elems_(std::move(elems)), form_(std::move(form)) {
  std::sort(elems_.begin(), elems_.end());
  index_.reserve(elems_.size());
  for (std::uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
}

std::optional<std::uint32_t> GroupHandle::index_of(const Matrix& m) const {
  auto it = index_.find(ctx_->canon(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupHandle closure(const CtxPtr& ctx, std::vector<Matrix> gens, std::uint64_t cap, GroupKind kind) {
  for (auto& g : gens) {
    if (g.dim() != ctx->dim()) throw InvalidArgument("closure: generator dimension mismatch");
    if (det(ctx->field(), g) == 0) throw InvalidArgument("closure: singular generator");
    g = ctx->canon(g);
  }
  std::unordered_set<Matrix, MatrixHash> seen;
  std::vector<Matrix> elems;
  elems.push_back(ctx->identity());
  seen.insert(elems.back());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Matrix p = ctx->mul(elems[i], g);
      if (seen.insert(p).second) {
        elems.push_back(std::move(p));
        if (elems.size() > cap) throw CapExceeded("closure: group exceeds cap", cap);
      }
    }
  return GroupHandle(ctx, kind, std::move(gens), std::move(elems));
}

static std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

static std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r = sat_mul(r, b);
  return r;
}

std::uint64_t sl_order(int n, std::uint64_t q) {
  std::uint64_t r = sat_pow(q, static_cast<std::uint64_t>(n) * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) r = sat_mul(r, sat_pow(q, i) - 1);
  return r;
}

std::uint64_t sp_order(int dim, std::uint64_t q) {
  const int n = dim / 2;
  std::uint64_t r = sat_pow(q, static_cast<std::uint64_t>(n) * n);
  for (int i = 1; i <= n; ++i) r = sat_mul(r, sat_pow(q, 2 * i) - 1);
  return r;
}

std::vector<Matrix> sl_generators(const Field& f, int n) {
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Field::Elem l = 1; l < f.q(); ++l) gens.push_back(elementary(n, i, j, l));
    }
  return gens;
}

GroupHandle sl_group(const FieldPtr& f, int n, std::uint64_t cap) {
  const auto order = sl_order(n, f->q());
  if (order > cap)
    throw CapExceeded("sl_group: |SL_" + std::to_string(n) + "(" + std::to_string(f->q()) + ")| = " +
                          std::to_string(order) + " exceeds cap " + std::to_string(cap),
                      cap, order);
  auto g = closure(GroupContext::linear(f, n), sl_generators(*f, n), cap, GroupKind::SL);
  if (g.size() != order) throw InvariantViolation("sl_group: closure size differs from the order formula");
  return g;
}

GroupHandle sl_group(int n, std::uint64_t q, std::uint64_t cap) { return sl_group(Field::of_order(q), n, cap); }

Matrix sp_preset_form(const Field& f, int dim) {
  if (dim < 2 || dim % 2) throw InvalidArgument("sp_preset_form: dimension must be even");
  Matrix F(dim);
  const int n = dim / 2;
  for (int i = 0; i < dim; ++i) F(i, dim - 1 - i) = i < n ? f.one() : f.neg(f.one());
  return F;
}

bool sp_form_check(const Field& f, const Matrix& m, const Matrix& form) {
  if (m.dim() != form.dim()) return false;
  return mat_mul(f, mat_mul(f, transpose(m), form), m) == form;
}

std::vector<Matrix> sp_generators(const Field& f, const Matrix& form) {
  const int dim = form.dim();
  std::set<Matrix> out;
  std::uint64_t count = 1;
  for (int i = 0; i < dim; ++i) count *= f.q();
  // T = I + lambda v (F v)^T acts as x -> x + lambda B(x, v) v.
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::vector<Field::Elem> v(dim);
    std::uint64_t t = idx;
    for (int i = 0; i < dim; ++i) {
      v[i] = static_cast<Field::Elem>(t % f.q());
      t /= f.q();
    }
    std::vector<Field::Elem> fv(dim, 0);
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k < dim; ++k) fv[i] = f.add(fv[i], f.mul(form(i, k), v[k]));
    for (Field::Elem l = 1; l < f.q(); ++l) {
      Matrix T = Matrix::identity(dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) T(i, j) = f.add(T(i, j), f.mul(l, f.mul(v[i], fv[j])));
      out.insert(std::move(T));
    }
  }
  return {out.begin(), out.end()};
}

GroupHandle sp_group(const FieldPtr& f, int dim, const Matrix& form, std::uint64_t cap, std::vector<Matrix> gens) {
  if (form.dim() != dim) throw InvalidArgument("sp_group: form dimension mismatch");
  if (transpose(form) != mat_scale(*f, form, f->neg(1)) || det(*f, form) == 0)
    throw InvalidArgument("sp_group: form must be invertible and antisymmetric");
  for (int i = 0; i < dim; ++i)
    if (form(i, i) != 0) throw InvalidArgument("sp_group: form must be alternating");
  if (gens.empty()) gens = sp_generators(*f, form);
  for (const auto& g : gens)
    if (!sp_form_check(*f, g, form)) throw InvalidArgument("sp_group: generator fails the form check");
  const auto order = sp_order(dim, f->q());
  if (order > cap) throw CapExceeded("sp_group: group order exceeds cap", cap, order);
  auto h = closure(GroupContext::linear(f, dim), std::move(gens), cap, GroupKind::Sp);
  return GroupHandle(h.ctx(), GroupKind::Sp, h.generators(), h.elements(), form);
}

std::vector<Matrix> invariant_alternating_forms(const Field& f, const std::vector<Matrix>& gens) {
  if (gens.empty()) throw InvalidArgument("invariant_alternating_forms: need at least one matrix");
  const int n = gens.front().dim();
  const std::size_t cols = static_cast<std::size_t>(n) * n;
  auto var = [n](int k, int l) { return static_cast<std::size_t>(k) * n + l; };
  std::vector<std::vector<Field::Elem>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<Field::Elem> r(cols, 0);
      r[var(i, j)] = f.add(r[var(i, j)], 1);
      if (i != j) r[var(j, i)] = f.add(r[var(j, i)], 1);
      rows.push_back(std::move(r));
    }
  for (const auto& m : gens)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // (M^T F M)_{ij} - F_{ij} = sum_{k,l} M_{ki} F_{kl} M_{lj} - F_{ij}
        std::vector<Field::Elem> r(cols, 0);
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) r[var(k, l)] = f.mul(m(k, i), m(l, j));
        r[var(i, j)] = f.sub(r[var(i, j)], 1);
        rows.push_back(std::move(r));
      }
  std::vector<Matrix> out;
  for (const auto& v : nullspace(f, std::move(rows), cols)) {
    Matrix F(n);
    F.data() = v;
    out.push_back(std::move(F));
  }
  return out;
}

Matrix symplectic_embedding(const Field& f, const Matrix& a) {
  const int d = a.dim();
  Matrix J(d);
  for (int i = 0; i < d; ++i) J(i, d - 1 - i) = 1;
  const Matrix lower = mat_mul(f, mat_mul(f, J, transpose(mat_inv(f, a))), J);
  return block_diag({a, lower});
}

Matrix permutation_matrix(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  Matrix p(n);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    if (images[i] < 0 || images[i] >= n || hit[images[i]]) throw InvalidArgument("not a permutation");
    hit[images[i]] = true;
    p(images[i], i) = 1;
  }
  return p;
}

Matrix permutation_from_cycles(int n, const std::string& cycles) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::size_t i = 0;
  auto fail = [&] { throw InvalidArgument("malformed cycle notation '" + cycles + "'"); };
  while (i < cycles.size()) {
    if (std::isspace(static_cast<unsigned char>(cycles[i]))) {
      ++i;
      continue;
    }
    if (cycles[i] != '(') fail();
    ++i;
    std::vector<int> cyc;
    const bool commas = cycles.find(',', i) != std::string::npos && cycles.find(',', i) < cycles.find(')', i);
    while (i < cycles.size() && cycles[i] != ')') {
      if (cycles[i] == ',' || std::isspace(static_cast<unsigned char>(cycles[i]))) {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(cycles[i]))) fail();
      int v = 0;
      if (commas) {
        while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i]))) v = v * 10 + (cycles[i++] - '0');
      } else {
        v = cycles[i++] - '0';
      }
      if (v < 1 || v > n) fail();
      cyc.push_back(v - 1);
    }
    if (i >= cycles.size()) fail();
    ++i;
    // Right-to-left: the rightmost cycle acts first.
    std::vector<int> c(n);
    for (int k = 0; k < n; ++k) c[k] = k;
    for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k]] = cyc[(k + 1) % cyc.size()];
    std::vector<int> next(n);
    for (int k = 0; k < n; ++k) next[k] = img[c[k]];
    img = next;
  }
  return permutation_matrix(img);
}

std::string permutation_cycles(const Matrix& p) {
  const int n = p.dim();
  std::vector<int> img(n, -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (p(i, j) == 1) img[j] = i;
  std::vector<bool> done(n, false);
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (done[i] || img[i] == i) continue;
    s += "(";
    int k = i;
    bool first = true;
    while (!done[k]) {
      done[k] = true;
      if (!first) s += ",";
      s += std::to_string(k + 1);
      first = false;
      k = img[k];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

std::vector<Matrix> symmetric_group_generators(int n) {
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> img(n);
      for (int k = 0; k < n; ++k) img[k] = k;
      std::swap(img[i], img[j]);
      gens.push_back(permutation_matrix(img));
    }
  return gens;
}

ConjClass::ConjClass(CtxPtr ctx, std::vector<Matrix> ambient_gens, Matrix base, std::vector<Matrix> elems)
    : ctx_(std::move(ctx)), gens_(std::move(ambient_gens)), base_(ctx_->canon(base)), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  index_.reserve(elems_.size());
  for (std::uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
  if (!index_.count(base_)) throw InvariantViolation("ConjClass: base point missing from orbit");
}

std::optional<std::uint32_t> ConjClass::index_of(const Matrix& m) const {
  auto it = index_.find(ctx_->canon(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ConjClass conj_class(const CtxPtr& ctx, const std::vector<Matrix>& ambient_gens, const Matrix& x, std::uint64_t cap) {
  std::vector<Matrix> gens, gens_inv;
  for (const auto& g : ambient_gens) {
    gens.push_back(ctx->canon(g));
    gens_inv.push_back(ctx->inv(g));
  }
  const auto& f = ctx->field();
  std::unordered_set<Matrix, MatrixHash> seen;
  std::vector<Matrix> orbit{ctx->canon(x)};
  seen.insert(orbit.back());
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Matrix y = ctx->canon(mat_mul(f, mat_mul(f, gens[k], orbit[i]), gens_inv[k]));
      if (seen.insert(y).second) {
        orbit.push_back(std::move(y));
        if (orbit.size() > cap) throw CapExceeded("conj_class: orbit exceeds cap", cap);
      }
    }
  return ConjClass(ctx, gens, x, std::move(orbit));
}

ConjClass conj_class(const GroupHandle& g, const Matrix& x, std::uint64_t cap) {
  if (!g.contains(x)) throw InvalidArgument("conj_class: base point is not in the ambient group");
  return conj_class(g.ctx(), g.generators(), x, cap);
}

std::vector<ConjClass> all_classes(const GroupHandle& g) {
  std::vector<ConjClass> out;
  std::vector<bool> done(g.size(), false);
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    if (done[i]) continue;
    auto c = conj_class(g.ctx(), g.generators(), g.elements()[i]);
    for (const auto& y : c.elements()) done[*g.index_of(y)] = true;
    out.push_back(std::move(c));
  }
  return out;
}

CentralQuotient::CentralQuotient(std::shared_ptr<const GroupHandle> parent) : parent_(std::move(parent)) {
  if (parent_->ctx()->is_projective()) throw InvalidArgument("central_quotient: parent must be a linear group");
  ctx_ = GroupContext::projective(parent_->ctx()->field_ptr(), parent_->ctx()->dim());
  for (auto l : ctx_->scalars()) center_.push_back(Matrix::scalar(ctx_->dim(), l));
}

GroupHandle CentralQuotient::image(std::uint64_t cap) const {
  auto h = closure(ctx_, parent_->generators(), cap, GroupKind::PSL);
  return h;
}

CentralQuotient central_quotient(std::shared_ptr<const GroupHandle> g) { return CentralQuotient(std::move(g)); }

std::vector<Field::Elem> n_bracket(const GroupHandle& g, const Matrix& x, std::uint64_t cap) {
  if (g.ctx()->is_projective()) throw InvalidArgument("n_bracket: needs the linear group");
  const auto& f = g.ctx()->field();
  const auto cls = conj_class(g, x, cap);
  const auto lin = GroupContext::projective(g.ctx()->field_ptr(), g.ctx()->dim());
  std::vector<Field::Elem> out;
  for (auto l : lin->scalars())
    if (cls.contains(mat_scale(f, x, l))) out.push_back(l);
  for (auto a : out)
    for (auto b : out)
      if (std::find(out.begin(), out.end(), f.mul(a, b)) == out.end())
        throw InvariantViolation("n_bracket: result is not a subgroup");
  return out;
}

std::uint64_t element_order(const GroupContext& ctx, const Matrix& g) { return ctx.order(g); }

bool is_semisimple(const GroupContext& ctx, const Matrix& g) { return ctx.order(g) % ctx.field().p() != 0; }

bool is_irreducible_elem(const Field& f, const Matrix& m) { return poly_is_irreducible(f, char_poly(f, m)); }

}  // namespace clab
