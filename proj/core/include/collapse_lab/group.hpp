#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "collapse_lab/gf.hpp"
#include "collapse_lab/matrix.hpp"

namespace clab {

inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;

// Element arithmetic for matrices over one field, optionally modulo the scalars
// lambda*I with lambda^n = 1. Projective elements are canonical representatives.
class GroupContext {
 public:
  GroupContext(FieldPtr field, int n, bool projective);
  static std::shared_ptr<const GroupContext> linear(FieldPtr field, int n);
  static std::shared_ptr<const GroupContext> projective(FieldPtr field, int n);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int dim() const { return n_; }
  bool is_projective() const { return projective_; }
  // lambda with lambda^n = 1; {1} for linear contexts.
  const std::vector<Field::Elem>& scalars() const { return scalars_; }

  Matrix canon(const Matrix& m) const;
  Matrix identity() const { return Matrix::identity(n_); }
  Matrix mul(const Matrix& a, const Matrix& b) const { return canon(mat_mul(*field_, a, b)); }
  Matrix inv(const Matrix& a) const { return canon(mat_inv(*field_, a)); }
  Matrix conj(const Matrix& g, const Matrix& x) const;  // g x g^-1
  Matrix pow(const Matrix& a, std::uint64_t e) const { return canon(mat_pow(*field_, a, e)); }
  bool is_identity(const Matrix& a) const { return canon(a) == identity(); }
  bool commute(const Matrix& a, const Matrix& b) const { return mul(a, b) == mul(b, a); }
  std::uint64_t order(const Matrix& a) const;

 private:
  FieldPtr field_;
  int n_;
  bool projective_;
  std::vector<Field::Elem> scalars_;
};

using CtxPtr = std::shared_ptr<const GroupContext>;

enum class GroupKind { SL, Sp, PSL, Closure };
std::string to_string(GroupKind k);

// A materialized finite matrix group: elements sorted canonically and indexed.
class GroupHandle {
 public:
  GroupHandle(CtxPtr ctx, GroupKind kind, std::vector<Matrix> gens, std::vector<Matrix> elems,
              std::optional<Matrix> form = std::nullopt);

  const CtxPtr& ctx() const { return ctx_; }
  GroupKind kind() const { return kind_; }
  const std::vector<Matrix>& generators() const { return gens_; }
  const std::vector<Matrix>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const Matrix& m) const { return index_.count(ctx_->canon(m)) != 0; }
  std::optional<std::uint32_t> index_of(const Matrix& m) const;
  const std::optional<Matrix>& form() const { return form_; }

 private:
  CtxPtr ctx_;
  GroupKind kind_;
  std::vector<Matrix> gens_;
  std::vector<Matrix> elems_;
  std::unordered_map<Matrix, std::uint32_t, MatrixHash> index_;
  std::optional<Matrix> form_;
};

GroupHandle closure(const CtxPtr& ctx, std::vector<Matrix> gens, std::uint64_t cap = kDefaultGroupCap,
                    GroupKind kind = GroupKind::Closure);

std::uint64_t sl_order(int n, std::uint64_t q);  // saturates at UINT64_MAX
std::vector<Matrix> sl_generators(const Field& f, int n);
GroupHandle sl_group(const FieldPtr& f, int n, std::uint64_t cap = kDefaultGroupCap);
GroupHandle sl_group(int n, std::uint64_t q, std::uint64_t cap = kDefaultGroupCap);

// Signed antidiagonal: +1 at (i, 2n-1-i) for i < n, -1 for i >= n.
Matrix sp_preset_form(const Field& f, int dim);
bool sp_form_check(const Field& f, const Matrix& m, const Matrix& form);  // M^T F M == F
std::vector<Matrix> sp_generators(const Field& f, const Matrix& form);     // symplectic transvections
std::uint64_t sp_order(int dim, std::uint64_t q);
// gens empty: symplectic transvections of the form.
GroupHandle sp_group(const FieldPtr& f, int dim, const Matrix& form, std::uint64_t cap = kDefaultGroupCap,
                     std::vector<Matrix> gens = {});
// Basis of the alternating forms F with M^T F M = F for every generator.
std::vector<Matrix> invariant_alternating_forms(const Field& f, const std::vector<Matrix>& gens);
// A -> diag(A, J A^{-T} J), J the antidiagonal of ones.
Matrix symplectic_embedding(const Field& f, const Matrix& a);

// Permutation matrices over GF(2): P e_i = e_{sigma(i)}; composition matches matrix product.
Matrix permutation_matrix(const std::vector<int>& images);
Matrix permutation_from_cycles(int n, const std::string& cycles);  // "(1,2)(3,4)", 1-based
std::string permutation_cycles(const Matrix& p);
std::vector<Matrix> symmetric_group_generators(int n);  // all transpositions

// Full conjugation orbit of a base point under a generating set.
class ConjClass {
 public:
  ConjClass(CtxPtr ctx, std::vector<Matrix> ambient_gens, Matrix base, std::vector<Matrix> elems);

  const CtxPtr& ctx() const { return ctx_; }
  const std::vector<Matrix>& ambient_generators() const { return gens_; }
  const Matrix& base() const { return base_; }
  const std::vector<Matrix>& elements() const { return elems_; }
  const Matrix& element(std::uint32_t i) const { return elems_[i]; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const Matrix& m) const { return index_.count(ctx_->canon(m)) != 0; }
  std::optional<std::uint32_t> index_of(const Matrix& m) const;
  std::uint32_t base_index() const { return *index_of(base_); }

 private:
  CtxPtr ctx_;
  std::vector<Matrix> gens_;
  Matrix base_;
  std::vector<Matrix> elems_;
  std::unordered_map<Matrix, std::uint32_t, MatrixHash> index_;
};

ConjClass conj_class(const CtxPtr& ctx, const std::vector<Matrix>& ambient_gens, const Matrix& x,
                     std::uint64_t cap = kDefaultGroupCap);
// Requires x in G.
ConjClass conj_class(const GroupHandle& g, const Matrix& x, std::uint64_t cap = kDefaultGroupCap);
// Partition of a materialized group into classes, ordered by least element.
std::vector<ConjClass> all_classes(const GroupHandle& g);

// SL_n -> PSL_n. The parent must live in a linear context.
class CentralQuotient {
 public:
  explicit CentralQuotient(std::shared_ptr<const GroupHandle> parent);

  const GroupHandle& parent() const { return *parent_; }
  const CtxPtr& ctx() const { return ctx_; }
  const std::vector<Matrix>& center() const { return center_; }
  Matrix project(const Matrix& m) const { return ctx_->canon(m); }
  GroupHandle image(std::uint64_t cap = kDefaultGroupCap) const;

 private:
  std::shared_ptr<const GroupHandle> parent_;
  CtxPtr ctx_;
  std::vector<Matrix> center_;
};

CentralQuotient central_quotient(std::shared_ptr<const GroupHandle> g);

// Scalars c (lambda^n = 1, lambda in the field) with c x in the class of x in G.
// Throws InvariantViolation if the result is not a subgroup.
std::vector<Field::Elem> n_bracket(const GroupHandle& g, const Matrix& x, std::uint64_t cap = kDefaultGroupCap);

std::uint64_t element_order(const GroupContext& ctx, const Matrix& g);
bool is_semisimple(const GroupContext& ctx, const Matrix& g);
bool is_irreducible_elem(const Field& f, const Matrix& m);

}  // namespace clab
