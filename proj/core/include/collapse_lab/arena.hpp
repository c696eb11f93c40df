#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "collapse_lab/group.hpp"

namespace clab {

// Interns group elements as dense ids. Built over a materialized ambient group,
// ids follow the canonical element order and products are memoized in a table.
class ElementArena {
 public:
  explicit ElementArena(CtxPtr ctx);
  explicit ElementArena(const GroupHandle& ambient, std::size_t table_cap = 2048);

  const CtxPtr& ctx() const { return ctx_; }
  std::uint32_t intern(const Matrix& m);
  std::optional<std::uint32_t> find(const Matrix& m) const;
  const Matrix& at(std::uint32_t id) const { return elems_[id]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b);
  std::uint32_t identity() const { return identity_; }
  std::size_t size() const { return elems_.size(); }

  // Subgroup generated by gens, as sorted ids. Throws CapExceeded.
  std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens, std::uint64_t cap);

 private:
  CtxPtr ctx_;
  std::vector<Matrix> elems_;
  std::unordered_map<Matrix, std::uint32_t, MatrixHash> index_;
  bool closed_ = false;  // every product is already interned
  std::size_t table_n_ = 0;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
};

}  // namespace clab
