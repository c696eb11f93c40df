#include "collapse_lab/arena.hpp"

#include <algorithm>
#include <limits>

#include "collapse_lab/error.hpp"

namespace clab {

namespace {
constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
}

ElementArena::ElementArena(CtxPtr ctx) : ctx_(std::move(ctx)) { identity_ = intern(ctx_->identity()); }

ElementArena::ElementArena(const GroupHandle& ambient, std::size_t table_cap) : ctx_(ambient.ctx()) {
  elems_ = ambient.elements();
  index_.reserve(elems_.size());
  for (std::uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
  closed_ = true;
  identity_ = index_.at(ctx_->identity());
  if (elems_.size() <= table_cap) {
    table_n_ = elems_.size();
    table_.assign(table_n_ * table_n_, kUnset);
  }
}

std::uint32_t ElementArena::intern(const Matrix& m) {
  Matrix c = ctx_->canon(m);
  auto it = index_.find(c);
  if (it != index_.end()) return it->second;
  if (closed_) throw InvalidArgument("ElementArena: element outside the ambient group");
  const auto id = static_cast<std::uint32_t>(elems_.size());
  index_.emplace(c, id);
  elems_.push_back(std::move(c));
  return id;
}

std::optional<std::uint32_t> ElementArena::find(const Matrix& m) const {
  auto it = index_.find(ctx_->canon(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ElementArena::mul(std::uint32_t a, std::uint32_t b) {
  if (table_n_) {
    auto& slot = table_[std::size_t{a} * table_n_ + b];
    if (slot == kUnset) slot = intern(ctx_->mul(elems_[a], elems_[b]));
    return slot;
  }
  return intern(ctx_->mul(elems_[a], elems_[b]));
}

std::vector<std::uint32_t> ElementArena::closure(const std::vector<std::uint32_t>& gens, std::uint64_t cap) {
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  auto seen = [&](std::uint32_t id) {
    if (id >= mark_.size()) mark_.resize(std::max<std::size_t>(id + 1, mark_.size() * 2), 0);
    if (mark_[id] == epoch_) return true;
    mark_[id] = epoch_;
    return false;
  };
  std::vector<std::uint32_t> out{identity_};
  seen(identity_);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto g : gens) {
      const auto p = mul(out[i], g);
      if (!seen(p)) {
        out.push_back(p);
        if (out.size() > cap) throw CapExceeded("closure: subgroup exceeds cap", cap);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clab
