#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "neutro/operators.hpp"

namespace neutro {

/// A finite set over an ordered universe: one triplet per element, every
/// triplet valid under the set's family tag.
class LabeledSet {
 public:
  LabeledSet() = default;

  LabeledSet(std::vector<std::string> universe, std::vector<Triplet> elements,
             FamilySpec family = FamilySpec::ns())
      : universe_(std::move(universe)),
        elements_(std::move(elements)),
        family_(family) {
    if (universe_.size() != elements_.size()) {
      throw UsageError("universe has " + std::to_string(universe_.size()) +
                       " names but " + std::to_string(elements_.size()) +
                       " elements");
    }
    if (family_.is_pair_family() && family_.kind() != FamilyKind::IFS) {
      throw UsageError("labeled sets hold triplets; family " + family_.name() +
                       " holds pairs");
    }
    std::unordered_set<std::string> seen;
    for (std::size_t k = 0; k < universe_.size(); ++k) {
      if (!seen.insert(universe_[k]).second) {
        throw UsageError("duplicate element name '" + universe_[k] + "'");
      }
      auto r = validate(elements_[k], family_);
      if (!r.valid) {
        throw ConstraintError("element '" + universe_[k] + "': " +
                              r.diagnostics);
      }
    }
  }

  const std::vector<std::string>& universe() const noexcept {
    return universe_;
  }
  const std::vector<Triplet>& elements() const noexcept { return elements_; }
  const FamilySpec& family() const noexcept { return family_; }

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::string& name(std::size_t k) const { return universe_.at(k); }
  const Triplet& operator[](std::size_t k) const { return elements_[k]; }
  const Triplet& at(std::size_t k) const { return elements_.at(k); }

  std::optional<Triplet> find(const std::string& name) const {
    for (std::size_t k = 0; k < universe_.size(); ++k) {
      if (universe_[k] == name) return elements_[k];
    }
    return std::nullopt;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<Triplet> elements_;
  FamilySpec family_ = FamilySpec::ns();
};

inline void require_same_universe(const LabeledSet& a, const LabeledSet& b) {
  if (a.universe() != b.universe()) {
    throw UsageError("operands are defined over different universes");
  }
}

/// Elementwise a op b over a shared universe. Not ignores b.
inline LabeledSet setwise(const LabeledSet& a, const LabeledSet& b, SetOp op,
                          const OperatorSystem& sys = {}) {
  require_same_universe(a, b);
  std::vector<Triplet> out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out.push_back(apply(op, a[k], b[k], sys));
  }
  return LabeledSet(a.universe(), std::move(out), sys.family());
}

inline LabeledSet setwise_negate(const LabeledSet& a,
                                 const OperatorSystem& sys = {}) {
  std::vector<Triplet> out;
  out.reserve(a.size());
  for (const auto& x : a.elements()) out.push_back(negate(x, sys));
  return LabeledSet(a.universe(), std::move(out), sys.family());
}

}  // namespace neutro
