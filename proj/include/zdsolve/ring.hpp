#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdsolve/fields.hpp"
#include "zdsolve/monomial.hpp"

namespace zdsolve {

/// A polynomial ring: coefficient field, named variables, term order.
/// Every MultiPoly belongs to exactly one RingContext; contexts are
/// immutable and shared by pointer.
template <CoefficientField K>
class RingContext {
 public:
  RingContext(K field, std::vector<std::string> names, MonomialOrder order)
      : field_(std::move(field)),
        names_(std::move(names)),
        order_(std::move(order)) {
    if (order_.nvars() != names_.size())
      throw std::invalid_argument("RingContext: order arity != #variables");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("RingContext: duplicate variable '" +
                                      names_[i] + "'");
  }

  const K& field() const { return field_; }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::string& var_name(std::size_t i) const { return names_[i]; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return names_.size(); }

  std::optional<std::size_t> var_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool same_as(const RingContext& o) const {
    if (this == &o) return true;
    return field_ == o.field_ && names_ == o.names_ && order_ == o.order_;
  }

 private:
  K field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

template <CoefficientField K>
using RingPtr = std::shared_ptr<const RingContext<K>>;

template <CoefficientField K>
RingPtr<K> make_ring(K field, std::vector<std::string> names,
                     MonomialOrder order) {
  return std::make_shared<const RingContext<K>>(std::move(field),
                                                std::move(names),
                                                std::move(order));
}

template <CoefficientField K>
RingPtr<K> make_ring(K field, std::vector<std::string> names) {
  auto n = names.size();
  return make_ring(std::move(field), std::move(names),
                   MonomialOrder::grevlex(n));
}

/// Same variables and field under a different term order.
template <CoefficientField K>
RingPtr<K> with_order(const RingPtr<K>& ring, MonomialOrder order) {
  return make_ring(ring->field(), ring->var_names(), std::move(order));
}

/// Ring with one fresh variable appended (used by saturation and the
/// t-tricks). Picks t, t0, t1, ... -- the first name not already taken.
template <CoefficientField K>
RingPtr<K> append_fresh_var(const RingPtr<K>& ring, MonomialOrder order,
                            std::string* chosen = nullptr) {
  std::string name = "t";
  for (int i = 0; ring->var_index(name).has_value(); ++i)
    name = "t" + std::to_string(i);
  if (chosen) *chosen = name;
  auto names = ring->var_names();
  names.push_back(name);
  if (order.nvars() != names.size())
    throw std::invalid_argument("append_fresh_var: order arity mismatch");
  return make_ring(ring->field(), std::move(names), std::move(order));
}

}  // namespace zdsolve
