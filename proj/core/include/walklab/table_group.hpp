#pragma once

#include <memory>

#include "walklab/errors.hpp"
#include "walklab/finite_table.hpp"
#include "walklab/group.hpp"

namespace walklab {

// Group-interface wrapper over a finite multiplication table.
class TableGroup : public Group {
 public:
  TableGroup(std::string name, std::shared_ptr<const FiniteGroupTable> t)
      : name_(std::move(name)), table_(std::move(t)) {}

  const FiniteGroupTable& table() const { return *table_; }
  std::shared_ptr<const FiniteGroupTable> table_ptr() const { return table_; }

  std::string name() const override { return name_; }
  Element identity() const override { return TableElem{0}; }
  Element mul(const Element& a, const Element& b) const override {
    return TableElem{table_->mul(get(a).idx, get(b).idx)};
  }
  Element inv(const Element& a) const override { return TableElem{table_->inv(get(a).idx)}; }
  bool is_identity(const Element& a) const override { return get(a).idx == 0; }
  std::string key(const Element& a) const override { return std::to_string(get(a).idx); }

 private:
  const TableElem& get(const Element& a) const {
    const auto* t = std::get_if<TableElem>(&a);
    if (!t) throw GroupMismatch("element does not belong to " + name_);
    if (t->idx < 0 || t->idx >= table_->order())
      throw GroupMismatch("table index out of range");
    return *t;
  }
  std::string name_;
  std::shared_ptr<const FiniteGroupTable> table_;
};

}  // namespace walklab
