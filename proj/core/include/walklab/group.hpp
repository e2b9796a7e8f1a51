#pragma once

#include <memory>
#include <optional>
#include <string>

#include "walklab/elements.hpp"

namespace walklab {

// Abstract group operating on type-erased Element values. Implementations
// must produce canonical normal forms so that structural equality of elements
// is group equality. Groups are immutable after construction and safe to
// share between threads.
class Group {
 public:
  virtual ~Group() = default;

  virtual std::string name() const = 0;
  virtual Element identity() const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element inv(const Element& a) const = 0;
  virtual bool is_identity(const Element& a) const = 0;
  // Printable canonical key (documented grammar in the README).
  virtual std::string key(const Element& a) const = 0;

  // Projection to Z when the group has one (cursor, translation part or
  // shadow shift). Throws NoProjection otherwise.
  virtual long long phi(const Element& a) const;
  virtual bool has_phi() const { return false; }
  // Canonical lift of y under phi (e.g. the pure shift t^y).
  virtual Element section(long long y) const;

  Element conj(const Element& a, const Element& g) const {
    return mul(mul(g, a), inv(g));
  }
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace walklab
