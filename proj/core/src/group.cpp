#include "walklab/group.hpp"

#include "walklab/errors.hpp"

namespace walklab {

long long Group::phi(const Element&) const {
  throw NoProjection(name() + " has no projection to Z");
}

Element Group::section(long long) const {
  throw NoProjection(name() + " has no projection to Z");
}

}  // namespace walklab
