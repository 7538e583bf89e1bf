#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace vsr {

/// Arbitrary-precision rational number. All exact computations in the
/// library are carried out on this type; doubles appear only in the
/// numerical (eigensolve / geometry) layers.
using Rat = mpq_class;

/// Parses "num/den" or "num". Throws std::invalid_argument on bad input.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return q;
}

/// Serializes as "num/den" ("num" when the denominator is 1).
inline std::string rat_str(const Rat& q) {
  return q.get_str();
}

inline double rat_double(const Rat& q) { return q.get_d(); }

using RatVec = std::vector<Rat>;

}  // namespace vsr
