#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tiling {

using Int = mpz_class;          // arbitrary-precision integer
using Rat = mpq_class;          // exact rational, kept canonical
using Coord = std::int64_t;     // lattice coordinates and moduli

inline Rat make_rat(Int num, Int den) {
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

// Fixed "p/q" rendering with an explicit denominator: "1/1", "-1/2", "5/6".
inline std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Euclidean remainder in [0, n), n > 0.
inline Coord floor_mod(Coord a, Coord n) {
  Coord r = a % n;
  return r < 0 ? r + n : r;
}

inline bool fits_coord(const Int& v) { return v.fits_slong_p(); }

}  // namespace tiling
