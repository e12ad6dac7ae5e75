#include "tiling/coset.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "tiling/errors.hpp"

namespace tiling {

Int SubgroupShape::index() const {
  Int p = 1;
  for (Coord ni : n) p *= ni;
  return p;
}

Int LcmBox::volume() const {
  Int v = 1;
  for (const Int& li : L) v *= li;
  return v;
}

void check_shape(const SubgroupShape& shape) {
  if (shape.n.empty())
    throw std::invalid_argument("shape: dimension must be at least 1");
  for (Coord ni : shape.n)
    if (ni < 1) throw std::invalid_argument("shape: every modulus must be positive");
}

bool is_canonical(const Coset& c) {
  if (c.offset.size() != c.shape.n.size()) return false;
  for (std::size_t i = 0; i < c.offset.size(); ++i)
    if (c.offset[i] < 0 || c.offset[i] >= c.shape.n[i]) return false;
  return true;
}

void check_system(const CosetSystem& s) {
  if (s.d < 1) throw std::invalid_argument("system: dimension must be at least 1");
  if (s.cosets.empty())
    throw std::invalid_argument("system: must contain at least one coset");
  for (const Coset& c : s.cosets) {
    check_shape(c.shape);
    if (c.dim() != s.d || static_cast<int>(c.offset.size()) != s.d)
      throw std::invalid_argument("system: coset dimension differs from system dimension");
    if (!is_canonical(c))
      throw std::invalid_argument("system: coset offsets must be canonical");
  }
}

Coset canonicalize(const Coset& c) {
  check_shape(c.shape);
  if (c.offset.size() != c.shape.n.size())
    throw std::invalid_argument("canonicalize: offset/shape dimension mismatch");
  Coset out = c;
  for (std::size_t i = 0; i < out.offset.size(); ++i)
    out.offset[i] = floor_mod(out.offset[i], out.shape.n[i]);
  return out;
}

bool contains(const Coset& c, const std::vector<Coord>& z) {
  if (z.size() != c.offset.size())
    throw std::invalid_argument("contains: point dimension mismatch");
  for (std::size_t i = 0; i < z.size(); ++i)
    if (floor_mod(z[i] - c.offset[i], c.shape.n[i]) != 0) return false;
  return true;
}

Rat density(const Coset& c) { return make_rat(1, c.shape.index()); }

bool disjoint(const Coset& a, const Coset& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("disjoint: dimension mismatch");
  for (int i = 0; i < a.dim(); ++i) {
    Coord g = std::gcd(a.shape.n[i], b.shape.n[i]);
    if (floor_mod(a.offset[i] - b.offset[i], g) != 0) return true;
  }
  return false;
}

LcmBox lcm_box(const CosetSystem& s) {
  check_system(s);
  LcmBox box;
  box.L.assign(s.d, Int(1));
  for (const Coset& c : s.cosets)
    for (int i = 0; i < s.d; ++i) box.L[i] = lcm(box.L[i], Int(c.shape.n[i]));
  return box;
}

namespace {

// Adds 1 to the count of every box cell the coset covers. Flat indices are
// row-major with axis 0 most significant, so ascending index = lex order.
template <typename Count>
void accumulate_covers(const Coset& c, const std::vector<Coord>& L,
                       const std::vector<std::int64_t>& stride,
                       std::vector<Count>& counts) {
  const int d = static_cast<int>(L.size());
  std::vector<Coord> reps(d), r(d, 0);
  std::vector<std::int64_t> step(d), back(d);
  std::int64_t idx = 0;
  for (int i = 0; i < d; ++i) {
    reps[i] = L[i] / c.shape.n[i];
    step[i] = c.shape.n[i] * stride[i];
    back[i] = step[i] * (reps[i] - 1);
    idx += c.offset[i] * stride[i];
  }
  for (;;) {
    if constexpr (sizeof(Count) == 1) {
      if (counts[idx] != 255) ++counts[idx];
    } else {
      ++counts[idx];
    }
    int a = d - 1;
    while (a >= 0) {
      if (++r[a] < reps[a]) {
        idx += step[a];
        break;
      }
      r[a] = 0;
      idx -= back[a];
      --a;
    }
    if (a < 0) break;
  }
}

template <typename Count>
VerificationReport count_box(const CosetSystem& s, const std::vector<Coord>& L,
                             std::size_t volume, VerificationReport rep) {
  const int d = s.d;
  std::vector<std::int64_t> stride(d, 1);
  for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * L[i + 1];

  std::vector<Count> counts(volume, 0);
  for (const Coset& c : s.cosets) accumulate_covers(c, L, stride, counts);

  rep.is_partition = true;
  for (std::size_t idx = 0; idx < volume; ++idx) {
    if (counts[idx] == 1) continue;
    rep.is_partition = false;
    Counterexample ce;
    ce.cell.resize(d);
    for (int i = 0; i < d; ++i)
      ce.cell[i] = static_cast<Coord>(idx / stride[i]) % L[i];
    ce.cover_count = counts[idx];
    rep.counterexample = std::move(ce);
    break;
  }
  return rep;
}

}  // namespace

VerificationReport verify_partition(const CosetSystem& s, const Int& cell_budget) {
  check_system(s);
  LcmBox box = lcm_box(s);
  Int vol = box.volume();
  if (vol > cell_budget || !fits_coord(vol))
    throw BudgetExceeded("instance too large: fundamental box has " + vol.get_str() +
                         " cells, budget is " + cell_budget.get_str());

  VerificationReport rep;
  rep.density_sum = Rat(0);
  for (const Coset& c : s.cosets) rep.density_sum += density(c);

  rep.is_disjoint = true;
  for (std::size_t a = 0; a + 1 < s.cosets.size() && rep.is_disjoint; ++a)
    for (std::size_t b = a + 1; b < s.cosets.size(); ++b)
      if (!disjoint(s.cosets[a], s.cosets[b])) {
        rep.is_disjoint = false;
        break;
      }

  std::vector<Coord> L(s.d);
  for (int i = 0; i < s.d; ++i) L[i] = box.L[i].get_si();
  auto volume = static_cast<std::size_t>(vol.get_si());

  // 8-bit counters suffice whenever they cannot saturate.
  if (s.cosets.size() < 255)
    return count_box<std::uint8_t>(s, L, volume, std::move(rep));
  return count_box<std::uint32_t>(s, L, volume, std::move(rep));
}

}  // namespace tiling
