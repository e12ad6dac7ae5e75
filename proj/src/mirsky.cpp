#include "tiling/mirsky.hpp"

#include <sstream>
#include <stdexcept>

#include "tiling/errors.hpp"

namespace tiling {

namespace {

std::string render_system(const CosetSystem& s) {
  std::ostringstream out;
  out << "{d=" << s.d << ", cosets=[";
  for (std::size_t j = 0; j < s.cosets.size(); ++j) {
    if (j) out << ", ";
    out << "(n=[";
    for (int i = 0; i < s.d; ++i) out << (i ? "," : "") << s.cosets[j].shape.n[i];
    out << "], m=[";
    for (int i = 0; i < s.d; ++i) out << (i ? "," : "") << s.cosets[j].offset[i];
    out << "])";
  }
  out << "]}";
  return out.str();
}

}  // namespace

std::size_t max_index_coset(const CosetSystem& s) {
  check_system(s);
  std::size_t best = 0;
  Int best_prod = s.cosets[0].shape.index();
  for (std::size_t j = 1; j < s.cosets.size(); ++j) {
    Int prod = s.cosets[j].shape.index();
    bool better = prod > best_prod;
    if (!better && prod == best_prod) {
      const Coset& cand = s.cosets[j];
      const Coset& cur = s.cosets[best];
      better = cand.shape.n < cur.shape.n ||
               (cand.shape.n == cur.shape.n && cand.offset < cur.offset);
    }
    if (better) {
      best = j;
      best_prod = std::move(prod);
    }
  }
  return best;
}

std::vector<std::size_t> cancelers(const CosetSystem& s, std::size_t j) {
  check_system(s);
  if (j >= s.cosets.size()) throw std::invalid_argument("cancelers: index out of range");
  std::vector<std::size_t> out;
  for (std::size_t jp = 0; jp < s.cosets.size(); ++jp) {
    if (jp == j) continue;
    bool divides = true;
    for (int i = 0; i < s.d && divides; ++i)
      divides = s.cosets[jp].shape.n[i] % s.cosets[j].shape.n[i] == 0;
    if (divides) out.push_back(jp);
  }
  return out;
}

Witness witness(const CosetSystem& s, const Int& cell_budget) {
  VerificationReport rep = verify_partition(s, cell_budget);
  if (!rep.is_partition)
    throw WitnessPrecondition("witness: system is not an exact partition");
  if (s.cosets.size() < 2)
    throw WitnessPrecondition("witness: trivial single-coset partition");

  const std::size_t j_star = max_index_coset(s);
  const std::vector<std::size_t> cands = cancelers(s, j_star);
  if (cands.empty())
    throw TheoremViolation(
        "theorem violated: the maximal coset's principal pole has no canceler; system " +
        render_system(s));
  for (std::size_t jp : cands)
    if (s.cosets[jp].shape != s.cosets[j_star].shape)
      throw std::logic_error(
          "witness: canceler shape differs from the maximal shape despite divisibility");
  return Witness{j_star, cands.front(), s.cosets[j_star].shape};
}

bool theorem_check(const CosetSystem& s, const Int& cell_budget) {
  check_system(s);
  if (s.cosets.size() < 2) return true;
  if (!verify_partition(s, cell_budget).is_partition) return true;

  // Maximal product, then the lex-smallest shape attaining it; count repeats.
  Int max_prod = s.cosets[0].shape.index();
  for (const Coset& c : s.cosets) {
    Int prod = c.shape.index();
    if (prod > max_prod) max_prod = std::move(prod);
  }
  const SubgroupShape* shape = nullptr;
  for (const Coset& c : s.cosets)
    if (c.shape.index() == max_prod && (!shape || c.shape.n < shape->n)) shape = &c.shape;
  int repeats = 0;
  for (const Coset& c : s.cosets)
    if (c.shape == *shape) ++repeats;
  return repeats >= 2;
}

}  // namespace tiling
