#include "wilf.hpp"

#include <set>
#include <stdexcept>

namespace sgt {

EliahouParams params_from_naive(const oracle::NaiveSemigroup& ns) {
  EliahouParams e;
  e.conductor = ns.conductor;
  e.multiplicity = ns.multiplicity;
  e.quotient = ns.conductor == 0
                   ? 0
                   : (ns.conductor + ns.multiplicity - 1) / ns.multiplicity;
  e.remainder = e.quotient * ns.multiplicity - ns.conductor;
  e.primitive_count = oracle::naive_primitives(ns).size();
  e.right_generator_count = oracle::naive_right_generators(ns).size();
  e.rank = ns.rank();
  return e;
}

GeneratorsWithFloor ef_family(std::uint64_t m, std::uint64_t a, std::uint64_t b) {
  if (!(3 * m + 1 <= 2 * a && a < b && 3 * b <= 5 * m - 1))
    throw std::invalid_argument("ef_family: need (3m+1)/2 <= a < b <= (5m-1)/3");
  const std::uint64_t values[] = {a,     b,         2 * a,     a + b, 2 * b,
                                  3 * a, 2 * a + b, a + 2 * b, 3 * b};
  std::set<std::uint64_t> residues;
  for (auto v : values) residues.insert(v % m);
  if (residues.size() != 9)
    throw std::invalid_argument("ef_family: the nine sums collide modulo m");
  return {{m, a, b}, 4 * m};
}

GeneratorsWithFloor delgado_family(std::uint64_t p, std::uint64_t tau,
                                   std::uint64_t i, std::uint64_t j) {
  if (p == 0 || p % 2 != 0)
    throw std::invalid_argument("delgado_family: p must be even and positive");
  // With p = 2h every coefficient below is integral.
  const std::uint64_t h = p / 2;
  const std::uint64_t m = h * h + h * tau + 4 * h + 2 + j * h;
  const std::uint64_t g =
      2 * h * h + 2 * h * tau + 7 * h - tau + j * (2 * h - 1) + i * m;
  const std::uint64_t c = 2 * h * h * h + 2 * h * h * tau + 8 * h * h + 4 * h -
                          tau + 2 * j * h * h + i * (h + 1) * m;
  return {{m, g, g + 1}, c};
}

GeneratorsWithFloor bef_family(std::uint64_t t) {
  if (t < 8) throw std::invalid_argument("bef_family: t must be at least 8");
  return {{2 * t + 1, 3 * t - 1, 3 * t}, 10 * t};
}

}  // namespace sgt
