#ifndef SGTREE_WILF_HPP
#define SGTREE_WILF_HPP

#include <cstdint>
#include <vector>

#include "oracle.hpp"
#include "semigroup.hpp"

namespace sgt {

// Everything the Wilf check and the Eliahou constant need about one node.
// quotient = ceil(c/m) and remainder = quotient*m - c, so
// 0 <= remainder < m.
struct EliahouParams {
  std::uint64_t conductor = 0;
  std::uint64_t multiplicity = 1;
  std::uint64_t quotient = 0;             // q
  std::uint64_t remainder = 0;            // rho
  std::uint64_t primitive_count = 0;      // p
  std::uint64_t right_generator_count = 0;  // r
  std::uint64_t rank = 0;                 // k

  friend bool operator==(const EliahouParams&, const EliahouParams&) = default;
};

// E = k(p - r) - q(m - r) + rho.  A semigroup with E < 0 is an Eliahou
// semigroup; any Wilf counterexample would have to be one.
inline std::int64_t eliahou_constant(const EliahouParams& e) {
  const auto k = static_cast<std::int64_t>(e.rank);
  const auto p = static_cast<std::int64_t>(e.primitive_count);
  const auto r = static_cast<std::int64_t>(e.right_generator_count);
  const auto q = static_cast<std::int64_t>(e.quotient);
  const auto m = static_cast<std::int64_t>(e.multiplicity);
  return k * (p - r) - q * (m - r) + static_cast<std::int64_t>(e.remainder);
}

// The Wilf inequality c <= k * p.
inline bool wilf_holds(const EliahouParams& e) {
  return e.conductor <= e.rank * e.primitive_count;
}

// Parameters of the child obtained by removing c + offset from a
// non-ordinary parent.  `weak` says whether c + offset is a weak generator
// of the parent.  `remaining_right_count` is the number of right
// generators of the parent that are >= the removed one: the parent's full
// right-generator count for the smallest of them, one less for each
// earlier sibling.  The child keeps exactly those above the removed one
// plus the new generator c + offset + m when the removed one was strong,
// which is what the subtraction below encodes.
inline EliahouParams child_params(const EliahouParams& parent, std::uint64_t offset,
                                  bool weak, std::uint64_t remaining_right_count) {
  const bool quotient_up = parent.remainder <= offset;
  EliahouParams c;
  c.conductor = parent.conductor + offset + 1;
  c.multiplicity = parent.multiplicity;
  c.quotient = parent.quotient + (quotient_up ? 1 : 0);
  c.remainder = parent.remainder - offset - 1 + (quotient_up ? parent.multiplicity : 0);
  c.primitive_count = parent.primitive_count - (weak ? 1 : 0);
  c.right_generator_count = remaining_right_count - (weak ? 1 : 0);
  c.rank = parent.rank + offset;
  return c;
}

// A right generator c + offset is strong exactly when it is an order-1
// seed, i.e. the seed bit at multiplicity + offset is also set and the
// offset lies inside the order-1 window.
template <unsigned Words>
bool is_weak_generator(const Semigroup<Words>& st, std::uint64_t offset) {
  return !(offset < st.jump1 &&
           st.seeds.test(static_cast<unsigned>(st.multiplicity + offset)));
}

template <unsigned Words>
EliahouParams params_from_state(const Semigroup<Words>& st) {
  EliahouParams e;
  e.conductor = st.conductor;
  e.multiplicity = st.multiplicity;
  e.quotient = (st.conductor + st.multiplicity - 1) / st.multiplicity;
  e.remainder = e.quotient * st.multiplicity - st.conductor;
  e.primitive_count = primitives(st).size();
  e.right_generator_count =
      st.conductor == 0 ? 1 : st.seeds.weight_range(0, st.multiplicity - 1);
  e.rank = st.rank;
  return e;
}

// Same parameters out of the reference representation; used where a
// conductor does not fit any bitstream width.
EliahouParams params_from_naive(const oracle::NaiveSemigroup& ns);

// Generator triple plus floor, the shape every family below produces.
struct GeneratorsWithFloor {
  std::vector<std::uint64_t> generators;
  std::uint64_t floor = 0;
};

// <m,a,b>|_{4m} with (3m+1)/2 <= a < b <= (5m-1)/3 and the nine pairwise
// sums a,b,2a,a+b,2b,3a,2a+b,a+2b,3b distinct modulo m.  Constant -1.
GeneratorsWithFloor ef_family(std::uint64_t m, std::uint64_t a, std::uint64_t b);

// Delgado's family; p must be even and positive.  Constant -1 as well.
GeneratorsWithFloor delgado_family(std::uint64_t p, std::uint64_t tau,
                                   std::uint64_t i, std::uint64_t j);

// <2t+1, 3t-1, 3t>|_{10t} for t >= 8; constant -1 from t = 9 on, 4 at the
// t = 8 boundary.
GeneratorsWithFloor bef_family(std::uint64_t t);

template <unsigned Words>
Semigroup<Words> ef_semigroup(std::uint64_t m, std::uint64_t a, std::uint64_t b) {
  const auto f = ef_family(m, a, b);
  return from_generators_with_floor<Words>(f.generators, f.floor);
}

template <unsigned Words>
Semigroup<Words> delgado_semigroup(std::uint64_t p, std::uint64_t tau,
                                   std::uint64_t i, std::uint64_t j) {
  const auto f = delgado_family(p, tau, i, j);
  return from_generators_with_floor<Words>(f.generators, f.floor);
}

template <unsigned Words>
Semigroup<Words> bef_semigroup(std::uint64_t t) {
  const auto f = bef_family(t);
  return from_generators_with_floor<Words>(f.generators, f.floor);
}

}  // namespace sgt

#endif
