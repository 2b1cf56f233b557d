#ifndef SGTREE_SEMIGROUP_HPP
#define SGTREE_SEMIGROUP_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "bitstream.hpp"

namespace sgt {

// One node of the semigroup tree.
//
// gaps  (length c): bit i set iff the integer i+1 is a gap; bit c-1 is
//                   always clear since the conductor is a member.
// seeds (length c): bit i set iff c + i - lambda_j is an order-j seed,
//                   where lambda_j <= i < lambda_{j+1}; equivalently the
//                   concatenated rows of the seed table.
//
// jump1/jump2 are the first and second jumps of the full element sequence
// (lambda_2 - lambda_1 and lambda_3 - lambda_2), which the descendant
// counting formulas consume directly.  The natural numbers are the c = 0
// state with both streams empty.
template <unsigned Words>
struct Semigroup {
  Bitstream<Words> gaps;
  Bitstream<Words> seeds;
  std::uint32_t conductor = 0;
  std::uint32_t multiplicity = 1;
  std::uint32_t jump1 = 1;
  std::uint32_t jump2 = 1;
  std::uint32_t rank = 0;
  std::uint32_t genus = 0;

  friend bool operator==(const Semigroup&, const Semigroup&) = default;
};

struct SeedTable {
  std::vector<std::string> rows;  // row p: '1' at j iff c + j is an order-p seed

  std::string concatenated() const {
    std::string s;
    for (const auto& r : rows) s += r;
    return s;
  }
  friend bool operator==(const SeedTable&, const SeedTable&) = default;
};

template <unsigned Words>
Semigroup<Words> natural_numbers() {
  return Semigroup<Words>{};
}

// Bit i clear iff i is a sum of two left elements, for 0 <= i < 2c.  This
// is the double-length stream whose two halves are the gap and seed
// streams of the state.
template <unsigned Words>
Bitstream<2 * Words> sum_complement(std::span<const std::uint64_t> left,
                                    std::uint64_t conductor) {
  using Wide = Bitstream<2 * Words>;
  if (2 * conductor > Wide::capacity)
    throw overflow_error("sum_complement: 2c exceeds extended capacity");
  Wide members;
  for (auto x : left) members.set(static_cast<unsigned>(x));
  Wide sums;
  for (auto x : left) sums |= members.shift_up_unchecked(static_cast<unsigned>(x));
  return Wide::ones(static_cast<unsigned>(2 * conductor)).without(sums);
}

namespace detail {

inline void validate_left_elements(std::span<const std::uint64_t> left,
                                   std::uint64_t conductor) {
  if (conductor == 0) {
    for (auto x : left)
      if (x != 0) throw std::invalid_argument("conductor 0 admits only {0}");
    return;
  }
  bool has_zero = false;
  std::vector<bool> member(conductor, false);
  for (auto x : left) {
    if (x >= conductor) throw std::invalid_argument("left element beyond conductor");
    if (x == 0) has_zero = true;
    member[x] = true;
  }
  if (!has_zero) throw std::invalid_argument("left elements must contain 0");
  if (member[conductor - 1])
    throw std::invalid_argument("conductor - 1 must be a gap");
  for (auto a : left)
    for (auto b : left)
      if (a + b < conductor && !member[a + b])
        throw std::invalid_argument("left elements not additively closed");
}

// lambda_j of the full element sequence given the sorted left elements.
inline std::uint64_t element_at(std::span<const std::uint64_t> left,
                                std::uint64_t conductor, std::size_t j) {
  return j < left.size() ? left[j] : conductor + (j - left.size());
}

}  // namespace detail

// Builds the state of left ∪ [c, ∞) by splitting the sum-complement
// stream: gap bits are its positions 1..c-1, seed bits its upper half.
template <unsigned Words>
Semigroup<Words> state_from_left_elements(std::span<const std::uint64_t> left,
                                          std::uint64_t conductor) {
  detail::validate_left_elements(left, conductor);
  if (conductor == 0) return natural_numbers<Words>();
  if (conductor > Bitstream<Words>::capacity)
    throw overflow_error("conductor exceeds capacity");

  std::vector<std::uint64_t> sorted(left.begin(), left.end());
  std::sort(sorted.begin(), sorted.end());

  const auto sigma = sum_complement<Words>(sorted, conductor);
  const unsigned c = static_cast<unsigned>(conductor);

  Semigroup<Words> st;
  st.gaps = (sigma.shift_down(1) & Bitstream<2 * Words>::ones(c - 1))
                .template narrow<Words>();
  st.seeds = sigma.shift_down(c).template narrow<Words>();
  st.conductor = c;
  st.rank = static_cast<std::uint32_t>(sorted.size());
  st.genus = c - st.rank;
  st.multiplicity =
      static_cast<std::uint32_t>(detail::element_at(sorted, conductor, 1));
  st.jump1 = static_cast<std::uint32_t>(detail::element_at(sorted, conductor, 2) -
                                        detail::element_at(sorted, conductor, 1));
  st.jump2 = static_cast<std::uint32_t>(detail::element_at(sorted, conductor, 3) -
                                        detail::element_at(sorted, conductor, 2));
  assert(st.gaps.weight_range(0, c - 1) == st.genus);
  return st;
}

// Rank-1 closed form: the ordinary semigroup {0, m, m+1, ...}.
template <unsigned Words>
Semigroup<Words> low_rank_state(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("multiplicity must be positive");
  if (m == 1) return natural_numbers<Words>();  // {0,1,2,...}
  if (m > Bitstream<Words>::capacity) throw overflow_error("conductor exceeds capacity");
  const unsigned mu = static_cast<unsigned>(m);
  Semigroup<Words> st;
  st.gaps = Bitstream<Words>::ones(mu - 1);
  st.seeds = Bitstream<Words>::ones(mu);
  st.conductor = mu;
  st.multiplicity = mu;
  st.jump1 = 1;
  st.jump2 = 1;
  st.rank = 1;
  st.genus = mu - 1;
  return st;
}

// Rank-2 closed form: {0, m, m+u, m+u+1, ...} with 1 < u <= m.
template <unsigned Words>
Semigroup<Words> low_rank_state(std::uint64_t m, std::uint64_t u) {
  if (!(1 < u && u <= m)) throw std::invalid_argument("rank-2 requires 1 < u <= m");
  if (m + u > Bitstream<Words>::capacity)
    throw overflow_error("conductor exceeds capacity");
  const unsigned mu = static_cast<unsigned>(m), ju = static_cast<unsigned>(u);
  Semigroup<Words> st;
  st.gaps = Bitstream<Words>::ones(mu + ju - 1);
  st.gaps.reset(mu - 1);
  st.seeds = Bitstream<Words>::ones(mu + ju);
  st.seeds.reset(mu - ju);
  st.conductor = mu + ju;
  st.multiplicity = mu;
  st.jump1 = ju;
  st.jump2 = 1;
  st.rank = 2;
  st.genus = mu + ju - 2;
  return st;
}

// Rank-3 closed form: {0, m, m+u, m+u+v, ...}; v ranges over [2, m-u] when
// u < m and [2, m] when u = m.
template <unsigned Words>
Semigroup<Words> low_rank_state(std::uint64_t m, std::uint64_t u, std::uint64_t v) {
  const bool ok = (u >= 1 && u < m && v >= 2 && v <= m - u) ||
                  (u == m && v >= 2 && v <= m);
  if (!ok) throw std::invalid_argument("invalid rank-3 parameters");
  if (m + u + v > Bitstream<Words>::capacity)
    throw overflow_error("conductor exceeds capacity");
  const unsigned mu = static_cast<unsigned>(m), ju = static_cast<unsigned>(u),
                 jv = static_cast<unsigned>(v);
  Semigroup<Words> st;
  st.gaps = Bitstream<Words>::ones(mu + ju + jv - 1);
  st.gaps.reset(mu - 1);
  st.gaps.reset(mu + ju - 1);
  st.seeds = Bitstream<Words>::ones(mu + ju + jv);
  if (u < m) st.seeds.reset(mu - ju - jv);
  st.seeds.reset(mu - jv);
  st.seeds.reset(mu + ju - jv);
  st.conductor = mu + ju + jv;
  st.multiplicity = mu;
  st.jump1 = ju;
  st.jump2 = jv;
  st.rank = 3;
  st.genus = mu + ju + jv - 3;
  return st;
}

// Smallest semigroup containing the generators and every integer >= floor;
// with floor 0 just the closure of the generators (their gcd must be 1).
// The conductor ends up below the floor whenever the closure already fills
// the tail.
template <unsigned Words>
Semigroup<Words> from_generators_with_floor(std::span<const std::uint64_t> gens,
                                            std::uint64_t floor) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  for (auto g : gens)
    if (g == 0) throw std::invalid_argument("generators must be positive");

  std::uint64_t mult = *std::min_element(gens.begin(), gens.end());
  std::uint64_t limit = floor;
  if (floor == 0) {
    std::uint64_t d = 0;
    for (auto g : gens) d = std::gcd(d, g);
    if (d != 1)
      throw std::invalid_argument("generators do not span a cofinite monoid");
    limit = mult * *std::max_element(gens.begin(), gens.end()) + 1;
  }

  for (;;) {
    std::vector<bool> closure(limit + mult + 1, false);
    closure[0] = true;
    for (std::uint64_t x = 1; x < closure.size(); ++x) {
      if (floor > 0 && x >= floor) {
        closure[x] = true;
        continue;
      }
      for (auto g : gens)
        if (g <= x && closure[x - g]) {
          closure[x] = true;
          break;
        }
    }
    std::uint64_t run = 0;
    for (std::uint64_t x = 0; x < closure.size(); ++x) {
      run = closure[x] ? run + 1 : 0;
      if (run == mult) {
        const std::uint64_t conductor = x + 1 - mult;
        std::vector<std::uint64_t> left;
        for (std::uint64_t y = 0; y < conductor; ++y)
          if (closure[y]) left.push_back(y);
        return state_from_left_elements<Words>(left, conductor);
      }
    }
    limit *= 2;  // only reachable with floor == 0
  }
}

// Left elements recovered from the gap stream: 0 plus every i+1 < c whose
// gap bit is clear.
template <unsigned Words>
std::vector<std::uint64_t> left_elements(const Semigroup<Words>& st) {
  std::vector<std::uint64_t> left;
  if (st.conductor == 0) return left;
  left.push_back(0);
  for (unsigned i = 0; i + 1 < st.conductor; ++i)
    if (!st.gaps.test(i)) left.push_back(i + 1);
  return left;
}

template <unsigned Words>
std::vector<std::uint64_t> jumps(const Semigroup<Words>& st) {
  const auto left = left_elements(st);
  std::vector<std::uint64_t> u;
  for (std::size_t j = 0; j < left.size(); ++j) {
    const std::uint64_t next =
        j + 1 < left.size() ? left[j + 1] : st.conductor;
    u.push_back(next - left[j]);
  }
  return u;
}

template <unsigned Words>
std::vector<std::uint64_t> right_generators(const Semigroup<Words>& st) {
  std::vector<std::uint64_t> right;
  if (st.conductor == 0) {
    right.push_back(1);  // the only primitive of the natural numbers
    return right;
  }
  for (unsigned i = 0; i < st.multiplicity; ++i)
    if (st.seeds.test(i)) right.push_back(st.conductor + i);
  return right;
}

// Reads the seed stream at lambda_p + (candidate - c); the candidate must
// lie in the order-p window [c, c + u_p - 1].
template <unsigned Words>
bool is_order_p_seed(const Semigroup<Words>& st, std::uint64_t candidate,
                     std::uint64_t order) {
  if (order >= st.rank) throw std::invalid_argument("seed order must be below rank");
  const auto left = left_elements(st);
  const auto u = jumps(st);
  if (candidate < st.conductor || candidate >= st.conductor + u[order])
    throw std::invalid_argument("candidate outside the order-p seed window");
  return st.seeds.test(
      static_cast<unsigned>(left[order] + (candidate - st.conductor)));
}

// The seed stream sliced by the jump sequence.
template <unsigned Words>
SeedTable seed_table(const Semigroup<Words>& st) {
  SeedTable t;
  unsigned pos = 0;
  for (auto u : jumps(st)) {
    std::string row;
    for (std::uint64_t j = 0; j < u; ++j, ++pos)
      row.push_back(st.seeds.test(pos) ? '1' : '0');
    t.rows.push_back(std::move(row));
  }
  return t;
}

// All primitive elements: left elements that are not sums of two smaller
// nonzero left elements, followed by the right generators.
template <unsigned Words>
std::vector<std::uint64_t> primitives(const Semigroup<Words>& st) {
  const auto left = left_elements(st);
  std::vector<bool> member(st.conductor, false);
  for (auto x : left) member[x] = true;
  std::vector<std::uint64_t> prim;
  for (auto x : left) {
    if (x == 0) continue;
    bool sum = false;
    for (auto a : left) {
      if (a == 0) continue;
      if (2 * a > x) break;
      if (member[x - a]) {
        sum = true;
        break;
      }
    }
    if (!sum) prim.push_back(x);
  }
  for (auto r : right_generators(st)) prim.push_back(r);
  return prim;
}

// "{0,3,6,8,9,...}": the left elements, the conductor and its successor.
template <unsigned Words>
std::string elements_text(const Semigroup<Words>& st) {
  std::string s = "{";
  for (auto x : left_elements(st)) s += std::to_string(x) + ",";
  s += std::to_string(st.conductor) + "," + std::to_string(st.conductor + 1) +
       ",...}";
  return s;
}

}  // namespace sgt

#endif
