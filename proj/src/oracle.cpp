#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sgt::oracle {

namespace {

// Rebuilds elements/conductor/multiplicity/genus from a membership table
// whose tail [conductor, window] is fully present.
NaiveSemigroup finish(std::vector<bool> present) {
  if (present.empty() || !present[0])
    throw std::invalid_argument("semigroup must contain 0");
  std::uint64_t conductor = 0;
  for (std::uint64_t x = 0; x < present.size(); ++x)
    if (!present[x]) conductor = x + 1;

  NaiveSemigroup ns;
  ns.conductor = conductor;
  ns.multiplicity = 1;
  for (std::uint64_t x = 1; x < present.size(); ++x)
    if (present[x]) {
      ns.multiplicity = x;
      break;
    }
  // Normalize the window to [0, c + 2m].
  std::uint64_t window = conductor + 2 * ns.multiplicity;
  present.resize(window + 1, true);
  ns.present = std::move(present);
  for (std::uint64_t x = 0; x <= window; ++x) {
    if (ns.present[x])
      ns.elements.push_back(x);
    else if (x < conductor)
      ++ns.genus;
  }
  return ns;
}

void check_closed(const NaiveSemigroup& ns) {
  const auto left = naive_left_elements(ns);
  for (auto a : left)
    for (auto b : left) {
      if (a + b < ns.conductor && !ns.present[a + b])
        throw std::invalid_argument("left elements not additively closed");
    }
}

}  // namespace

NaiveSemigroup naive_natural() { return finish(std::vector<bool>(1, true)); }

NaiveSemigroup naive_from_left_elements(const std::vector<std::uint64_t>& left,
                                        std::uint64_t conductor) {
  std::vector<bool> present(conductor + 1, false);
  for (auto x : left) {
    if (x > conductor)
      throw std::invalid_argument("left element beyond conductor");
    if (x < conductor) present[x] = true;
  }
  if (conductor > 0) {
    if (!present[0]) throw std::invalid_argument("left elements must contain 0");
    if (present[conductor - 1])
      throw std::invalid_argument("conductor - 1 must be a gap");
    present[conductor] = true;
  } else {
    present[0] = true;
  }
  auto ns = finish(std::move(present));
  check_closed(ns);
  return ns;
}

NaiveSemigroup naive_from_generators(const std::vector<std::uint64_t>& gens,
                                     std::uint64_t floor) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  for (auto g : gens)
    if (g == 0) throw std::invalid_argument("generators must be positive");

  std::uint64_t limit = floor;
  if (limit == 0) {
    std::uint64_t d = 0;
    for (auto g : gens) d = std::gcd(d, g);
    if (d != 1)
      throw std::invalid_argument("generators do not span a cofinite monoid");
    // Coarse window: the closure of a gcd-1 set stabilizes well below
    // min * max; doubling below makes this a non-issue anyway.
    std::uint64_t lo = *std::min_element(gens.begin(), gens.end());
    std::uint64_t hi = *std::max_element(gens.begin(), gens.end());
    limit = lo * hi + 1;
  }

  std::uint64_t mult = *std::min_element(gens.begin(), gens.end());
  for (;;) {
    std::vector<bool> closure(limit + 2 * mult + 1, false);
    closure[0] = true;
    for (std::uint64_t x = 1; x < closure.size(); ++x) {
      if (x >= floor && floor > 0) {
        closure[x] = true;
        continue;
      }
      for (auto g : gens)
        if (g <= x && closure[x - g]) {
          closure[x] = true;
          break;
        }
    }
    // The closure is cofinite once it holds `mult` consecutive members.
    std::uint64_t run = 0, tail_start = 0;
    bool cofinite = false;
    for (std::uint64_t x = 0; x < closure.size(); ++x) {
      run = closure[x] ? run + 1 : 0;
      if (run == mult) {
        tail_start = x + 1 - mult;
        cofinite = true;
        break;
      }
    }
    if (!cofinite) {
      limit *= 2;
      continue;
    }
    std::vector<bool> present(closure.begin(),
                              closure.begin() + static_cast<long>(tail_start + mult));
    for (std::uint64_t x = tail_start; x < present.size(); ++x) present[x] = true;
    return finish(std::move(present));
  }
}

std::vector<std::uint64_t> naive_left_elements(const NaiveSemigroup& ns) {
  std::vector<std::uint64_t> left;
  for (auto x : ns.elements) {
    if (x >= ns.conductor) break;
    left.push_back(x);
  }
  return left;
}

std::vector<std::uint64_t> naive_primitives(const NaiveSemigroup& ns) {
  std::vector<std::uint64_t> prim;
  for (auto x : ns.elements) {
    if (x == 0) continue;
    bool sum = false;
    for (auto a : ns.elements) {
      if (a == 0) continue;
      if (2 * a > x) break;
      if (ns.contains(x - a)) {  // x = a + (x - a), both nonzero and smaller
        sum = true;
        break;
      }
    }
    if (!sum) prim.push_back(x);
  }
  return prim;
}

std::vector<std::uint64_t> naive_right_generators(const NaiveSemigroup& ns) {
  std::vector<std::uint64_t> right;
  for (auto x : naive_primitives(ns))
    if (x >= ns.conductor) right.push_back(x);
  return right;
}

std::vector<std::uint64_t> naive_jumps(const NaiveSemigroup& ns) {
  const auto left = naive_left_elements(ns);
  std::vector<std::uint64_t> jumps;
  for (std::size_t j = 0; j < left.size(); ++j) {
    std::uint64_t next = j + 1 < left.size() ? left[j + 1] : ns.conductor;
    jumps.push_back(next - left[j]);
  }
  return jumps;
}

std::vector<std::uint64_t> naive_seeds(const NaiveSemigroup& ns, std::uint64_t order) {
  const auto jumps = naive_jumps(ns);
  if (order >= jumps.size())
    throw std::invalid_argument("seed order must be below the rank");
  const auto& elems = ns.elements;
  const std::uint64_t lambda_p = naive_left_elements(ns)[order];

  std::vector<std::uint64_t> seeds;
  for (std::uint64_t cand = ns.conductor; cand < ns.conductor + jumps[order]; ++cand) {
    // index of cand in the element sequence
    std::size_t s = 0;
    while (elems[s] != cand) ++s;
    bool is_seed = true;
    for (std::size_t i = order + 1; i < s && is_seed; ++i)
      for (std::size_t j = i; j < s; ++j)
        if (cand + lambda_p == elems[i] + elems[j]) {
          is_seed = false;
          break;
        }
    if (is_seed) seeds.push_back(cand);
  }
  return seeds;
}

std::vector<std::string> naive_seed_table(const NaiveSemigroup& ns) {
  const auto jumps = naive_jumps(ns);
  std::vector<std::string> rows;
  for (std::uint64_t p = 0; p < jumps.size(); ++p) {
    std::string row(jumps[p], '0');
    for (auto s : naive_seeds(ns, p)) row[s - ns.conductor] = '1';
    rows.push_back(row);
  }
  return rows;
}

std::vector<NaiveSemigroup> naive_children(const NaiveSemigroup& ns) {
  std::vector<NaiveSemigroup> kids;
  for (auto g : naive_right_generators(ns)) {
    std::vector<bool> present(ns.present.begin(),
                              ns.present.begin() + static_cast<long>(g + 2));
    present.resize(g + 2, true);
    present[g] = false;
    kids.push_back(finish(std::move(present)));
  }
  return kids;
}

std::vector<std::uint64_t> naive_count(std::uint64_t max_genus) {
  std::vector<std::uint64_t> counts(max_genus + 1, 0);
  std::vector<NaiveSemigroup> layer{naive_natural()};
  counts[0] = 1;
  for (std::uint64_t g = 1; g <= max_genus; ++g) {
    std::vector<NaiveSemigroup> next;
    for (const auto& ns : layer)
      for (auto& child : naive_children(ns)) next.push_back(std::move(child));
    counts[g] = next.size();
    layer = std::move(next);
  }
  return counts;
}

}  // namespace sgt::oracle
