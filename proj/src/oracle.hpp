#ifndef SGTREE_ORACLE_HPP
#define SGTREE_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sgt::oracle {

// Reference semigroup kept as an explicit membership table over the window
// [0, c + 2m].  The window is wide enough for every query the tests make:
// seeds live below c + m and the sums compared against them stay below
// 2c + 2m.  Deliberately slow and definition-driven; never used by the
// fast path.
struct NaiveSemigroup {
  std::vector<bool> present;        // present[x] for x in [0, window]
  std::vector<std::uint64_t> elements;  // sorted elements within the window
  std::uint64_t conductor = 0;
  std::uint64_t multiplicity = 1;
  std::uint64_t genus = 0;

  bool contains(std::uint64_t x) const {
    return x < present.size() ? present[x] : true;
  }
  std::uint64_t rank() const { return conductor - genus; }
  std::uint64_t window() const { return present.size() - 1; }
};

NaiveSemigroup naive_natural();

// Left elements (the members below the conductor) plus the cofinite tail.
NaiveSemigroup naive_from_left_elements(const std::vector<std::uint64_t>& left,
                                        std::uint64_t conductor);

// Additive closure of the generators together with every integer >= floor.
// With floor 0 the closure itself must be cofinite (gcd of generators 1).
NaiveSemigroup naive_from_generators(const std::vector<std::uint64_t>& gens,
                                     std::uint64_t floor);

std::vector<std::uint64_t> naive_left_elements(const NaiveSemigroup& ns);

// Every element that is not the sum of two smaller nonzero elements.
std::vector<std::uint64_t> naive_primitives(const NaiveSemigroup& ns);

// Primitive elements at or above the conductor.
std::vector<std::uint64_t> naive_right_generators(const NaiveSemigroup& ns);

// u_0 .. u_{k-1}.
std::vector<std::uint64_t> naive_jumps(const NaiveSemigroup& ns);

// All order-p seeds, by the definitional double loop: candidates s in
// [c, c + u_p - 1] such that lambda_s + lambda_p != lambda_i + lambda_j
// for all p < i <= j < s.
std::vector<std::uint64_t> naive_seeds(const NaiveSemigroup& ns, std::uint64_t order);

// Seed table rows as '0'/'1' strings, one row per order.
std::vector<std::string> naive_seed_table(const NaiveSemigroup& ns);

// Children in the semigroup tree, in increasing order of removed generator.
std::vector<NaiveSemigroup> naive_children(const NaiveSemigroup& ns);

// Number of semigroups per genus 0..max_genus, by breadth-first expansion.
std::vector<std::uint64_t> naive_count(std::uint64_t max_genus);

}  // namespace sgt::oracle

#endif
