#include <doctest.h>

#include <functional>

#include "oracle.hpp"
#include "tree.hpp"
#include "wilf.hpp"

using namespace sgt;

TEST_CASE("the Eliahou constant at catalogued parameter displays") {
  // <19,26,27>|90
  CHECK(eliahou_constant(EliahouParams{90, 19, 5, 5, 7, 4, 23}) == -1);
  // <20,31,32>|80 and <20,32,33>|80 share their parameters
  CHECK(eliahou_constant(EliahouParams{80, 20, 4, 0, 13, 10, 13}) == -1);
  // multiplicity-2 semigroups balance to zero
  for (std::uint64_t g = 2; g <= 10; ++g)
    CHECK(eliahou_constant(EliahouParams{2 * g, 2, g, 0, 2, 1, g}) == 0);
}

TEST_CASE("the Wilf inequality") {
  CHECK(wilf_holds(EliahouParams{90, 19, 5, 5, 7, 4, 23}));  // 161 >= 90
  CHECK(wilf_holds(EliahouParams{5, 5, 1, 0, 5, 5, 1}));     // ordinary: 5 <= 5
  CHECK(!wilf_holds(EliahouParams{10, 4, 3, 2, 2, 1, 3}));   // synthetic failure
}

TEST_CASE("child parameter update on a forced quotient step") {
  // remainder 0 and offset 0: the quotient always steps up
  const EliahouParams parent{12, 4, 3, 0, 4, 3, 5};
  const auto child = child_params(parent, 0, /*weak=*/false, parent.right_generator_count);
  CHECK(child.conductor == 13);
  CHECK(child.quotient == 4);
  CHECK(child.remainder == 3);  // m - 1
  CHECK(child.primitive_count == parent.primitive_count);
  CHECK(child.right_generator_count == parent.right_generator_count);
  CHECK(child.rank == 5);
}

TEST_CASE("direct parameters of known states") {
  const auto e8 = from_generators_with_floor<2>(std::vector<std::uint64_t>{20, 31, 32}, 80);
  CHECK(params_from_state(e8) == EliahouParams{80, 20, 4, 0, 13, 10, 13});
  CHECK(eliahou_constant(params_from_state(e8)) == -1);

  const auto e10 = from_generators_with_floor<2>(std::vector<std::uint64_t>{19, 26, 27}, 90);
  CHECK(params_from_state(e10) == EliahouParams{90, 19, 5, 5, 7, 4, 23});

  for (std::uint64_t m = 2; m <= 8; ++m) {
    const auto ordinary = params_from_state(low_rank_state<2>(m));
    CHECK(ordinary == EliahouParams{m, m, 1, 0, m, m, 1});
  }

  const auto example =
      state_from_left_elements<2>(std::vector<std::uint64_t>{0, 3, 6}, 8);
  const auto direct = params_from_state(example);
  const auto reference = params_from_naive(oracle::naive_from_left_elements({0, 3, 6}, 8));
  CHECK(direct == reference);
  CHECK(direct.primitive_count == 3);
  CHECK(direct.right_generator_count == 2);
}

TEST_CASE("weakness reads the parent's seed stream") {
  // {0,3,6,8,9,10,...}: both right generators are strong (order-1 seeds)
  const auto st = state_from_left_elements<2>(std::vector<std::uint64_t>{0, 3, 6}, 8);
  CHECK(!is_weak_generator(st, 0));
  CHECK(!is_weak_generator(st, 2));
  // {0,2}+[4: right generator 5 is strong, offset beyond jump1 would be weak
  const auto po = low_rank_state<2>(2, 2);
  CHECK(!is_weak_generator(po, 1));
}

TEST_CASE("incremental updates agree with direct recomputation") {
  std::uint64_t edges = 0;
  std::function<void(const Semigroup<2>&, const EliahouParams&)> walk =
      [&](const Semigroup<2>& st, const EliahouParams& params) {
        REQUIRE(params == params_from_state(st));
        if (st.genus >= 12) return;
        std::uint64_t remaining = params.right_generator_count;
        for (auto g : right_generators(st)) {
          const auto child = remove_right_generator(st, g);
          if (st.rank >= 2) {
            const bool weak = is_weak_generator(st, g - st.conductor);
            walk(child, child_params(params, g - st.conductor, weak, remaining));
            ++edges;
          } else {
            walk(child, params_from_state(child));
          }
          remaining -= 1;
        }
      };
  const auto root = natural_numbers<2>();
  walk(root, params_from_state(root));
  CHECK(edges > 2000);
}

TEST_CASE("parameter chain down to the catalogued genus-67 node") {
  // Walk the tree path from {0,19} U [26,inf) to <19,26,27>|90 carrying the
  // parameters incrementally; each step removes the smallest right
  // generator that is a gap of the destination.
  const auto target =
      from_generators_with_floor<2>(std::vector<std::uint64_t>{19, 26, 27}, 90);
  const auto in_target = [&](std::uint64_t x) {
    if (x == 0 || x >= target.conductor) return true;
    return !target.gaps.test(static_cast<unsigned>(x - 1));
  };
  auto st = low_rank_state<2>(19, 7);
  auto params = params_from_state(st);
  while (st.genus < target.genus) {
    std::uint64_t remaining = params.right_generator_count;
    bool moved = false;
    for (auto g : right_generators(st)) {
      if (!in_target(g)) {
        params = child_params(params, g - st.conductor,
                              is_weak_generator(st, g - st.conductor), remaining);
        st = remove_right_generator(st, g);
        moved = true;
        break;
      }
      remaining -= 1;
    }
    REQUIRE(moved);
  }
  CHECK(st == target);
  CHECK(params == EliahouParams{90, 19, 5, 5, 7, 4, 23});
  CHECK(eliahou_constant(params) == -1);
}

TEST_CASE("family constructors validate their inputs") {
  CHECK_THROWS_AS(ef_family(14, 20, 23), std::invalid_argument);  // a below range
  CHECK_THROWS_AS(ef_family(14, 23, 22), std::invalid_argument);  // a < b violated
  CHECK_THROWS_AS(ef_family(14, 22, 24), std::invalid_argument);  // b above range
  CHECK_THROWS_AS(ef_family(15, 23, 24), std::invalid_argument);  // residues collide
  CHECK_THROWS_AS(delgado_family(3, 0, 0, 0), std::invalid_argument);  // odd p
  CHECK_THROWS_AS(delgado_family(0, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(bef_family(7), std::invalid_argument);
}

TEST_CASE("family identities") {
  const auto e1 = from_generators_with_floor<2>(std::vector<std::uint64_t>{14, 22, 23}, 56);
  CHECK(ef_semigroup<2>(14, 22, 23) == e1);
  CHECK(delgado_semigroup<2>(4, 0, 0, 0) == e1);
  CHECK(bef_semigroup<2>(9) ==
        from_generators_with_floor<2>(std::vector<std::uint64_t>{19, 26, 27}, 90));
  CHECK(eliahou_constant(params_from_state(ef_semigroup<2>(14, 22, 23))) == -1);
  // the boundary member of the arithmetic family misses the constant
  CHECK(eliahou_constant(params_from_naive(
            oracle::naive_from_generators({17, 23, 24}, 80))) == 4);  // t = 8
  // Delgado's family outgrows any fixed width quickly
  CHECK_THROWS_AS((void)delgado_semigroup<2>(8, 4, 1, 2), overflow_error);
}
