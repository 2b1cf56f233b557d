#include <doctest.h>

#include <functional>

#include "oracle.hpp"
#include "render.hpp"
#include "tree.hpp"

using namespace sgt;

namespace {

Semigroup<2> example_state() {
  return state_from_left_elements<2>(std::vector<std::uint64_t>{0, 3, 6}, 8);
}

template <unsigned W>
void walk_states(const Semigroup<W>& st, std::uint32_t max_genus,
                 const std::function<void(const Semigroup<W>&)>& visit) {
  visit(st);
  if (st.genus >= max_genus) return;
  for (auto g : right_generators(st))
    walk_states(remove_right_generator(st, g), max_genus, visit);
}

}  // namespace

TEST_CASE("removing a right generator updates both streams") {
  const auto st = example_state();
  const auto child = remove_right_generator(st, 8);
  CHECK(child.gaps.to_string(9) == "110110110");
  CHECK(child.seeds.to_string(9) == "011011111");
  CHECK(child.conductor == 9);
  CHECK(child.genus == 6);
  CHECK(child.rank == 3);
  CHECK(child == state_from_left_elements<2>(std::vector<std::uint64_t>{0, 3, 6}, 9));

  const auto other = remove_right_generator(st, 10);
  CHECK(other ==
        state_from_left_elements<2>(std::vector<std::uint64_t>{0, 3, 6, 8, 9}, 11));
}

TEST_CASE("children of the root and of ordinary nodes") {
  const auto root = natural_numbers<2>();
  const auto first = remove_right_generator(root, 1);
  CHECK(first.gaps.to_string(2) == "10");
  CHECK(first.seeds.to_string(2) == "11");
  CHECK(first == low_rank_state<2>(2));

  // removing the multiplicity of an ordinary node gives the next one
  CHECK(remove_right_generator(low_rank_state<2>(2), 2) == low_rank_state<2>(3));
  CHECK(remove_right_generator(low_rank_state<2>(5), 5) == low_rank_state<2>(6));
}

TEST_CASE("only right generators may be removed") {
  const auto st = example_state();
  CHECK_THROWS_AS((void)remove_right_generator(st, 9), std::invalid_argument);
  CHECK_THROWS_AS((void)remove_right_generator(st, 7), std::invalid_argument);
  CHECK_THROWS_AS((void)remove_right_generator(st, 11), std::invalid_argument);
  CHECK_THROWS_AS((void)remove_right_generator(natural_numbers<2>(), 2),
                  std::invalid_argument);
}

TEST_CASE("child construction past the capacity reports overflow") {
  // 64-bit flavour: the chain of multiplicity-2 nodes hits the wall fast
  auto st = from_generators_with_floor<1>(std::vector<std::uint64_t>{2, 61}, 0);
  CHECK(st.conductor == 60);
  st = remove_right_generator(st, 61);  // conductor 62
  st = remove_right_generator(st, 63);  // conductor 64, still fits
  CHECK(st.conductor == 64);
  CHECK_THROWS_AS((void)remove_right_generator(st, 65), overflow_error);
}

TEST_CASE("child updates match the reference construction exhaustively") {
  std::uint64_t edges = 0;
  std::function<void(const oracle::NaiveSemigroup&, const Semigroup<2>&)> walk =
      [&](const oracle::NaiveSemigroup& ns, const Semigroup<2>& st) {
        if (ns.genus >= 10) return;
        const auto kids = oracle::naive_children(ns);
        const auto gens = right_generators(st);
        REQUIRE(kids.size() == gens.size());
        for (std::size_t i = 0; i < kids.size(); ++i) {
          const auto child = remove_right_generator(st, gens[i]);
          const auto expect = state_from_left_elements<2>(
              oracle::naive_left_elements(kids[i]), kids[i].conductor);
          CHECK(child == expect);
          ++edges;
          walk(kids[i], child);
        }
      };
  walk(oracle::naive_natural(), natural_numbers<2>());
  CHECK(edges > 600);
}

TEST_CASE("theorem-assembled child tables equal the constructed ones") {
  std::uint64_t checked = 0;
  walk_states<2>(natural_numbers<2>(), 13, [&](const Semigroup<2>& st) {
    for (auto g : right_generators(st)) {
      CHECK(classify_child_seeds(st, g) == seed_table(remove_right_generator(st, g)));
      ++checked;
    }
  });
  CHECK(checked > 10000);
}

TEST_CASE("removing the conductor itself widens the last table row") {
  // that child gains one extra order-(k-1) seed slot
  const auto po = low_rank_state<2>(4, 3);
  const auto table = classify_child_seeds(po, 7);  // 7 = conductor
  CHECK(table == seed_table(remove_right_generator(po, 7)));
  CHECK(table.rows.back().size() == jumps(po).back() + 1);
}

TEST_CASE("a leaf child has no order-0 seeds") {
  // {0,3,4,6,...} is a leaf; its table's first row is all zeros
  const auto parent = low_rank_state<2>(3, 1, 2);
  CHECK(right_generators(parent).empty());
  const auto grand = low_rank_state<2>(3);  // {0,3,4,5,...}
  const auto leaf = remove_right_generator(grand, 5);
  CHECK(leaf == parent);
  CHECK(seed_table(leaf).rows[0] == "000");
}

TEST_CASE("closed-form descendant counts") {
  CHECK(descendant_counts(natural_numbers<2>()) == DescendantCounts{1, 2, 4});
  CHECK(descendant_counts(example_state()) == DescendantCounts{2, 3, 3});
  // ordinary node of multiplicity 2: its great-grandchildren are all
  // semigroups of genus 4
  CHECK(descendant_counts(low_rank_state<2>(2)) == DescendantCounts{2, 4, 7});
}

TEST_CASE("descendant counts match a three-level expansion") {
  std::function<std::uint64_t(const oracle::NaiveSemigroup&, int)> size_at =
      [&](const oracle::NaiveSemigroup& ns, int depth) -> std::uint64_t {
    if (depth == 0) return 1;
    std::uint64_t total = 0;
    for (const auto& child : oracle::naive_children(ns))
      total += size_at(child, depth - 1);
    return total;
  };

  const std::vector<std::vector<std::uint64_t>> lefts{
      {0}, {0, 4}, {0, 4, 7}, {0, 3, 6}, {0, 2, 4, 6}, {0, 5, 7, 9, 10, 11}};
  const std::vector<std::uint64_t> conductors{5, 7, 9, 8, 8, 13};
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    const auto ns = oracle::naive_from_left_elements(lefts[i], conductors[i]);
    const auto st = state_from_left_elements<2>(lefts[i], conductors[i]);
    const auto d = descendant_counts(st);
    CHECK(d.children == size_at(ns, 1));
    CHECK(d.grandchildren == size_at(ns, 2));
    CHECK(d.great_grandchildren == size_at(ns, 3));
  }
  // the pseudo-ordinary running case of the counting formulas
  CHECK(descendant_counts(low_rank_state<2>(4, 3)) == DescendantCounts{3, 5, 7});
}

TEST_CASE("descendant count sums reproduce the next three levels") {
  const std::uint32_t max_genus = 12;
  const auto direct = explore_monolithic<2>(max_genus + 3);
  std::vector<std::uint64_t> nc(max_genus + 1, 0), ngc(max_genus + 1, 0),
      nggc(max_genus + 1, 0);
  walk_states<2>(natural_numbers<2>(), max_genus, [&](const Semigroup<2>& st) {
    const auto d = descendant_counts(st);
    nc[st.genus] += d.children;
    ngc[st.genus] += d.grandchildren;
    nggc[st.genus] += d.great_grandchildren;
  });
  for (std::uint32_t g = 0; g <= max_genus; ++g) {
    CHECK(nc[g] == direct.counts_by_genus[g + 1]);
    CHECK(ngc[g] == direct.counts_by_genus[g + 2]);
    CHECK(nggc[g] == direct.counts_by_genus[g + 3]);
  }
}

TEST_CASE("partition roots") {
  const auto roots = partition_roots<2>(4);
  // every root is a rank >= 3 child of a rank <= 2 node
  for (const auto& r : roots) {
    CHECK(r.rank >= 3);
    CHECK(r.genus <= 4);
  }
  CHECK(roots.size() == 5);
  bool found = false;
  for (const auto& r : roots) found |= r == low_rank_state<2>(2, 2, 2);
  CHECK(found);
}

TEST_CASE("rank <= 2 nodes per genus follow the closed form") {
  // one ordinary node per positive genus, floor(g/2) pseudo-ordinary ones
  const auto mono = explore_monolithic<2>(10);
  for (std::uint32_t g = 1; g <= 10; ++g) {
    std::uint64_t low_rank_nodes = 1 + (g >= 2 ? g / 2 : 0);
    std::uint64_t from_roots = 0;
    for (const auto& r : partition_roots<2>(g)) {
      const auto part = explore_subtree(r, g, false);
      from_roots += part.counts[g];
    }
    CHECK(low_rank_nodes + from_roots == mono.counts_by_genus[g]);
  }
}

TEST_CASE("partitioned exploration equals the monolithic one") {
  const auto mono = explore_monolithic<2>(14);
  ExploreOptions opt;
  opt.max_genus = 14;
  opt.workers = 3;
  const auto fast = explore<2>(opt);
  CHECK(fast.counts_by_genus == mono.counts_by_genus);
  CHECK(fast.ok());
}

TEST_CASE("exploration counts match the reference") {
  ExploreOptions opt;
  opt.max_genus = 12;
  opt.workers = 2;
  const auto rep = explore<2>(opt);
  CHECK(rep.counts_by_genus ==
        std::vector<std::uint64_t>{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592});
  CHECK(rep.eliahou_hits.empty());
  CHECK(rep.wilf_violations.empty());
}

TEST_CASE("exploring genus zero visits only the root") {
  ExploreOptions opt;
  opt.max_genus = 0;
  const auto rep = explore<2>(opt);
  CHECK(rep.counts_by_genus == std::vector<std::uint64_t>{1});
}

TEST_CASE("reports are identical for any worker count") {
  ExploreOptions base;
  base.max_genus = 16;
  base.eliahou = true;
  ExploreReport previous;
  for (std::uint32_t workers : {1u, 2u, 5u}) {
    ExploreOptions opt = base;
    opt.workers = workers;
    auto rep = explore<2>(opt);
    if (workers != 1u) {
      CHECK(rep.counts_by_genus == previous.counts_by_genus);
      CHECK(rep.eliahou_hits.size() == previous.eliahou_hits.size());
      CHECK(rep.wilf_violations.size() == previous.wilf_violations.size());
    }
    previous = std::move(rep);
  }
}

TEST_CASE("exploration reports capacity exhaustion with the offending genus") {
  // 64-bit flavour: conductors outgrow 64 bits from genus 33 on
  ExploreOptions opt;
  opt.max_genus = 35;
  opt.workers = 2;
  const auto rep = explore<1>(opt);
  CHECK(!rep.ok());
  CHECK(rep.overflow_genus == 33);

  const auto sub = explore_subtree(
      from_generators_with_floor<1>(std::vector<std::uint64_t>{2, 61}, 0), 35, false);
  CHECK(sub.overflow_genus == 33);
}

TEST_CASE("progress callback sees every subtree root") {
  ExploreOptions opt;
  opt.max_genus = 9;
  opt.workers = 2;
  std::atomic<std::uint64_t> calls{0};
  std::uint64_t final_total = 0;
  std::uint64_t final_done = 0;
  opt.progress = [&](std::uint64_t done, std::uint64_t total) {
    calls++;
    final_done = done;
    final_total = total;
  };
  (void)explore<2>(opt);
  CHECK(final_total == partition_roots<2>(9).size());
  CHECK(final_done == final_total);
  CHECK(calls == final_total);
}

TEST_CASE("rendered trees match the reference expansion") {
  // the documented layout for the root of the whole tree
  const auto root_render = render_tree(natural_numbers<2>(), 3);
  CHECK(root_render ==
        "* .\n"
        "  * 11\n"
        "    * 111\n"
        "      * 1111\n"
        "      * 101\n"
        "        11\n"
        "      * 000\n"
        "        1\n"
        "        11\n"
        "    * 01\n"
        "      11\n"
        "      * 01\n"
        "        01\n"
        "        11\n");

  // figure roots: node-for-node agreement with the reference expansion
  struct Root {
    std::vector<std::uint64_t> left;
    std::uint64_t conductor;
  };
  const std::vector<Root> figure_roots{
      {{0}, 1},  // natural numbers (conductor 0 handled below)
      {{0}, 2},  {{0}, 3},  {{0}, 4},  {{0, 4}, 7},
      {{0, 8, 16, 18, 19, 24, 26, 27}, 30},
  };

  std::function<void(const oracle::NaiveSemigroup&, const RenderNode&)> compare =
      [&](const oracle::NaiveSemigroup& ns, const RenderNode& node) {
        CHECK(node.table.rows == oracle::naive_seed_table(ns));
        const auto kids = oracle::naive_children(ns);
        REQUIRE(node.children.size() == kids.size());
        for (std::size_t i = 0; i < kids.size(); ++i)
          compare(kids[i], node.children[i]);
      };

  {
    // depth-3 expansion of the root: 1 + 1 + 2 + 4 nodes
    const auto tree = expand_tree(natural_numbers<2>(), 3);
    std::function<std::uint64_t(const RenderNode&)> count =
        [&](const RenderNode& n) {
          std::uint64_t total = 1;
          for (const auto& ch : n.children) total += count(ch);
          return total;
        };
    CHECK(count(tree) == 8);
    compare(oracle::naive_natural(), tree);
  }
  for (const auto& fr : figure_roots) {
    if (fr.conductor == 1) continue;  // handled above
    const auto st = state_from_left_elements<2>(fr.left, fr.conductor);
    const auto ns = oracle::naive_from_left_elements(fr.left, fr.conductor);
    compare(ns, expand_tree(st, 3));
  }

  // node counts of a depth-3 render equal the closed-form counts
  const auto po = state_from_left_elements<2>(std::vector<std::uint64_t>{0, 4}, 7);
  const auto d = descendant_counts(po);
  std::function<std::uint64_t(const RenderNode&)> count = [&](const RenderNode& n) {
    std::uint64_t total = 1;
    for (const auto& ch : n.children) total += count(ch);
    return total;
  };
  CHECK(count(expand_tree(po, 3)) == 1 + d.children + d.grandchildren + d.great_grandchildren);

  // a leaf renders as a single node at any depth
  const auto leaf = low_rank_state<2>(3, 1, 2);
  CHECK(count(expand_tree(leaf, 3)) == 1);
  CHECK_THROWS_AS((void)render_tree(leaf, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)render_tree(leaf, 0), std::invalid_argument);
}
