#include "verify.hpp"

#include <cinttypes>
#include <cstdarg>
#include <cstdio>
#include <functional>

#include "oracle.hpp"
#include "render.hpp"
#include "tree.hpp"
#include "wilf.hpp"

namespace sgt::verify {

namespace {

constexpr unsigned kWords = 2;  // every suite fits the 128-bit flavour

void logf(std::string& log, const char* fmt, ...) {
  char line[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(line, sizeof line, fmt, args);
  va_end(args);
  log += line;
  log += '\n';
}

struct Checker {
  std::string log;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (failures <= 20) log += "FAIL: " + what + "\n";
    }
  }

  SuiteResult finish(const char* suite) {
    logf(log, "%s: %" PRIu64 " checks, %" PRIu64 " failures", suite, checks, failures);
    return {failures == 0, log};
  }
};

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// Walks the reference tree and the bitstream tree side by side.
void lockstep(const oracle::NaiveSemigroup& ns, const Semigroup<kWords>& st,
              std::uint32_t max_genus,
              const std::function<void(const oracle::NaiveSemigroup&,
                                       const Semigroup<kWords>&)>& visit) {
  visit(ns, st);
  if (ns.genus >= max_genus) return;
  const auto kids = oracle::naive_children(ns);
  const auto gens = right_generators(st);
  for (std::size_t i = 0; i < kids.size() && i < gens.size(); ++i)
    lockstep(kids[i], remove_right_generator(st, gens[i]), max_genus, visit);
}

}  // namespace

SuiteResult counts(std::uint32_t max_genus) {
  if (max_genus == 0) max_genus = 12;
  Checker ck;

  const auto reference = oracle::naive_count(max_genus);
  const auto mono = explore_monolithic<kWords>(max_genus);
  ExploreOptions opt;
  opt.max_genus = max_genus;
  opt.workers = 2;
  const auto fast = explore<kWords>(opt);

  ck.expect(mono.ok(), "monolithic traversal hit the capacity");
  ck.expect(fast.ok(), "partitioned traversal hit the capacity");
  for (std::uint32_t g = 0; g <= max_genus; ++g) {
    ck.expect(mono.counts_by_genus[g] == reference[g],
              "monolithic count at genus " + std::to_string(g) + ": " +
                  std::to_string(mono.counts_by_genus[g]) + " vs reference " +
                  std::to_string(reference[g]));
    ck.expect(fast.counts_by_genus[g] == reference[g],
              "partitioned count at genus " + std::to_string(g) + ": " +
                  std::to_string(fast.counts_by_genus[g]) + " vs reference " +
                  std::to_string(reference[g]));
  }

  // Subtree sizes plus the closed-form low-rank tallies reproduce the
  // monolithic totals.
  std::vector<std::uint64_t> unioned(max_genus + 1, 0);
  unioned[0] = 1;
  for (std::uint32_t g = 1; g <= max_genus; ++g) unioned[g] = 1 + (g >= 2 ? g / 2 : 0);
  for (const auto& root : partition_roots<kWords>(max_genus)) {
    const auto part = explore_subtree(root, max_genus, false);
    for (std::uint32_t g = 0; g <= max_genus; ++g) unioned[g] += part.counts[g];
  }
  for (std::uint32_t g = 0; g <= max_genus; ++g)
    ck.expect(unioned[g] == mono.counts_by_genus[g],
              "subtree union at genus " + std::to_string(g));

  logf(ck.log, "counts agree for genus 0..%u: %s", max_genus,
       join(reference).c_str());
  return ck.finish("counts");
}

SuiteResult seeds(std::uint32_t max_genus) {
  if (max_genus == 0) max_genus = 12;
  Checker ck;

  lockstep(
      oracle::naive_natural(), natural_numbers<kWords>(), max_genus,
      [&](const oracle::NaiveSemigroup& ns, const Semigroup<kWords>& st) {
        const auto left = oracle::naive_left_elements(ns);
        const std::string where = " at {" + join(left) + "} c=" +
                                  std::to_string(ns.conductor);

        // (a) the tree-walk state equals the sum-complement split
        const auto split = state_from_left_elements<kWords>(left, ns.conductor);
        ck.expect(split == st, "stream split vs tree walk" + where);
        ck.expect(st.conductor == ns.conductor && st.genus == ns.genus &&
                      st.rank == ns.rank() && st.multiplicity == ns.multiplicity,
                  "scalar fields" + where);
        ck.expect(jumps(st) == oracle::naive_jumps(ns), "jump sequence" + where);

        // (b) children agree pairwise (the lockstep walk already descends
        // through remove_right_generator; check the removal sets match)
        std::vector<std::uint64_t> naive_gens;
        for (auto x : oracle::naive_right_generators(ns)) naive_gens.push_back(x);
        ck.expect(naive_gens == right_generators(st), "right generators" + where);

        // (c) definitional seeds against the seed-stream reading
        const auto table = seed_table(st);
        ck.expect(table.rows == oracle::naive_seed_table(ns), "seed table" + where);
        ck.expect(table.concatenated() ==
                      st.seeds.to_string(st.conductor),
                  "table concatenation vs seed stream" + where);
        for (std::uint64_t p = 0; p < st.rank; ++p) {
          const auto u = jumps(st)[p];
          std::vector<std::uint64_t> read;
          for (std::uint64_t cand = st.conductor; cand < st.conductor + u; ++cand)
            if (is_order_p_seed(st, cand, p)) read.push_back(cand);
          ck.expect(read == oracle::naive_seeds(ns, p),
                    "order-" + std::to_string(p) + " seeds" + where);
        }

        // seed bits literally say "not a sum of two left elements"
        if (st.conductor >= 1) {
          for (std::uint64_t i = 0; i < st.conductor; ++i) {
            const std::uint64_t lambda = st.conductor + i;
            bool sum = false;
            for (auto a : left)
              for (auto b : left)
                if (a + b == lambda) sum = true;
            ck.expect(st.seeds.test(static_cast<unsigned>(i)) == !sum,
                      "seed bit " + std::to_string(i) + " vs sum check" + where);
          }
        }

        // the theorem-assembled child tables match the constructed children
        for (auto g : right_generators(st)) {
          const auto child = remove_right_generator(st, g);
          ck.expect(classify_child_seeds(st, g) == seed_table(child),
                    "classified child table, removed " + std::to_string(g) + where);
        }
      });

  return ck.finish("seeds");
}

SuiteResult ggc(std::uint32_t max_genus) {
  if (max_genus == 0) max_genus = 18;
  Checker ck;

  const auto direct = explore_monolithic<kWords>(max_genus + 3);
  ck.expect(direct.ok(), "direct enumeration hit the capacity");

  std::vector<std::uint64_t> child_sum(max_genus + 1, 0);
  std::vector<std::uint64_t> grandchild_sum(max_genus + 1, 0);
  std::vector<std::uint64_t> great_sum(max_genus + 1, 0);
  std::function<void(const Semigroup<kWords>&)> walk =
      [&](const Semigroup<kWords>& st) {
        const auto d = descendant_counts(st);
        child_sum[st.genus] += d.children;
        grandchild_sum[st.genus] += d.grandchildren;
        great_sum[st.genus] += d.great_grandchildren;
        if (st.genus == max_genus) return;
        for (auto g : right_generators(st)) walk(remove_right_generator(st, g));
      };
  walk(natural_numbers<kWords>());

  for (std::uint32_t g = 0; g <= max_genus; ++g) {
    ck.expect(child_sum[g] == direct.counts_by_genus[g + 1],
              "child sums at genus " + std::to_string(g));
    ck.expect(grandchild_sum[g] == direct.counts_by_genus[g + 2],
              "grandchild sums at genus " + std::to_string(g));
    ck.expect(great_sum[g] == direct.counts_by_genus[g + 3],
              "great-grandchild sums at genus " + std::to_string(g));
  }
  return ck.finish("ggc");
}

SuiteResult eliahou(std::uint32_t max_genus) {
  if (max_genus == 0) max_genus = 14;
  Checker ck;

  std::function<void(const Semigroup<kWords>&, const EliahouParams&)> walk =
      [&](const Semigroup<kWords>& st, const EliahouParams& params) {
        ck.expect(params == params_from_state(st),
                  "params at " + elements_text(st));
        if (eliahou_constant(params) < 0)
          ck.expect(false, "unexpected negative constant at " + elements_text(st));
        ck.expect(wilf_holds(params), "Wilf inequality at " + elements_text(st));
        if (st.genus >= max_genus) return;
        std::uint64_t remaining = params.right_generator_count;
        for (auto g : right_generators(st)) {
          const auto child = remove_right_generator(st, g);
          if (st.rank >= 2) {
            // non-ordinary parent: the incremental update applies
            const bool weak = is_weak_generator(st, g - st.conductor);
            walk(child, child_params(params, g - st.conductor, weak, remaining));
          } else {
            walk(child, params_from_state(child));
          }
          remaining -= 1;
        }
      };
  const auto root = natural_numbers<kWords>();
  walk(root, params_from_state(root));
  return ck.finish("eliahou");
}

SuiteResult families(std::uint32_t) {
  Checker ck;

  // The ten catalogued Eliahou semigroups, all with constant -1.
  struct Entry {
    std::uint64_t a, b, c, floor;
  };
  const Entry eps[] = {
      {14, 22, 23, 56}, {16, 25, 26, 64}, {17, 26, 28, 68}, {17, 27, 28, 68},
      {18, 28, 29, 72}, {19, 29, 31, 76}, {19, 30, 31, 76}, {20, 31, 32, 80},
      {20, 32, 33, 80}, {19, 26, 27, 90},
  };
  for (const auto& e : eps) {
    const std::vector<std::uint64_t> gens{e.a, e.b, e.c};
    const auto st = from_generators_with_floor<kWords>(gens, e.floor);
    const auto params = params_from_state(st);
    ck.expect(eliahou_constant(params) == -1,
              "catalogued semigroup <" + join(gens) + ">|" + std::to_string(e.floor));
    ck.expect(wilf_holds(params), "Wilf for <" + join(gens) + ">");
  }

  // Known parameter displays.
  {
    const auto e8 = params_from_state(
        from_generators_with_floor<kWords>(std::vector<std::uint64_t>{20, 31, 32}, 80));
    ck.expect(e8 == EliahouParams{80, 20, 4, 0, 13, 10, 13}, "parameters of <20,31,32>|80");
    const auto e10 = params_from_state(
        from_generators_with_floor<kWords>(std::vector<std::uint64_t>{19, 26, 27}, 90));
    ck.expect(e10 == EliahouParams{90, 19, 5, 5, 7, 4, 23}, "parameters of <19,26,27>|90");
  }

  // EF(m,a,b) has constant -1 for every admissible triple with m <= 40.
  std::uint64_t ef_count = 0;
  for (std::uint64_t m = 2; m <= 40; ++m)
    for (std::uint64_t a = (3 * m + 2) / 2; 3 * a <= 5 * m - 1; ++a)
      for (std::uint64_t b = a + 1; 3 * b <= 5 * m - 1; ++b) {
        GeneratorsWithFloor fam;
        try {
          fam = ef_family(m, a, b);
        } catch (const std::invalid_argument&) {
          continue;  // the nine sums collide modulo m
        }
        ++ef_count;
        const auto st = from_generators_with_floor<4>(fam.generators, fam.floor);
        ck.expect(eliahou_constant(params_from_state(st)) == -1,
                  "EF(" + join(fam.generators) + ")");
      }
  logf(ck.log, "admissible EF triples with m <= 40: %" PRIu64, ef_count);
  ck.expect(ef_count > 0, "found no admissible EF triples");

  // Catalogue identities: EF(14,22,23) is the first catalogued semigroup
  // and equals the (0,0) member of Delgado's family at (4,0).
  {
    const auto e1 = from_generators_with_floor<kWords>(std::vector<std::uint64_t>{14, 22, 23}, 56);
    ck.expect(ef_semigroup<kWords>(14, 22, 23) == e1, "EF(14,22,23) identity");
    ck.expect(delgado_semigroup<kWords>(4, 0, 0, 0) == e1, "Delgado (0,0)(4,0) identity");
    ck.expect(e1.genus == 43, "genus of the first catalogued semigroup");
    const auto e8 = from_generators_with_floor<kWords>(std::vector<std::uint64_t>{20, 31, 32}, 80);
    ck.expect(delgado_semigroup<kWords>(4, 0, 0, 3) == e8, "Delgado (0,3)(4,0) identity");
    ck.expect(ef_semigroup<kWords>(20, 31, 32) == e8, "EF(20,31,32) identity");
    const auto e10 = from_generators_with_floor<kWords>(std::vector<std::uint64_t>{19, 26, 27}, 90);
    ck.expect(bef_semigroup<kWords>(9) == e10, "BEF_9 identity");
  }

  // BEF boundary: constant 4 at t = 8, then -1 through t = 30.  Conductor
  // 10t outgrows even the extended width near the top, so the reference
  // representation carries the tail.
  for (std::uint64_t t = 8; t <= 30; ++t) {
    const auto fam = bef_family(t);
    const std::int64_t expected = t == 8 ? 4 : -1;
    const auto naive = oracle::naive_from_generators(fam.generators, fam.floor);
    ck.expect(eliahou_constant(params_from_naive(naive)) == expected,
              "BEF at t=" + std::to_string(t));
    if (10 * t <= 256) {
      const auto st = from_generators_with_floor<4>(fam.generators, fam.floor);
      ck.expect(params_from_state(st) == params_from_naive(naive),
                "BEF state/reference parameter agreement at t=" + std::to_string(t));
    }
  }

  // Children of symmetric and pseudo-symmetric semigroups.
  // (1) multiplicity-2 semigroups: constant 0.
  for (std::uint64_t g = 2; g <= 50; ++g) {
    const auto st = from_generators_with_floor<kWords>(
        std::vector<std::uint64_t>{2, 2 * g + 1}, 0);
    ck.expect(st.genus == g, "multiplicity-2 genus " + std::to_string(g));
    ck.expect(eliahou_constant(params_from_state(st)) == 0,
              "multiplicity-2 constant at genus " + std::to_string(g));
  }
  // (2) {0, g, g+1, ..., 2g-3} U [2g, inf): constant g^2 - 5g + 2.
  for (std::uint64_t g = 5; g <= 50; ++g) {
    std::vector<std::uint64_t> left{0};
    for (std::uint64_t x = g; x <= 2 * g - 3; ++x) left.push_back(x);
    const auto st = state_from_left_elements<kWords>(left, 2 * g);
    const auto e = eliahou_constant(params_from_state(st));
    ck.expect(e == static_cast<std::int64_t>(g * g - 5 * g + 2),
              "one-interval family at g=" + std::to_string(g));
  }
  // (3) and (4): the two multiplicity-3 families, both constant 0.
  for (std::uint64_t t = 1; t <= 20; ++t) {
    {
      std::vector<std::uint64_t> left;
      for (std::uint64_t i = 0; i <= t; ++i) left.push_back(3 * i);
      for (std::uint64_t i = t + 1; i <= 2 * t - 1; ++i) {
        left.push_back(3 * i - 1);
        left.push_back(3 * i);
      }
      left.push_back(3 * (2 * t - 1) + 2);
      left.push_back(3 * (2 * t - 1) + 3);
      const auto st = state_from_left_elements<kWords>(left, 3 * (2 * t - 1) + 5);
      ck.expect(eliahou_constant(params_from_state(st)) == 0,
                "first multiplicity-3 family at t=" + std::to_string(t));
    }
    {
      std::vector<std::uint64_t> left;
      for (std::uint64_t i = 0; i <= t; ++i) left.push_back(3 * i);
      for (std::uint64_t i = t + 1; i <= 2 * t; ++i) {
        left.push_back(3 * i);
        left.push_back(3 * i + 1);
      }
      left.push_back(3 * (2 * t) + 3);
      left.push_back(3 * (2 * t) + 4);
      const auto st = state_from_left_elements<kWords>(left, 3 * (2 * t) + 6);
      ck.expect(eliahou_constant(params_from_state(st)) == 0,
                "second multiplicity-3 family at t=" + std::to_string(t));
    }
  }

  return ck.finish("families");
}

SuiteResult run(const std::string& suite, std::uint32_t genus_limit) {
  if (suite == "counts") return counts(genus_limit);
  if (suite == "seeds") return seeds(genus_limit);
  if (suite == "ggc") return ggc(genus_limit);
  if (suite == "eliahou") return eliahou(genus_limit);
  if (suite == "families") return families(genus_limit);
  throw std::invalid_argument("unknown suite '" + suite +
                              "' (expected counts, seeds, ggc, eliahou or families)");
}

}  // namespace sgt::verify
