#ifndef SGTREE_TREE_HPP
#define SGTREE_TREE_HPP

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "semigroup.hpp"
#include "wilf.hpp"

namespace sgt {

struct DescendantCounts {
  std::uint64_t children = 0;
  std::uint64_t grandchildren = 0;
  std::uint64_t great_grandchildren = 0;

  friend bool operator==(const DescendantCounts&, const DescendantCounts&) = default;
};

// One node reported by the Eliahou hook.
struct EliahouHit {
  std::uint32_t genus = 0;
  std::uint64_t conductor = 0;
  std::vector<std::uint64_t> generators;  // primitives below the conductor
  EliahouParams params;
  std::int64_t constant = 0;
};

struct ExploreReport {
  std::vector<std::uint64_t> counts_by_genus;  // index = genus
  std::vector<EliahouHit> eliahou_hits;        // every E < 0 node of rank >= 3
  std::vector<EliahouHit> wilf_violations;     // expected to stay empty
  std::uint32_t max_genus_explored = 0;
  double wall_seconds = 0.0;
  std::int64_t overflow_genus = -1;  // genus of the first unrepresentable node

  bool ok() const { return overflow_genus < 0; }
};

struct ExploreOptions {
  std::uint32_t max_genus = 0;
  std::uint32_t workers = 1;
  bool eliahou = false;
  // Called as subtree roots complete; used for long-run progress output.
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

// The child Lambda \ {removed}: seed stream by the masking loop
//   A = A >> 1; auxS = auxS /\ A   (removed - c times)
// followed by a shift down and the three forced trailing seeds, gap stream
// by setting the removed element's gap bit.
template <unsigned Words>
Semigroup<Words> remove_right_generator(const Semigroup<Words>& st,
                                        std::uint64_t removed) {
  if (st.conductor == 0) {
    if (removed != 1)
      throw std::invalid_argument("1 is the only right generator here");
  } else {
    if (removed < st.conductor || removed >= st.conductor + st.multiplicity ||
        !st.seeds.test(static_cast<unsigned>(removed - st.conductor)))
      throw std::invalid_argument("not a right generator");
  }
  if (removed + 1 > Bitstream<Words>::capacity)
    throw overflow_error("child conductor exceeds capacity");

  const unsigned off = static_cast<unsigned>(removed - st.conductor);
  const unsigned lambda = static_cast<unsigned>(removed);

  Bitstream<Words> shifted = st.gaps;
  Bitstream<Words> masked = st.seeds;
  for (unsigned i = 0; i < off; ++i) {
    shifted.shift_up1_unchecked();
    masked &= shifted;
  }

  Semigroup<Words> child;
  child.seeds = masked.shift_down(off + 1);
  child.seeds.set(lambda);
  if (lambda >= 1) child.seeds.set(lambda - 1);
  if (lambda >= 2) child.seeds.set(lambda - 2);
  child.gaps = st.gaps;
  child.gaps.set(lambda - 1);
  child.conductor = lambda + 1;
  child.genus = st.genus + 1;
  child.rank = st.rank + off;

  const std::uint32_t s_index = st.rank + off;
  if (s_index == 1) {
    child.multiplicity = st.multiplicity + st.jump1;
    child.jump1 = st.jump2;
    child.jump2 = 1;
  } else if (s_index == 2) {
    child.multiplicity = st.multiplicity;
    child.jump1 = st.jump1 + st.jump2;
    child.jump2 = 1;
  } else if (s_index == 3) {
    child.multiplicity = st.multiplicity;
    child.jump1 = st.jump1;
    child.jump2 = st.jump2 + 1;
  } else {
    child.multiplicity = st.multiplicity;
    child.jump1 = st.jump1;
    child.jump2 = st.jump2;
  }
  assert(child.gaps.weight_range(0, child.conductor - 1) == child.genus);
  return child;
}

// The child's seed table assembled from the case list of the update
// theorem (recycled old-order seeds, new old-order seeds, new-order
// seeds), never from the child's own stream.  Must agree with
// seed_table(remove_right_generator(st, removed)).
template <unsigned Words>
SeedTable classify_child_seeds(const Semigroup<Words>& st, std::uint64_t removed) {
  if (st.conductor == 0) {
    if (removed != 1)
      throw std::invalid_argument("1 is the only right generator here");
    return SeedTable{{"11"}};  // new-order seeds 2 and 3 of {0,2,3,...}
  }
  if (removed < st.conductor || removed >= st.conductor + st.multiplicity ||
      !st.seeds.test(static_cast<unsigned>(removed - st.conductor)))
    throw std::invalid_argument("not a right generator");

  const auto u = jumps(st);
  const auto left = left_elements(st);
  const std::uint64_t k = st.rank;
  const std::uint64_t off = removed - st.conductor;
  const std::uint64_t s_index = k + off;

  SeedTable t;
  for (std::uint64_t p = 0; p < s_index; ++p) {
    if (p < k) {
      const bool widened = (p == k - 1 && off == 0);
      std::string row(u[p] + (widened ? 1 : 0), '0');
      // Recycled: order-p seeds of the parent beyond the removed element.
      for (std::uint64_t o = off + 1; o < u[p]; ++o)
        if (st.seeds.test(static_cast<unsigned>(left[p] + o)))
          row[o - off - 1] = '1';
      // New seeds land at removed + u_p (and removed + u_p + 1 when the
      // last row widens).
      if (p + 1 < k) {
        if (off < u[p + 1] && st.seeds.test(static_cast<unsigned>(left[p + 1] + off)))
          row[u[p] - 1] = '1';
      } else if (off == 0) {
        row[u[p] - 1] = '1';
        row[u[p]] = '1';
      } else if (off == 1) {
        row[u[p] - 1] = '1';
      }
      t.rows.push_back(std::move(row));
    } else if (p == s_index - 1) {
      t.rows.push_back("11");
    } else if (p == s_index - 2) {
      t.rows.push_back("1");
    } else {
      t.rows.push_back("0");
    }
  }
  return t;
}

// Closed-form child/grandchild/great-grandchild counts from the seed
// stream and (m, u, v) alone.
template <unsigned Words>
DescendantCounts descendant_counts(const Semigroup<Words>& st) {
  const std::uint64_t m = st.multiplicity, u = st.jump1, v = st.jump2,
                      k = st.rank;
  const auto choose2 = [](std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; };
  const auto choose3 = [](std::uint64_t n) {
    return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  };
  if (k == 0) return {1, 2, 4};

  DescendantCounts d;
  if (k == 1)
    d.children = m;
  else if (k == 2)
    d.children = m - 1;
  else
    d.children = st.seeds.weight_range(0, static_cast<unsigned>(m - 1));

  std::uint64_t strong = 0;
  if (k >= 2)
    strong = (st.seeds & st.seeds.shift_down(static_cast<unsigned>(m)))
                 .weight_range(0, static_cast<unsigned>(u - 1));

  if (k == 1)
    d.grandchildren = choose2(m) + 3;
  else
    d.grandchildren = choose2(d.children) + strong;

  if (k == 1) {
    d.great_grandchildren = choose3(m) + 3 * m + (m <= 3 ? 1 : 3);
  } else if (k == 2) {
    const std::uint64_t da = m < 2 * u ? 1 : 0;
    const std::uint64_t db = (u == m || 2 * u != m) ? 1 : 0;
    const std::uint64_t dc = (u < m - 1 && 2 * u + 1 != m) ? 1 : 0;
    const std::uint64_t dd = u == m - 1 ? 1 : 0;
    d.great_grandchildren = choose3(m - 1) + (u - da) * (m - 2) + db + 2 * dc + dd;
  } else {
    const std::uint64_t newly =
        (st.seeds & st.seeds.shift_down(static_cast<unsigned>(u)) &
         st.seeds.shift_down(static_cast<unsigned>(u + m)))
            .weight_range(0, static_cast<unsigned>(v - 1));
    d.great_grandchildren = choose3(d.children) +
                            (d.children > 0 ? strong * (d.children - 1) : 0) +
                            newly;
  }
  return d;
}

// Subtree roots that partition the rank >= 3 part of the tree: every
// rank >= 3 child of an ordinary or pseudo-ordinary node.  Ranks 0..2 are
// the closed-form spine (one ordinary node per genus, floor(g/2)
// pseudo-ordinary ones) and are never put inside a subtree.
//
// A root whose conductor does not fit the capacity is skipped and its
// genus recorded through overflow_genus (smallest offender), so the caller
// can report the exhaustion instead of exploring an incomplete forest.
template <unsigned Words>
std::vector<Semigroup<Words>> partition_roots(std::uint32_t max_genus,
                                              std::int64_t* overflow_genus = nullptr) {
  std::vector<Semigroup<Words>> roots;
  const auto note_overflow = [&](std::uint64_t genus) {
    if (overflow_genus && (*overflow_genus < 0 ||
                           static_cast<std::int64_t>(genus) < *overflow_genus))
      *overflow_genus = static_cast<std::int64_t>(genus);
  };
  // Children of the ordinary node of multiplicity m sit at genus m.
  for (std::uint64_t m = 3; m <= max_genus; ++m) {
    if (m > Bitstream<Words>::capacity) {
      note_overflow(m - 1);
      break;
    }
    const auto parent = low_rank_state<Words>(m);
    for (std::uint64_t i = 2; i < m; ++i) {
      if (m + i + 1 > Bitstream<Words>::capacity) {
        note_overflow(m);
        break;
      }
      roots.push_back(remove_right_generator(parent, m + i));
    }
  }
  // Children of {0, m} U [m+u, inf) sit at genus m + u - 1.
  for (std::uint64_t m = 2; m + 1 <= max_genus; ++m) {
    for (std::uint64_t jump = 2; jump <= m && m + jump - 1 <= max_genus; ++jump) {
      if (m + jump > Bitstream<Words>::capacity) {
        note_overflow(m + jump - 2);
        continue;
      }
      const auto parent = low_rank_state<Words>(m, jump);
      for (std::uint64_t s = 1; s < m; ++s) {
        if (s == m - jump) continue;  // that element is not primitive
        if (m + jump + s + 1 > Bitstream<Words>::capacity) {
          note_overflow(m + jump - 1);
          break;
        }
        roots.push_back(remove_right_generator(parent, m + jump + s));
      }
    }
  }
  return roots;
}

namespace detail {

template <unsigned Words>
struct Frame {
  Bitstream<Words> gaps;
  Bitstream<Words> seeds;
  Bitstream<Words> shifted_gaps;  // gaps shifted up mask_steps times
  Bitstream<Words> masked_seeds;  // seed stream masked mask_steps times
  Bitstream<Words> pending;       // right-generator offsets still to expand
  std::uint32_t conductor = 0, multiplicity = 1, jump1 = 1, jump2 = 1;
  std::uint32_t rank = 0, genus = 0, mask_steps = 0;
  // Eliahou chain (valid only when the hook runs).
  std::uint64_t p = 0, r = 0, q = 0, rho = 0, r_remaining = 0;
};

template <unsigned Words>
Bitstream<Words> initial_pending(const Semigroup<Words>& st) {
  if (st.conductor == 0) return Bitstream<Words>::unit(1);
  if (st.multiplicity == 0) return {};
  return st.seeds & Bitstream<Words>::ones(st.multiplicity);
}

struct PartialReport {
  std::vector<std::uint64_t> counts;
  std::vector<EliahouHit> hits;
  std::vector<EliahouHit> violations;
  std::int64_t overflow_genus = -1;
};

// Depth-first exploration of one subtree.  Children are generated in
// increasing order of removed generator; the masking state is shared
// between consecutive siblings so the masking loop runs at most
// (largest offset) times per node.  Nodes at the genus budget are counted
// without materializing their streams.
template <unsigned Words>
class SubtreeExplorer {
 public:
  SubtreeExplorer(std::uint32_t max_genus, bool hook, PartialReport& out)
      : max_genus_(max_genus), hook_(hook), out_(out) {
    out_.counts.resize(max_genus + 1, 0);
  }

  void run(const Semigroup<Words>& root) {
    if (root.genus > max_genus_) return;
    out_.counts[root.genus]++;
    EliahouParams root_params;
    if (hook_) {
      // The incremental parameter update assumes non-ordinary parents,
      // which holds throughout a subtree rooted at rank >= 3.
      if (root.rank < 3)
        throw std::invalid_argument("Eliahou hook needs a rank >= 3 subtree root");
      root_params = params_from_state(root);
      check_node(root_params, root.genus, &root, nullptr, 0);
    }
    if (root.genus == max_genus_) return;

    stack_.clear();
    stack_.reserve(max_genus_ - root.genus + 1);
    push_frame(root, root_params);
    while (!stack_.empty()) {
      Frame<Words>& f = stack_.back();
      const unsigned i = f.pending.pop_lowest();
      if (i == Bitstream<Words>::capacity) {
        stack_.pop_back();
        continue;
      }
      if (!expand_child(f, i)) return;  // capacity exhausted
    }
  }

 private:
  void push_frame(const Semigroup<Words>& st, const EliahouParams& params) {
    Frame<Words> f;
    f.gaps = st.gaps;
    f.seeds = st.seeds;
    f.shifted_gaps = st.gaps;
    f.masked_seeds = st.seeds;
    f.pending = initial_pending(st);
    f.conductor = st.conductor;
    f.multiplicity = st.multiplicity;
    f.jump1 = st.jump1;
    f.jump2 = st.jump2;
    f.rank = st.rank;
    f.genus = st.genus;
    if (hook_) {
      f.p = params.primitive_count;
      f.r = params.right_generator_count;
      f.q = params.quotient;
      f.rho = params.remainder;
      f.r_remaining = params.right_generator_count;
    }
    stack_.push_back(std::move(f));
  }

  // Applies the masking loop up to the given offset, reusing the progress
  // made for earlier siblings.
  static void advance_mask(Frame<Words>& f, unsigned offset) {
    while (f.mask_steps < offset) {
      f.shifted_gaps.shift_up1_unchecked();
      f.masked_seeds &= f.shifted_gaps;
      ++f.mask_steps;
    }
  }

  static Semigroup<Words> build_child(Frame<Words>& f, unsigned offset) {
    advance_mask(f, offset);
    const unsigned lambda = f.conductor + offset;
    Semigroup<Words> child;
    child.seeds = f.masked_seeds.shift_down(offset + 1);
    child.seeds.set(lambda);
    if (lambda >= 1) child.seeds.set(lambda - 1);
    if (lambda >= 2) child.seeds.set(lambda - 2);
    child.gaps = f.gaps;
    child.gaps.set(lambda - 1);
    child.conductor = lambda + 1;
    child.genus = f.genus + 1;
    child.rank = f.rank + offset;
    const std::uint32_t s_index = f.rank + offset;
    child.multiplicity = s_index == 1 ? f.multiplicity + f.jump1 : f.multiplicity;
    child.jump1 = s_index == 1 ? f.jump2
                : s_index == 2 ? f.jump1 + f.jump2
                               : f.jump1;
    child.jump2 = s_index == 3 ? f.jump2 + 1 : (s_index <= 2 ? 1 : f.jump2);
    return child;
  }

  // Eliahou / Wilf evaluation of one node; reconstructs the full state
  // only when something must be reported.
  void check_node(const EliahouParams& params, std::uint32_t genus,
                  const Semigroup<Words>* state, Frame<Words>* parent,
                  unsigned offset) {
    if (params.rank < 3) return;
    const std::int64_t e = eliahou_constant(params);
    const bool wilf = wilf_holds(params);
    if (e >= 0 && wilf) return;

    Semigroup<Words> built;
    if (state == nullptr) {
      built = build_child(*parent, offset);
      state = &built;
    }
    EliahouHit hit;
    hit.genus = genus;
    hit.conductor = params.conductor;
    for (auto x : primitives(*state))
      if (x < params.conductor) hit.generators.push_back(x);
    hit.params = params;
    hit.constant = e;
    if (e < 0) out_.hits.push_back(hit);
    if (!wilf) out_.violations.push_back(hit);
  }

  // Generates every child of the top frame at offset i.  Returns false
  // once a child conductor no longer fits the capacity.
  bool expand_child(Frame<Words>& f, unsigned i) {
    const std::uint64_t lambda = static_cast<std::uint64_t>(f.conductor) + i;
    if (lambda + 1 > Bitstream<Words>::capacity) {
      out_.overflow_genus = f.genus + 1;
      return false;
    }
    const std::uint32_t child_genus = f.genus + 1;
    out_.counts[child_genus]++;

    EliahouParams child_params_v;
    if (hook_) {
      const bool weak = !(i < f.jump1 && f.seeds.test(f.multiplicity + i));
      const bool quotient_up = f.rho <= i;
      child_params_v.conductor = lambda + 1;
      child_params_v.multiplicity = f.multiplicity;
      child_params_v.quotient = f.q + (quotient_up ? 1 : 0);
      child_params_v.remainder = f.rho - i - 1 + (quotient_up ? f.multiplicity : 0);
      child_params_v.primitive_count = f.p - (weak ? 1 : 0);
      child_params_v.right_generator_count = f.r_remaining - (weak ? 1 : 0);
      child_params_v.rank = f.rank + i;
      f.r_remaining -= 1;  // one fewer parent right generator from here on
      check_node(child_params_v, child_genus, nullptr, &f, i);
    }

    if (child_genus == max_genus_) return true;

    Semigroup<Words> child = build_child(f, i);
    if (child_genus + 1 == max_genus_) {
      // Grandchildren are leaves of this run: count them by weight and,
      // when the hook is on, walk their offsets with scalar updates only.
      Bitstream<Words> pending = initial_pending(child);
      if (!hook_) {
        out_.counts[max_genus_] += pending.weight();
        return true;
      }
      Frame<Words> leaf;
      leaf.gaps = child.gaps;
      leaf.seeds = child.seeds;
      leaf.shifted_gaps = child.gaps;
      leaf.masked_seeds = child.seeds;
      leaf.pending = pending;
      leaf.conductor = child.conductor;
      leaf.multiplicity = child.multiplicity;
      leaf.jump1 = child.jump1;
      leaf.jump2 = child.jump2;
      leaf.rank = child.rank;
      leaf.genus = child.genus;
      leaf.p = child_params_v.primitive_count;
      leaf.r = child_params_v.right_generator_count;
      leaf.q = child_params_v.quotient;
      leaf.rho = child_params_v.remainder;
      leaf.r_remaining = child_params_v.right_generator_count;
      for (;;) {
        const unsigned j = leaf.pending.pop_lowest();
        if (j == Bitstream<Words>::capacity) break;
        if (!expand_child(leaf, j)) return false;
      }
      return true;
    }

    push_frame(child, child_params_v);
    return true;
  }

  std::uint32_t max_genus_;
  bool hook_;
  PartialReport& out_;
  std::vector<Frame<Words>> stack_;
};

inline void sort_hits(std::vector<EliahouHit>& hits) {
  std::sort(hits.begin(), hits.end(), [](const EliahouHit& a, const EliahouHit& b) {
    if (a.genus != b.genus) return a.genus < b.genus;
    if (a.conductor != b.conductor) return a.conductor < b.conductor;
    return a.generators < b.generators;
  });
}

}  // namespace detail

// Explores one subtree completely (root included, descendants down to the
// genus budget); the building block of both exploration modes.
template <unsigned Words>
detail::PartialReport explore_subtree(const Semigroup<Words>& root,
                                      std::uint32_t max_genus, bool hook) {
  detail::PartialReport part;
  part.counts.resize(max_genus + 1, 0);
  detail::SubtreeExplorer<Words>(max_genus, hook, part).run(root);
  return part;
}

// Single traversal of the whole tree from the root; no closed forms, no
// partitioning, no hook.  The reference the partitioned driver is checked
// against.
template <unsigned Words>
ExploreReport explore_monolithic(std::uint32_t max_genus) {
  const auto start = std::chrono::steady_clock::now();
  auto part = explore_subtree(natural_numbers<Words>(), max_genus, false);
  ExploreReport rep;
  rep.counts_by_genus = std::move(part.counts);
  rep.eliahou_hits = std::move(part.hits);
  rep.wilf_violations = std::move(part.violations);
  rep.overflow_genus = part.overflow_genus;
  rep.max_genus_explored = max_genus;
  detail::sort_hits(rep.eliahou_hits);
  detail::sort_hits(rep.wilf_violations);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// Fork-join exploration: rank <= 2 nodes are tallied in closed form,
// rank >= 3 subtree roots are dealt to workers (larger multiplicities
// first), and the partial reports are merged at the end.  Reports are
// identical for any worker count.
template <unsigned Words>
ExploreReport explore(const ExploreOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint32_t max_genus = opt.max_genus;

  ExploreReport rep;
  rep.max_genus_explored = max_genus;
  rep.counts_by_genus.assign(max_genus + 1, 0);
  rep.counts_by_genus[0] = 1;  // the natural numbers
  for (std::uint32_t g = 1; g <= max_genus; ++g)
    rep.counts_by_genus[g] += 1;  // the ordinary node of genus g
  for (std::uint32_t g = 2; g <= max_genus; ++g)
    rep.counts_by_genus[g] += g / 2;  // pseudo-ordinary nodes

  std::vector<Semigroup<Words>> roots = partition_roots<Words>(max_genus, &rep.overflow_genus);
  if (rep.overflow_genus >= 0) return rep;
  std::stable_sort(roots.begin(), roots.end(),
                   [](const Semigroup<Words>& a, const Semigroup<Words>& b) {
                     return a.multiplicity > b.multiplicity;
                   });

  const unsigned workers = std::max(1u, opt.workers);
  std::vector<detail::PartialReport> parts(workers);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::atomic<bool> failed{false};
  std::mutex progress_mutex;

  auto work = [&](unsigned w) {
    parts[w].counts.resize(max_genus + 1, 0);
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= roots.size() || failed.load(std::memory_order_relaxed)) break;
      detail::SubtreeExplorer<Words> ex(max_genus, opt.eliahou, parts[w]);
      ex.run(roots[idx]);
      if (parts[w].overflow_genus >= 0) failed.store(true);
      if (opt.progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        opt.progress(done.fetch_add(1) + 1, roots.size());
      } else {
        done.fetch_add(1);
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  for (auto& part : parts) {
    for (std::uint32_t g = 0; g <= max_genus; ++g)
      rep.counts_by_genus[g] += part.counts.empty() ? 0 : part.counts[g];
    for (auto& h : part.hits) rep.eliahou_hits.push_back(std::move(h));
    for (auto& h : part.violations) rep.wilf_violations.push_back(std::move(h));
    if (part.overflow_genus >= 0 &&
        (rep.overflow_genus < 0 || part.overflow_genus < rep.overflow_genus))
      rep.overflow_genus = part.overflow_genus;
  }
  detail::sort_hits(rep.eliahou_hits);
  detail::sort_hits(rep.wilf_violations);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace sgt

#endif
