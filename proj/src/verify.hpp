#ifndef SGTREE_VERIFY_HPP
#define SGTREE_VERIFY_HPP

#include <cstdint>
#include <string>

namespace sgt::verify {

struct SuiteResult {
  bool passed = false;
  std::string log;
};

// Per-genus node counts: closed-form + partitioned exploration against the
// monolithic traversal and the breadth-first reference.  Default genus 12.
SuiteResult counts(std::uint32_t max_genus = 0);

// Lockstep walk of the reference tree and the bitstream tree: stream
// splits, child updates, definitional seeds, seed tables, child seed
// classification.  Default genus 12.
SuiteResult seeds(std::uint32_t max_genus = 0);

// Sums of the closed-form child/grandchild/great-grandchild counts over
// each genus level against the directly enumerated node counts three
// levels down.  Default genus 18.
SuiteResult ggc(std::uint32_t max_genus = 0);

// Incremental Eliahou parameter updates against direct recomputation on
// every edge below a non-ordinary parent.  Default genus 14.
SuiteResult eliahou(std::uint32_t max_genus = 0);

// Family constants: the ten catalogued Eliahou semigroups, the EF family,
// the boundary and regular BEF members, and the four child families of
// (pseudo-)symmetric semigroups.  No genus parameter.
SuiteResult families(std::uint32_t unused = 0);

// Dispatch by suite name; unknown names return passed = false with a
// usage message.
SuiteResult run(const std::string& suite, std::uint32_t genus_limit);

}  // namespace sgt::verify

#endif
