#ifndef SGTREE_RENDER_HPP
#define SGTREE_RENDER_HPP

#include <string>
#include <vector>

#include "tree.hpp"

namespace sgt {

// A node of a rendered descendant tree: its seed table plus the expanded
// children, in increasing order of removed generator.
struct RenderNode {
  SeedTable table;
  std::vector<RenderNode> children;
};

template <unsigned Words>
RenderNode expand_tree(const Semigroup<Words>& st, unsigned depth) {
  RenderNode node;
  node.table = seed_table(st);
  if (depth > 0)
    for (auto g : right_generators(st))
      node.children.push_back(expand_tree(remove_right_generator(st, g), depth - 1));
  return node;
}

// Text layout: one seed table per node, rows stacked as bit rows.  A "*"
// starts a node, its remaining rows align under the first, children are
// indented two columns.  The empty table of the root {0,1,...} prints as
// ".".
//
//   * 101
//     101
//     11
//     * 011
//       011
//       111
inline void render_node(const RenderNode& node, const std::string& indent,
                        std::string& out) {
  out += indent + "* ";
  if (node.table.rows.empty()) {
    out += ".\n";
  } else {
    out += node.table.rows[0] + "\n";
    for (std::size_t i = 1; i < node.table.rows.size(); ++i)
      out += indent + "  " + node.table.rows[i] + "\n";
  }
  for (const auto& child : node.children) render_node(child, indent + "  ", out);
}

inline std::string render_text(const RenderNode& root) {
  std::string out;
  render_node(root, "", out);
  return out;
}

template <unsigned Words>
std::string render_tree(const Semigroup<Words>& st, unsigned depth) {
  if (depth < 1 || depth > 3)
    throw std::invalid_argument("render depth must be 1, 2 or 3");
  return render_text(expand_tree(st, depth));
}

}  // namespace sgt

#endif
