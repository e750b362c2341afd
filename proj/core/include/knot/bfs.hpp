#ifndef KNOT_BFS_HPP
#define KNOT_BFS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "knot/stream.hpp"

// Level-order traversal without a search structure: the node queue being
// consumed is the same list being produced, kept safe by a running count of
// how much of it is already known.

namespace knot {

struct BinNode;
struct BinFork {
  Cell<BinNode> left;
  std::int64_t elt;
  Cell<BinNode> right;
};
/// Plain binary tree node; nullopt fork is an empty subtree. Subtree cells
/// may be recipes, so trees can be infinite.
struct BinNode {
  std::optional<BinFork> fork;
};

Cell<BinNode> bin_empty(Arena& a);
Cell<BinNode> bin_fork(Arena& a, Cell<BinNode> left, std::int64_t elt, Cell<BinNode> right);

/// Infinite complete tree: the root holds 1 and the node holding i has
/// children holding 2i and 2i+1, materialized on demand. Its level order is
/// therefore 1,2,3,...
Cell<BinNode> heap_indexed_tree(Arena& a);

/// Level-order elements of t as a lazy stream. Internally the traversal
/// queues tree nodes on a list that it also consumes; a count of the known
/// prefix keeps consumption behind production. Works on infinite trees;
/// the stream is then infinite. Allocates a bounded constant number of list
/// cells per demanded element.
Stream<std::int64_t> bfirst(Cell<BinNode> root);

/// Reference level-order traversal with an explicit first-in-first-out
/// queue. Finite trees only.
std::vector<std::int64_t> bfs_oracle(Cell<BinNode> root);

}  // namespace knot

#endif  // KNOT_BFS_HPP
