#include "knot/bfs.hpp"

#include <limits>
#include <queue>

namespace knot {

namespace {

using i64 = std::int64_t;
using NodeRef = Cell<BinNode>;

// Consume the queue at q while n entries from here on are already known;
// append each consumed fork's children. The four cases keep the count exact:
// a childless fork shrinks the known part, one child keeps it level, two
// children grow it. n never reaches the entry being defined, so the queue
// never demands itself.
StreamNode<NodeRef> bf_step(Arena* a, Stream<NodeRef> q, std::size_t n) {
  while (true) {
    if (n == 0) return std::nullopt;  // production has caught up: tree exhausted
    const NodeRef node = q.head();
    const BinFork& f = node.force().fork.value();
    const bool has_left = f.left.force().fork.has_value();
    const bool has_right = f.right.force().fork.has_value();
    Stream<NodeRef> rest = q.tail();
    if (has_left && has_right) {
      Stream<NodeRef> after =
          defer_stream(*a, [a, rest, n] { return bf_step(a, rest, n + 1); });
      return ConsCell<NodeRef>{f.left, cons(f.right, after)};
    }
    if (has_left || has_right) {
      const NodeRef child = has_left ? f.left : f.right;
      return ConsCell<NodeRef>{child,
                               defer_stream(*a, [a, rest, n] { return bf_step(a, rest, n); })};
    }
    q = rest;
    n -= 1;
  }
}

Stream<i64> elements_of(Arena* a, Stream<NodeRef> q) {
  return defer_stream(*a, [a, q]() -> StreamNode<i64> {
    const StreamNode<NodeRef>& n = q.node();
    if (!n) return std::nullopt;
    return ConsCell<i64>{n->head.force().fork->elt, elements_of(a, n->tail)};
  });
}

Cell<BinNode> heap_node(Arena* a, i64 index) {
  return a->new_recipe(
      [a, index]() -> BinNode {
        if (index > (std::numeric_limits<i64>::max() - 1) / 2) {
          throw std::overflow_error("heap_indexed_tree: node index overflow");
        }
        return BinNode{BinFork{heap_node(a, 2 * index), index, heap_node(a, 2 * index + 1)}};
      },
      CellTag::tree_node);
}

}  // namespace

Cell<BinNode> bin_empty(Arena& a) { return a.new_value(BinNode{}, CellTag::tree_node); }

Cell<BinNode> bin_fork(Arena& a, Cell<BinNode> left, i64 elt, Cell<BinNode> right) {
  return a.new_value(BinNode{BinFork{left, elt, right}}, CellTag::tree_node);
}

Cell<BinNode> heap_indexed_tree(Arena& a) { return heap_node(&a, 1); }

Stream<i64> bfirst(Cell<BinNode> root) {
  Arena* a = &root.arena();
  // queue = root . (consume queue from the start, knowing 1 entry)
  auto queue_cell = a->tie<StreamNode<NodeRef>>(
      [a, root](Cell<StreamNode<NodeRef>> self) -> StreamNode<NodeRef> {
        if (!root.force().fork) return std::nullopt;
        Stream<NodeRef> q(self);
        return ConsCell<NodeRef>{root,
                                 defer_stream(*a, [a, q] { return bf_step(a, q, 1); })};
      },
      CellTag::stream_node);
  return elements_of(a, Stream<NodeRef>(queue_cell));
}

std::vector<i64> bfs_oracle(Cell<BinNode> root) {
  std::vector<i64> out;
  std::queue<NodeRef> fifo;
  if (root.force().fork) fifo.push(root);
  while (!fifo.empty()) {
    const NodeRef node = fifo.front();
    fifo.pop();
    const BinFork& f = *node.force().fork;
    out.push_back(f.elt);
    if (f.left.force().fork) fifo.push(f.left);
    if (f.right.force().fork) fifo.push(f.right);
  }
  return out;
}

}  // namespace knot
