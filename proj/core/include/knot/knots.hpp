#ifndef KNOT_KNOTS_HPP
#define KNOT_KNOTS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "knot/stream.hpp"

// Structures whose definitions refer to themselves: a list built as a real
// cycle of cells versus its unfolded equivalent, doubly-linked lists where
// each node is defined in terms of itself, and right-threaded search trees
// whose threads point at nodes that exist only because the definition is
// tied back on itself.

namespace knot {

/// Cell budget for generator-driven construction; guards against a stop
/// predicate that never holds.
inline constexpr std::size_t default_build_budget = std::size_t{1} << 20;

/// Generator: start at seed, advance with step, emit maps state to element,
/// stop decides where generation ends.
struct GenSpec {
  std::int64_t seed = 0;
  std::function<std::int64_t(std::int64_t)> step;
  std::function<std::int64_t(std::int64_t)> emit;
  std::function<bool(std::int64_t)> stop;
};

/// The infinite list 1,1,1,... as a single cell whose tail is itself.
Stream<std::int64_t> ones(Arena& a);

/// Cyclic list of emit(seed), ..., emit(y) up to and including the first y
/// with stop(y); the last tail is the first cell. Demanding any prefix
/// allocates at most one cell per period element. Throws LimitExceeded when
/// more than `budget` cells would be built.
Stream<std::int64_t> circ(Arena& a, GenSpec spec, std::size_t budget = default_build_budget);

/// Same elements as circ, but the cycle is re-unfolded instead of tied back:
/// every demanded element is a fresh cell and no tail revisits the head.
Stream<std::int64_t> uncirc(Arena& a, GenSpec spec, std::size_t budget = default_build_budget);

struct DblLink;
/// Doubly-linked node value; nullopt ends the list.
using DblNode = std::optional<DblLink>;
struct DblLink {
  Cell<DblNode> prev;
  std::int64_t elt;
  Cell<DblNode> next;
};

/// Doubly-linked list of emit(y) for y = seed, step(seed), ... while stop(y)
/// is false. Grows under demand; each node's next is built knowing the node's
/// own cell, so next(d).prev is identically d. The first node's prev is a nil
/// cell. Throws LimitExceeded past `budget` cells.
Cell<DblNode> double_list(Arena& a, GenSpec spec, std::size_t budget = default_build_budget);

/// Elements front to back.
std::vector<std::int64_t> dbl_forward(Cell<DblNode> first);

/// Elements back to front: walks to the end, then returns along prev links.
std::vector<std::int64_t> dbl_backward(Cell<DblNode> first);

struct ThreadedNode;
struct ThreadedSucc {
  Cell<ThreadedNode> succ;
};
struct ThreadedFork {
  Cell<ThreadedNode> left;
  std::int64_t elt;
  Cell<ThreadedNode> right;
};
/// Right-threaded binary search tree node. monostate is an empty subtree.
/// A ThreadedSucc stands where an empty right subtree would be; its succ is
/// the fork that follows in element order. The rightmost path ends empty.
struct ThreadedNode {
  std::variant<std::monostate, ThreadedSucc, ThreadedFork> repr;

  bool is_empty() const { return std::holds_alternative<std::monostate>(repr); }
  bool is_thread() const { return std::holds_alternative<ThreadedSucc>(repr); }
  bool is_fork() const { return std::holds_alternative<ThreadedFork>(repr); }
  const ThreadedSucc& thread() const { return std::get<ThreadedSucc>(repr); }
  const ThreadedFork& fork() const { return std::get<ThreadedFork>(repr); }
};

/// Builds a threaded search tree from a finite list. The first element is the
/// root; smaller elements go left, larger go right, duplicates are dropped.
/// Subtrees are built on demand. Each fork's left subtree gets the fork
/// itself as successor, so in-order threads come out right by construction.
Cell<ThreadedNode> thread_tree(Arena& a, const std::vector<std::int64_t>& elements);

/// In-order elements using the threads: descend leftmost once, then follow
/// right children and threads. One loop, no stack, no recursion; if `steps`
/// is given it receives the number of node-to-node moves (at most twice the
/// fork count).
std::vector<std::int64_t> threaded_walk(Cell<ThreadedNode> root, std::size_t* steps = nullptr);

}  // namespace knot

#endif  // KNOT_KNOTS_HPP
