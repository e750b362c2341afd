#ifndef KNOT_STREAM_HPP
#define KNOT_STREAM_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "knot/arena.hpp"

// Lazily evaluated nil/cons lists over arena cells. Heads are strict values;
// tails are cells that may still be recipes. Lists may be cyclic or infinite;
// nothing here detects cycles, so observation must be demand-bounded
// (take/nth), never "walk to the end".

namespace knot {

template <class T>
class Stream;

/// One evaluated list node: strict head, lazy tail.
template <class T>
struct ConsCell {
  T head;
  Stream<T> tail;
};

/// The value stored in a stream cell. nullopt is nil.
template <class T>
using StreamNode = std::optional<ConsCell<T>>;

template <class Node>
struct stream_node_traits;
template <class T>
struct stream_node_traits<std::optional<ConsCell<T>>> {
  using element = T;
};

/// Handle to a stream cell. Copying shares the cells; forcing through one
/// copy is visible through all of them.
template <class T>
class Stream {
 public:
  explicit Stream(Cell<StreamNode<T>> cell) : cell_(cell) {}

  /// Forces the underlying cell and returns the node.
  const StreamNode<T>& node() const { return cell_.force(); }

  bool null() const { return !node().has_value(); }

  const T& head() const {
    const StreamNode<T>& n = node();
    if (!n) throw std::out_of_range("head of empty stream");
    return n->head;
  }

  Stream tail() const {
    const StreamNode<T>& n = node();
    if (!n) throw std::out_of_range("tail of empty stream");
    return n->tail;
  }

  Cell<StreamNode<T>> cell() const { return cell_; }
  Arena& arena() const { return cell_.arena(); }

 private:
  Cell<StreamNode<T>> cell_;
};

template <class T>
bool same_cell(const Stream<T>& x, const Stream<T>& y) {
  return same_cell(x.cell(), y.cell());
}

template <class T>
Stream<T> nil_stream(Arena& a) {
  return Stream<T>(a.new_value(StreamNode<T>{}, CellTag::stream_node));
}

/// Already-evaluated cons in the tail's arena.
template <class T>
Stream<T> cons(T head, Stream<T> tail) {
  Arena& a = tail.arena();
  return Stream<T>(
      a.new_value(StreamNode<T>(ConsCell<T>{std::move(head), tail}), CellTag::stream_node));
}

/// Suspended stream: `make_node` must be callable as StreamNode<T>() and runs
/// on first demand.
template <class F>
auto defer_stream(Arena& a, F make_node) {
  using Node = std::decay_t<std::invoke_result_t<F&>>;
  using T = typename stream_node_traits<Node>::element;
  return Stream<T>(a.new_recipe(std::move(make_node), CellTag::stream_node));
}

/// Strict list as a chain of evaluated cells.
template <class T>
Stream<T> stream_of(Arena& a, const std::vector<T>& items) {
  Stream<T> s = nil_stream<T>(a);
  for (auto it = items.rbegin(); it != items.rend(); ++it) s = cons(*it, s);
  return s;
}

/// First k elements (fewer if the stream ends sooner). Forces exactly the
/// demanded prefix, so it is safe on cyclic and infinite streams.
template <class T>
std::vector<T> take(Stream<T> s, std::size_t k) {
  std::vector<T> out;
  for (std::size_t i = 0; i < k; ++i) {
    const StreamNode<T>& n = s.node();
    if (!n) break;
    out.push_back(n->head);
    s = n->tail;
  }
  return out;
}

/// Zero-based element access; throws std::out_of_range past the end.
template <class T>
T nth(Stream<T> s, std::size_t i) {
  for (std::size_t k = 0; k < i; ++k) {
    const StreamNode<T>& n = s.node();
    if (!n) throw std::out_of_range("nth past end of stream");
    s = n->tail;
  }
  const StreamNode<T>& n = s.node();
  if (!n) throw std::out_of_range("nth past end of stream");
  return n->head;
}

/// Elements of s satisfying pred, lazily, in order. Scans of rejected input
/// are iterative, so long rejection runs cost no stack.
template <class T, class P>
Stream<T> filter(P pred, Stream<T> s) {
  Arena& a = s.arena();
  return defer_stream(a, [pred, s]() -> StreamNode<T> {
    Stream<T> cur = s;
    while (true) {
      const StreamNode<T>& n = cur.node();
      if (!n) return std::nullopt;
      if (pred(n->head)) return ConsCell<T>{n->head, filter(pred, n->tail)};
      cur = n->tail;
    }
  });
}

/// n, n+1, n+2, ... Element overflow past the 64-bit range is reported by the
/// offending tail as std::overflow_error.
Stream<std::int64_t> from(Arena& a, std::int64_t start);

}  // namespace knot

#endif  // KNOT_STREAM_HPP
