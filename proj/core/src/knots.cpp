#include "knot/knots.hpp"

#include <memory>
#include <utility>

namespace knot {

namespace {

using i64 = std::int64_t;

void spend(std::size_t& remaining, const char* what) {
  if (remaining == 0) throw LimitExceeded(what);
  --remaining;
}

// One unfold step. Emits for the current state first; when stop holds the
// tail is `back` (the cycle entry), otherwise a fresh suspended step.
StreamNode<i64> circ_step(Arena* a, const std::shared_ptr<const GenSpec>& spec, i64 y,
                          Stream<i64> back, const std::shared_ptr<std::size_t>& remaining) {
  const i64 e = spec->emit(y);
  if (spec->stop(y)) return ConsCell<i64>{e, back};
  Stream<i64> rest = defer_stream(*a, [a, spec, next = spec->step(y), back, remaining] {
    spend(*remaining, "circ: cell budget exhausted");
    return circ_step(a, spec, next, back, remaining);
  });
  return ConsCell<i64>{e, rest};
}

Stream<i64> uncirc_from(Arena* a, const std::shared_ptr<const GenSpec>& spec, i64 y,
                        const std::shared_ptr<std::size_t>& remaining) {
  return defer_stream(*a, [a, spec, y, remaining]() -> StreamNode<i64> {
    spend(*remaining, "uncirc: cell budget exhausted");
    const i64 e = spec->emit(y);
    // Where circ ties back to the first cell, restart the unfold instead.
    const i64 next = spec->stop(y) ? spec->seed : spec->step(y);
    return ConsCell<i64>{e, uncirc_from(a, spec, next, remaining)};
  });
}

}  // namespace

Stream<i64> ones(Arena& a) {
  return Stream<i64>(a.tie<StreamNode<i64>>(
      [](Cell<StreamNode<i64>> self) -> StreamNode<i64> {
        return ConsCell<i64>{1, Stream<i64>(self)};
      },
      CellTag::stream_node));
}

Stream<i64> circ(Arena& a, GenSpec spec, std::size_t budget) {
  Arena* ap = &a;
  auto sp = std::make_shared<const GenSpec>(std::move(spec));
  auto remaining = std::make_shared<std::size_t>(budget);
  return Stream<i64>(a.tie<StreamNode<i64>>(
      [ap, sp, remaining](Cell<StreamNode<i64>> self) {
        spend(*remaining, "circ: cell budget exhausted");
        return circ_step(ap, sp, sp->seed, Stream<i64>(self), remaining);
      },
      CellTag::stream_node));
}

Stream<i64> uncirc(Arena& a, GenSpec spec, std::size_t budget) {
  auto sp = std::make_shared<const GenSpec>(std::move(spec));
  auto remaining = std::make_shared<std::size_t>(budget);
  return uncirc_from(&a, sp, sp->seed, remaining);
}

namespace {

// d = link(prev, emit y, build d (step y)): the node's own handle feeds the
// suspended rest of the list.
Cell<DblNode> dbl_build(Arena* a, Cell<DblNode> prev, i64 y,
                        const std::shared_ptr<const GenSpec>& spec,
                        const std::shared_ptr<std::size_t>& remaining) {
  spend(*remaining, "double_list: cell budget exhausted");
  return a->tie<DblNode>(
      [a, prev, y, spec, remaining](Cell<DblNode> self) -> DblNode {
        if (spec->stop(y)) return std::nullopt;
        return DblLink{prev, spec->emit(y), dbl_build(a, self, spec->step(y), spec, remaining)};
      },
      CellTag::dbl_node);
}

}  // namespace

Cell<DblNode> double_list(Arena& a, GenSpec spec, std::size_t budget) {
  auto sp = std::make_shared<const GenSpec>(std::move(spec));
  auto remaining = std::make_shared<std::size_t>(budget);
  Cell<DblNode> front_edge = a.new_value(DblNode{}, CellTag::dbl_node);
  return dbl_build(&a, front_edge, sp->seed, sp, remaining);
}

std::vector<i64> dbl_forward(Cell<DblNode> first) {
  std::vector<i64> out;
  Cell<DblNode> cur = first;
  for (;;) {
    const DblNode& n = cur.force();
    if (!n) break;
    out.push_back(n->elt);
    cur = n->next;
  }
  return out;
}

std::vector<i64> dbl_backward(Cell<DblNode> first) {
  Cell<DblNode> last;
  Cell<DblNode> cur = first;
  for (;;) {
    const DblNode& n = cur.force();
    if (!n) break;
    last = cur;
    cur = n->next;
  }
  std::vector<i64> out;
  if (!last.valid()) return out;  // empty list
  cur = last;
  for (;;) {
    const DblNode& n = cur.force();
    if (!n) break;
    out.push_back(n->elt);
    cur = n->prev;
  }
  return out;
}

namespace {

// succ is the fork following this subtree in element order; nullopt on the
// rightmost path, whose would-be threads are plain empties.
Cell<ThreadedNode> threaded_build(Arena* a, bool isleft, std::optional<Cell<ThreadedNode>> succ,
                                  std::vector<i64> elems) {
  if (elems.empty()) {
    if (isleft || !succ) return a->new_value(ThreadedNode{}, CellTag::tree_node);
    return a->new_value(ThreadedNode{ThreadedSucc{*succ}}, CellTag::tree_node);
  }
  return a->tie<ThreadedNode>(
      [a, succ, elems = std::move(elems)](Cell<ThreadedNode> self) -> ThreadedNode {
        const i64 root = elems.front();
        std::vector<i64> lesser, greater;
        for (const i64 x : elems) {
          if (x < root) lesser.push_back(x);
          else if (x > root) greater.push_back(x);  // drops duplicates of root
        }
        // The left subtree's in-order successor is this fork itself.
        return ThreadedNode{ThreadedFork{threaded_build(a, true, self, std::move(lesser)), root,
                                         threaded_build(a, false, succ, std::move(greater))}};
      },
      CellTag::tree_node);
}

}  // namespace

Cell<ThreadedNode> thread_tree(Arena& a, const std::vector<i64>& elements) {
  return threaded_build(&a, true, std::nullopt, elements);
}

std::vector<i64> threaded_walk(Cell<ThreadedNode> root, std::size_t* steps) {
  std::vector<i64> out;
  std::size_t moves = 0;
  const ThreadedNode* cur = &root.force();
  if (!cur->is_empty()) {
    auto descend_leftmost = [&] {
      for (;;) {
        const ThreadedNode& l = cur->fork().left.force();
        if (!l.is_fork()) break;
        cur = &l;
        ++moves;
      }
    };
    descend_leftmost();
    for (;;) {
      out.push_back(cur->fork().elt);
      const ThreadedNode& r = cur->fork().right.force();
      if (r.is_empty()) break;  // rightmost fork
      ++moves;
      if (r.is_thread()) {
        cur = &r.thread().succ.force();  // in-order successor, no unwinding
      } else {
        cur = &r;
        descend_leftmost();
      }
    }
  }
  if (steps != nullptr) *steps = moves;
  return out;
}

}  // namespace knot
