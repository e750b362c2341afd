#include "knot/stream.hpp"

#include <limits>

namespace knot {

namespace {

StreamNode<std::int64_t> from_node(Arena* a, std::int64_t n) {
  Stream<std::int64_t> rest = n == std::numeric_limits<std::int64_t>::max()
      ? defer_stream(*a, []() -> StreamNode<std::int64_t> {
          throw std::overflow_error("from: element overflow");
        })
      : defer_stream(*a, [a, next = n + 1] { return from_node(a, next); });
  return ConsCell<std::int64_t>{n, rest};
}

}  // namespace

Stream<std::int64_t> from(Arena& a, std::int64_t start) {
  Arena* ap = &a;
  return defer_stream(a, [ap, start] { return from_node(ap, start); });
}

}  // namespace knot
