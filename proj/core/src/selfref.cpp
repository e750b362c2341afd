#include "knot/selfref.hpp"

#include <memory>
#include <utility>

namespace knot {

namespace {

using i64 = std::int64_t;

}  // namespace

bool member_bounded(i64 e, Stream<i64> s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const StreamNode<i64>& node = s.node();
    if (!node) return false;
    if (node->head == e) return true;
    s = node->tail;
  }
  return false;
}

namespace {

// out counts how much of the result exists; candidates already in that
// prefix are skipped without producing anything.
StreamNode<i64> unique_step(Arena* a, Stream<i64> input, KnownPrefix out) {
  Stream<i64> cur = input;
  while (true) {
    const StreamNode<i64>& n = cur.node();
    if (!n) return std::nullopt;
    const i64 e = n->head;
    if (member_bounded(e, out.stream, out.known)) {
      cur = n->tail;
      continue;
    }
    Stream<i64> rest = defer_stream(
        *a, [a, next = n->tail, grown = KnownPrefix{out.stream, out.known + 1}] {
          return unique_step(a, next, grown);
        });
    return ConsCell<i64>{e, rest};
  }
}

}  // namespace

Stream<i64> unique(Arena& a, Stream<i64> input) {
  Arena* ap = &a;
  return Stream<i64>(a.tie<StreamNode<i64>>(
      [ap, input](Cell<StreamNode<i64>> self) {
        return unique_step(ap, input, KnownPrefix{Stream<i64>(self), 0});
      },
      CellTag::stream_node));
}

Stream<i64> unique_filtered(Stream<i64> input) {
  Arena& a = input.arena();
  return defer_stream(a, [input]() -> StreamNode<i64> {
    const StreamNode<i64>& n = input.node();
    if (!n) return std::nullopt;
    const i64 h = n->head;
    return ConsCell<i64>{
        h, unique_filtered(filter([h](i64 x) { return x != h; }, input))};
  });
}

namespace {

bool stream_member(i64 e, Stream<i64> s) {
  for (;;) {
    const StreamNode<i64>& n = s.node();
    if (!n) return false;
    if (n->head == e) return true;
    s = n->tail;
  }
}

}  // namespace

Stream<i64> unique_last(Stream<i64> input) {
  Arena& a = input.arena();
  return defer_stream(a, [input]() -> StreamNode<i64> {
    Stream<i64> cur = input;
    while (true) {
      const StreamNode<i64>& n = cur.node();
      if (!n) return std::nullopt;
      if (stream_member(n->head, n->tail)) {  // recurs later: keep the later one
        cur = n->tail;
        continue;
      }
      return ConsCell<i64>{n->head, unique_last(n->tail)};
    }
  });
}

std::vector<i64> unique_backpatch(const std::vector<i64>& input) {
  struct Node {
    i64 hd;
    std::unique_ptr<Node> tl;
  };
  std::unique_ptr<Node> result;            // stays nil-terminated throughout
  std::unique_ptr<Node>* slot = &result;   // where the next distinct element goes
  for (const i64 e : input) {
    bool seen = false;
    for (const Node* p = result.get(); p != nullptr; p = p->tl.get()) {
      if (p->hd == e) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      *slot = std::make_unique<Node>(Node{e, nullptr});
      slot = &(*slot)->tl;
    }
  }
  std::vector<i64> out;
  for (const Node* p = result.get(); p != nullptr; p = p->tl.get()) out.push_back(p->hd);
  return out;
}

bool multiple(Stream<i64> primes, i64 n) {
  Stream<i64> s = primes;
  for (;;) {
    const i64 p = s.head();
    if (p > n / p) return false;  // p*p > n without overflow
    if (n % p == 0) return true;
    s = s.tail();
  }
}

namespace {

StreamNode<i64> sieve_node(Arena* a, Stream<i64> s) {
  const i64 p = s.head();
  // p itself is the first multiple removed, so the next head is the next prime.
  Stream<i64> survivors = filter([p](i64 x) { return x % p != 0; }, s);
  return ConsCell<i64>{p, defer_stream(*a, [a, survivors] { return sieve_node(a, survivors); })};
}

}  // namespace

Stream<i64> sieve_baseline(Arena& a) {
  Arena* ap = &a;
  Stream<i64> candidates = from(a, 2);
  return defer_stream(a, [ap, candidates] { return sieve_node(ap, candidates); });
}

Stream<i64> primes_circular(Arena& a) {
  Arena* ap = &a;
  return Stream<i64>(a.tie<StreamNode<i64>>(
      [ap](Cell<StreamNode<i64>> self) -> StreamNode<i64> {
        Stream<i64> primes(self);
        auto isprime = [primes](i64 n) { return !multiple(primes, n); };
        return ConsCell<i64>{2, filter(isprime, from(*ap, 3))};
      },
      CellTag::stream_node));
}

IsprimeShared isprime_shared(Arena& a) {
  Stream<i64> primes = primes_circular(a);
  // The n >= 2 guard keeps the predicate total; the divisibility scan alone
  // is only meaningful from 2 up.
  return IsprimeShared{[primes](i64 n) { return n >= 2 && !multiple(primes, n); }, primes};
}

}  // namespace knot
