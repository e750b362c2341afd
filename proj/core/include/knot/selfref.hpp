#ifndef KNOT_SELFREF_HPP
#define KNOT_SELFREF_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "knot/stream.hpp"

// Algorithms that read their own output while producing it. The producer
// keeps a count of how many elements it has already defined; lookups are
// bounded by that count and so never touch the part still being computed.

namespace knot {

/// A stream paired with how many of its leading elements the owner has
/// already produced. Those cells are evaluated; anything past `known` must
/// not be inspected through this view.
struct KnownPrefix {
  Stream<std::int64_t> stream;
  std::size_t known = 0;
};

/// True iff e occurs among the first n elements of s. Inspects at most n
/// cells; an unevaluated suffix beyond them is never demanded.
bool member_bounded(std::int64_t e, Stream<std::int64_t> s, std::size_t n);

/// First occurrences of input's elements, in order, lazily. The result list
/// doubles as the seen-set: each candidate is checked against the result's
/// own known prefix. Works on infinite input when every element eventually
/// recurs only finitely often. Allocates one cell per distinct element.
Stream<std::int64_t> unique(Arena& a, Stream<std::int64_t> input);

/// Same first-occurrence semantics via nested element filters; allocates a
/// filter layer per distinct element, so cells grow with input length times
/// distinct count. Kept as the space baseline.
Stream<std::int64_t> unique_filtered(Stream<std::int64_t> input);

/// Last occurrences, in last-occurrence order (keeps an element only when it
/// does not recur later). The membership scan runs to the end of the input,
/// so input must be finite; on infinite input this does not terminate.
Stream<std::int64_t> unique_last(Stream<std::int64_t> input);

/// Strict first-occurrence dedup in the backpatching style: append a node
/// with a nil tail, remember the tail slot, fill it when the next distinct
/// element arrives. The nil-terminated result serves as the seen-set with no
/// counter. Agrees with unique on any finite input.
std::vector<std::int64_t> unique_backpatch(const std::vector<std::int64_t>& input);

/// True iff some prime on the stream with p*p <= n divides n. The cutoff is
/// integer-only (p > n/p). `primes` must list primes in increasing order.
bool multiple(Stream<std::int64_t> primes, std::int64_t n);

/// Primes by layered sieving: each found prime adds a filter over everything
/// after it. Correct, and deliberately allocation-hungry: element k has
/// passed k filter layers.
Stream<std::int64_t> sieve_baseline(Arena& a);

/// Primes as one self-filtering stream: 2 followed by the candidates from 3
/// up that no already-produced prime up to their square root divides. The
/// divisibility test reads the very stream being produced.
Stream<std::int64_t> primes_circular(Arena& a);

/// Primality predicate sharing one primes_circular stream across calls:
/// whatever one call forces, later calls reuse. Total over int64; anything
/// below 2 is not prime.
struct IsprimeShared {
  std::function<bool(std::int64_t)> isprime;
  Stream<std::int64_t> primes;
};
IsprimeShared isprime_shared(Arena& a);

}  // namespace knot

#endif  // KNOT_SELFREF_HPP
