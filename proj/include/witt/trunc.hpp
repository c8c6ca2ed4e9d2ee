#pragma once

#include <string>
#include <vector>

#include "witt/error.hpp"

namespace witt {

bool is_prime(long n);

// Finite divisor-closed set of positive integers, stored ascending.
// The empty set is legal and indexes the zero ring.
class TruncationSet {
 public:
  static constexpr long kDefaultCeiling = 1000000;

  TruncationSet() = default;  // empty set

  // Validates: entries >= 1, divisor-closed. Sorts and deduplicates, but
  // never auto-completes missing divisors.
  static TruncationSet from_elements(std::vector<long> raw,
                                     long ceiling = kDefaultCeiling);

  // All positive divisors of d.
  static TruncationSet divisor_set(long d, long ceiling = kDefaultCeiling);

  // {p^i : 0 <= i <= n-1}
  static TruncationSet p_typical(long p, long n, long ceiling = kDefaultCeiling);

  // S/d = {n : dn in S}
  TruncationSet quotient(long d) const;

  // <d>S = {e*s : e | d, s in S}; satisfies scale(S,d).quotient(d) == S
  TruncationSet scale(long d, long ceiling = kDefaultCeiling) const;

  const std::vector<long>& elements() const { return elems_; }
  bool empty() const { return elems_.empty(); }
  size_t size() const { return elems_.size(); }
  long max_element() const { return elems_.empty() ? 0 : elems_.back(); }
  bool contains(long t) const;
  // position of t in elements(); throws if absent
  size_t index_of(long t) const;
  bool subset_of(const TruncationSet& other) const;

  bool operator==(const TruncationSet&) const = default;

  std::string to_string() const;  // "{1,2,4}"

 private:
  std::vector<long> elems_;
};

}  // namespace witt
