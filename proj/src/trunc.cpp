#include "witt/trunc.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

namespace witt {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

namespace {

void check_ceiling(long t, long ceiling) {
  if (t > ceiling)
    fail("ElementAboveCeiling", "element " + std::to_string(t) +
                                    " exceeds configured ceiling " +
                                    std::to_string(ceiling));
}

}  // namespace

TruncationSet TruncationSet::from_elements(std::vector<long> raw, long ceiling) {
  for (long t : raw) {
    if (t < 1)
      fail("NonPositiveEntry", "entry " + std::to_string(t) + " is not positive");
    check_ceiling(t, ceiling);
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (long t : raw) {
    for (long e = 1; e <= t / e; ++e) {
      if (t % e != 0) continue;
      for (long div : {e, t / e}) {
        if (!std::binary_search(raw.begin(), raw.end(), div))
          fail("NotDivisorClosed", "element " + std::to_string(t) +
                                       " present but its divisor " +
                                       std::to_string(div) + " is missing");
      }
    }
  }
  TruncationSet s;
  s.elems_ = std::move(raw);
  return s;
}

TruncationSet TruncationSet::divisor_set(long d, long ceiling) {
  if (d < 1) fail("NonPositiveEntry", "d = " + std::to_string(d));
  check_ceiling(d, ceiling);
  std::vector<long> out;
  for (long e = 1; e <= d / e; ++e) {
    if (d % e != 0) continue;
    out.push_back(e);
    if (e != d / e) out.push_back(d / e);
  }
  std::sort(out.begin(), out.end());
  TruncationSet s;
  s.elems_ = std::move(out);
  return s;
}

TruncationSet TruncationSet::p_typical(long p, long n, long ceiling) {
  if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
  if (n < 1) fail("NonPositiveEntry", "n = " + std::to_string(n));
  std::vector<long> out;
  long v = 1;
  for (long i = 0; i < n; ++i) {
    check_ceiling(v, ceiling);
    out.push_back(v);
    if (i + 1 < n) {
      if (v > ceiling / p) check_ceiling(ceiling + 1, ceiling);
      v *= p;
    }
  }
  TruncationSet s;
  s.elems_ = std::move(out);
  return s;
}

TruncationSet TruncationSet::quotient(long d) const {
  if (d < 1) fail("NonPositiveEntry", "d = " + std::to_string(d));
  std::vector<long> out;
  for (long t : elems_)
    if (t % d == 0) out.push_back(t / d);
  TruncationSet s;
  s.elems_ = std::move(out);  // ascending and divisor-closed by construction
  return s;
}

TruncationSet TruncationSet::scale(long d, long ceiling) const {
  if (d < 1) fail("NonPositiveEntry", "d = " + std::to_string(d));
  std::set<long> out;
  std::vector<long> divisors = divisor_set(d, std::numeric_limits<long>::max()).elements();
  for (long e : divisors) {
    for (long s : elems_) {
      if (s > ceiling / e)
        fail("ElementAboveCeiling",
             "element " + std::to_string(e) + "*" + std::to_string(s) +
                 " exceeds configured ceiling " + std::to_string(ceiling));
      out.insert(e * s);
    }
  }
  TruncationSet result =
      from_elements(std::vector<long>(out.begin(), out.end()), ceiling);
  assert(result.quotient(d) == *this);
  return result;
}

bool TruncationSet::contains(long t) const {
  return std::binary_search(elems_.begin(), elems_.end(), t);
}

size_t TruncationSet::index_of(long t) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), t);
  if (it == elems_.end() || *it != t)
    fail("SetMismatch", "index " + std::to_string(t) + " not in " + to_string());
  return static_cast<size_t>(it - elems_.begin());
}

bool TruncationSet::subset_of(const TruncationSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(),
                       elems_.end());
}

std::string TruncationSet::to_string() const {
  std::string out = "{";
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elems_[i]);
  }
  return out + "}";
}

}  // namespace witt
