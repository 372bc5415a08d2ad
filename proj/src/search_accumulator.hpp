// Copyright 2026 The dspec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSPEC_SEARCH_ACCUMULATOR_HPP_
#define DSPEC_SEARCH_ACCUMULATOR_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "dspec/numerics.hpp"
#include "dspec/oracle.hpp"

namespace dspec::detail {

// One integer form with the enclosure [lo, hi] of its value.  Scalar is an
// Integer numerator over a shared denominator (parallel kernel) or a
// Rational (reference kernel).
template <typename Scalar>
struct Candidate {
  Scalar lo;
  Scalar hi;
  long height = 0;
  std::vector<long> b;  // b_1..b_n, first nonzero entry positive
  Integer b0;
};

template <typename Scalar>
bool key_less(const Candidate<Scalar>& x, const Candidate<Scalar>& y) {
  if (x.hi != y.hi) return x.hi < y.hi;
  if (x.height != y.height) return x.height < y.height;
  if (x.b != y.b) return x.b < y.b;
  return x.b0 < y.b0;
}

template <typename Scalar>
bool lo_less(const Candidate<Scalar>& x, const Candidate<Scalar>& y) {
  if (x.lo != y.lo) return x.lo < y.lo;
  return key_less(x, y);
}

template <typename Scalar>
bool same_form(const Candidate<Scalar>& x, const Candidate<Scalar>& y) {
  return x.b == y.b && x.b0 == y.b0;
}

// Tracks the argmin (by key_less) and the two smallest lower ends among
// distinct forms.  Merging is order independent.
template <typename Scalar>
class Accumulator {
 public:
  bool interesting(const Scalar& lo, const Scalar& hi) const {
    if (!best_ || hi <= best_->hi) return true;
    return low_.size() < 2 || lo <= low_.back().lo;
  }

  void offer(const Candidate<Scalar>& c) {
    offer_best(c);
    offer_low(c);
  }

  void merge(const Accumulator& other) {
    if (other.best_) offer_best(*other.best_);
    for (const auto& c : other.low_) offer_low(c);
  }

  bool empty() const { return !best_; }
  const Candidate<Scalar>& best() const { return *best_; }
  const Scalar& min_lo() const { return low_.front().lo; }

  bool ambiguous() const {
    for (const auto& c : low_) {
      if (same_form(c, *best_)) continue;
      return c.lo < best_->hi;
    }
    return false;
  }

 private:
  void offer_best(const Candidate<Scalar>& c) {
    if (!best_ || key_less(c, *best_)) best_ = c;
  }

  void offer_low(const Candidate<Scalar>& c) {
    for (const auto& x : low_) {
      if (same_form(x, c)) return;
    }
    if (low_.size() == 2 && !lo_less(c, low_.back())) return;
    low_.push_back(c);
    std::sort(low_.begin(), low_.end(), lo_less<Scalar>);
    if (low_.size() > 2) low_.pop_back();
  }

  std::optional<Candidate<Scalar>> best_;
  std::vector<Candidate<Scalar>> low_;
};

// Shared post-processing once the scan is complete.
PsiResult make_exhaustive_result(long Q, int n, const Enclosure& value,
                                 const std::vector<long>& b, const Integer& b0,
                                 bool ambiguous, std::uint64_t candidates);

void check_search_request(const Target& target, long Q, const SearchOptions& opts);

}  // namespace dspec::detail

#endif  // DSPEC_SEARCH_ACCUMULATOR_HPP_
