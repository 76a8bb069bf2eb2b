// Copyright 2026 The trss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "share_selection.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "trss/errors.h"

namespace trss::internal {

std::vector<std::size_t> SelectShares(std::span<const ShareRef> shares,
                                      std::size_t threshold, unsigned n) {
  for (const ShareRef& s : shares) {
    if (s.participant < 1 || s.participant > n) {
      throw Error(ErrorCode::kOutOfRange,
                  "participant id " + std::to_string(s.participant) +
                      " outside [1, " + std::to_string(n) + "]");
    }
    if (s.time != shares.front().time) {
      throw Error(ErrorCode::kTimeMismatch,
                  "shares carry different times " +
                      std::to_string(shares.front().time) + " and " +
                      std::to_string(s.time));
    }
  }
  std::vector<std::size_t> order(shares.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return shares[a].participant < shares[b].participant;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (shares[order[i]].participant == shares[order[i - 1]].participant) {
      throw Error(ErrorCode::kDuplicateShare,
                  "participant " + std::to_string(shares[order[i]].participant) +
                      " supplied twice");
    }
  }
  if (shares.size() < threshold) {
    throw Error(ErrorCode::kInsufficientShares,
                "need " + std::to_string(threshold) + " shares, got " +
                    std::to_string(shares.size()));
  }
  order.resize(threshold);
  return order;
}

void RequireTimeInRange(unsigned t, unsigned tau) {
  if (t < 1 || t > tau) {
    throw Error(ErrorCode::kOutOfRange, "time " + std::to_string(t) +
                                            " outside [1, " +
                                            std::to_string(tau) + "]");
  }
}

}  // namespace trss::internal
