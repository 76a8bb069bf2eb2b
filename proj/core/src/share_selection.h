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

#ifndef TRSS_SRC_SHARE_SELECTION_H_
#define TRSS_SRC_SHARE_SELECTION_H_

#include <cstddef>
#include <span>
#include <vector>

namespace trss::internal {

struct ShareRef {
  unsigned participant;
  unsigned time;
};

// Validates a coalition's shares and returns the indices of the first
// `threshold` of them ordered by participant id. Surplus shares are ignored
// without cross-checking.
std::vector<std::size_t> SelectShares(std::span<const ShareRef> shares,
                                      std::size_t threshold, unsigned n);

void RequireTimeInRange(unsigned t, unsigned tau);

}  // namespace trss::internal

#endif  // TRSS_SRC_SHARE_SELECTION_H_
