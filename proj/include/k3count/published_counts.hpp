// Copyright 2026 The k3count Authors
//
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

#pragma once

#include <cstdint>
#include <span>

namespace k3 {

/// A published value H(n/m) = h.
struct PublishedCount {
  std::int64_t n;
  std::int64_t m;
  std::int64_t h;
};

/// Every explicitly listed chamber count for the elliptic K3, including
/// H(1) = 1 and the outlier H(270/811) = 276.
std::span<const PublishedCount> published_counts();

}  // namespace k3
