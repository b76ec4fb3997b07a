// Copyright 2026 The qemlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qem {

/// Post-selection kept zero shots; raised instead of returning NaN.
class PostselectionStarved : public std::runtime_error {
 public:
  explicit PostselectionStarved(const std::string& what, int64_t layer = -1)
      : std::runtime_error(what), layer_(layer) {}

  /// Check-layer count of the starved configuration, or -1 if not layered.
  int64_t layer() const { return layer_; }

 private:
  int64_t layer_;
};

}  // namespace qem
