/*
 *   Copyright 2026 The diffbrauer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

namespace diffbrauer {

struct ScenarioResult {
  std::string name;
  std::string claim;
  bool passed = false;
  std::string detail;
};

/// Runs the worked examples over Q and Q(x) and reports each one.
std::vector<ScenarioResult> reproduce_examples();

}  // namespace diffbrauer
