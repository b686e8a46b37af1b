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

#include "diffbrauer/matrix.hpp"

namespace diffbrauer {

std::optional<QMatrix> constant_part(const RFMatrix& m) {
  std::vector<Rational> out;
  out.reserve(m.data().size());
  for (const RationalFunction& e : m.data()) {
    auto c = e.constant_value();
    if (!c) return std::nullopt;
    out.push_back(std::move(*c));
  }
  return QMatrix(m.rows(), m.cols(), std::move(out));
}

}  // namespace diffbrauer
