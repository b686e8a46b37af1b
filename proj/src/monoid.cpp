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

#include "diffbrauer/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "diffbrauer/error.hpp"

namespace diffbrauer {

FiniteCommutativeMonoid::FiniteCommutativeMonoid(std::vector<std::vector<Element>> table, Element identity)
    : table_(std::move(table)), identity_(identity) {
  const std::size_t k = table_.size();
  if (k == 0) fail(ErrorCode::InvalidArgument, "monoid must be nonempty");
  if (identity_ >= k) fail(ErrorCode::InvalidArgument, "identity index out of range");
  for (const auto& row : table_) {
    if (row.size() != k) fail(ErrorCode::DimensionMismatch, "Cayley table must be square");
    for (Element e : row)
      if (e >= k) fail(ErrorCode::InvalidArgument, "Cayley table entry out of range");
  }
  for (Element a = 0; a < k; ++a) {
    if (op(identity_, a) != a) fail(ErrorCode::InvalidArgument, "identity does not act trivially");
    for (Element b = 0; b < k; ++b) {
      if (op(a, b) != op(b, a)) fail(ErrorCode::InvalidArgument, "operation is not commutative");
      for (Element c = 0; c < k; ++c)
        if (op(op(a, b), c) != op(a, op(b, c))) fail(ErrorCode::InvalidArgument, "operation is not associative");
    }
  }
}

FiniteCommutativeMonoid FiniteCommutativeMonoid::multiplicative_mod(std::size_t k) {
  std::vector<std::vector<Element>> t(k, std::vector<Element>(k));
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) t[a][b] = (a * b) % k;
  return {std::move(t), Element(k == 1 ? 0 : 1)};
}

bool FiniteCommutativeMonoid::is_submonoid(const Subset& n) const {
  std::vector<bool> in(size(), false);
  for (Element e : n) {
    if (e >= size()) return false;
    in[e] = true;
  }
  if (!in[identity_]) return false;
  for (Element a : n)
    for (Element b : n)
      if (!in[op(a, b)]) return false;
  return true;
}

namespace {

void require_submonoid(const FiniteCommutativeMonoid& m, const Subset& n) {
  if (!m.is_submonoid(n)) fail(ErrorCode::InvalidArgument, "N is not a submonoid");
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

QuotientMonoid quotient(const FiniteCommutativeMonoid& m, const Subset& n) {
  require_submonoid(m, n);
  const std::size_t k = m.size();
  // related[a][b]: a·n1 = b·n2 for some n1, n2 in N.
  std::vector<std::vector<bool>> related(k, std::vector<bool>(k, false));
  for (Element a = 0; a < k; ++a) {
    std::vector<bool> orbit(k, false);
    for (Element x : n) orbit[m.op(a, x)] = true;
    for (Element b = 0; b < k; ++b)
      for (Element y : n)
        if (orbit[m.op(b, y)]) {
          related[a][b] = true;
          break;
        }
  }
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b)
      if (related[a][b]) parent[find_root(parent, a)] = find_root(parent, b);
  // The relation is already transitive; the closure must not add pairs.
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b)
      if (find_root(parent, a) == find_root(parent, b) && !related[a][b])
        fail(ErrorCode::Integrity, "quotient relation grew under transitive closure");

  QuotientMonoid q;
  q.class_of.assign(k, k);
  for (Element a = 0; a < k; ++a) {
    if (q.class_of[a] != k) continue;
    const std::size_t idx = q.classes.size();
    q.classes.emplace_back();
    for (Element b = a; b < k; ++b)
      if (find_root(parent, b) == find_root(parent, a)) {
        q.class_of[b] = idx;
        q.classes.back().push_back(b);
      }
  }
  const std::size_t c = q.classes.size();
  q.table.assign(c, std::vector<std::size_t>(c, c));
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) {
      std::size_t& cell = q.table[q.class_of[a]][q.class_of[b]];
      const std::size_t prod = q.class_of[m.op(a, b)];
      if (cell == c) cell = prod;
      else if (cell != prod) fail(ErrorCode::Integrity, "induced operation on M/N is not well defined");
    }
  q.identity = q.class_of[m.identity()];
  return q;
}

Subset units(const FiniteCommutativeMonoid& m) {
  Subset out;
  for (Element a = 0; a < m.size(); ++a)
    for (Element b = 0; b < m.size(); ++b)
      if (m.op(a, b) == m.identity()) {
        out.push_back(a);
        break;
      }
  // Closed, and every element has its inverse inside.
  if (!m.is_submonoid(out)) fail(ErrorCode::Integrity, "units do not form a submonoid");
  return out;
}

Subset quotient_units(const FiniteCommutativeMonoid& m, const Subset& n) {
  require_submonoid(m, n);
  std::vector<bool> in_n(m.size(), false);
  for (Element e : n) in_n[e] = true;
  Subset out;
  for (Element a = 0; a < m.size(); ++a) {
    bool found = false;
    for (Element b = 0; b < m.size() && !found; ++b)
      for (Element x : n)
        if (in_n[m.op(m.op(a, b), x)]) {
          found = true;
          break;
        }
    if (found) out.push_back(a);
  }
  return out;
}

Subset pullback_units(const FiniteCommutativeMonoid& m, const Subset& n) {
  const QuotientMonoid q = quotient(m, n);
  const Subset qu = units(q.as_monoid());
  Subset out;
  for (Element a = 0; a < m.size(); ++a)
    if (std::binary_search(qu.begin(), qu.end(), q.class_of[a])) out.push_back(a);
  return out;
}

std::vector<Subset> submonoids(const FiniteCommutativeMonoid& m) {
  const std::size_t k = m.size();
  if (k > 20) fail(ErrorCode::Unsupported, "submonoid enumeration is limited to 20 elements");
  std::vector<Subset> out;
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    if (!(mask & (1UL << m.identity()))) continue;
    Subset s;
    for (Element e = 0; e < k; ++e)
      if (mask & (1UL << e)) s.push_back(e);
    if (m.is_submonoid(s)) out.push_back(std::move(s));
  }
  return out;
}

namespace {

bool associative(const std::vector<std::vector<Element>>& t) {
  const std::size_t k = t.size();
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b)
      for (Element c = 0; c < k; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

// Lexicographically smallest relabelling fixing the identity 0.
std::vector<std::vector<Element>> canonical_form(const std::vector<std::vector<Element>>& t) {
  const std::size_t k = t.size();
  std::vector<Element> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Element>> best = t;
  do {
    std::vector<std::vector<Element>> r(k, std::vector<Element>(k));
    for (Element a = 0; a < k; ++a)
      for (Element b = 0; b < k; ++b) r[perm[a]][perm[b]] = perm[t[a][b]];
    if (r < best) best = std::move(r);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

}  // namespace

std::vector<FiniteCommutativeMonoid> enumerate_commutative_monoids(std::size_t size) {
  if (size == 0 || size > 5) fail(ErrorCode::Unsupported, "monoid enumeration supports sizes 1 to 5");
  // Free cells: unordered pairs {a <= b} of non-identity elements.
  std::vector<std::pair<Element, Element>> cells;
  for (Element a = 1; a < size; ++a)
    for (Element b = a; b < size; ++b) cells.emplace_back(a, b);
  std::set<std::vector<std::vector<Element>>> seen;
  std::vector<FiniteCommutativeMonoid> out;
  std::vector<std::vector<Element>> t(size, std::vector<Element>(size, 0));
  for (Element a = 0; a < size; ++a) t[0][a] = t[a][0] = a;
  std::vector<Element> choice(cells.size(), 0);
  for (;;) {
    for (std::size_t c = 0; c < cells.size(); ++c) t[cells[c].first][cells[c].second] = t[cells[c].second][cells[c].first] = choice[c];
    if (associative(t)) {
      auto canon = canonical_form(t);
      if (seen.insert(canon).second) out.emplace_back(std::move(canon), 0);
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == size) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return out;
}

}  // namespace diffbrauer
