// Copyright 2026 The tql Authors
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

#include "tql/fuchsian/signature.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>

#include "tql/error.hpp"

namespace tql {

namespace {

constexpr std::int64_t kLimit = std::int64_t{1} << 62;

void check_bound(std::uint64_t v, const char* what) {
  if (v >= static_cast<std::uint64_t>(kLimit)) throw OverflowError(std::string(what) + " exceeds 2^62");
}

/// Genus solving 2 - 2h - sum(1 - 1/p) = chi, if it is a non-negative integer.
std::optional<std::int64_t> genus_for(const std::vector<std::int64_t>& periods, const Rational& chi) {
  Rational branch = 0;
  for (auto p : periods) branch = branch + (Rational(1) - Rational(1, p));
  Rational twice_h = Rational(2) - branch - chi;
  if (!twice_h.is_integer() || twice_h.num() < 0 || twice_h.num() % 2 != 0) return std::nullopt;
  return twice_h.num() / 2;
}

/// All partitions of d into parts drawn from `parts` (descending), as
/// multisets of parts.
void partitions(std::int64_t d, const std::vector<std::int64_t>& parts, std::size_t from,
                std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < parts.size(); ++i) {
    if (parts[i] > d) continue;
    if (parts[i] == 1) {
      // Only ones remain; no need to recurse d times.
      cur.insert(cur.end(), static_cast<std::size_t>(d), 1);
      out.push_back(cur);
      cur.resize(cur.size() - static_cast<std::size_t>(d));
      continue;
    }
    cur.push_back(parts[i]);
    partitions(d - parts[i], parts, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Signature::Signature(std::int64_t h, std::vector<std::int64_t> ms) : genus(h), periods(std::move(ms)) {
  if (genus < 0) throw UsageError("negative genus");
  for (auto m : periods)
    if (m < 2) throw UsageError("periods must be at least 2");
  std::sort(periods.begin(), periods.end());
}

std::string Signature::to_string() const {
  std::string out = "(" + std::to_string(genus) + ";";
  for (std::size_t i = 0; i < periods.size(); ++i) out += (i ? "," : "") + std::to_string(periods[i]);
  return out + ")";
}

Signature parse_signature(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto bad = [&] { return UsageError("malformed signature '" + std::string(text) + "', expected (h;m1,m2,...)"); };
  if (s.size() < 4 || s.front() != '(' || s.back() != ')') throw bad();
  auto semi = s.find(';');
  if (semi == std::string::npos) throw bad();
  auto number = [&](std::string_view v) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) throw bad();
    return out;
  };
  std::int64_t h = number(std::string_view(s).substr(1, semi - 1));
  std::vector<std::int64_t> ms;
  std::string_view rest = std::string_view(s).substr(semi + 1, s.size() - semi - 2);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    ms.push_back(number(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw bad();
  }
  return Signature(h, std::move(ms));
}

Rational euler_characteristic(const Signature& s) {
  Rational chi = Rational(2) - Rational(2) * Rational(s.genus);
  for (auto m : s.periods) chi = chi - (Rational(1) - Rational(1, m));
  return chi;
}

std::int64_t subgroup_index(const Signature& sub, const Signature& parent) {
  Rational a = euler_characteristic(sub), b = euler_characteristic(parent);
  if (a >= Rational(0) || b >= Rational(0)) throw UsageError("subgroup_index needs hyperbolic signatures");
  Rational r = a / b;
  if (!r.is_integer() || r.num() < 1)
    throw UsageError(sub.to_string() + " is not a finite-index candidate in " + parent.to_string() +
                     " (ratio " + r.to_string() + ")");
  return r.num();
}

std::int64_t surface_genus_from_order(std::uint64_t order, const Signature& s) {
  check_bound(order, "group order");
  Rational chi = euler_characteristic(s);
  Rational g = Rational(1) - Rational(static_cast<std::int64_t>(order)) * chi / Rational(2);
  if (!g.is_integer() || g.num() < 2)
    throw UsageError("no torsion-free-kernel surjection possible at order " + std::to_string(order) +
                     " for " + s.to_string() + " (genus would be " + g.to_string() + ")");
  return g.num();
}

Signature subgroup_signature(const Signature& parent, std::span<const Permutation> images, std::int64_t index) {
  if (parent.genus != 0) throw UsageError("subgroup_signature needs a genus-0 parent");
  if (images.size() != parent.periods.size())
    throw UsageError("need one image per canonical generator of " + parent.to_string());
  check_bound(static_cast<std::uint64_t>(index), "index");
  Permutation prod(static_cast<std::size_t>(index));
  std::vector<std::int64_t> periods;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& img = images[i];
    if (img.degree() != static_cast<std::size_t>(index)) throw UsageError("image degree differs from the index");
    prod *= img;
    const std::int64_t m = parent.periods[i];
    for (auto len : img.cycle_type()) {
      auto l = static_cast<std::int64_t>(len);
      if (m % l != 0)
        throw UsageError("image order does not divide the period " + std::to_string(m));
      if (l < m) periods.push_back(m / l);
    }
  }
  if (!prod.is_identity()) throw UsageError("images do not multiply to the identity");
  Rational chi = Rational(index) * euler_characteristic(parent);
  auto h = genus_for(periods, chi);
  if (!h) throw UsageError("inconsistent coset data: non-integral genus");
  return Signature(*h, std::move(periods));
}

std::vector<Signature> enumerate_subgroup_signatures(const Signature& parent, std::int64_t d) {
  if (parent.genus != 0) throw UsageError("enumeration needs a genus-0 parent");
  if (d < 1) throw UsageError("index must be positive");
  check_bound(static_cast<std::uint64_t>(d), "index");
  const Rational chi = Rational(d) * euler_characteristic(parent);

  // For each parent period, the distinct period multisets its cycle
  // structure can contribute.
  std::vector<std::vector<std::vector<std::int64_t>>> options;
  for (auto m : parent.periods) {
    std::vector<std::int64_t> divisors;
    for (std::int64_t l = m; l >= 1; --l)
      if (m % l == 0) divisors.push_back(l);
    std::vector<std::vector<std::int64_t>> parts;
    std::vector<std::int64_t> cur;
    partitions(d, divisors, 0, cur, parts);
    std::set<std::vector<std::int64_t>> contributions;
    for (const auto& p : parts) {
      std::vector<std::int64_t> c;
      for (auto l : p)
        if (l < m) c.push_back(m / l);
      std::sort(c.begin(), c.end());
      contributions.insert(std::move(c));
    }
    options.emplace_back(contributions.begin(), contributions.end());
  }

  // h >= 0 bounds the total branching sum(1 - 1/p) by 2 - chi; prune on it.
  const Rational budget = Rational(2) - chi;
  std::vector<std::vector<Rational>> weight(options.size());
  for (std::size_t i = 0; i < options.size(); ++i)
    for (const auto& c : options[i]) {
      Rational w = 0;
      for (auto p : c) w = w + (Rational(1) - Rational(1, p));
      weight[i].push_back(w);
    }

  std::set<Signature> found;
  std::vector<std::int64_t> acc;
  auto rec = [&](auto&& self, std::size_t i, const Rational& used) -> void {
    if (i == options.size()) {
      if (auto h = genus_for(acc, chi)) found.insert(Signature(*h, acc));
      return;
    }
    for (std::size_t k = 0; k < options[i].size(); ++k) {
      Rational next = used + weight[i][k];
      if (next > budget) continue;
      const auto& c = options[i][k];
      acc.insert(acc.end(), c.begin(), c.end());
      self(self, i + 1, next);
      acc.resize(acc.size() - c.size());
    }
  };
  rec(rec, 0, Rational(0));
  return {found.begin(), found.end()};
}

std::vector<std::int64_t> triangle_subgroup_indices(const Signature& parent, std::int64_t max_index) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d <= max_index; ++d)
    for (const auto& s : enumerate_subgroup_signatures(parent, d))
      if (s.genus == 0 && s.periods.size() == 3) {
        out.push_back(d);
        break;
      }
  return out;
}

}  // namespace tql
