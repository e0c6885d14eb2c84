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

#include "tql/episearch/induced.hpp"

#include <map>

#include "tql/error.hpp"
#include "tql/perm/subgroup.hpp"

namespace tql {

Permutation evaluate_word(const TriangleWord& w, const Permutation& x, const Permutation& y) {
  Permutation p(x.degree());
  for (Letter l : w) p = p * (l == Letter::kX ? x : y);
  return p;
}

namespace {

TriangleWord conjugate(const TriangleWord& g, const TriangleWord& c) {
  return concat(concat(g, c), inverse_word(g));
}

struct Elliptic {
  TriangleWord word;
  Permutation image;
  HurwitzMatrix matrix;
};

}  // namespace

InducedQuadrupleReport induced_quadruple(const GroupHandle& h, const GeneratingTriple& triple, const GroupHandle& u,
                                         const InducedQuadrupleOptions& opt) {
  if (!validate_triple(h, triple)) throw UsageError("not a generating (2,3,7) triple of H");
  CosetAction action = coset_action(h, u);
  if (action.degree() != 7) throw UsageError("U must have index 7");
  const Permutation xs = action.image_of(triple.x), ys = action.image_of(triple.y);

  // Coset representatives as words, breadth first from U.
  std::vector<std::optional<TriangleWord>> rep(7);
  rep[0] = TriangleWord{};
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t i = queue[head];
    for (Letter l : {Letter::kX, Letter::kY}) {
      const std::size_t j = (l == Letter::kX ? xs : ys)[static_cast<Point>(i)];
      if (rep[j]) continue;
      rep[j] = concat(*rep[i], TriangleWord{l});
      queue.push_back(j);
    }
  }

  std::vector<TriangleWord> x_elliptic, y_elliptic, schreier;
  for (std::size_t i = 0; i < 7; ++i) {
    if (xs[static_cast<Point>(i)] == i) x_elliptic.push_back(conjugate(*rep[i], {Letter::kX}));
    if (ys[static_cast<Point>(i)] == i) y_elliptic.push_back(conjugate(*rep[i], {Letter::kY}));
    for (Letter l : {Letter::kX, Letter::kY}) {
      const std::size_t j = (l == Letter::kX ? xs : ys)[static_cast<Point>(i)];
      TriangleWord s = concat(concat(*rep[i], TriangleWord{l}), inverse_word(*rep[j]));
      if (!s.empty()) schreier.push_back(std::move(s));
    }
  }
  if (x_elliptic.size() != 3 || y_elliptic.size() != 1)
    throw UsageError("the preimage of U does not have periods (2,2,2,3)");

  // Short elements of the preimage, deduplicated as reduced words.
  std::vector<TriangleWord> letters = schreier;
  for (const auto& s : schreier) letters.push_back(inverse_word(s));
  std::map<TriangleWord, bool> seen{{TriangleWord{}, true}};
  std::vector<TriangleWord> conjugators{TriangleWord{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 0; len < opt.conjugator_length; ++len) {
    const std::size_t layer_end = conjugators.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (const auto& s : letters) {
        TriangleWord g = concat(conjugators[k], s);
        if (seen.emplace(g, true).second) conjugators.push_back(std::move(g));
      }
    }
    layer_begin = layer_end;
  }

  auto elliptic = [&](TriangleWord w) {
    Permutation img = evaluate_word(w, triple.x, triple.y);
    HurwitzMatrix m = HurwitzMatrix::of(w);
    return Elliptic{std::move(w), std::move(img), std::move(m)};
  };
  const Elliptic d = elliptic(y_elliptic[0]);
  const TriangleWord d_inv = inverse_word(d.word);
  const Permutation d_inv_image = d.image.inverse();

  // c^-1 = c for involutions, so c3 = c2 c1 d^-1.
  std::vector<std::vector<Elliptic>> conj(3);
  std::vector<std::vector<HurwitzMatrix>> tail(3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (const auto& g : conjugators) {
      conj[a].push_back(elliptic(conjugate(g, x_elliptic[a])));
      tail[a].push_back(conj[a].back().matrix * HurwitzMatrix::of(d_inv));
    }
  }

  InducedQuadrupleReport report;
  for (std::size_t a = 0; a < 3 && report.certified < opt.max_certified; ++a) {
    for (std::size_t b = 0; b < 3 && report.certified < opt.max_certified; ++b) {
      if (a == b) continue;
      for (std::size_t i = 0; i < conjugators.size() && report.certified < opt.max_certified; ++i) {
        const Elliptic& c1 = conj[a][i];
        const Permutation c1d = c1.image * d_inv_image;
        for (std::size_t j = 0; j < conjugators.size() && report.certified < opt.max_certified; ++j) {
          const Elliptic& c2 = conj[b][j];
          const Permutation c3_image = c2.image * c1d;
          if (element_order(c3_image) != 2) continue;
          ++report.candidates;
          if (!HurwitzMatrix::trace_of_product(c2.matrix, tail[a][i]).is_zero()) continue;
          GeneratingQuadruple q{c1.image, c2.image, c3_image, d.image, element_order(c1.image * c2.image)};
          if (!validate_quadruple(u, q)) continue;
          ++report.certified;
          report.n_values.insert(q.n);
          if (!report.first) {
            TriangleWord c3 = concat(concat(c2.word, c1.word), d_inv);
            report.first = InducedQuadruple{{c1.word, c2.word, std::move(c3), d.word}, std::move(q)};
          }
        }
      }
    }
  }

  if (report.first) {
    std::vector<Permutation> imgs;
    for (const auto& w : report.first->words) imgs.push_back(evaluate_word(w, xs, ys));
    bool fixes = true;
    for (const auto& p : imgs) fixes = fixes && p[0] == 0;
    report.projection_check = fixes && generated_order(7, imgs) == action.image().order() / 7;
  }
  return report;
}

}  // namespace tql
