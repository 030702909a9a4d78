#include "media/cube_isometry.hpp"

#include <algorithm>

#include "media/error.hpp"

namespace media {

CubeIsometry CubeIsometry::identity(std::size_t ground_size) {
  CubeIsometry s;
  s.ground_size = ground_size;
  s.permutation.resize(ground_size);
  for (std::size_t i = 0; i < ground_size; ++i) s.permutation[i] = static_cast<ElementIndex>(i);
  return s;
}

namespace {

ElementSet image(const std::vector<ElementIndex>& pi, const ElementSet& s) {
  std::vector<ElementIndex> out;
  out.reserve(s.size());
  for (ElementIndex x : s) out.push_back(pi.at(x));
  return ElementSet(std::move(out));
}

std::vector<ElementIndex> inverse(const std::vector<ElementIndex>& pi) {
  std::vector<ElementIndex> inv(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) inv[pi[i]] = static_cast<ElementIndex>(i);
  return inv;
}

}  // namespace

ElementSet CubeIsometry::apply(const ElementSet& s) const {
  return image(permutation, symmetric_difference(s, translation));
}

void validate(const CubeIsometry& s) {
  if (s.permutation.size() != s.ground_size) throw InputError("permutation size differs from ground");
  std::vector<char> hit(s.ground_size, 0);
  for (ElementIndex x : s.permutation) {
    if (x >= s.ground_size || hit[x]) throw InputError("not a permutation of the ground");
    hit[x] = 1;
  }
  for (ElementIndex x : s.translation) {
    if (x >= s.ground_size) throw InputError("translation leaves the ground");
  }
}

CubeIsometry compose(const CubeIsometry& first, const CubeIsometry& second) {
  if (first.ground_size != second.ground_size) throw InputError("cube isometries on different grounds");
  CubeIsometry out;
  out.ground_size = first.ground_size;
  out.permutation.resize(out.ground_size);
  for (std::size_t i = 0; i < out.ground_size; ++i) {
    out.permutation[i] = first.permutation[second.permutation[i]];
  }
  out.translation =
      symmetric_difference(second.translation, image(inverse(second.permutation), first.translation));
  return out;
}

CubeIsometry invert(const CubeIsometry& s) {
  CubeIsometry out;
  out.ground_size = s.ground_size;
  out.permutation = inverse(s.permutation);
  out.translation = image(s.permutation, s.translation);
  return out;
}

RankTable rank_table(const SetFamily& f) {
  if (!f.contains(ElementSet{})) throw InputError("rank table needs the empty set as a member");
  const std::size_t n = f.ground().size();
  RankTable t;
  t.rank.assign(n, std::nullopt);
  t.witness.assign(n, std::nullopt);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (ElementIndex x : f[i]) {
      if (!t.rank[x] || f[i].size() < *t.rank[x]) {
        t.rank[x] = f[i].size();
        t.witness[x] = i;
      }
    }
  }
  t.strata.assign(1, {});
  for (ElementIndex x = 0; x < n; ++x) {
    if (!t.rank[x]) continue;
    if (t.strata.size() <= *t.rank[x]) t.strata.resize(*t.rank[x] + 1);
    t.strata[*t.rank[x]].push_back(x);
  }
  return t;
}

CubeIsometry extend_isometry(const SetFamily& f1, const SetFamily& f2,
                             std::span<const std::size_t> alpha) {
  const std::size_t n = f1.ground().size();
  if (f2.ground().size() != n) throw InputError("families have different ground sets");
  std::vector<ElementIndex> to_f1(n);
  for (ElementIndex x = 0; x < n; ++x) {
    auto y = f1.find_element(f2.ground()[x]);
    if (!y) throw InputError("families have different ground sets");
    to_f1[x] = *y;
  }
  if (alpha.size() != f1.size() || f1.size() != f2.size()) {
    throw InputError("alpha must be a bijection between the families");
  }
  std::vector<char> hit(f2.size(), 0);
  for (std::size_t j : alpha) {
    if (j >= f2.size() || hit[j]) throw InputError("alpha must be a bijection between the families");
    hit[j] = 1;
  }
  // Images in the element order of f1.
  std::vector<ElementSet> img;
  img.reserve(f1.size());
  for (std::size_t i = 0; i < f1.size(); ++i) img.push_back(image(to_f1, f2[alpha[i]]));
  for (std::size_t i = 0; i < f1.size(); ++i) {
    for (std::size_t j = i + 1; j < f1.size(); ++j) {
      if (distance(f1[i], f1[j]) != distance(img[i], img[j])) {
        throw InputError("alpha does not preserve distances");
      }
    }
  }
  if (!is_well_graded(f1).well_graded) throw InputError("families must be well graded");
  if (f1.size() == 0) return CubeIsometry::identity(n);

  // Translate both sides so that f1[0] and its image become the empty set.
  const ElementSet p = f1[0], q = img[0];
  std::vector<ElementSet> s1, s2;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    s1.push_back(symmetric_difference(f1[i], p));
    s2.push_back(symmetric_difference(img[i], q));
  }
  const SetFamily g1(f1.ground(), s1), g2(f1.ground(), s2);
  const RankTable r1 = rank_table(g1), r2 = rank_table(g2);

  constexpr ElementIndex unset = static_cast<ElementIndex>(-1);
  std::vector<ElementIndex> pi(n, unset);
  std::vector<char> taken(n, 0);
  for (ElementIndex x = 0; x < n; ++x) {
    if (!r1.rank[x]) continue;
    std::size_t a = *r1.witness[x];
    auto b = g1.find(s1[a].without(x));
    if (!b) throw DefectError("a least member loses its element outside the family");
    if (!is_subset(s2[*b], s2[a]) || s2[a].size() != s2[*b].size() + 1) {
      throw DefectError("image of a least member does not grow by one element");
    }
    ElementIndex y = *symmetric_difference(s2[a], s2[*b]).begin();
    if (taken[y]) throw DefectError("constructed element map is not one-to-one");
    if (r2.rank[y] != r1.rank[x]) throw DefectError("constructed element map changes a rank");
    pi[x] = y;
    taken[y] = 1;
  }
  ElementIndex next = 0;
  for (ElementIndex x = 0; x < n; ++x) {
    if (pi[x] != unset) continue;
    while (taken[next]) ++next;
    pi[x] = next;
    taken[next] = 1;
  }
  for (std::size_t i = 0; i < s1.size(); ++i) {
    if (image(pi, s1[i]) != s2[i]) throw DefectError("element map disagrees with alpha on a member");
  }

  CubeIsometry out;
  out.ground_size = n;
  out.permutation = std::move(pi);
  out.translation = symmetric_difference(p, image(inverse(out.permutation), q));
  for (std::size_t i = 0; i < f1.size(); ++i) {
    if (out.apply(f1[i]) != img[i]) throw DefectError("extension disagrees with alpha");
  }
  return out;
}

}  // namespace media
