#include "media/set_family.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <numeric>
#include <unordered_set>

#include "media/error.hpp"

namespace media {

// ---- ElementSet ----

ElementSet::ElementSet(std::initializer_list<ElementIndex> elems)
    : ElementSet(std::vector<ElementIndex>(elems)) {}

ElementSet::ElementSet(std::vector<ElementIndex> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool ElementSet::contains(ElementIndex x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

ElementSet ElementSet::with(ElementIndex x) const {
  ElementSet r = *this;
  auto it = std::lower_bound(r.elems_.begin(), r.elems_.end(), x);
  if (it == r.elems_.end() || *it != x) r.elems_.insert(it, x);
  return r;
}

ElementSet ElementSet::without(ElementIndex x) const {
  ElementSet r = *this;
  auto it = std::lower_bound(r.elems_.begin(), r.elems_.end(), x);
  if (it != r.elems_.end() && *it == x) r.elems_.erase(it);
  return r;
}

ElementSet ElementSet::toggled(ElementIndex x) const {
  return contains(x) ? without(x) : with(x);
}

ElementSet symmetric_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet r;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(r.elems_));
  return r;
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.elems_));
  return r;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.elems_));
  return r;
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (ElementIndex x : s) h = (h ^ x) * 0x100000001b3ull;
  return h ^ s.size();
}

std::size_t distance(const ElementSet& p, const ElementSet& q) {
  // Counting merge, no allocation.
  std::size_t d = 0;
  auto i = p.begin(), j = q.begin();
  while (i != p.end() && j != q.end()) {
    if (*i < *j) {
      ++d, ++i;
    } else if (*j < *i) {
      ++d, ++j;
    } else {
      ++i, ++j;
    }
  }
  return d + static_cast<std::size_t>(std::distance(i, p.end()) + std::distance(j, q.end()));
}

bool between(const ElementSet& p, const ElementSet& r, const ElementSet& q) {
  return is_subset(set_intersection(p, q), r) && is_subset(r, set_union(p, q));
}

bool between_by_metric(const ElementSet& p, const ElementSet& r, const ElementSet& q) {
  return distance(p, r) + distance(r, q) == distance(p, q);
}

// ---- SetFamily ----

SetFamily::SetFamily(std::vector<std::string> ground, std::vector<ElementSet> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  for (ElementIndex x = 0; x < ground_.size(); ++x) {
    if (!element_lookup_.emplace(ground_[x], x).second) {
      throw InputError("duplicate ground element '" + ground_[x] + "'");
    }
  }
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (!sets_[i].empty() && sets_[i].elements().back() >= ground_.size()) {
      throw InputError("set " + std::to_string(i) + " has an element outside the ground set");
    }
    if (!lookup_.emplace(sets_[i], i).second) {
      throw InputError("set " + format_set(ground_, sets_[i]) + " occurs twice");
    }
  }
  if (ground_.size() <= 64) {
    std::vector<std::uint64_t> m(sets_.size(), 0);
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      for (ElementIndex x : sets_[i]) m[i] |= std::uint64_t{1} << x;
    }
    masks_ = std::move(m);
  }
}

std::optional<std::size_t> SetFamily::find(const ElementSet& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElementIndex> SetFamily::find_element(const std::string& name) const {
  auto it = element_lookup_.find(name);
  if (it == element_lookup_.end()) return std::nullopt;
  return it->second;
}

ElementIndex SetFamily::element_index(const std::string& name) const {
  if (auto x = find_element(name)) return *x;
  throw InputError("unknown ground element '" + name + "'");
}

std::string format_set(const std::vector<std::string>& ground, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (ElementIndex x : s) {
    if (!first) out += ',';
    out += ground.at(x);
    first = false;
  }
  return out + "}";
}

ElementSet make_set(const SetFamily& f, std::span<const std::string> names) {
  std::vector<ElementIndex> elems;
  elems.reserve(names.size());
  for (const auto& n : names) elems.push_back(f.element_index(n));
  return ElementSet(std::move(elems));
}

// ---- well-gradedness ----

namespace detail {

WellGradedness well_graded_sorted(const SetFamily& f) {
  const auto& sets = f.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      ElementSet diff = symmetric_difference(sets[i], sets[j]);
      bool step = std::any_of(diff.begin(), diff.end(),
                              [&](ElementIndex x) { return f.contains(sets[i].toggled(x)); });
      if (!step) return {false, std::make_pair(i, j)};
    }
  }
  return {};
}

WellGradedness well_graded_bits(const SetFamily& f) {
  if (!f.masks()) throw InputError("bitmask path needs a ground set of at most 64 elements");
  const auto& m = *f.masks();
  std::unordered_set<std::uint64_t> members(m.begin(), m.end());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j) continue;
      bool step = false;
      for (std::uint64_t diff = m[i] ^ m[j]; diff && !step; diff &= diff - 1) {
        step = members.count(m[i] ^ (diff & (~diff + 1))) > 0;
      }
      if (!step) return {false, std::make_pair(i, j)};
    }
  }
  return {};
}

}  // namespace detail

WellGradedness is_well_graded(const SetFamily& f) {
  return f.masks() ? detail::well_graded_bits(f) : detail::well_graded_sorted(f);
}

std::optional<std::vector<std::size_t>> line_segment(const SetFamily& f, std::size_t p,
                                                     std::size_t q) {
  if (p >= f.size() || q >= f.size()) throw InputError("set index out of range");
  const ElementSet& target = f[q];

  // Members of the interval [P, Q], nearest to Q first.
  std::vector<std::size_t> interval;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (between(f[p], f[i], target)) interval.push_back(i);
  }
  std::stable_sort(interval.begin(), interval.end(), [&](std::size_t a, std::size_t b) {
    return distance(f[a], target) < distance(f[b], target);
  });

  // reaches[i]: some unit-step geodesic from f[i] to Q stays inside f.
  std::vector<char> reaches(f.size(), 0);
  auto next_step = [&](std::size_t i) -> std::optional<std::size_t> {
    for (ElementIndex x : symmetric_difference(f[i], target)) {
      auto nb = f.find(f[i].toggled(x));
      if (nb && reaches[*nb]) return nb;
    }
    return std::nullopt;
  };
  for (std::size_t i : interval) {
    reaches[i] = (i == q) || next_step(i).has_value();
  }
  if (!reaches[p]) return std::nullopt;

  std::vector<std::size_t> path{p};
  while (path.back() != q) path.push_back(*next_step(path.back()));
  return path;
}

std::optional<std::vector<std::size_t>> line_segment(const SetFamily& f, const ElementSet& p,
                                                     const ElementSet& q) {
  auto pi = f.find(p);
  auto qi = f.find(q);
  if (!pi || !qi) throw InputError("line_segment endpoints must be members of the family");
  return line_segment(f, *pi, *qi);
}

NormalizedFamily normalize(const SetFamily& f) {
  const std::size_t n = f.ground().size();
  std::vector<std::size_t> count(n, 0);
  for (const auto& s : f.sets()) {
    for (ElementIndex x : s) ++count[x];
  }
  std::vector<ElementIndex> remap(n, static_cast<ElementIndex>(-1));
  std::vector<std::string> ground;
  NormalizedFamily out{SetFamily({}, {}), {}, {}};
  for (ElementIndex x = 0; x < n; ++x) {
    if (count[x] == 0) {
      out.removed_unused.push_back(f.ground()[x]);
    } else if (count[x] == f.size()) {
      out.removed_common.push_back(f.ground()[x]);
    } else {
      remap[x] = static_cast<ElementIndex>(ground.size());
      ground.push_back(f.ground()[x]);
    }
  }
  std::vector<ElementSet> sets;
  sets.reserve(f.size());
  for (const auto& s : f.sets()) {
    std::vector<ElementIndex> elems;
    for (ElementIndex x : s) {
      if (remap[x] != static_cast<ElementIndex>(-1)) elems.push_back(remap[x]);
    }
    sets.emplace_back(std::move(elems));
  }
  out.family = SetFamily(std::move(ground), std::move(sets));
  return out;
}

// ---- the medium of a family ----

std::string family_token_name(const SetFamily& f, FamilyToken t) {
  return (t.add ? "+" : "-") + f.ground().at(t.element);
}

std::optional<FamilyToken> parse_family_token(const SetFamily& f, const std::string& name) {
  if (name.size() < 2 || (name[0] != '+' && name[0] != '-')) return std::nullopt;
  auto x = f.find_element(name.substr(1));
  if (!x) return std::nullopt;
  return FamilyToken{*x, name[0] == '+'};
}

TokenSystem family_to_medium(const SetFamily& f, std::optional<std::vector<std::string>> state_names) {
  std::vector<std::string> states;
  if (state_names) {
    if (state_names->size() != f.size()) throw InputError("one state name per set is required");
    states = std::move(*state_names);
  } else {
    for (const auto& s : f.sets()) states.push_back(format_set(f.ground(), s));
  }

  std::vector<std::string> tokens;
  std::vector<std::vector<StateIndex>> action;
  std::vector<TokenIndex> reverse;
  for (ElementIndex x = 0; x < f.ground().size(); ++x) {
    std::vector<StateIndex> add(f.size()), remove(f.size());
    bool effective = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      add[i] = remove[i] = i;
      auto nb = f.find(f[i].toggled(x));
      if (!nb) continue;
      (f[i].contains(x) ? remove : add)[i] = *nb;
      effective = true;
    }
    if (!effective) continue;
    TokenIndex base = tokens.size();
    tokens.push_back(family_token_name(f, {x, true}));
    tokens.push_back(family_token_name(f, {x, false}));
    action.push_back(std::move(add));
    action.push_back(std::move(remove));
    reverse.push_back(base + 1);
    reverse.push_back(base);
  }
  return TokenSystem(std::move(states), std::move(tokens), std::move(action), std::move(reverse));
}

bool is_complete(const SetFamily& f) {
  for (const auto& s : f.sets()) {
    for (ElementIndex x = 0; x < f.ground().size(); ++x) {
      if (!f.contains(s.toggled(x))) return false;
    }
  }
  return true;
}

SetFamily translate(const SetFamily& f, const ElementSet& a) {
  if (!a.empty() && a.elements().back() >= f.ground().size()) {
    throw InputError("translation set leaves the ground set");
  }
  std::vector<ElementSet> sets;
  sets.reserve(f.size());
  for (const auto& s : f.sets()) sets.push_back(symmetric_difference(s, a));
  return SetFamily(f.ground(), std::move(sets));
}

}  // namespace media
