#include "normgrowth/classes.hpp"

#include <algorithm>
#include <numeric>

#include "normgrowth/error.hpp"

namespace normgrowth {

ClassTable compute_classes(const FiniteGroup& G) {
  const std::size_t n = G.order();
  const std::size_t ngen = G.generators().size();
  std::vector<ClassIndex> raw_class(n, -1);
  std::vector<std::vector<ElementIndex>> orbits;

  for (std::size_t start = 0; start < n; ++start) {
    if (raw_class[start] >= 0) continue;
    auto id = static_cast<ClassIndex>(orbits.size());
    std::vector<ElementIndex> orbit{static_cast<ElementIndex>(start)};
    raw_class[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (std::size_t k = 0; k < ngen; ++k) {
        ElementIndex y = G.conjugate(orbit[head], G.generators()[k]);
        if (raw_class[static_cast<std::size_t>(y)] < 0) {
          raw_class[static_cast<std::size_t>(y)] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<std::size_t> order(orbits.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
    return orbits[a].front() < orbits[b].front();
  });

  ClassTable CT;
  CT.class_of.assign(n, 0);
  std::vector<ClassIndex> renumber(orbits.size());
  for (std::size_t c = 0; c < order.size(); ++c) {
    renumber[order[c]] = static_cast<ClassIndex>(c);
    CT.classes.push_back(std::move(orbits[order[c]]));
  }
  for (std::size_t g = 0; g < n; ++g) CT.class_of[g] = renumber[static_cast<std::size_t>(raw_class[g])];
  for (const auto& cls : CT.classes) {
    CT.sizes.push_back(cls.size());
    CT.rep.push_back(cls.front());
    CT.element_orders.push_back(G.element_order(cls.front()));
  }
  for (std::size_t c = 0; c < CT.count(); ++c) {
    ClassIndex inv = CT.class_of[static_cast<std::size_t>(G.inverse(CT.rep[c]))];
    CT.inverse_class.push_back(inv);
    CT.is_real.push_back(inv == static_cast<ClassIndex>(c));
  }
  return CT;
}

RealReport real_census(const FiniteGroup& G, const ClassTable& CT, bool require_characteristic) {
  RealReport r;
  r.characteristic = G.characteristic();
  if (require_characteristic && !r.characteristic)
    throw Error(ErrorCode::NoCharacteristic, G.label() + " has no defining characteristic");
  for (std::size_t c = 0; c < CT.count(); ++c) {
    auto ci = static_cast<ClassIndex>(c);
    bool semisimple = r.characteristic && CT.element_orders[c] % *r.characteristic != 0;
    if (semisimple) r.semisimple_elements += CT.sizes[c];
    if (CT.is_real[c]) {
      ++r.real_classes;
      r.real_elements += CT.sizes[c];
    } else {
      r.nonreal_classes.push_back(ci);
      if (semisimple) r.nonreal_semisimple_classes.push_back(ci);
    }
  }
  return r;
}

NormalSubset NormalSubset::from_classes(const ClassTable& CT, std::vector<ClassIndex> classes) {
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  NormalSubset s;
  s.elements_ = Subset(CT.group_order());
  for (auto c : classes) {
    if (c < 0 || static_cast<std::size_t>(c) >= CT.count())
      throw Error(ErrorCode::ParseError, "class index out of range: " + std::to_string(c));
    for (auto g : CT.classes[static_cast<std::size_t>(c)]) s.elements_.insert(g);
  }
  for (auto c : classes)
    if (!std::binary_search(classes.begin(), classes.end(), CT.inverse_class[static_cast<std::size_t>(c)]))
      s.symmetric_ = false;
  s.classes_ = std::move(classes);
  return s;
}

NormalSubset NormalSubset::from_subset(const ClassTable& CT, const Subset& elements) {
  std::vector<ClassIndex> classes;
  for (std::size_t c = 0; c < CT.count(); ++c) {
    const auto& cls = CT.classes[c];
    std::size_t hits = 0;
    for (auto g : cls) hits += elements.contains(g) ? 1 : 0;
    if (hits == cls.size())
      classes.push_back(static_cast<ClassIndex>(c));
    else if (hits != 0)
      throw Error(ErrorCode::NotNormal, "subset is not a union of conjugacy classes");
  }
  return from_classes(CT, std::move(classes));
}

bool NormalSubset::contains_class(ClassIndex c) const { return std::binary_search(classes_.begin(), classes_.end(), c); }

bool is_conjugation_closed(const FiniteGroup& G, const Subset& s) {
  for (auto g : s.elements())
    for (auto x : G.generators())
      if (!s.contains(G.conjugate(g, x))) return false;
  return true;
}

Word parse_word(std::string_view text) {
  Word w;
  w.text = std::string(text);
  if (text.empty()) throw Error(ErrorCode::EmptyWord, "word is empty");
  for (char ch : text) {
    Letter l{};
    switch (ch) {
      case 'x': l = {0, false}; break;
      case 'X': l = {0, true}; break;
      case 'y': l = {1, false}; break;
      case 'Y': l = {1, true}; break;
      default: throw Error(ErrorCode::ParseError, std::string("bad letter '") + ch + "' in word " + w.text);
    }
    if (!w.letters.empty() && w.letters.back().variable == l.variable && w.letters.back().inverse != l.inverse)
      throw Error(ErrorCode::NotReduced, "word " + w.text + " is not reduced");
    w.letters.push_back(l);
    w.arity = std::max(w.arity, l.variable + 1);
  }
  return w;
}

Subset word_image(const FiniteGroup& G, const Word& w, std::uint64_t eval_cap) {
  if (w.letters.empty()) throw Error(ErrorCode::EmptyWord, "word is empty");
  const std::size_t n = G.order();
  std::uint64_t evals = 1;
  for (int i = 0; i < w.arity; ++i) evals *= n;
  if (evals > eval_cap) throw Error(ErrorCode::CapExceeded, "word evaluation exceeds cap");

  Subset image(n);
  auto evaluate = [&](ElementIndex x, ElementIndex y) {
    ElementIndex v = G.identity();
    for (const auto& l : w.letters) {
      ElementIndex s = l.variable == 0 ? x : y;
      v = G.mul(v, l.inverse ? G.inverse(s) : s);
    }
    return v;
  };
  for (std::size_t x = 0; x < n; ++x) {
    if (w.arity < 2) {
      image.insert(evaluate(static_cast<ElementIndex>(x), 0));
      continue;
    }
    for (std::size_t y = 0; y < n; ++y) image.insert(evaluate(static_cast<ElementIndex>(x), static_cast<ElementIndex>(y)));
  }
  return image;
}

}  // namespace normgrowth
