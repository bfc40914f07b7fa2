#include "normcomm/varieties.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>

#include "normcomm/closure.hpp"
#include "normcomm/errors.hpp"

namespace normcomm {

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images.resize(degree);
  for (Element i = 0; i < degree; ++i) p.images[i] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (Element i = 0; i < images.size(); ++i)
    if (images[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  Permutation r;
  r.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) r.images[i] = other.images[images[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images.resize(images.size());
  for (Element i = 0; i < images.size(); ++i) r.images[images[i]] = i;
  return r;
}

namespace {

std::vector<std::size_t> parse_points(std::string_view body) {
  std::vector<std::size_t> points;
  const bool separated = body.find_first_of(" \t\n\r,") != std::string_view::npos;
  std::size_t i = 0;
  while (i < body.size()) {
    const char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected character '") + c + "' in cycle");
    if (!separated) {
      points.push_back(static_cast<std::size_t>(c - '0'));
      ++i;
      continue;
    }
    std::size_t value = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      value = value * 10 + static_cast<std::size_t>(body[i] - '0');
      if (value > kMaxCarrierSize) throw ParseError("point out of range");
      ++i;
    }
    points.push_back(value);
  }
  return points;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result = Permutation::identity(degree);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i < text.size() && text[i] == 'e') {
    ++i;
    skip_space();
    if (i != text.size()) throw ParseError("unexpected text after identity 'e'");
    return result;
  }
  while (true) {
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' at position " + std::to_string(i));
    const auto close = text.find_first_of("()", i + 1);
    if (close == std::string_view::npos || text[close] != ')')
      throw ParseError("unbalanced parentheses at position " + std::to_string(i));
    const auto points = parse_points(text.substr(i + 1, close - i - 1));
    i = close + 1;
    std::vector<bool> seen(degree + 1, false);
    for (std::size_t p : points) {
      if (p < 1 || p > degree)
        throw ParseError("point " + std::to_string(p) + " out of range 1.." +
                         std::to_string(degree));
      if (seen[p]) throw ParseError("point " + std::to_string(p) + " repeated in a cycle");
      seen[p] = true;
    }
    Permutation cycle = Permutation::identity(degree);
    for (std::size_t k = 0; k < points.size(); ++k)
      cycle.images[points[k] - 1] = static_cast<Element>(points[(k + 1) % points.size()] - 1);
    result = result.then(cycle);
  }
  return result;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Element start = 0; start < p.degree(); ++start) {
    if (seen[start] || p.images[start] == start) continue;
    out += '(';
    Element x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p.images[x];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

PermutationSpec PermutationSpec::from_cycles(std::size_t degree,
                                             const std::vector<std::string>& generators) {
  PermutationSpec spec;
  spec.degree = degree;
  spec.source_text = generators;
  for (const auto& g : generators) spec.generators.push_back(parse_cycles(g, degree));
  return spec;
}

FiniteAlgebra group_from_permutations(const PermutationSpec& spec, std::size_t cap) {
  if (spec.degree == 0) throw InvalidArgument("degree must be positive");
  for (const auto& g : spec.generators) {
    if (g.degree() != spec.degree) throw InvalidArgument("generator degree mismatch");
    std::vector<bool> hit(spec.degree, false);
    for (Element v : g.images) {
      if (v >= spec.degree || hit[v]) throw InvalidArgument("generator is not a bijection");
      hit[v] = true;
    }
  }
  std::vector<Permutation> elements{Permutation::identity(spec.degree)};
  std::map<Permutation, Element> index{{elements[0], 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : spec.generators) {
      Permutation y = elements[head].then(g);
      if (index.contains(y)) continue;
      if (elements.size() >= cap)
        throw Refusal("permutation group exceeds cap " + std::to_string(cap));
      index.emplace(y, static_cast<Element>(elements.size()));
      elements.push_back(std::move(y));
    }
  }
  const std::size_t n = elements.size();
  Operation mul{"mul", 2, std::vector<Element>(n * n)};
  Operation inv{"inv", 1, std::vector<Element>(n)};
  for (Element a = 0; a < n; ++a) {
    inv.table[a] = index.at(elements[a].inverse());
    for (Element b = 0; b < n; ++b) mul.table[a * n + b] = index.at(elements[a].then(elements[b]));
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(format_cycles(p));
  return FiniteAlgebra(n, 0, {std::move(mul), std::move(inv)}, Variety::Group,
                       std::move(labels));
}

namespace {

std::size_t largest_point(std::string_view text) {
  std::size_t best = 1, v = 0;
  bool in_number = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      v = in_number ? v * 10 + static_cast<std::size_t>(c - '0')
                    : static_cast<std::size_t>(c - '0');
      in_number = true;
      best = std::max(best, v);
    } else {
      in_number = false;
    }
  }
  return best;
}

}  // namespace

std::optional<std::vector<Permutation>> permutations_from_labels(const FiniteAlgebra& alg) {
  if (!alg.has_labels()) return std::nullopt;
  std::size_t degree = 1;
  for (const auto& l : alg.labels()) degree = std::max(degree, largest_point(l));
  std::vector<Permutation> out;
  try {
    for (const auto& l : alg.labels()) out.push_back(parse_cycles(l, degree));
  } catch (const ParseError&) {
    return std::nullopt;
  }
  return out;
}

std::optional<Element> element_from_cycles(const FiniteAlgebra& alg, std::string_view text) {
  const auto perms = permutations_from_labels(alg);
  if (!perms) return std::nullopt;
  const std::size_t degree = std::max(perms->front().degree(), largest_point(text));
  const std::string wanted = format_cycles(parse_cycles(text, degree));
  for (Element x = 0; x < perms->size(); ++x)
    if (format_cycles((*perms)[x]) == wanted) return x;
  return std::nullopt;
}

FiniteAlgebra cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("order must be positive");
  Operation mul{"mul", 2, std::vector<Element>(n * n)};
  Operation inv{"inv", 1, std::vector<Element>(n)};
  std::vector<std::string> labels;
  for (Element a = 0; a < n; ++a) {
    inv.table[a] = static_cast<Element>((n - a) % n);
    labels.push_back(std::to_string(a));
    for (Element b = 0; b < n; ++b) mul.table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteAlgebra(n, 0, {std::move(mul), std::move(inv)}, Variety::Group,
                       std::move(labels));
}

namespace {

std::vector<Element> modular_table(std::size_t n, bool multiply) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a * n + b] = static_cast<Element>(multiply ? (a * b) % n : (a + b) % n);
  return t;
}

}  // namespace

FiniteAlgebra ring_mod_n(std::size_t n) {
  return ring_from_tables(n, modular_table(n, false), modular_table(n, true));
}

FiniteAlgebra zero_ring(std::size_t n) {
  return ring_from_tables(n, modular_table(n, false), std::vector<Element>(n * n, 0));
}

FiniteAlgebra ring_from_tables(std::size_t n, std::vector<Element> add,
                               std::vector<Element> mul, std::vector<std::string> labels) {
  if (add.size() != n * n) throw InvalidArgument("additive table has the wrong length");
  Operation neg{"neg", 1, std::vector<Element>(n, static_cast<Element>(n))};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (add[a * n + b] == 0) {
        neg.table[a] = b;
        break;
      }
  for (Element a = 0; a < n; ++a)
    if (neg.table[a] == n) throw InvalidArgument("element without additive inverse");
  if (labels.empty())
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  FiniteAlgebra alg(n, 0,
                    {Operation{"add", 2, std::move(add)}, std::move(neg),
                     Operation{"mul", 2, std::move(mul)}},
                    Variety::Ring, std::move(labels));
  require_valid(alg);
  return alg;
}

FiniteAlgebra monoid_from_table(std::size_t n, std::vector<Element> mul, Element unit,
                                std::vector<std::string> labels) {
  if (labels.empty())
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  FiniteAlgebra alg(n, unit, {Operation{"mul", 2, std::move(mul)}}, Variety::Monoid,
                    std::move(labels));
  require_valid(alg);
  return alg;
}

}  // namespace normcomm
