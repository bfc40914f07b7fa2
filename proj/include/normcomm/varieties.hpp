#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normcomm/algebra.hpp"

namespace normcomm {

/// A permutation of 0..degree-1: images[i] is the image of point i.
struct Permutation {
  std::vector<Element> images;

  static Permutation identity(std::size_t degree);
  std::size_t degree() const { return images.size(); }
  bool is_identity() const;
  /// Left-to-right composition: apply *this first, then other.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Parses a product of cycles such as "(1 2)(3 4 5)" with 1-based points,
/// composed left to right. Within a cycle, points are single digits unless
/// whitespace or commas separate them. "" , "()" and "e" denote the identity.
/// Throws ParseError.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Disjoint-cycle rendering with 1-based points; the identity renders as "e".
std::string format_cycles(const Permutation& p);

struct PermutationSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<std::string> source_text;

  /// Parses each generator string in the given degree.
  static PermutationSpec from_cycles(std::size_t degree,
                                     const std::vector<std::string>& generators);
};

/// The group generated by the spec. Elements are discovered breadth-first
/// from the identity (index 0) by right multiplication with the generators
/// in listed order; labels are cycle strings. Throws Refusal past `cap`.
FiniteAlgebra group_from_permutations(const PermutationSpec& spec,
                                      std::size_t cap = kMaxCarrierSize);

/// Recovers the permutation behind each label of a permutation group.
/// Returns nullopt when some label is not cycle notation.
std::optional<std::vector<Permutation>> permutations_from_labels(const FiniteAlgebra& alg);

/// Index of the element whose label denotes the same permutation as `text`,
/// or nullopt when the algebra has no such element. Throws ParseError on
/// malformed text.
std::optional<Element> element_from_cycles(const FiniteAlgebra& alg, std::string_view text);

/// Cyclic group Z_n written with "mul"/"inv" (addition mod n).
FiniteAlgebra cyclic_group(std::size_t n);

/// Z_n with add, neg and mul mod n.
FiniteAlgebra ring_mod_n(std::size_t n);

/// Z_n's additive group with the zero multiplication.
FiniteAlgebra zero_ring(std::size_t n);

/// Ring from additive and multiplicative tables (row-major, zero at index 0).
/// Negation is derived from the additive table. Throws InvalidArgument with
/// the validation report when a ring law fails.
FiniteAlgebra ring_from_tables(std::size_t n, std::vector<Element> add,
                               std::vector<Element> mul,
                               std::vector<std::string> labels = {});

/// Monoid from its multiplication table, pointed at the identity `unit`.
FiniteAlgebra monoid_from_table(std::size_t n, std::vector<Element> mul, Element unit = 0,
                                std::vector<std::string> labels = {});

}  // namespace normcomm
