#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normcomm/parallel.hpp"
#include "normcomm/subset.hpp"

namespace normcomm {

inline constexpr std::size_t kMaxCarrierSize = std::size_t{1} << 16;

enum class Variety { Group, Ring, Monoid, Raw };

std::string_view to_string(Variety v);
/// Accepts the lowercase names used by the JSON format.
std::optional<Variety> parse_variety(std::string_view name);

/// A unary or binary operation given by a dense table.
/// Binary tables are row-major: table[a * size + b] = a op b.
struct Operation {
  std::string name;
  int arity = 2;
  std::vector<Element> table;
};

/// A finite pointed algebra: carrier 0..size-1, a designated zero constant
/// and a list of operation tables. Immutable; copies share storage.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  /// Throws InvalidArgument on structural problems (table length, entry
  /// range, arity, size cap). Variety laws are checked by validate().
  FiniteAlgebra(std::size_t size, Element zero, std::vector<Operation> ops,
                Variety variety, std::vector<std::string> labels = {});

  std::size_t size() const { return data_ ? data_->size : 0; }
  Element zero() const { return data_->zero; }
  Variety variety() const { return data_->variety; }
  std::span<const Operation> ops() const { return data_->ops; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  bool has_labels() const { return !data_->labels.empty(); }
  /// Display label, or the decimal index when unlabelled.
  std::string label(Element x) const;

  /// nullptr when no operation with this name and arity exists.
  const Operation* find_op(std::string_view name, int arity) const;
  const Operation& op(std::string_view name, int arity) const;

  Element apply(const Operation& op, Element a) const { return op.table[a]; }
  Element apply(const Operation& op, Element a, Element b) const {
    return op.table[static_cast<std::size_t>(a) * data_->size + b];
  }

  /// Same ops, names, arities and tables (labels ignored).
  bool same_structure(const FiniteAlgebra& other) const;

 private:
  struct Data {
    std::size_t size = 0;
    Element zero = 0;
    std::vector<Operation> ops;
    Variety variety = Variety::Raw;
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Data> data_;
};

struct LawViolation {
  std::string law;
  std::vector<Element> witness;
};

/// Empty iff every law of the algebra's variety holds.
using ValidationReport = std::vector<LawViolation>;

/// Exhaustively checks the laws implied by the variety tag. Associativity
/// and distributivity (the cubic checks) run through `mode`.
ValidationReport validate(const FiniteAlgebra& alg,
                          parallel::Mode mode = parallel::Mode::OpenMP);

std::string describe(const LawViolation& v, const FiniteAlgebra& alg);

/// Throws InvalidArgument naming the first violated law.
void require_valid(const FiniteAlgebra& alg);

}  // namespace normcomm
