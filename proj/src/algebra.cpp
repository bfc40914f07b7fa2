#include "normcomm/algebra.hpp"

#include <array>
#include <atomic>
#include <limits>
#include <sstream>

#include "normcomm/errors.hpp"

namespace normcomm {

std::string_view to_string(Variety v) {
  switch (v) {
    case Variety::Group: return "group";
    case Variety::Ring: return "ring";
    case Variety::Monoid: return "monoid";
    case Variety::Raw: return "raw";
  }
  return "raw";
}

std::optional<Variety> parse_variety(std::string_view name) {
  if (name == "group") return Variety::Group;
  if (name == "ring") return Variety::Ring;
  if (name == "monoid") return Variety::Monoid;
  if (name == "raw") return Variety::Raw;
  return std::nullopt;
}

FiniteAlgebra::FiniteAlgebra(std::size_t size, Element zero, std::vector<Operation> ops,
                             Variety variety, std::vector<std::string> labels) {
  if (size == 0) throw InvalidArgument("algebra size must be positive");
  if (size > kMaxCarrierSize)
    throw InvalidArgument("algebra size " + std::to_string(size) + " exceeds cap " +
                          std::to_string(kMaxCarrierSize));
  if (zero >= size) throw InvalidArgument("zero index out of range");
  if (!labels.empty() && labels.size() != size)
    throw InvalidArgument("label count must equal size");
  for (const auto& op : ops) {
    if (op.arity != 1 && op.arity != 2)
      throw InvalidArgument("operation '" + op.name + "' has unsupported arity");
    const std::size_t want = op.arity == 1 ? size : size * size;
    if (op.table.size() != want)
      throw InvalidArgument("operation '" + op.name + "' table length " +
                            std::to_string(op.table.size()) + ", expected " +
                            std::to_string(want));
    for (Element e : op.table)
      if (e >= size)
        throw InvalidArgument("operation '" + op.name + "' has entry " +
                              std::to_string(e) + " outside the carrier");
  }
  auto d = std::make_shared<Data>();
  d->size = size;
  d->zero = zero;
  d->ops = std::move(ops);
  d->variety = variety;
  d->labels = std::move(labels);
  data_ = std::move(d);
}

std::string FiniteAlgebra::label(Element x) const {
  if (has_labels()) return data_->labels[x];
  return std::to_string(x);
}

const Operation* FiniteAlgebra::find_op(std::string_view name, int arity) const {
  for (const auto& op : data_->ops)
    if (op.name == name && op.arity == arity) return &op;
  return nullptr;
}

const Operation& FiniteAlgebra::op(std::string_view name, int arity) const {
  if (const auto* p = find_op(name, arity)) return *p;
  throw InvalidArgument("algebra has no operation " + std::string(name) + "/" +
                        std::to_string(arity));
}

bool FiniteAlgebra::same_structure(const FiniteAlgebra& other) const {
  if (size() != other.size() || zero() != other.zero() ||
      ops().size() != other.ops().size())
    return false;
  for (std::size_t i = 0; i < ops().size(); ++i) {
    const auto& a = ops()[i];
    const auto& b = other.ops()[i];
    if (a.name != b.name || a.arity != b.arity || a.table != b.table) return false;
  }
  return true;
}

namespace {

constexpr Element kNone = std::numeric_limits<Element>::max();

class LawChecker {
 public:
  LawChecker(const FiniteAlgebra& alg, parallel::Mode mode, ValidationReport& out)
      : alg_(alg), n_(static_cast<Element>(alg.size())), mode_(mode), out_(out) {}

  const Operation* require(std::string_view name, int arity) {
    const auto* op = alg_.find_op(name, arity);
    if (!op)
      out_.push_back({"missing operation " + std::string(name) + "/" +
                          std::to_string(arity),
                      {}});
    return op;
  }

  void identity(const Operation& mul) {
    for (Element a = 0; a < n_; ++a) {
      if (alg_.apply(mul, alg_.zero(), a) != a || alg_.apply(mul, a, alg_.zero()) != a) {
        out_.push_back({mul.name + ": zero is not a two-sided identity", {a}});
        return;
      }
    }
  }

  void inverse(const Operation& mul, const Operation& inv) {
    for (Element a = 0; a < n_; ++a) {
      const Element b = alg_.apply(inv, a);
      if (alg_.apply(mul, a, b) != alg_.zero() || alg_.apply(mul, b, a) != alg_.zero()) {
        out_.push_back({inv.name + " is not a two-sided inverse for " + mul.name, {a}});
        return;
      }
    }
  }

  void commutative(const Operation& op) {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < a; ++b)
        if (alg_.apply(op, a, b) != alg_.apply(op, b, a)) {
          out_.push_back({op.name + " is not commutative", {a, b}});
          return;
        }
  }

  void associative(const Operation& op) {
    cubic(op.name + " is not associative", [&](Element a, Element b, Element c) {
      return alg_.apply(op, alg_.apply(op, a, b), c) ==
             alg_.apply(op, a, alg_.apply(op, b, c));
    });
  }

  void distributive(const Operation& mul, const Operation& add) {
    cubic("left distributivity of " + mul.name + " over " + add.name,
          [&](Element a, Element b, Element c) {
            return alg_.apply(mul, a, alg_.apply(add, b, c)) ==
                   alg_.apply(add, alg_.apply(mul, a, b), alg_.apply(mul, a, c));
          });
    cubic("right distributivity of " + mul.name + " over " + add.name,
          [&](Element a, Element b, Element c) {
            return alg_.apply(mul, alg_.apply(add, a, b), c) ==
                   alg_.apply(add, alg_.apply(mul, a, c), alg_.apply(mul, b, c));
          });
  }

 private:
  // Finds the lexicographically first (a,b,c) violating `law`. The outer
  // index runs in parallel; the per-row first hit keeps the witness stable.
  template <class Law>
  void cubic(const std::string& name, Law law) {
    std::vector<std::array<Element, 3>> first(n_, {kNone, kNone, kNone});
    parallel::for_each_index(
        n_,
        [&](std::size_t ia) {
          const auto a = static_cast<Element>(ia);
          for (Element b = 0; b < n_; ++b)
            for (Element c = 0; c < n_; ++c)
              if (!law(a, b, c)) {
                first[ia] = {a, b, c};
                return;
              }
        },
        mode_);
    for (const auto& w : first)
      if (w[0] != kNone) {
        out_.push_back({name, {w[0], w[1], w[2]}});
        return;
      }
  }

  const FiniteAlgebra& alg_;
  Element n_;
  parallel::Mode mode_;
  ValidationReport& out_;
};

}  // namespace

ValidationReport validate(const FiniteAlgebra& alg, parallel::Mode mode) {
  ValidationReport report;
  LawChecker check(alg, mode, report);
  switch (alg.variety()) {
    case Variety::Group: {
      const auto* mul = check.require("mul", 2);
      const auto* inv = check.require("inv", 1);
      if (mul) {
        check.identity(*mul);
        check.associative(*mul);
        if (inv) check.inverse(*mul, *inv);
      }
      break;
    }
    case Variety::Ring: {
      const auto* add = check.require("add", 2);
      const auto* neg = check.require("neg", 1);
      const auto* mul = check.require("mul", 2);
      if (add) {
        check.identity(*add);
        check.associative(*add);
        check.commutative(*add);
        if (neg) check.inverse(*add, *neg);
      }
      if (mul) check.associative(*mul);
      if (add && mul) check.distributive(*mul, *add);
      break;
    }
    case Variety::Monoid: {
      if (const auto* mul = check.require("mul", 2)) {
        check.identity(*mul);
        check.associative(*mul);
      }
      break;
    }
    case Variety::Raw:
      break;
  }
  return report;
}

std::string describe(const LawViolation& v, const FiniteAlgebra& alg) {
  std::ostringstream os;
  os << v.law;
  if (!v.witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      os << (i ? ", " : "") << alg.label(v.witness[i]);
    os << ")";
  }
  return os.str();
}

void require_valid(const FiniteAlgebra& alg) {
  const auto report = validate(alg);
  if (!report.empty())
    throw InvalidArgument("invalid " + std::string(to_string(alg.variety())) + ": " +
                          describe(report.front(), alg));
}

}  // namespace normcomm
