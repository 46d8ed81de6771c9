#include "uarep/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "uarep/error.hpp"

namespace uarep {

std::optional<std::size_t> Signature::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].symbol == symbol) return i;
  }
  return std::nullopt;
}

std::size_t table_cells(std::size_t carrier_size, std::size_t arity) {
  std::size_t cells = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (carrier_size != 0 && cells > kMaxTableCells / carrier_size) {
      throw_domain(ErrorKind::LimitExceeded, "operation table too large");
    }
    cells *= carrier_size;
  }
  return cells;
}

std::size_t tuple_index(std::size_t carrier_size, std::span<const std::size_t> args) {
  std::size_t index = 0;
  for (std::size_t arg : args) index = index * carrier_size + arg;
  return index;
}

bool next_tuple(std::vector<std::size_t>& tuple, std::size_t base) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < base) return true;
    tuple[i] = 0;
  }
  return false;
}

FiniteAlgebra FiniteAlgebra::make(std::string name, Signature sig,
                                  std::vector<std::string> carrier,
                                  std::vector<std::vector<std::size_t>> tables) {
  if (carrier.size() > kMaxCarrier) {
    throw_domain(ErrorKind::LimitExceeded,
                 "carrier of '" + name + "' exceeds " + std::to_string(kMaxCarrier) +
                     " elements");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : carrier) {
    if (!seen.insert(label).second) {
      throw_domain(ErrorKind::DuplicateLabel,
                   "duplicate element label '" + label + "' in algebra '" + name + "'");
    }
  }
  seen.clear();
  for (const auto& op : sig.ops) {
    if (op.arity > kMaxArity) {
      throw_domain(ErrorKind::LimitExceeded,
                   "operation '" + op.symbol + "' has arity above " +
                       std::to_string(kMaxArity));
    }
    if (!seen.insert(op.symbol).second) {
      throw_domain(ErrorKind::DuplicateLabel,
                   "duplicate operation symbol '" + op.symbol + "'");
    }
  }
  if (tables.size() != sig.ops.size()) {
    throw_domain(ErrorKind::InternalError, "one table per operation required");
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const std::size_t cells = table_cells(carrier.size(), sig.ops[i].arity);
    if (tables[i].size() != cells) {
      throw_domain(ErrorKind::InternalError,
                   "table for '" + sig.ops[i].symbol + "' must have " +
                       std::to_string(cells) + " entries, got " +
                       std::to_string(tables[i].size()));
    }
    for (std::size_t value : tables[i]) {
      if (value >= carrier.size()) {
        throw_domain(ErrorKind::IndexOutOfRange,
                     "table for '" + sig.ops[i].symbol + "' maps outside the carrier");
      }
    }
  }

  FiniteAlgebra a;
  a.name_ = std::move(name);
  a.sig_ = std::move(sig);
  a.carrier_ = std::move(carrier);
  a.tables_ = std::move(tables);
  return a;
}

std::optional<std::size_t> FiniteAlgebra::element(std::string_view label) const {
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    if (carrier_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t FiniteAlgebra::apply(std::size_t op_index,
                                 std::span<const std::size_t> args) const {
  const Operation& op = sig_.ops.at(op_index);
  if (args.size() != op.arity) {
    throw_domain(ErrorKind::ArityMismatch,
                 "'" + op.symbol + "' expects " + std::to_string(op.arity) +
                     " arguments, got " + std::to_string(args.size()));
  }
  for (std::size_t arg : args) {
    if (arg >= size()) {
      throw_domain(ErrorKind::IndexOutOfRange, "argument outside the carrier");
    }
  }
  return tables_[op_index][tuple_index(size(), args)];
}

}  // namespace uarep
