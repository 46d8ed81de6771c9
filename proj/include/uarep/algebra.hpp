#ifndef UAREP_ALGEBRA_HPP_
#define UAREP_ALGEBRA_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uarep {

// Documented desk-scale limits; exceeding them is a LimitExceeded error,
// never a silent blowup.
inline constexpr std::size_t kMaxArity = 4;
inline constexpr std::size_t kMaxCarrier = 4096;
inline constexpr std::size_t kMaxTableCells = std::size_t(1) << 26;

struct Operation {
  std::string symbol;
  std::size_t arity = 0;

  friend bool operator==(const Operation&, const Operation&) = default;
};

// An ordered list of operation symbols with arities. The order is fixed and
// observable: all enumeration downstream follows it.
struct Signature {
  std::vector<Operation> ops;

  std::optional<std::size_t> find(std::string_view symbol) const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// A finite algebra: carrier labels in declaration order plus one total
// operation table per symbol. Elements are dense indices 0..n-1 everywhere;
// labels are surface syntax only. Tables for an op of arity k are flat
// row-major arrays of size n^k (a constant's table is a single cell).
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;  // the empty algebra

  static FiniteAlgebra make(std::string name, Signature sig,
                            std::vector<std::string> carrier,
                            std::vector<std::vector<std::size_t>> tables);

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  std::size_t size() const { return carrier_.size(); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::string& label(std::size_t element) const { return carrier_.at(element); }

  std::optional<std::size_t> element(std::string_view label) const;

  // Table lookup; args.size() must equal the op's arity.
  std::size_t apply(std::size_t op_index, std::span<const std::size_t> args) const;

  const std::vector<std::size_t>& table(std::size_t op_index) const {
    return tables_.at(op_index);
  }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  std::string name_;
  Signature sig_;
  std::vector<std::string> carrier_;
  std::vector<std::vector<std::size_t>> tables_;
};

// Number of entries in a total table: n^arity.
std::size_t table_cells(std::size_t carrier_size, std::size_t arity);

// Row-major position of an argument tuple.
std::size_t tuple_index(std::size_t carrier_size, std::span<const std::size_t> args);

// Advances a mixed-radix tuple over 0..base-1 per digit; returns false once
// the tuple wraps back to all zeros.
bool next_tuple(std::vector<std::size_t>& tuple, std::size_t base);

}  // namespace uarep

#endif  // UAREP_ALGEBRA_HPP_
