#ifndef UAREP_TERM_HPP_
#define UAREP_TERM_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace uarep {

class FiniteAlgebra;

// An immutable word tree. Leaves are either concrete carrier elements or
// slots into an ordered generating set; the two flavors never mix within
// one term. Subtrees are shared freely but sharing is not observable:
// terms compare structurally.
class Term {
 public:
  enum class Kind { element, slot, apply, act };
  enum class Flavor { neutral, concrete, slotted };

  static Term element(std::size_t index);
  static Term slot(std::size_t index);
  static Term apply(std::string op, std::vector<Term> children);
  static Term act(std::size_t a_index, Term child);

  Kind kind() const { return node_->kind; }
  Flavor flavor() const { return node_->flavor; }
  bool is_concrete() const { return node_->flavor != Flavor::slotted; }
  bool is_slotted() const { return node_->flavor != Flavor::concrete; }

  // element/slot: leaf index; act: the A-element index.
  std::size_t index() const { return node_->index; }
  const std::string& op() const { return node_->op; }
  std::span<const Term> children() const { return node_->children; }
  const Term& child(std::size_t i) const { return node_->children.at(i); }

  std::size_t depth() const { return node_->depth; }
  // Largest slot index + 1; 0 for terms without slots.
  std::size_t slot_count() const { return node_->slot_count; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    Flavor flavor;
    std::size_t index = 0;
    std::string op;
    std::vector<Term> children;
    std::size_t depth = 1;
    std::size_t slot_count = 0;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Canonical form: no whitespace inside terms except one space after each
// comma. Element leaves print as M-labels, act heads as A-labels, slots as
// $k.
std::string print_term(const Term& term, const FiniteAlgebra& alg_m,
                       const FiniteAlgebra& alg_a);

}  // namespace uarep

#endif  // UAREP_TERM_HPP_
