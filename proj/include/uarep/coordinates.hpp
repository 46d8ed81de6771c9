#ifndef UAREP_COORDINATES_HPP_
#define UAREP_COORDINATES_HPP_

#include <optional>
#include <span>
#include <vector>

#include "uarep/representation.hpp"
#include "uarep/term.hpp"

namespace uarep {

// Coordinate words of the closure elements relative to an ordered
// generating set: the closure witnesses with concrete leaves replaced by
// slot indices.
struct CoordinateSet {
  std::size_t basis_size = 0;
  // Indexed by element of M; present exactly on the closure of the
  // generating set it was built from.
  std::vector<std::optional<Term>> entries;

  const Term& at(std::size_t element) const;
};

// Rewrites a concrete word whose leaves all lie in `generators` into the
// slotted form (leaf X[i] becomes $i; the first occurrence wins when an
// element repeats).
Term to_slotted(const Term& witness, std::span<const std::size_t> generators);

// The slotted witness word of one element relative to a generating set.
// Throws NotGenerating when closure(rep, generators) is not all of M.
Term coordinates_of(const Representation& rep, std::span<const std::size_t> generators,
                    std::size_t element);

// Slotted witnesses of every element of M relative to a generating set.
CoordinateSet coordinate_set(const Representation& rep,
                             std::span<const std::size_t> generators);

// The induced operation on coordinate words: plain tree construction, no
// evaluation.
Term coord_op(const Signature& sig, std::string_view op, std::vector<Term> words);

Term coord_act(std::size_t a_index, Term word);

// Superposition: every slot $i of `word` is replaced by images[i]. Purely
// syntactic; associativity holds as an AST identity.
Term substitute(const Term& word, std::span<const Term> images);

}  // namespace uarep

#endif  // UAREP_COORDINATES_HPP_
