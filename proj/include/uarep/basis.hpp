#ifndef UAREP_BASIS_HPP_
#define UAREP_BASIS_HPP_

#include <span>
#include <string>
#include <vector>

#include "uarep/morphism.hpp"
#include "uarep/representation.hpp"

namespace uarep {

// An ordered minimal generating set. Order is load-bearing: coordinates are
// slot-indexed, so two bases equal as sets but ordered differently are
// distinct manifold points.
struct Basis {
  std::vector<std::size_t> elements;

  friend bool operator==(const Basis&, const Basis&) = default;
};

// The orbit of a reference basis under G(f), in group enumeration order.
// The action is free, so orbit[i] is exactly the image under group.autos[i].
struct BasisManifold {
  Basis reference;
  MorphismSet group;
  std::vector<Basis> orbit;

  // Index of the unique automorphism with autos[i] . reference == point;
  // throws NotInManifold otherwise.
  std::size_t locate(const Basis& point) const;
};

bool is_basis(const Representation& rep, std::span<const std::size_t> elements);

// Scans the list front to back, repeatedly dropping the first element whose
// removal keeps the set generating, until nothing can be dropped.
Basis reduce_to_basis(const Representation& rep, std::span<const std::size_t> elements);

BasisManifold basis_manifold(const Representation& rep, const Basis& reference,
                             std::size_t budget = kDefaultEnumBudget);

// Elementwise image of the basis, order preserved.
Basis active(const Representation& rep, const Morphism& automorphism, const Basis& basis);

// The twin action: writes the point through the reference basis and
// composes there on the other side, so it commutes with every active
// transformation.
Basis passive(const BasisManifold& manifold, std::size_t auto_index, const Basis& point);

// The group element whose passive action is passive(t) . passive(s) on the
// whole orbit.
std::size_t passive_product(const BasisManifold& manifold, std::size_t t, std::size_t s);

// Rewrites a word over `from` into a word over `to` by substituting each
// slot i with the coordinates of from[i] relative to `to`. Evaluation over
// `to` equals evaluation of the original over `from`. Both bases must lie
// in one manifold.
Term coordinate_transform(const Representation& rep, const Basis& from, const Basis& to,
                          const Term& word, std::size_t budget = kDefaultEnumBudget);

std::string basis_text(const Representation& rep, const Basis& basis);

}  // namespace uarep

#endif  // UAREP_BASIS_HPP_
