#include "uarep/basis.hpp"

#include <algorithm>
#include <sstream>

#include "uarep/coordinates.hpp"
#include "uarep/error.hpp"

namespace uarep {

bool is_basis(const Representation& rep, std::span<const std::size_t> elements) {
  if (!is_generating(rep, elements)) return false;
  std::vector<std::size_t> reduced;
  for (std::size_t skip = 0; skip < elements.size(); ++skip) {
    reduced.clear();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (i != skip) reduced.push_back(elements[i]);
    }
    if (is_generating(rep, reduced)) return false;
  }
  return true;
}

Basis reduce_to_basis(const Representation& rep,
                      std::span<const std::size_t> elements) {
  if (!is_generating(rep, elements)) {
    throw_domain(ErrorKind::NotGenerating, "the given set does not generate");
  }
  std::vector<std::size_t> current(elements.begin(), elements.end());
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t skip = 0; skip < current.size(); ++skip) {
      std::vector<std::size_t> candidate;
      for (std::size_t i = 0; i < current.size(); ++i) {
        if (i != skip) candidate.push_back(current[i]);
      }
      if (is_generating(rep, candidate)) {
        current = std::move(candidate);
        removed = true;
        break;
      }
    }
  }
  return Basis{std::move(current)};
}

std::size_t BasisManifold::locate(const Basis& point) const {
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (orbit[i] == point) return i;
  }
  throw_domain(ErrorKind::NotInManifold, "basis is not in the manifold");
}

BasisManifold basis_manifold(const Representation& rep, const Basis& reference,
                             std::size_t budget) {
  if (!is_basis(rep, reference.elements)) {
    throw_domain(ErrorKind::NotBasis, "the reference set is not a basis");
  }
  BasisManifold manifold;
  manifold.reference = reference;
  manifold.group = enumerate_endomorphisms(rep, reference.elements, budget);
  for (const Morphism& r : manifold.group.autos) {
    manifold.orbit.push_back(active(rep, r, reference));
  }
  // Free action: two automorphisms agreeing on a basis coincide.
  for (std::size_t i = 0; i < manifold.orbit.size(); ++i) {
    for (std::size_t j = i + 1; j < manifold.orbit.size(); ++j) {
      if (manifold.orbit[i] == manifold.orbit[j]) {
        throw_domain(ErrorKind::InternalError, "active action is not free");
      }
    }
  }
  for (const Basis& point : manifold.orbit) {
    if (!is_basis(rep, point.elements)) {
      throw_domain(ErrorKind::InternalError,
                   "automorphism image of a basis is not a basis");
    }
  }
  return manifold;
}

Basis active(const Representation& rep, const Morphism& automorphism,
             const Basis& basis) {
  if (!automorphism.is_bijective() || !is_morphism(rep, automorphism).ok) {
    throw_domain(ErrorKind::NotAutomorphism,
                 "active transformation requires an automorphism");
  }
  Basis image;
  image.elements.reserve(basis.elements.size());
  for (std::size_t m : basis.elements) {
    image.elements.push_back(automorphism.table.at(m));
  }
  return image;
}

Basis passive(const BasisManifold& manifold, std::size_t auto_index,
              const Basis& point) {
  if (auto_index >= manifold.group.autos.size()) {
    throw_domain(ErrorKind::IndexOutOfRange, "automorphism index out of range");
  }
  const std::size_t holder = manifold.locate(point);
  // point = R . reference, result = (R . S) . reference.
  const std::size_t composed = manifold.group.compose_autos(holder, auto_index);
  return manifold.orbit.at(composed);
}

std::size_t passive_product(const BasisManifold& manifold, std::size_t t,
                            std::size_t s) {
  if (t >= manifold.group.autos.size() || s >= manifold.group.autos.size()) {
    throw_domain(ErrorKind::IndexOutOfRange, "automorphism index out of range");
  }
  // passive(t) . passive(s) sends R.X0 to (R.s.t).X0, so the product is the
  // one passive transformation by s.t.
  const std::size_t product = manifold.group.compose_autos(s, t);
  const Basis expected = passive(manifold, product, manifold.reference);
  const Basis actual =
      passive(manifold, t, passive(manifold, s, manifold.reference));
  if (!(expected == actual)) {
    throw_domain(ErrorKind::InternalError, "passive product mismatch");
  }
  return product;
}

Term coordinate_transform(const Representation& rep, const Basis& from,
                          const Basis& to, const Term& word, std::size_t budget) {
  if (word.slot_count() > from.elements.size()) {
    throw_domain(ErrorKind::SlotOutOfRange,
                 "word uses slots beyond the source basis");
  }
  if (!(from == to)) {
    // Both bases must lie in one manifold: some automorphism carries one
    // onto the other.
    MorphismSet group = enumerate_endomorphisms(rep, from.elements, budget);
    bool linked = false;
    for (const Morphism& r : group.autos) {
      if (active(rep, r, from) == to) {
        linked = true;
        break;
      }
    }
    if (!linked) {
      throw_domain(ErrorKind::NotInManifold,
                   "the two bases are not related by an automorphism");
    }
  }
  CoordinateSet coords = coordinate_set(rep, to.elements);
  std::vector<Term> images;
  images.reserve(from.elements.size());
  for (std::size_t m : from.elements) images.push_back(coords.at(m));
  return substitute(word, images);
}

std::string basis_text(const Representation& rep, const Basis& basis) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    if (i) out << ", ";
    out << rep.alg_m().label(basis.elements[i]);
  }
  out << ']';
  return out.str();
}

}  // namespace uarep
