#ifndef UAREP_MORPHISM_HPP_
#define UAREP_MORPHISM_HPP_

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "uarep/representation.hpp"

namespace uarep {

// A total self-map of M, written as a dense table. A valid morphism of the
// representation commutes with every Omega_2 operation and with every f(a).
struct Morphism {
  std::vector<std::size_t> table;

  std::size_t operator()(std::size_t m) const { return table.at(m); }
  bool is_identity() const;
  bool is_bijective() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// outer . inner: first inner, then outer.
Morphism compose(const Morphism& outer, const Morphism& inner);
Morphism inverse(const Morphism& morphism);
Morphism identity_morphism(std::size_t size);

struct OpViolation {
  std::size_t op_index;
  std::vector<std::size_t> args;
};
struct ActViolation {
  std::size_t a;
  std::size_t m;
};

struct MorphismCheck {
  bool ok = true;
  std::variant<std::monostate, OpViolation, ActViolation> violation;
  std::string description;
};

// Checks the two invariant families; operations first (signature order,
// lexicographic tuples), then actions (a ascending, m ascending). The first
// failure is reported.
MorphismCheck is_morphism(const Representation& rep, const Morphism& candidate);

// The unique morphism sending X[i] to images[i], built by propagating the
// images along the closure stages. Every derivation encountered during
// propagation must agree with the image already assigned (Inconsistent
// names the element and both derivations); the finished table must pass
// is_morphism (NotMorphism otherwise).
Morphism extend_map(const Representation& rep, std::span<const std::size_t> generators,
                    std::span<const std::size_t> images);

struct MorphismSet {
  std::vector<Morphism> all;
  std::vector<Morphism> autos;  // the bijective members, in enumeration order

  std::optional<std::size_t> auto_index(const Morphism& candidate) const;
  // Index of autos[i] . autos[j] within autos.
  std::size_t compose_autos(std::size_t i, std::size_t j) const;
};

inline constexpr std::size_t kDefaultEnumBudget = 1000000;
inline constexpr std::size_t kDefaultSubsetBudget = std::size_t(1) << 20;

// All endomorphisms of the representation, found by extending every
// |M|^|X| image tuple of a generating set (lexicographic order over
// element indices). Each morphism appears exactly once.
MorphismSet enumerate_endomorphisms(const Representation& rep,
                                    std::span<const std::size_t> generators,
                                    std::size_t budget = kDefaultEnumBudget);

bool is_regular_on(const Representation& rep, const Morphism& morphism,
                   std::span<const std::size_t> generators);

// Exhaustive over every generating subset of M; desk scale only.
bool is_regular(const Representation& rep, const Morphism& morphism,
                std::size_t budget = kDefaultSubsetBudget);

// "map { m -> R(m); ... }" in carrier order.
std::string morphism_text(const Representation& rep, const Morphism& morphism);

}  // namespace uarep

#endif  // UAREP_MORPHISM_HPP_
