#ifndef UAREP_GEOMETRY_HPP_
#define UAREP_GEOMETRY_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "uarep/basis.hpp"
#include "uarep/model.hpp"

namespace uarep {

// Two representations of one Omega_1 algebra whose automorphism groups are
// linked by a homomorphism h: G(f) -> G(g), with a basis manifold on each
// side. Geometric objects live in N and are swept by passive
// transformations through h.
struct GeomContext {
  std::string name;
  Representation rep_f;
  Representation rep_g;
  BasisManifold manifold_f;
  BasisManifold manifold_g;
  std::vector<std::size_t> h;  // by G(f) auto index, into G(g) auto indices

  std::size_t h_image(std::size_t f_auto) const;
};

using GeomContextPtr = std::shared_ptr<const GeomContext>;

// Builds the manifolds from the given reference bases and checks that h is
// a group homomorphism (h(S.T) = h(S).h(T), h(id) = id) exhaustively.
GeomContextPtr make_geom_context(std::string name, Representation rep_f,
                                 Representation rep_g, Basis basis_f, Basis basis_g,
                                 std::vector<std::size_t> h,
                                 std::size_t budget = kDefaultEnumBudget);

GeomContextPtr make_geom_context(const ModelFile& model, const GeometryDecl& decl,
                                 std::size_t budget = kDefaultEnumBudget);

struct GeometricObject {
  GeomContextPtr context;
  Basis seed_basis;
  Term seed_word;
  // Pairs (manifold_g orbit index, coordinate word at that basis), ordered
  // by orbit index.
  std::vector<std::pair<std::size_t, Term>> orbit;

  const Term& word_at(std::size_t orbit_index) const;
};

// Sweeps the seed pair with every passive transformation reachable through
// h and collects the (basis, word) orbit.
GeometricObject geom_orbit(const GeomContextPtr& context, const Basis& basis_g,
                           const Term& word);

// Evaluates the object's word at the basis selected by the pair
// (basis_f, basis_g); the invariance principle makes the result independent
// of that choice, which is re-checked on every call.
std::size_t representative(const GeometricObject& object, const Basis& basis_f,
                           const Basis& basis_g);

// Representative at the reference bases.
std::size_t representative(const GeometricObject& object);

// Omega_3 structure on geometric objects: per-basis coord_op combination
// with a well-definedness check against a fresh orbit of the combined seed.
GeometricObject geom_op(std::string_view op, const std::vector<GeometricObject>& objects);

GeometricObject geom_act(std::size_t a_index, const GeometricObject& object);

// "geom type=H seed=(basis, word) orbit_size=k representative=<label>".
std::string geom_text(const GeometricObject& object);

}  // namespace uarep

#endif  // UAREP_GEOMETRY_HPP_
