#ifndef UAREP_MODEL_HPP_
#define UAREP_MODEL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "uarep/algebra.hpp"
#include "uarep/representation.hpp"
#include "uarep/term.hpp"

namespace uarep {

// A geometry block wires two representations of the same Omega_1 algebra
// into a context for geometric objects: reference bases for both basis
// manifolds and the group homomorphism h as an explicit table over
// automorphism enumeration indices.
struct GeometryDecl {
  std::string name;
  std::string rep_f;
  std::string rep_g;
  std::vector<std::size_t> basis_f;
  std::vector<std::size_t> basis_g;
  std::vector<std::size_t> h;  // h[i] = index in G(g) of the image of auto i of G(f)
};

struct ModelFile {
  std::vector<FiniteAlgebra> algebras;
  std::vector<Representation> representations;
  std::vector<GeometryDecl> geometries;

  const FiniteAlgebra* find_algebra(std::string_view name) const;
  const Representation* find_representation(std::string_view name) const;
  const GeometryDecl* find_geometry(std::string_view name) const;
};

// Parses the line-oriented model grammar ('#' comments, case-sensitive):
//
//   algebra <Name> {
//     elements: <id> (, <id>)* ;
//     op <id>/<arity> { (<id>(, <id>)*) = <id> ; ... }
//   }
//   representation <Name> {
//     omega1: <AlgName> ;
//     omega2: <AlgName> ;
//     mode: raw | monoid(<opId>(, <unitId>)?) ;   # optional, default raw
//     action { (<aId>, <mId>) = <mId> ; ... }
//   }
//   geometry <Name> {
//     repF: <RepName> ; repG: <RepName> ;
//     basisF: <id> (, <id>)* ; basisG: <id> (, <id>)* ;
//     h { <nat> = <nat> ; ... }
//   }
//
// Every table must be total and every referenced name declared; diagnostics
// carry line:column.
ModelFile parse_model(std::string_view text);

// Canonical form: blocks grouped by kind in declaration order, table rows
// in lexicographic order. print_model(parse_model(s)) reparses to the same
// model and reprints byte-identically.
std::string print_model(const ModelFile& model);

// Prefix term grammar: term := elemId | $<nat> | opId '(' term (, term)* ')'
//                            | 'act' '(' aId ',' term ')'
// Concrete terms resolve leaves in the carrier of M; slotted terms accept
// only $-slots below slot_count.
Term parse_concrete_term(std::string_view text, const FiniteAlgebra& alg_m,
                         const FiniteAlgebra& alg_a);
Term parse_slotted_term(std::string_view text, const FiniteAlgebra& alg_m,
                        const FiniteAlgebra& alg_a, std::size_t slot_count);

}  // namespace uarep

#endif  // UAREP_MODEL_HPP_
