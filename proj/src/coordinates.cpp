#include "uarep/coordinates.hpp"

#include <string>

#include "uarep/error.hpp"

namespace uarep {

const Term& CoordinateSet::at(std::size_t element) const {
  if (element >= entries.size() || !entries[element]) {
    throw_domain(ErrorKind::IndexOutOfRange,
                 "no coordinate word for element " + std::to_string(element));
  }
  return *entries[element];
}

Term to_slotted(const Term& witness, std::span<const std::size_t> generators) {
  switch (witness.kind()) {
    case Term::Kind::element: {
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i] == witness.index()) return Term::slot(i);
      }
      throw_domain(ErrorKind::IndexOutOfRange,
                   "witness leaf is not a generator");
    }
    case Term::Kind::slot:
      throw_domain(ErrorKind::MixedTerm, "witness is already slotted");
    case Term::Kind::act:
      return Term::act(witness.index(), to_slotted(witness.child(0), generators));
    case Term::Kind::apply: {
      std::vector<Term> children;
      children.reserve(witness.children().size());
      for (const Term& child : witness.children()) {
        children.push_back(to_slotted(child, generators));
      }
      return Term::apply(witness.op(), std::move(children));
    }
  }
  throw_domain(ErrorKind::InternalError, "unreachable term kind");
}

namespace {

CoordinateSet coordinate_set_checked(const Representation& rep,
                                     std::span<const std::size_t> generators,
                                     const ClosureResult& closed) {
  if (closed.closure.size() != rep.m_size()) {
    throw_domain(ErrorKind::NotGenerating,
                 "the set generates only " + std::to_string(closed.closure.size()) +
                     " of " + std::to_string(rep.m_size()) + " elements");
  }
  CoordinateSet coords;
  coords.basis_size = generators.size();
  coords.entries.resize(rep.m_size());
  for (std::size_t m = 0; m < rep.m_size(); ++m) {
    coords.entries[m] = to_slotted(*closed.witness[m], generators);
  }
  return coords;
}

}  // namespace

Term coordinates_of(const Representation& rep,
                    std::span<const std::size_t> generators, std::size_t element) {
  ClosureResult closed = closure(rep, generators);
  if (closed.closure.size() != rep.m_size()) {
    throw_domain(ErrorKind::NotGenerating,
                 "the set generates only " + std::to_string(closed.closure.size()) +
                     " of " + std::to_string(rep.m_size()) + " elements");
  }
  if (element >= rep.m_size()) {
    throw_domain(ErrorKind::IndexOutOfRange, "element out of range");
  }
  return to_slotted(*closed.witness[element], generators);
}

CoordinateSet coordinate_set(const Representation& rep,
                             std::span<const std::size_t> generators) {
  return coordinate_set_checked(rep, generators, closure(rep, generators));
}

Term coord_op(const Signature& sig, std::string_view op, std::vector<Term> words) {
  auto index = sig.find(op);
  if (!index) {
    throw_domain(ErrorKind::UnknownSymbol,
                 "unknown operation '" + std::string(op) + "'");
  }
  if (sig.ops[*index].arity != words.size()) {
    throw_domain(ErrorKind::ArityMismatch,
                 "'" + std::string(op) + "' expects " +
                     std::to_string(sig.ops[*index].arity) + " arguments, got " +
                     std::to_string(words.size()));
  }
  return Term::apply(std::string(op), std::move(words));
}

Term coord_act(std::size_t a_index, Term word) {
  return Term::act(a_index, std::move(word));
}

Term substitute(const Term& word, std::span<const Term> images) {
  switch (word.kind()) {
    case Term::Kind::element:
      return word;
    case Term::Kind::slot:
      if (word.index() >= images.size()) {
        throw_domain(ErrorKind::SlotOutOfRange,
                     "slot $" + std::to_string(word.index()) + " has no image among " +
                         std::to_string(images.size()));
      }
      return images[word.index()];
    case Term::Kind::act:
      return Term::act(word.index(), substitute(word.child(0), images));
    case Term::Kind::apply: {
      std::vector<Term> children;
      children.reserve(word.children().size());
      for (const Term& child : word.children()) {
        children.push_back(substitute(child, images));
      }
      return Term::apply(word.op(), std::move(children));
    }
  }
  throw_domain(ErrorKind::InternalError, "unreachable term kind");
}

}  // namespace uarep
