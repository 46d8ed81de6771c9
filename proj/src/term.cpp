#include "uarep/term.hpp"

#include <algorithm>
#include <sstream>

#include "uarep/algebra.hpp"
#include "uarep/error.hpp"

namespace uarep {

namespace {

Term::Flavor merge_flavor(Term::Flavor a, Term::Flavor b) {
  if (a == Term::Flavor::neutral) return b;
  if (b == Term::Flavor::neutral) return a;
  if (a != b) {
    throw_domain(ErrorKind::MixedTerm,
                 "term mixes concrete element leaves with slot leaves");
  }
  return a;
}

}  // namespace

Term Term::element(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::element;
  node->flavor = Flavor::concrete;
  node->index = index;
  return Term(std::move(node));
}

Term Term::slot(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::slot;
  node->flavor = Flavor::slotted;
  node->index = index;
  node->slot_count = index + 1;
  return Term(std::move(node));
}

Term Term::apply(std::string op, std::vector<Term> children) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::apply;
  node->flavor = Flavor::neutral;
  node->op = std::move(op);
  for (const Term& child : children) {
    node->flavor = merge_flavor(node->flavor, child.flavor());
    node->depth = std::max(node->depth, child.depth() + 1);
    node->slot_count = std::max(node->slot_count, child.slot_count());
  }
  node->children = std::move(children);
  return Term(std::move(node));
}

Term Term::act(std::size_t a_index, Term child) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::act;
  node->flavor = child.flavor();
  node->index = a_index;
  node->depth = child.depth() + 1;
  node->slot_count = child.slot_count();
  node->children.push_back(std::move(child));
  return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::element:
    case Term::Kind::slot:
      return a.index() == b.index();
    case Term::Kind::act:
      return a.index() == b.index() && a.child(0) == b.child(0);
    case Term::Kind::apply: {
      if (a.op() != b.op()) return false;
      auto ac = a.children(), bc = b.children();
      if (ac.size() != bc.size()) return false;
      return std::equal(ac.begin(), ac.end(), bc.begin());
    }
  }
  return false;
}

namespace {

void print_rec(std::ostringstream& out, const Term& t, const FiniteAlgebra& m,
               const FiniteAlgebra& a) {
  switch (t.kind()) {
    case Term::Kind::element:
      out << m.label(t.index());
      break;
    case Term::Kind::slot:
      out << '$' << t.index();
      break;
    case Term::Kind::act:
      out << "act(" << a.label(t.index()) << ", ";
      print_rec(out, t.child(0), m, a);
      out << ')';
      break;
    case Term::Kind::apply: {
      out << t.op() << '(';
      bool first = true;
      for (const Term& child : t.children()) {
        if (!first) out << ", ";
        first = false;
        print_rec(out, child, m, a);
      }
      out << ')';
      break;
    }
  }
}

}  // namespace

std::string print_term(const Term& term, const FiniteAlgebra& alg_m,
                       const FiniteAlgebra& alg_a) {
  std::ostringstream out;
  print_rec(out, term, alg_m, alg_a);
  return out.str();
}

}  // namespace uarep
