#include "uarep/representation.hpp"

#include <algorithm>
#include <sstream>

#include "uarep/error.hpp"

namespace uarep {

namespace {

std::string tuple_text(const FiniteAlgebra& alg, std::span<const std::size_t> args) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out << ", ";
    out << alg.label(args[i]);
  }
  out << ')';
  return out.str();
}

}  // namespace

Representation Representation::make(std::string name, FiniteAlgebra alg_a,
                                    FiniteAlgebra alg_m,
                                    std::vector<std::size_t> action, ActionMode mode,
                                    std::optional<MonoidSpec> monoid) {
  if (action.size() != alg_a.size() * alg_m.size()) {
    throw_domain(ErrorKind::InternalError,
                 "action table must have |A| x |M| = " +
                     std::to_string(alg_a.size() * alg_m.size()) + " entries, got " +
                     std::to_string(action.size()));
  }
  for (std::size_t value : action) {
    if (value >= alg_m.size()) {
      throw_domain(ErrorKind::IndexOutOfRange, "action maps outside the carrier of M");
    }
  }
  if (mode == ActionMode::monoid && !monoid) {
    throw_domain(ErrorKind::InternalError, "monoid mode requires a monoid spec");
  }

  Representation rep;
  rep.name_ = std::move(name);
  rep.alg_a_ = std::move(alg_a);
  rep.alg_m_ = std::move(alg_m);
  rep.action_ = std::move(action);
  rep.mode_ = mode;
  rep.monoid_ = std::move(monoid);

  if (mode == ActionMode::monoid) {
    if (auto violation = rep.first_violation()) {
      throw_domain(ErrorKind::NotMorphism, *violation);
    }
  }
  return rep;
}

std::size_t Representation::act(std::size_t a, std::size_t m) const {
  if (a >= a_size() || m >= m_size()) {
    throw_domain(ErrorKind::IndexOutOfRange, "action argument out of range");
  }
  return action_[a * m_size() + m];
}

std::optional<std::string> Representation::first_violation() const {
  if (mode_ != ActionMode::monoid) return std::nullopt;

  const auto& sig_a = alg_a_.signature();
  auto mul = sig_a.find(monoid_->mul_symbol);
  if (!mul || sig_a.ops[*mul].arity != 2) {
    return "omega1 operation '" + monoid_->mul_symbol + "' must exist with arity 2";
  }

  // Each f(a) is an endomorphism of M.
  const auto& sig_m = alg_m_.signature();
  for (std::size_t a = 0; a < a_size() && m_size() > 0; ++a) {
    for (std::size_t op = 0; op < sig_m.ops.size(); ++op) {
      const std::size_t arity = sig_m.ops[op].arity;
      std::vector<std::size_t> args(arity, 0), mapped(arity, 0);
      do {
        for (std::size_t i = 0; i < arity; ++i) mapped[i] = act(a, args[i]);
        const std::size_t lhs = act(a, alg_m_.apply(op, args));
        const std::size_t rhs = alg_m_.apply(op, mapped);
        if (lhs != rhs) {
          std::ostringstream out;
          out << "f(" << alg_a_.label(a) << ") is not an endomorphism of "
              << alg_m_.name() << ": f(" << alg_a_.label(a) << ")("
              << sig_m.ops[op].symbol << tuple_text(alg_m_, args) << ") = "
              << alg_m_.label(lhs) << " but " << sig_m.ops[op].symbol
              << tuple_text(alg_m_, mapped) << " = " << alg_m_.label(rhs);
          return out.str();
        }
      } while (next_tuple(args, m_size()));
    }
  }

  // f(mul(a1, a2)) = f(a1) . f(a2) pointwise.
  for (std::size_t a1 = 0; a1 < a_size(); ++a1) {
    for (std::size_t a2 = 0; a2 < a_size(); ++a2) {
      const std::size_t args[] = {a1, a2};
      const std::size_t prod = alg_a_.apply(*mul, args);
      for (std::size_t m = 0; m < m_size(); ++m) {
        const std::size_t lhs = act(prod, m);
        const std::size_t rhs = act(a1, act(a2, m));
        if (lhs != rhs) {
          std::ostringstream out;
          out << "f(" << monoid_->mul_symbol << "(" << alg_a_.label(a1) << ", "
              << alg_a_.label(a2) << "))(" << alg_m_.label(m) << ") = "
              << alg_m_.label(lhs) << " but f(" << alg_a_.label(a1) << ")(f("
              << alg_a_.label(a2) << ")(" << alg_m_.label(m) << ")) = "
              << alg_m_.label(rhs);
          return out.str();
        }
      }
    }
  }

  if (monoid_->unit_label) {
    auto unit = alg_a_.element(*monoid_->unit_label);
    if (!unit) {
      return "unit '" + *monoid_->unit_label + "' is not an element of " +
             alg_a_.name();
    }
    for (std::size_t m = 0; m < m_size(); ++m) {
      if (act(*unit, m) != m) {
        std::ostringstream out;
        out << "f(" << *monoid_->unit_label << ")(" << alg_m_.label(m) << ") = "
            << alg_m_.label(act(*unit, m)) << ", expected the identity";
        return out.str();
      }
    }
  }
  return std::nullopt;
}

std::size_t eval_term(const Term& term, const Representation& rep,
                      std::span<const std::size_t> generators) {
  switch (term.kind()) {
    case Term::Kind::element:
      if (term.index() >= rep.m_size()) {
        throw_domain(ErrorKind::IndexOutOfRange, "element leaf outside the carrier");
      }
      return term.index();
    case Term::Kind::slot:
      if (term.index() >= generators.size()) {
        throw_domain(ErrorKind::SlotOutOfRange,
                     "slot $" + std::to_string(term.index()) +
                         " outside the generating set of size " +
                         std::to_string(generators.size()));
      }
      return generators[term.index()];
    case Term::Kind::act:
      return rep.act(term.index(), eval_term(term.child(0), rep, generators));
    case Term::Kind::apply: {
      auto op = rep.alg_m().signature().find(term.op());
      if (!op) {
        throw_domain(ErrorKind::UnknownSymbol,
                     "unknown operation '" + term.op() + "' in " + rep.alg_m().name());
      }
      std::vector<std::size_t> args;
      args.reserve(term.children().size());
      for (const Term& child : term.children()) {
        args.push_back(eval_term(child, rep, generators));
      }
      return rep.alg_m().apply(*op, args);
    }
  }
  throw_domain(ErrorKind::InternalError, "unreachable term kind");
}

bool is_stable(const Representation& rep, std::span<const std::size_t> subset) {
  std::vector<bool> in(rep.m_size(), false);
  for (std::size_t m : subset) {
    if (m >= rep.m_size()) {
      throw_domain(ErrorKind::IndexOutOfRange, "subset element out of range");
    }
    in[m] = true;
  }
  for (std::size_t a = 0; a < rep.a_size(); ++a) {
    for (std::size_t m : subset) {
      if (!in[rep.act(a, m)]) return false;
    }
  }
  return true;
}

SubRepresentation restrict_to(const Representation& rep,
                              std::span<const std::size_t> subset) {
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::size_t> local(rep.m_size(), ClosureResult::npos);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= rep.m_size()) {
      throw_domain(ErrorKind::IndexOutOfRange, "subset element out of range");
    }
    local[sorted[i]] = i;
  }

  const FiniteAlgebra& m = rep.alg_m();
  const auto& ops = m.signature().ops;

  // Subalgebra check, then restricted tables over local indices.
  std::vector<std::vector<std::size_t>> tables(ops.size());
  for (std::size_t op = 0; op < ops.size(); ++op) {
    const std::size_t arity = ops[op].arity;
    tables[op].reserve(table_cells(sorted.size(), arity));
    std::vector<std::size_t> pos(arity, 0), args(arity, 0);
    if (sorted.empty() && arity > 0) continue;
    do {
      for (std::size_t i = 0; i < arity; ++i) args[i] = sorted[pos[i]];
      const std::size_t value = m.apply(op, args);
      if (local[value] == ClosureResult::npos) {
        throw_domain(ErrorKind::NotSubalgebra,
                     "subset is not closed under '" + ops[op].symbol + "': " +
                         ops[op].symbol + tuple_text(m, args) + " = " +
                         m.label(value));
      }
      tables[op].push_back(local[value]);
    } while (next_tuple(pos, sorted.size()));
  }

  // Stability check and restricted action.
  std::vector<std::size_t> action;
  action.reserve(rep.a_size() * sorted.size());
  for (std::size_t a = 0; a < rep.a_size(); ++a) {
    for (std::size_t mm : sorted) {
      const std::size_t value = rep.act(a, mm);
      if (local[value] == ClosureResult::npos) {
        throw_domain(ErrorKind::NotStable,
                     "subset is not stable: f(" + rep.alg_a().label(a) + ")(" +
                         m.label(mm) + ") = " + m.label(value));
      }
      action.push_back(local[value]);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (std::size_t mm : sorted) labels.push_back(m.label(mm));

  FiniteAlgebra restricted_m = FiniteAlgebra::make(
      m.name(), m.signature(), std::move(labels), std::move(tables));
  Representation restricted =
      Representation::make(rep.name(), rep.alg_a(), std::move(restricted_m),
                           std::move(action), rep.mode(), rep.monoid());
  return SubRepresentation{rep, std::move(sorted), std::move(restricted)};
}

ClosureResult closure(const Representation& rep,
                      std::span<const std::size_t> generators) {
  const std::size_t n = rep.m_size();
  const std::size_t depth_cap = n * (1 + rep.a_size());

  ClosureResult result;
  result.stage_of.assign(n, ClosureResult::npos);
  result.witness.assign(n, std::nullopt);

  std::vector<std::size_t> members;  // sorted, cumulative
  for (std::size_t x : generators) {
    if (x >= n) {
      throw_domain(ErrorKind::IndexOutOfRange, "generator out of range");
    }
    if (result.stage_of[x] == ClosureResult::npos) {
      result.stage_of[x] = 0;
      result.witness[x] = Term::element(x);
      members.push_back(x);
    }
  }
  std::sort(members.begin(), members.end());
  result.stages.push_back(members);

  auto discover = [&](std::size_t value, Term term, std::size_t stage,
                      std::vector<std::size_t>& fresh) {
    if (result.stage_of[value] != ClosureResult::npos) return;
    if (term.depth() > depth_cap) {
      throw_domain(ErrorKind::InternalError, "witness depth exceeds the carrier bound");
    }
    result.stage_of[value] = stage;
    result.witness[value] = std::move(term);
    fresh.push_back(value);
  };

  const auto& ops = rep.alg_m().signature().ops;
  for (std::size_t stage = 1;; ++stage) {
    std::vector<std::size_t> fresh;

    for (std::size_t op = 0; op < ops.size(); ++op) {
      const std::size_t arity = ops[op].arity;
      if (members.empty() && arity > 0) continue;
      std::vector<std::size_t> pos(arity, 0), args(arity, 0);
      do {
        std::vector<Term> parts;
        parts.reserve(arity);
        for (std::size_t i = 0; i < arity; ++i) {
          args[i] = members[pos[i]];
          parts.push_back(*result.witness[args[i]]);
        }
        const std::size_t value = rep.alg_m().apply(op, args);
        discover(value, Term::apply(ops[op].symbol, std::move(parts)), stage, fresh);
      } while (next_tuple(pos, members.size()));
    }

    for (std::size_t a = 0; a < rep.a_size(); ++a) {
      for (std::size_t m : members) {
        discover(rep.act(a, m), Term::act(a, *result.witness[m]), stage, fresh);
      }
    }

    if (fresh.empty()) break;
    members.insert(members.end(), fresh.begin(), fresh.end());
    std::sort(members.begin(), members.end());
    result.stages.push_back(members);
  }

  result.closure = std::move(members);
  return result;
}

SubRepresentation meet(const SubRepresentation& s1, const SubRepresentation& s2) {
  if (!(s1.parent == s2.parent)) {
    throw_domain(ErrorKind::DifferentParents,
                 "meet requires subrepresentations of the same parent");
  }
  std::vector<std::size_t> common;
  std::set_intersection(s1.subset.begin(), s1.subset.end(), s2.subset.begin(),
                        s2.subset.end(), std::back_inserter(common));
  return restrict_to(s1.parent, common);
}

bool is_generating(const Representation& rep, std::span<const std::size_t> subset) {
  return closure(rep, subset).closure.size() == rep.m_size();
}

std::string closure_report(const Representation& rep, const ClosureResult& result) {
  std::ostringstream out;
  for (std::size_t m : result.closure) {
    out << "elem " << rep.alg_m().label(m) << " stage " << result.stage_of[m]
        << " word " << print_term(*result.witness[m], rep.alg_m(), rep.alg_a())
        << '\n';
  }
  return out.str();
}

}  // namespace uarep
