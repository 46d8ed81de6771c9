#include "uarep/morphism.hpp"

#include <algorithm>
#include <sstream>

#include "uarep/error.hpp"

namespace uarep {

bool Morphism::is_identity() const {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] != i) return false;
  }
  return true;
}

bool Morphism::is_bijective() const {
  std::vector<bool> hit(table.size(), false);
  for (std::size_t value : table) {
    if (value >= table.size() || hit[value]) return false;
    hit[value] = true;
  }
  return true;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  Morphism result;
  result.table.reserve(inner.table.size());
  for (std::size_t value : inner.table) result.table.push_back(outer.table.at(value));
  return result;
}

Morphism inverse(const Morphism& morphism) {
  Morphism result;
  result.table.assign(morphism.table.size(), 0);
  for (std::size_t i = 0; i < morphism.table.size(); ++i) {
    result.table.at(morphism.table[i]) = i;
  }
  return result;
}

Morphism identity_morphism(std::size_t size) {
  Morphism result;
  result.table.resize(size);
  for (std::size_t i = 0; i < size; ++i) result.table[i] = i;
  return result;
}

MorphismCheck is_morphism(const Representation& rep, const Morphism& candidate) {
  MorphismCheck check;
  if (candidate.table.size() != rep.m_size()) {
    throw_domain(ErrorKind::InternalError, "morphism table size mismatch");
  }
  for (std::size_t value : candidate.table) {
    if (value >= rep.m_size()) {
      throw_domain(ErrorKind::IndexOutOfRange, "morphism maps outside the carrier");
    }
  }
  const FiniteAlgebra& m_alg = rep.alg_m();
  const auto& ops = m_alg.signature().ops;
  const std::size_t n = rep.m_size();

  for (std::size_t op = 0; op < ops.size() && n > 0; ++op) {
    const std::size_t arity = ops[op].arity;
    std::vector<std::size_t> args(arity, 0), mapped(arity, 0);
    do {
      for (std::size_t i = 0; i < arity; ++i) mapped[i] = candidate.table[args[i]];
      const std::size_t lhs = candidate.table[m_alg.apply(op, args)];
      const std::size_t rhs = m_alg.apply(op, mapped);
      if (lhs != rhs) {
        check.ok = false;
        check.violation = OpViolation{op, args};
        std::ostringstream out;
        out << "R(" << ops[op].symbol << "(";
        for (std::size_t i = 0; i < arity; ++i) {
          if (i) out << ", ";
          out << m_alg.label(args[i]);
        }
        out << ")) = " << m_alg.label(lhs) << " but " << ops[op].symbol << "(";
        for (std::size_t i = 0; i < arity; ++i) {
          if (i) out << ", ";
          out << m_alg.label(mapped[i]);
        }
        out << ") = " << m_alg.label(rhs);
        check.description = out.str();
        return check;
      }
    } while (next_tuple(args, n));
  }

  for (std::size_t a = 0; a < rep.a_size(); ++a) {
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t lhs = candidate.table[rep.act(a, m)];
      const std::size_t rhs = rep.act(a, candidate.table[m]);
      if (lhs != rhs) {
        check.ok = false;
        check.violation = ActViolation{a, m};
        std::ostringstream out;
        out << "R(f(" << rep.alg_a().label(a) << ")(" << m_alg.label(m) << ")) = "
            << m_alg.label(lhs) << " but f(" << rep.alg_a().label(a) << ")(R("
            << m_alg.label(m) << ")) = " << m_alg.label(rhs);
        check.description = out.str();
        return check;
      }
    }
  }
  return check;
}

namespace {

// Shared by extend_map and enumerate_endomorphisms so the closure is
// computed once per generating set.
Morphism extend_with_closure(const Representation& rep,
                             std::span<const std::size_t> generators,
                             std::span<const std::size_t> images,
                             const ClosureResult& closed) {
  const std::size_t n = rep.m_size();
  if (closed.closure.size() != n) {
    throw_domain(ErrorKind::NotGenerating,
                 "the set generates only " + std::to_string(closed.closure.size()) +
                     " of " + std::to_string(n) + " elements");
  }
  if (images.size() != generators.size()) {
    throw_domain(ErrorKind::InternalError, "one image per generator required");
  }

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(n, unset);
  std::size_t assigned = 0;

  auto record = [&](std::size_t element, std::size_t value, const Term& derivation) {
    if (value >= n) {
      throw_domain(ErrorKind::IndexOutOfRange, "image out of range");
    }
    if (image[element] == unset) {
      image[element] = value;
      ++assigned;
      return;
    }
    if (image[element] != value) {
      const FiniteAlgebra& m_alg = rep.alg_m();
      std::ostringstream out;
      out << "element " << m_alg.label(element) << " has image "
          << m_alg.label(image[element]) << " via "
          << print_term(*closed.witness[element], m_alg, rep.alg_a()) << " but image "
          << m_alg.label(value) << " via " << print_term(derivation, m_alg, rep.alg_a());
      throw_domain(ErrorKind::Inconsistent, out.str());
    }
  };

  std::vector<std::size_t> members(generators.begin(), generators.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    record(generators[i], images[i], Term::element(generators[i]));
  }

  const auto& ops = rep.alg_m().signature().ops;
  while (assigned < n) {
    std::vector<std::size_t> fresh;

    for (std::size_t op = 0; op < ops.size(); ++op) {
      const std::size_t arity = ops[op].arity;
      if (members.empty() && arity > 0) continue;
      std::vector<std::size_t> pos(arity, 0), args(arity, 0), mapped(arity, 0);
      do {
        std::vector<Term> parts;
        parts.reserve(arity);
        for (std::size_t i = 0; i < arity; ++i) {
          args[i] = members[pos[i]];
          mapped[i] = image[args[i]];
          parts.push_back(*closed.witness[args[i]]);
        }
        const std::size_t value = rep.alg_m().apply(op, args);
        const bool known = image[value] != unset;
        record(value, rep.alg_m().apply(op, mapped),
               Term::apply(ops[op].symbol, std::move(parts)));
        if (!known) fresh.push_back(value);
      } while (next_tuple(pos, members.size()));
    }

    for (std::size_t a = 0; a < rep.a_size(); ++a) {
      for (std::size_t m : members) {
        const std::size_t value = rep.act(a, m);
        const bool known = image[value] != unset;
        record(value, rep.act(a, image[m]), Term::act(a, *closed.witness[m]));
        if (!known) fresh.push_back(value);
      }
    }

    if (fresh.empty()) break;
    members.insert(members.end(), fresh.begin(), fresh.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  if (assigned < n) {
    throw_domain(ErrorKind::InternalError,
                 "propagation stalled on a generating set");
  }

  Morphism result{std::move(image)};
  MorphismCheck check = is_morphism(rep, result);
  if (!check.ok) {
    throw_domain(ErrorKind::NotMorphism, check.description);
  }
  return result;
}

}  // namespace

Morphism extend_map(const Representation& rep,
                    std::span<const std::size_t> generators,
                    std::span<const std::size_t> images) {
  return extend_with_closure(rep, generators, images, closure(rep, generators));
}

std::optional<std::size_t> MorphismSet::auto_index(const Morphism& candidate) const {
  for (std::size_t i = 0; i < autos.size(); ++i) {
    if (autos[i] == candidate) return i;
  }
  return std::nullopt;
}

std::size_t MorphismSet::compose_autos(std::size_t i, std::size_t j) const {
  auto index = auto_index(compose(autos.at(i), autos.at(j)));
  if (!index) {
    throw_domain(ErrorKind::InternalError, "automorphisms are not closed under composition");
  }
  return *index;
}

MorphismSet enumerate_endomorphisms(const Representation& rep,
                                    std::span<const std::size_t> generators,
                                    std::size_t budget) {
  const std::size_t n = rep.m_size();
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (n == 0) {
      tuples = 0;
      break;
    }
    if (tuples > budget / n) {
      tuples = budget + 1;
      break;
    }
    tuples *= n;
  }
  if (tuples > budget) {
    throw_domain(ErrorKind::BudgetExceeded,
                 "|M|^|X| image tuples exceed the budget of " + std::to_string(budget));
  }

  ClosureResult closed = closure(rep, generators);
  if (closed.closure.size() != n) {
    throw_domain(ErrorKind::NotGenerating,
                 "the set generates only " + std::to_string(closed.closure.size()) +
                     " of " + std::to_string(n) + " elements");
  }

  MorphismSet set;
  std::vector<std::size_t> images(generators.size(), 0);
  if (n > 0) {
    do {
      try {
        set.all.push_back(extend_with_closure(rep, generators, images, closed));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Inconsistent && e.kind() != ErrorKind::NotMorphism) {
          throw;
        }
      }
    } while (next_tuple(images, n));
  }

  for (const Morphism& morphism : set.all) {
    if (morphism.is_bijective()) set.autos.push_back(morphism);
  }

  // Self-checks: closure under composition, inverses of automorphisms.
  auto member = [&](const Morphism& candidate) {
    return std::find(set.all.begin(), set.all.end(), candidate) != set.all.end();
  };
  for (const Morphism& r : set.all) {
    for (const Morphism& s : set.all) {
      if (!member(compose(r, s))) {
        throw_domain(ErrorKind::InternalError,
                     "endomorphisms are not closed under composition");
      }
    }
  }
  for (const Morphism& r : set.autos) {
    if (!set.auto_index(inverse(r))) {
      throw_domain(ErrorKind::InternalError,
                   "automorphisms are not closed under inverse");
    }
  }
  return set;
}

bool is_regular_on(const Representation& rep, const Morphism& morphism,
                   std::span<const std::size_t> generators) {
  if (!is_generating(rep, generators)) {
    throw_domain(ErrorKind::NotGenerating, "the given set does not generate");
  }
  std::vector<std::size_t> image;
  image.reserve(generators.size());
  for (std::size_t x : generators) image.push_back(morphism.table.at(x));
  return is_generating(rep, image);
}

bool is_regular(const Representation& rep, const Morphism& morphism,
                std::size_t budget) {
  const std::size_t n = rep.m_size();
  if (n >= 64 || (std::size_t(1) << n) > budget) {
    throw_domain(ErrorKind::BudgetExceeded,
                 "2^|M| subsets exceed the budget of " + std::to_string(budget));
  }
  std::vector<std::size_t> subset, image;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    subset.clear();
    image.clear();
    for (std::size_t m = 0; m < n; ++m) {
      if (mask & (std::size_t(1) << m)) {
        subset.push_back(m);
        image.push_back(morphism.table[m]);
      }
    }
    if (!is_generating(rep, subset)) continue;
    if (!is_generating(rep, image)) return false;
  }
  return true;
}

std::string morphism_text(const Representation& rep, const Morphism& morphism) {
  std::ostringstream out;
  out << "map { ";
  for (std::size_t m = 0; m < rep.m_size(); ++m) {
    out << rep.alg_m().label(m) << " -> " << rep.alg_m().label(morphism.table[m]) << "; ";
  }
  out << "}";
  return out.str();
}

}  // namespace uarep
