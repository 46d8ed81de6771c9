#ifndef UAREP_REPRESENTATION_HPP_
#define UAREP_REPRESENTATION_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uarep/algebra.hpp"
#include "uarep/term.hpp"

namespace uarep {

// raw: the action table is accepted as-is.
// monoid: the Omega_1 algebra carries a binary operation mulSymbol and the
// action must satisfy f(mul(a1,a2)) = f(a1) . f(a2), each f(a) must be an
// endomorphism of M, and a declared unit must act as the identity. All of
// it is checked at construction.
enum class ActionMode { raw, monoid };

struct MonoidSpec {
  std::string mul_symbol;
  std::optional<std::string> unit_label;

  friend bool operator==(const MonoidSpec&, const MonoidSpec&) = default;
};

class Representation {
 public:
  Representation() = default;  // the empty representation

  static Representation make(std::string name, FiniteAlgebra alg_a,
                             FiniteAlgebra alg_m, std::vector<std::size_t> action,
                             ActionMode mode = ActionMode::raw,
                             std::optional<MonoidSpec> monoid = std::nullopt);

  const std::string& name() const { return name_; }
  const FiniteAlgebra& alg_a() const { return alg_a_; }
  const FiniteAlgebra& alg_m() const { return alg_m_; }
  std::size_t a_size() const { return alg_a_.size(); }
  std::size_t m_size() const { return alg_m_.size(); }
  ActionMode mode() const { return mode_; }
  const std::optional<MonoidSpec>& monoid() const { return monoid_; }
  const std::vector<std::size_t>& action_table() const { return action_; }

  std::size_t act(std::size_t a, std::size_t m) const;

  // Re-runs the construction checks; returns the first violated equation,
  // or nothing when the structure is sound.
  std::optional<std::string> first_violation() const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  std::string name_;
  FiniteAlgebra alg_a_;
  FiniteAlgebra alg_m_;
  std::vector<std::size_t> action_;  // |A| x |M| row-major
  ActionMode mode_ = ActionMode::raw;
  std::optional<MonoidSpec> monoid_;
};

// Structural recursion: slots index into X, element leaves stand for
// themselves, apply is a table lookup, act applies f(a).
std::size_t eval_term(const Term& term, const Representation& rep,
                      std::span<const std::size_t> generators = {});

struct SubRepresentation {
  Representation parent;
  std::vector<std::size_t> subset;  // sorted parent indices
  Representation restricted;
};

struct ClosureResult {
  // Sorted members of J(f, X).
  std::vector<std::size_t> closure;
  // Strictly increasing chain X_0 = X, X_1, ... up to the closure; each
  // entry sorted. Length 1 means X was already closed.
  std::vector<std::vector<std::size_t>> stages;
  // Per element: the stage index of first discovery, or npos outside the
  // closure.
  std::vector<std::size_t> stage_of;
  // Per element: a concrete witness word over X, present exactly on the
  // closure. First discovery in the deterministic worklist order fixes it.
  std::vector<std::optional<Term>> witness;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  bool contains(std::size_t element) const {
    return element < stage_of.size() && stage_of[element] != npos;
  }
};

bool is_stable(const Representation& rep, std::span<const std::size_t> subset);

// Throws NotSubalgebra / NotStable with the violating tuple or pair.
SubRepresentation restrict_to(const Representation& rep,
                              std::span<const std::size_t> subset);

// Least stable subalgebra containing X. Stage k+1 is produced from stage k
// by running all operations (signature order, argument tuples in
// lexicographic index order) and then all actions (a ascending, m
// ascending).
ClosureResult closure(const Representation& rep, std::span<const std::size_t> generators);

SubRepresentation meet(const SubRepresentation& s1, const SubRepresentation& s2);

bool is_generating(const Representation& rep, std::span<const std::size_t> subset);

// One line per closure element: "elem <label> stage <k> word <term>".
std::string closure_report(const Representation& rep, const ClosureResult& result);

}  // namespace uarep

#endif  // UAREP_REPRESENTATION_HPP_
