#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "uarep/error.hpp"

using namespace uarep;
using namespace uarep::tests;

namespace {

bool subset_of(std::span<const std::size_t> small, std::span<const std::size_t> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<std::size_t> full_carrier(const Representation& r) {
  std::vector<std::size_t> all(r.m_size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

}  // namespace

TEST_CASE("is_stable on orbits and the full carrier") {
  const Representation& g = rep(gset());
  CHECK(is_stable(g, elems(g, {"0", "1", "2"})));
  CHECK(action_orbit(g, 0) == elems(g, {"0", "1", "2"}));

  CHECK(is_stable(g, full_carrier(g)));

  CHECK_FALSE(is_stable(g, elems(g, {"0"})));
  CHECK(g.act(a_elem(g, "g"), 0) == 1);
}

TEST_CASE("restrict accepts stable subalgebras") {
  const Representation& g = rep(gset());
  SubRepresentation sub = restrict_to(g, elems(g, {"0", "1", "2"}));
  CHECK(sub.restricted.m_size() == 3);
  CHECK(sub.subset == elems(g, {"0", "1", "2"}));

  const Representation& f = rep(cyc6());
  SubRepresentation whole = restrict_to(f, full_carrier(f));
  CHECK(whole.restricted == f);
}

TEST_CASE("restrict reports the violating tuple") {
  const Representation& f = rep(cyc6());
  try {
    restrict_to(f, elems(f, {"e", "a2"}));
    FAIL("expected NotSubalgebra");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSubalgebra);
    CHECK(doctest::Contains("mul(a2, a2) = a4").checkWith(e.what()));
  }
}

TEST_CASE("restrict reports the violating action pair") {
  const Representation& g = rep(gset());
  // {0, 1, 2, 3} is vacuously a subalgebra but not stable: g moves 3 to 4.
  try {
    restrict_to(g, elems(g, {"0", "1", "2", "3"}));
    FAIL("expected NotStable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStable);
    CHECK(doctest::Contains("f(g)(3) = 4").checkWith(e.what()));
  }
}

TEST_CASE("closure of a cyclic generator reaches the whole group") {
  const Representation& f = rep(cyc6());
  ClosureResult result = closure(f, elems(f, {"a"}));
  CHECK(result.closure.size() == 6);
  CHECK(result.closure == naive_closure(f, elems(f, {"a"})));
  CHECK(result.stages.size() == 4);
  CHECK(result.stage_of[elem(f, "a")] == 0);
  CHECK(result.stage_of[elem(f, "a2")] == 1);
}

TEST_CASE("closure of the full carrier stabilizes immediately") {
  const Representation& f = rep(cyc6());
  ClosureResult result = closure(f, full_carrier(f));
  CHECK(result.closure == full_carrier(f));
  CHECK(result.stages.size() == 1);
}

TEST_CASE("closure under the action alone is the orbit") {
  const Representation& g = rep(gset());
  ClosureResult result = closure(g, elems(g, {"0"}));
  CHECK(result.closure == elems(g, {"0", "1", "2"}));
  CHECK(result.closure == action_orbit(g, 0));
}

TEST_CASE("closure of the empty set is empty without constants") {
  const Representation& f = rep(cyc6());
  ClosureResult result = closure(f, {});
  CHECK(result.closure.empty());
  CHECK(result.stages.size() == 1);
}

TEST_CASE("meet of disjoint orbits is the empty subrepresentation") {
  const Representation& g = rep(gset());
  SubRepresentation left = restrict_to(g, elems(g, {"0", "1", "2"}));
  SubRepresentation right = restrict_to(g, elems(g, {"3", "4", "5"}));
  SubRepresentation both = meet(left, right);
  CHECK(both.subset.empty());
  CHECK(both.restricted.m_size() == 0);
}

TEST_CASE("meet with the full subrepresentation is the identity") {
  const Representation& f = rep(cyc6());
  SubRepresentation k = restrict_to(f, elems(f, {"e", "a2", "a4"}));
  SubRepresentation top = restrict_to(f, full_carrier(f));
  CHECK(meet(k, top).subset == k.subset);
}

TEST_CASE("meet of subgroups intersects them") {
  const Representation& f = rep(cyc6());
  SubRepresentation left = restrict_to(f, elems(f, {"e", "a2", "a4"}));
  SubRepresentation right = restrict_to(f, elems(f, {"e", "a3"}));
  CHECK(meet(left, right).subset == elems(f, {"e"}));
}

TEST_CASE("meet rejects different parents") {
  const Representation& f = rep(cyc6());
  const Representation& g = rep(gset());
  SubRepresentation a = restrict_to(f, elems(f, {"e"}));
  SubRepresentation b = restrict_to(g, elems(g, {"0", "1", "2"}));
  CHECK_THROWS_AS(meet(a, b), Error);
}

TEST_CASE("is_generating matches the stated examples") {
  const Representation& f = rep(cyc6());
  CHECK(is_generating(f, elems(f, {"a2", "a3"})));
  CHECK(is_generating(f, full_carrier(f)));
  CHECK_FALSE(is_generating(f, elems(f, {"a2"})));
  CHECK(closure(f, elems(f, {"a2"})).closure == elems(f, {"e", "a2", "a4"}));
}

TEST_CASE("closure operator laws hold on random subsets") {
  std::mt19937 rng(7);
  for (const ModelFile* model : {&cyc6(), &vec2(), &gset()}) {
    const Representation& r = rep(*model);
    for (int i = 0; i < 60; ++i) {
      auto x = random_subset(rng, r.m_size());
      ClosureResult jx = closure(r, x);
      std::vector<std::size_t> x_sorted = x;
      std::sort(x_sorted.begin(), x_sorted.end());
      // extensive
      CHECK(subset_of(x_sorted, jx.closure));
      // idempotent
      CHECK(closure(r, jx.closure).closure == jx.closure);
      // monotone against a superset
      auto y = x;
      for (std::size_t m : random_subset(rng, r.m_size())) y.push_back(m);
      CHECK(subset_of(jx.closure, closure(r, y).closure));
      // agreement with the order-free oracle
      CHECK(jx.closure == naive_closure(r, x));
    }
  }
}

TEST_CASE("witnesses evaluate back to their elements") {
  std::mt19937 rng(11);
  for (const ModelFile* model : {&cyc6(), &vec2(), &gset()}) {
    const Representation& r = rep(*model);
    for (int i = 0; i < 40; ++i) {
      auto x = random_subset(rng, r.m_size());
      ClosureResult jx = closure(r, x);
      for (std::size_t m : jx.closure) {
        CHECK(eval_term(*jx.witness[m], r, x) == m);
      }
    }
  }
}

TEST_CASE("the closure always restricts cleanly") {
  std::mt19937 rng(13);
  for (const ModelFile* model : {&cyc6(), &vec2(), &gset()}) {
    const Representation& r = rep(*model);
    for (int i = 0; i < 40; ++i) {
      auto x = random_subset(rng, r.m_size());
      ClosureResult jx = closure(r, x);
      CHECK_NOTHROW(restrict_to(r, jx.closure));
    }
  }
}

TEST_CASE("meet is idempotent, commutative, associative on valid subrepresentations") {
  for (const ModelFile* model : {&cyc6(), &vec2(), &gset()}) {
    const Representation& f = rep(*model);
    std::vector<SubRepresentation> subs;
    for (std::size_t mask = 0; mask < (std::size_t(1) << f.m_size()); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t m = 0; m < f.m_size(); ++m) {
        if (mask & (std::size_t(1) << m)) subset.push_back(m);
      }
      try {
        subs.push_back(restrict_to(f, subset));
      } catch (const Error&) {
      }
    }
    REQUIRE(subs.size() >= 3);
    for (const auto& a : subs) {
      CHECK(meet(a, a).subset == a.subset);
      for (const auto& b : subs) {
        CHECK(meet(a, b).subset == meet(b, a).subset);
        for (const auto& c : subs) {
          CHECK(meet(meet(a, b), c).subset == meet(a, meet(b, c)).subset);
        }
      }
    }
  }
}

TEST_CASE("generating sets stay generating under extension") {
  std::mt19937 rng(17);
  for (const ModelFile* model : {&cyc6(), &vec2(), &gset()}) {
    const Representation& r = rep(*model);
    for (int i = 0; i < 60; ++i) {
      auto x = random_subset(rng, r.m_size());
      if (!is_generating(r, x)) continue;
      auto y = x;
      for (std::size_t m : random_subset(rng, r.m_size())) y.push_back(m);
      CHECK(is_generating(r, y));
    }
  }
}

TEST_CASE("stage chains strictly increase up to the closure") {
  std::mt19937 rng(19);
  for (const ModelFile* model : {&cyc6(), &vec2(), &gset()}) {
    const Representation& r = rep(*model);
    for (int i = 0; i < 40; ++i) {
      auto x = random_subset(rng, r.m_size());
      ClosureResult jx = closure(r, x);
      REQUIRE(!jx.stages.empty());
      std::vector<std::size_t> x_sorted = x;
      std::sort(x_sorted.begin(), x_sorted.end());
      CHECK(jx.stages.front() == x_sorted);
      CHECK(jx.stages.back() == jx.closure);
      for (std::size_t k = 1; k < jx.stages.size(); ++k) {
        CHECK(jx.stages[k].size() > jx.stages[k - 1].size());
        CHECK(std::includes(jx.stages[k].begin(), jx.stages[k].end(),
                            jx.stages[k - 1].begin(), jx.stages[k - 1].end()));
      }
      for (std::size_t m : jx.closure) {
        CHECK(jx.stage_of[m] < jx.stages.size());
        const auto& first = jx.stages[jx.stage_of[m]];
        CHECK(std::binary_search(first.begin(), first.end(), m));
        if (jx.stage_of[m] > 0) {
          const auto& before = jx.stages[jx.stage_of[m] - 1];
          CHECK_FALSE(std::binary_search(before.begin(), before.end(), m));
        }
      }
    }
  }
}

TEST_CASE("closure report lists one line per element") {
  const Representation& g = rep(gset());
  ClosureResult result = closure(g, elems(g, {"0", "3"}));
  CHECK(closure_report(g, result) ==
        "elem 0 stage 0 word 0\n"
        "elem 1 stage 1 word act(g, 0)\n"
        "elem 2 stage 1 word act(g2, 0)\n"
        "elem 3 stage 0 word 3\n"
        "elem 4 stage 1 word act(g, 3)\n"
        "elem 5 stage 1 word act(g2, 3)\n");
}

TEST_CASE("monoid mode validates the action at construction") {
  // Break compositionality while keeping totality: f(g)(0) = 0.
  const Representation& g = rep(gset());
  std::vector<std::size_t> action = g.action_table();
  action[1 * g.m_size() + 0] = 0;
  CHECK_THROWS_AS(Representation::make("bad", g.alg_a(), g.alg_m(), action,
                                       ActionMode::monoid, g.monoid()),
                  Error);
  // raw mode accepts the same table.
  CHECK_NOTHROW(Representation::make("raw", g.alg_a(), g.alg_m(), action));
}
