#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "uarep/basis.hpp"
#include "uarep/coordinates.hpp"
#include "uarep/error.hpp"

using namespace uarep;
using namespace uarep::tests;

namespace {

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("the order-six cyclic fixture has bases of both sizes") {
  const Representation& f = rep(cyc6());
  CHECK(is_basis(f, elems(f, {"a"})));
  CHECK(is_basis(f, elems(f, {"a2", "a3"})));
  CHECK_FALSE(is_basis(f, elems(f, {"a", "a2"})));
}

TEST_CASE("reduction drops the first removable element") {
  const Representation& f = rep(cyc6());
  Basis reduced = reduce_to_basis(f, elems(f, {"a", "a2", "a3"}));
  CHECK(reduced.elements == elems(f, {"a2", "a3"}));

  // Oracle: the result must be one of the inclusion-minimal generating sets.
  auto minimal = minimal_generating_sets(f);
  CHECK(std::find(minimal.begin(), minimal.end(), sorted(reduced.elements)) !=
        minimal.end());
}

TEST_CASE("a basis reduces to itself") {
  const Representation& f = rep(cyc6());
  CHECK(reduce_to_basis(f, elems(f, {"a2", "a3"})).elements ==
        elems(f, {"a2", "a3"}));
}

TEST_CASE("orbit reduction on the two-orbit fixture") {
  const Representation& g = rep(gset());
  Basis reduced = reduce_to_basis(g, elems(g, {"0", "1", "3"}));
  CHECK(reduced.elements == elems(g, {"1", "3"}));
  auto minimal = minimal_generating_sets(g);
  CHECK(std::find(minimal.begin(), minimal.end(), sorted(reduced.elements)) !=
        minimal.end());
}

TEST_CASE("reduction refuses non-generating input") {
  const Representation& f = rep(cyc6());
  CHECK_THROWS_AS(reduce_to_basis(f, elems(f, {"a2"})), Error);
}

TEST_CASE("the manifold of a one-element basis has two points") {
  const Representation& f = rep(cyc6());
  BasisManifold manifold = basis_manifold(f, Basis{elems(f, {"a"})});
  REQUIRE(manifold.orbit.size() == 2);
  CHECK(manifold.orbit[0].elements == elems(f, {"a"}));
  CHECK(manifold.orbit[1].elements == elems(f, {"a5"}));
}

TEST_CASE("the manifold of the two-element basis swaps one coordinate") {
  const Representation& f = rep(cyc6());
  BasisManifold manifold = basis_manifold(f, Basis{elems(f, {"a2", "a3"})});
  REQUIRE(manifold.orbit.size() == 2);
  CHECK(manifold.orbit[0].elements == elems(f, {"a2", "a3"}));
  CHECK(manifold.orbit[1].elements == elems(f, {"a4", "a3"}));
}

TEST_CASE("a trivial automorphism group gives a singleton manifold") {
  const Representation& t = triv();
  BasisManifold manifold = basis_manifold(t, Basis{elems(t, {"t"})});
  CHECK(manifold.group.autos.size() == 1);
  REQUIRE(manifold.orbit.size() == 1);
  CHECK(manifold.orbit[0].elements == elems(t, {"t"}));
}

TEST_CASE("active transformations act elementwise") {
  const Representation& f = rep(cyc6());
  BasisManifold manifold = basis_manifold(f, Basis{elems(f, {"a"})});
  const Morphism& id = manifold.group.autos[0];
  const Morphism& inv = manifold.group.autos[1];
  REQUIRE(inv.table[elem(f, "a")] == elem(f, "a5"));

  Basis y{elems(f, {"a"})};
  CHECK(active(f, id, y) == y);
  CHECK(active(f, inv, y).elements == elems(f, {"a5"}));
  CHECK(active(f, inv, Basis{elems(f, {"a2", "a3"})}).elements ==
        elems(f, {"a4", "a3"}));
}

TEST_CASE("active rejects non-automorphisms") {
  const Representation& f = rep(cyc6());
  Morphism collapse;
  collapse.table.assign(6, elem(f, "e"));
  CHECK_THROWS_AS(active(f, collapse, Basis{elems(f, {"a"})}), Error);
}

TEST_CASE("passive transformations against the stated examples") {
  const Representation& f = rep(cyc6());
  BasisManifold manifold = basis_manifold(f, Basis{elems(f, {"a"})});
  const std::size_t id = 0, inv = 1;
  REQUIRE(manifold.group.autos[id].is_identity());

  Basis y{elems(f, {"a"})};
  CHECK(passive(manifold, id, y) == y);
  CHECK(passive(manifold, inv, y).elements == elems(f, {"a5"}));

  // Commuting diagram: passive and active reach the same point.
  Basis y5{elems(f, {"a5"})};
  Basis via_passive = passive(manifold, inv, y5);
  Basis via_active =
      active(f, manifold.group.autos[inv], passive(manifold, inv, y));
  CHECK(via_passive.elements == elems(f, {"a"}));
  CHECK(via_passive == via_active);
}

TEST_CASE("passive requires a manifold point") {
  const Representation& f = rep(cyc6());
  BasisManifold manifold = basis_manifold(f, Basis{elems(f, {"a"})});
  CHECK_THROWS_AS(passive(manifold, 0, Basis{elems(f, {"a2", "a3"})}), Error);
}

TEST_CASE("passive products compose contravariantly") {
  const Representation& f = rep(cyc6());
  BasisManifold manifold = basis_manifold(f, Basis{elems(f, {"a"})});
  const std::size_t id = 0, inv = 1;
  CHECK(passive_product(manifold, inv, inv) == id);
  CHECK(passive_product(manifold, id, inv) == inv);
  CHECK(passive_product(manifold, inv, id) == inv);
}

TEST_CASE("passive product matches functional composition on the big group") {
  const Representation& g = rep(gset());
  BasisManifold manifold = basis_manifold(g, Basis{elems(g, {"0", "3"})});
  REQUIRE(manifold.group.autos.size() == 18);
  for (std::size_t t : {0u, 5u, 17u}) {
    for (std::size_t s : {1u, 9u, 16u}) {
      const std::size_t product = passive_product(manifold, t, s);
      for (const Basis& y : manifold.orbit) {
        CHECK(passive(manifold, product, y) ==
              passive(manifold, t, passive(manifold, s, y)));
      }
    }
  }
}

TEST_CASE("coordinate transforms preserve denotation") {
  const Representation& f = rep(cyc6());
  Basis y{elems(f, {"a"})};
  Basis yp{elems(f, {"a5"})};
  Term word = coordinate_transform(f, y, yp, Term::slot(0));
  CHECK(eval_term(word, f, yp.elements) == elem(f, "a"));

  // Unchanged when the bases coincide.
  Term same = coordinate_transform(f, y, y, Term::slot(0));
  CHECK(same == Term::slot(0));

  const Representation& g = rep(gset());
  Basis gy{elems(g, {"0", "3"})};
  Basis gyp{elems(g, {"1", "3"})};
  Term moved = coordinate_transform(g, gy, gyp, Term::act(a_elem(g, "g"), Term::slot(0)));
  CHECK(eval_term(moved, g, gyp.elements) ==
        eval_term(Term::act(a_elem(g, "g"), Term::slot(0)), g, gy.elements));
  CHECK(eval_term(moved, g, gyp.elements) == elem(g, "1"));
}

TEST_CASE("coordinate transforms require one manifold") {
  const Representation& f = rep(cyc6());
  CHECK_THROWS_AS(coordinate_transform(f, Basis{elems(f, {"a"})},
                                       Basis{elems(f, {"a2", "a3"})}, Term::slot(0)),
                  Error);
}

TEST_CASE("automorphism images of bases are bases") {
  for (const ModelFile* model : {&cyc6(), &vec2(), &gset()}) {
    const Representation& r = rep(*model);
    Basis base = reduce_to_basis(r, [&] {
      std::vector<std::size_t> all(r.m_size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      return all;
    }());
    BasisManifold manifold = basis_manifold(r, base);
    for (const Basis& point : manifold.orbit) {
      CHECK(is_basis(r, point.elements));
    }
  }
}

TEST_CASE("the active action is free and the passive action singly transitive") {
  const Representation& f = rep(cyc6());
  BasisManifold manifold = basis_manifold(f, Basis{elems(f, {"a"})});
  for (std::size_t i = 0; i < manifold.orbit.size(); ++i) {
    for (std::size_t j = i + 1; j < manifold.orbit.size(); ++j) {
      CHECK_FALSE(manifold.orbit[i] == manifold.orbit[j]);
    }
  }
  for (const Basis& y : manifold.orbit) {
    for (const Basis& yp : manifold.orbit) {
      std::size_t count = 0;
      for (std::size_t s = 0; s < manifold.group.autos.size(); ++s) {
        if (passive(manifold, s, y) == yp) ++count;
      }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("passive and active transformations commute") {
  const Representation& f = rep(cyc6());
  BasisManifold manifold = basis_manifold(f, Basis{elems(f, {"a2", "a3"})});
  for (std::size_t r = 0; r < manifold.group.autos.size(); ++r) {
    for (std::size_t s = 0; s < manifold.group.autos.size(); ++s) {
      for (const Basis& y : manifold.orbit) {
        CHECK(passive(manifold, s, active(f, manifold.group.autos[r], y)) ==
              active(f, manifold.group.autos[r], passive(manifold, s, y)));
      }
    }
  }
}

TEST_CASE("basis listings are deterministic") {
  const Representation& f = rep(cyc6());
  CHECK(basis_text(f, Basis{elems(f, {"a2", "a3"})}) == "[a2, a3]");
}
