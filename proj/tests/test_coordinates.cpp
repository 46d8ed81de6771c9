#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "uarep/basis.hpp"
#include "uarep/coordinates.hpp"
#include "uarep/error.hpp"
#include "uarep/morphism.hpp"

using namespace uarep;
using namespace uarep::tests;

namespace {

// Coordinate words of the images of the generators under a morphism; the
// second factor of a superposition.
std::vector<Term> images_of(const Representation& r, std::span<const std::size_t> x,
                            const Morphism& morphism) {
  CoordinateSet coords = coordinate_set(r, x);
  std::vector<Term> images;
  for (std::size_t m : x) images.push_back(coords.at(morphism.table[m]));
  return images;
}

std::vector<Term> identity_slots(std::size_t count) {
  std::vector<Term> slots;
  for (std::size_t i = 0; i < count; ++i) slots.push_back(Term::slot(i));
  return slots;
}

}  // namespace

TEST_CASE("coordinates_of picks the first-discovery witness") {
  const Representation& g = rep(gset());
  const auto x = elems(g, {"0", "3"});
  CHECK(coordinates_of(g, x, elem(g, "4")) == Term::act(a_elem(g, "g"), Term::slot(1)));
}

TEST_CASE("generators have slot coordinates") {
  const Representation& f = rep(cyc6());
  const auto x = elems(f, {"a2", "a3"});
  CHECK(coordinates_of(f, x, x[0]) == Term::slot(0));
  CHECK(coordinates_of(f, x, x[1]) == Term::slot(1));
}

TEST_CASE("coordinates evaluate back to the element") {
  const Representation& f = rep(cyc6());
  const auto x = elems(f, {"a2", "a3"});
  Term word = coordinates_of(f, x, elem(f, "e"));
  CHECK(eval_term(word, f, x) == elem(f, "e"));
  CHECK(naive_eval(word, f, x) == elem(f, "e"));
}

TEST_CASE("coordinates_of requires a generating set") {
  const Representation& f = rep(cyc6());
  CHECK_THROWS_AS(coordinates_of(f, elems(f, {"a2"}), elem(f, "a")), Error);
}

TEST_CASE("coord_op builds the induced operation") {
  const Representation& v = rep(vec2());
  Term word = coord_op(v.alg_m().signature(), "add", {Term::slot(0), Term::slot(1)});
  CHECK(eval_term(word, v, elems(v, {"10", "01"})) == elem(v, "11"));

  const Representation& f = rep(cyc6());
  Term square = coord_op(f.alg_m().signature(), "mul", {Term::slot(0), Term::slot(0)});
  CHECK(eval_term(square, f, elems(f, {"a"})) == elem(f, "a2"));

  CHECK_THROWS_AS(coord_op(f.alg_m().signature(), "mul", {Term::slot(0)}), Error);
}

TEST_CASE("a constant coord_op is the constant leaf word") {
  const ModelFile model = parse_model(R"(
algebra One {
  elements: u;
  op mul/2 { (u, u) = u; }
}
algebra Pointed {
  elements: p, q;
  op base/0 { () = p; }
}
representation f {
  omega1: One;
  omega2: Pointed;
  action { (u, p) = p; (u, q) = q; }
}
)");
  const Representation& r = rep(model);
  Term word = coord_op(r.alg_m().signature(), "base", {});
  CHECK(word == Term::apply("base", {}));
  CHECK(word.children().empty());
  CHECK(eval_term(word, r, elems(r, {"q"})) == elem(r, "p"));
}

TEST_CASE("coord_act builds the action word") {
  const Representation& g = rep(gset());
  Term word = coord_act(a_elem(g, "g"), Term::slot(0));
  CHECK(eval_term(word, g, elems(g, {"0", "3"})) == elem(g, "1"));

  // A monoid unit acts as the identity at evaluation level.
  const Representation& f = rep(cyc6());
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    Term w = random_slotted_term(rng, f.alg_m().signature(), f.a_size(), 1, 4);
    Term acted = coord_act(a_elem(f, "u"), w);
    CHECK(eval_term(acted, f, elems(f, {"a"})) == eval_term(w, f, elems(f, {"a"})));
  }

  const Representation& v = rep(vec2());
  CHECK(eval_term(coord_act(a_elem(v, "0"), Term::slot(0)), v,
                  elems(v, {"10", "01"})) == elem(v, "00"));
}

TEST_CASE("substitution with identity slots is the identity") {
  const Representation& f = rep(cyc6());
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    Term w = random_slotted_term(rng, f.alg_m().signature(), f.a_size(), 3, 4);
    CHECK(substitute(w, identity_slots(3)) == w);
  }
}

TEST_CASE("substitution renames leaves") {
  const Representation& g = rep(gset());
  Term w = Term::act(a_elem(g, "g"), Term::slot(1));
  const std::vector<Term> swap = {Term::slot(1), Term::slot(0)};
  CHECK(substitute(w, swap) == Term::act(a_elem(g, "g"), Term::slot(0)));
}

TEST_CASE("substituting endomorphism coordinates computes the image") {
  const Representation& f = rep(cyc6());
  const auto x = elems(f, {"a"});
  // The inversion automorphism.
  Morphism inv = extend_map(f, x, elems(f, {"a5"}));
  const auto inv_images = images_of(f, x, inv);
  CoordinateSet coords = coordinate_set(f, x);
  for (std::size_t m = 0; m < f.m_size(); ++m) {
    Term composed = substitute(coords.at(m), inv_images);
    CHECK(eval_term(composed, f, x) == inv.table[m]);
  }
}

TEST_CASE("superposition soundness for every endomorphism") {
  for (const ModelFile* model : {&cyc6(), &vec2(), &gset()}) {
    const Representation& r = rep(*model);
    const Basis base = reduce_to_basis(r, [&] {
      std::vector<std::size_t> all(r.m_size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      return all;
    }());
    const auto& x = base.elements;
    MorphismSet endos = enumerate_endomorphisms(r, x);
    CoordinateSet coords = coordinate_set(r, x);
    for (const Morphism& e : endos.all) {
      const auto e_images = images_of(r, x, e);
      for (std::size_t m = 0; m < r.m_size(); ++m) {
        CHECK(eval_term(substitute(coords.at(m), e_images), r, x) == e.table[m]);
      }
    }
  }
}

TEST_CASE("substitution is associative on the nose") {
  const Representation& g = rep(gset());
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    Term w = random_slotted_term(rng, g.alg_m().signature(), g.a_size(), 2, 4);
    std::vector<Term> u, v;
    for (int k = 0; k < 2; ++k) {
      u.push_back(random_slotted_term(rng, g.alg_m().signature(), g.a_size(), 3, 3));
      v.push_back(random_slotted_term(rng, g.alg_m().signature(), g.a_size(), 2, 3));
    }
    v.push_back(random_slotted_term(rng, g.alg_m().signature(), g.a_size(), 2, 3));
    std::vector<Term> u_then_v;
    for (const Term& ui : u) u_then_v.push_back(substitute(ui, v));
    CHECK(substitute(substitute(w, u), v) == substitute(w, u_then_v));
  }
}

TEST_CASE("substitution commutes with coord_op and coord_act") {
  const Representation& f = rep(cyc6());
  const Signature& sig = f.alg_m().signature();
  std::mt19937 rng(21);
  for (int i = 0; i < 100; ++i) {
    Term w1 = random_slotted_term(rng, sig, f.a_size(), 2, 3);
    Term w2 = random_slotted_term(rng, sig, f.a_size(), 2, 3);
    const std::vector<Term> v = {
        random_slotted_term(rng, sig, f.a_size(), 2, 3),
        random_slotted_term(rng, sig, f.a_size(), 2, 3)};
    CHECK(substitute(coord_op(sig, "mul", {w1, w2}), v) ==
          coord_op(sig, "mul", {substitute(w1, v), substitute(w2, v)}));
    CHECK(substitute(coord_act(0, w1), v) == coord_act(0, substitute(w1, v)));
  }
}

TEST_CASE("endomorphism coordinates act from the right") {
  const Representation& f = rep(cyc6());
  const auto x = elems(f, {"a"});
  MorphismSet endos = enumerate_endomorphisms(f, x);
  CoordinateSet coords = coordinate_set(f, x);
  for (const Morphism& r : endos.all) {
    for (const Morphism& s : endos.all) {
      const auto r_images = images_of(f, x, r);
      const auto s_images = images_of(f, x, s);
      const Morphism sr = compose(s, r);
      for (std::size_t m = 0; m < f.m_size(); ++m) {
        // w . C_R . C_S evaluates to S(R(m)): writing right operands last
        // composes the other way around.
        Term word = substitute(substitute(coords.at(m), r_images), s_images);
        CHECK(eval_term(word, f, x) == sr.table[m]);
      }
    }
  }
}

TEST_CASE("substitute rejects missing slot images") {
  CHECK_THROWS_AS(substitute(Term::slot(2), std::vector<Term>{Term::slot(0)}), Error);
}
