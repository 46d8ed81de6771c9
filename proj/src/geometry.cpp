#include "uarep/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "uarep/coordinates.hpp"
#include "uarep/error.hpp"

namespace uarep {

namespace {

// Rewrites `word` from one manifold basis to another; both are known to be
// orbit members, so no linkage check is repeated here.
Term transform_within(const Representation& rep, const Basis& from, const Basis& to,
                      const Term& word) {
  CoordinateSet coords = coordinate_set(rep, to.elements);
  std::vector<Term> images;
  images.reserve(from.elements.size());
  for (std::size_t m : from.elements) images.push_back(coords.at(m));
  return substitute(word, images);
}

std::size_t identity_index(const MorphismSet& group) {
  auto index = group.auto_index(identity_morphism(
      group.autos.empty() ? 0 : group.autos.front().table.size()));
  if (!index) {
    throw_domain(ErrorKind::InternalError, "automorphism group lacks the identity");
  }
  return *index;
}

}  // namespace

std::size_t GeomContext::h_image(std::size_t f_auto) const {
  if (f_auto >= h.size()) {
    throw_domain(ErrorKind::IndexOutOfRange, "automorphism index out of range");
  }
  return h[f_auto];
}

GeomContextPtr make_geom_context(std::string name, Representation rep_f,
                                 Representation rep_g, Basis basis_f, Basis basis_g,
                                 std::vector<std::size_t> h, std::size_t budget) {
  if (!(rep_f.alg_a() == rep_g.alg_a())) {
    throw_domain(ErrorKind::ContextMismatch,
                 "the two representations must share the Omega_1 algebra");
  }
  auto context = std::make_shared<GeomContext>();
  context->name = std::move(name);
  context->rep_f = std::move(rep_f);
  context->rep_g = std::move(rep_g);
  context->manifold_f = basis_manifold(context->rep_f, basis_f, budget);
  context->manifold_g = basis_manifold(context->rep_g, basis_g, budget);
  context->h = std::move(h);

  const MorphismSet& gf = context->manifold_f.group;
  const MorphismSet& gg = context->manifold_g.group;
  if (context->h.size() != gf.autos.size()) {
    throw_domain(ErrorKind::ContextMismatch,
                 "h must list one image per automorphism of G(f): expected " +
                     std::to_string(gf.autos.size()) + " rows, got " +
                     std::to_string(context->h.size()));
  }
  for (std::size_t value : context->h) {
    if (value >= gg.autos.size()) {
      throw_domain(ErrorKind::ContextMismatch, "h maps outside G(g)");
    }
  }
  if (context->h.empty()) return context;

  if (context->h[identity_index(gf)] != identity_index(gg)) {
    throw_domain(ErrorKind::ContextMismatch, "h does not fix the identity");
  }
  for (std::size_t i = 0; i < gf.autos.size(); ++i) {
    for (std::size_t j = 0; j < gf.autos.size(); ++j) {
      const std::size_t lhs = context->h[gf.compose_autos(i, j)];
      const std::size_t rhs = gg.compose_autos(context->h[i], context->h[j]);
      if (lhs != rhs) {
        std::ostringstream out;
        out << "h is not a homomorphism: h(" << i << " . " << j << ") = " << lhs
            << " but h(" << i << ") . h(" << j << ") = " << rhs;
        throw_domain(ErrorKind::ContextMismatch, out.str());
      }
    }
  }
  return context;
}

GeomContextPtr make_geom_context(const ModelFile& model, const GeometryDecl& decl,
                                 std::size_t budget) {
  const Representation* rep_f = model.find_representation(decl.rep_f);
  const Representation* rep_g = model.find_representation(decl.rep_g);
  if (!rep_f || !rep_g) {
    throw_domain(ErrorKind::ContextMismatch, "geometry references unknown representations");
  }
  return make_geom_context(decl.name, *rep_f, *rep_g, Basis{decl.basis_f},
                           Basis{decl.basis_g}, decl.h, budget);
}

const Term& GeometricObject::word_at(std::size_t orbit_index) const {
  for (const auto& [index, word] : orbit) {
    if (index == orbit_index) return word;
  }
  throw_domain(ErrorKind::ContextMismatch, "object has no coordinates at that basis");
}

GeometricObject geom_orbit(const GeomContextPtr& context, const Basis& basis_g,
                           const Term& word) {
  if (!context) {
    throw_domain(ErrorKind::ContextMismatch, "missing geometry context");
  }
  if (word.slot_count() > basis_g.elements.size()) {
    throw_domain(ErrorKind::SlotOutOfRange, "word uses slots beyond the seed basis");
  }
  GeometricObject object{context, basis_g, word, {}};

  const BasisManifold& mg = context->manifold_g;
  const std::size_t holder = mg.locate(basis_g);
  for (std::size_t s = 0; s < context->manifold_f.group.autos.size(); ++s) {
    const std::size_t target = mg.group.compose_autos(holder, context->h_image(s));
    if (std::any_of(object.orbit.begin(), object.orbit.end(),
                    [&](const auto& entry) { return entry.first == target; })) {
      continue;
    }
    object.orbit.emplace_back(
        target, transform_within(context->rep_g, basis_g, mg.orbit[target], word));
  }
  std::sort(object.orbit.begin(), object.orbit.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return object;
}

std::size_t representative(const GeometricObject& object, const Basis& basis_f,
                           const Basis& basis_g) {
  const GeomContext& ctx = *object.context;
  const std::size_t s_f = ctx.manifold_f.locate(basis_f);
  const Basis target = passive(ctx.manifold_g, ctx.h_image(s_f), basis_g);
  const std::size_t target_index = ctx.manifold_g.locate(target);
  const Term& word = object.word_at(target_index);
  const std::size_t value =
      eval_term(word, ctx.rep_g, ctx.manifold_g.orbit[target_index].elements);

  // Invariance principle, re-checked: every orbit member names the same
  // element of N.
  for (const auto& [index, entry] : object.orbit) {
    const std::size_t other =
        eval_term(entry, ctx.rep_g, ctx.manifold_g.orbit[index].elements);
    if (other != value) {
      throw_domain(ErrorKind::WellDefinednessFailure,
                   "representative differs at basis " +
                       basis_text(ctx.rep_g, ctx.manifold_g.orbit[index]));
    }
  }
  return value;
}

std::size_t representative(const GeometricObject& object) {
  return representative(object, object.context->manifold_f.reference,
                        object.seed_basis);
}

namespace {

GeometricObject combined_object(const GeometricObject& prototype, Term seed_word,
                                std::vector<std::pair<std::size_t, Term>> orbit) {
  const GeomContext& ctx = *prototype.context;
  GeometricObject result{prototype.context, prototype.seed_basis,
                         std::move(seed_word), std::move(orbit)};

  // Well-definedness: combining per basis must agree with sweeping the
  // combined seed.
  GeometricObject swept = geom_orbit(result.context, result.seed_basis, result.seed_word);
  if (swept.orbit.size() != result.orbit.size()) {
    throw_domain(ErrorKind::WellDefinednessFailure,
                 "combined orbit does not match the swept orbit");
  }
  for (std::size_t i = 0; i < swept.orbit.size(); ++i) {
    if (swept.orbit[i].first != result.orbit[i].first ||
        !(swept.orbit[i].second == result.orbit[i].second)) {
      throw_domain(ErrorKind::WellDefinednessFailure,
                   "combination escapes the orbit pattern at basis " +
                       basis_text(ctx.rep_g,
                                  ctx.manifold_g.orbit[result.orbit[i].first]));
    }
  }
  return result;
}

}  // namespace

GeometricObject geom_op(std::string_view op,
                        const std::vector<GeometricObject>& objects) {
  if (objects.empty()) {
    throw_domain(ErrorKind::ContextMismatch, "geom_op needs at least one object");
  }
  const GeometricObject& first = objects.front();
  const Signature& sig = first.context->rep_g.alg_m().signature();
  for (const GeometricObject& object : objects) {
    if (object.context != first.context) {
      throw_domain(ErrorKind::ContextMismatch, "objects come from different contexts");
    }
    if (!(object.seed_basis == first.seed_basis)) {
      throw_domain(ErrorKind::ContextMismatch,
                   "objects are seeded over different bases");
    }
  }

  std::vector<Term> seed_words;
  for (const GeometricObject& object : objects) seed_words.push_back(object.seed_word);
  Term seed = coord_op(sig, op, std::move(seed_words));

  std::vector<std::pair<std::size_t, Term>> orbit;
  for (std::size_t i = 0; i < first.orbit.size(); ++i) {
    const std::size_t index = first.orbit[i].first;
    std::vector<Term> words;
    for (const GeometricObject& object : objects) {
      words.push_back(object.word_at(index));
    }
    orbit.emplace_back(index, coord_op(sig, op, std::move(words)));
  }
  return combined_object(first, std::move(seed), std::move(orbit));
}

GeometricObject geom_act(std::size_t a_index, const GeometricObject& object) {
  if (a_index >= object.context->rep_g.a_size()) {
    throw_domain(ErrorKind::IndexOutOfRange, "action element out of range");
  }
  std::vector<std::pair<std::size_t, Term>> orbit;
  for (const auto& [index, word] : object.orbit) {
    orbit.emplace_back(index, coord_act(a_index, word));
  }
  return combined_object(object, coord_act(a_index, object.seed_word),
                         std::move(orbit));
}

std::string geom_text(const GeometricObject& object) {
  const GeomContext& ctx = *object.context;
  std::ostringstream out;
  out << "geom type=" << ctx.name << " seed=("
      << basis_text(ctx.rep_g, object.seed_basis) << ", "
      << print_term(object.seed_word, ctx.rep_g.alg_m(), ctx.rep_g.alg_a())
      << ") orbit_size=" << object.orbit.size() << " representative="
      << ctx.rep_g.alg_m().label(representative(object));
  return out.str();
}

}  // namespace uarep
