#include "uarep/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "uarep/basis.hpp"
#include "uarep/coordinates.hpp"
#include "uarep/error.hpp"
#include "uarep/geometry.hpp"
#include "uarep/model.hpp"
#include "uarep/morphism.hpp"

namespace uarep {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string model_path;
  std::string rep;
  std::string set;
  std::string basis;
  std::string geometry;
  std::string elem;
  std::string from;
  std::string to;
  std::string term;
  std::size_t auto_index = 0;
  std::size_t budget = kDefaultEnumBudget;
  bool json_mode = false;
};

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> labels;
  if (text.empty()) return labels;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    labels.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return labels;
}

std::vector<std::size_t> resolve_elements(const FiniteAlgebra& alg,
                                          const std::string& text) {
  std::vector<std::size_t> elements;
  for (const std::string& label : split_labels(text)) {
    auto e = alg.element(label);
    if (!e) {
      throw_parse(ErrorKind::UnknownElement,
                  "unknown element label '" + label + "' in " + alg.name());
    }
    elements.push_back(*e);
  }
  return elements;
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw_parse(ErrorKind::SyntaxError, "cannot open model file '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_model(text.str());
}

const Representation& named_rep(const ModelFile& model, const std::string& name) {
  const Representation* rep = model.find_representation(name);
  if (!rep) {
    throw_parse(ErrorKind::UnknownSymbol, "unknown representation '" + name + "'");
  }
  return *rep;
}

json label_array(const Representation& rep, std::span<const std::size_t> elements) {
  json out = json::array();
  for (std::size_t m : elements) out.push_back(rep.alg_m().label(m));
  return out;
}

void cmd_closure(const Options& opt, std::ostream& out) {
  ModelFile model = load_model(opt.model_path);
  const Representation& rep = named_rep(model, opt.rep);
  const auto set = resolve_elements(rep.alg_m(), opt.set);
  ClosureResult result = closure(rep, set);
  if (opt.json_mode) {
    for (std::size_t m : result.closure) {
      json line;
      line["elem"] = rep.alg_m().label(m);
      line["stage"] = result.stage_of[m];
      line["word"] = print_term(*result.witness[m], rep.alg_m(), rep.alg_a());
      out << line.dump() << '\n';
    }
  } else {
    out << closure_report(rep, result);
  }
}

void cmd_basis(const Options& opt, std::ostream& out) {
  ModelFile model = load_model(opt.model_path);
  const Representation& rep = named_rep(model, opt.rep);
  const bool result = is_basis(rep, resolve_elements(rep.alg_m(), opt.set));
  if (opt.json_mode) {
    out << json{{"basis", result}}.dump() << '\n';
  } else {
    out << "basis: " << (result ? "true" : "false") << '\n';
  }
}

void cmd_reduce(const Options& opt, std::ostream& out) {
  ModelFile model = load_model(opt.model_path);
  const Representation& rep = named_rep(model, opt.rep);
  Basis basis = reduce_to_basis(rep, resolve_elements(rep.alg_m(), opt.set));
  if (opt.json_mode) {
    out << json{{"basis", label_array(rep, basis.elements)}}.dump() << '\n';
  } else {
    out << "basis: ";
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
      if (i) out << ',';
      out << rep.alg_m().label(basis.elements[i]);
    }
    out << '\n';
  }
}

void cmd_endos(const Options& opt, std::ostream& out, bool autos_only) {
  ModelFile model = load_model(opt.model_path);
  const Representation& rep = named_rep(model, opt.rep);
  MorphismSet set =
      enumerate_endomorphisms(rep, resolve_elements(rep.alg_m(), opt.set), opt.budget);
  const auto& list = autos_only ? set.autos : set.all;
  const char* key = autos_only ? "auto" : "endo";
  if (opt.json_mode) {
    json head;
    if (!autos_only) head["endos"] = set.all.size();
    head["autos"] = set.autos.size();
    out << head.dump() << '\n';
    for (std::size_t i = 0; i < list.size(); ++i) {
      json line;
      line[key] = i;
      json map = json::object();
      for (std::size_t m = 0; m < rep.m_size(); ++m) {
        map[rep.alg_m().label(m)] = rep.alg_m().label(list[i].table[m]);
      }
      line["map"] = std::move(map);
      out << line.dump() << '\n';
    }
  } else {
    if (autos_only) {
      out << "autos: " << set.autos.size() << '\n';
    } else {
      out << "endos: " << set.all.size() << " autos: " << set.autos.size() << '\n';
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      out << key << ' ' << i << ' ' << morphism_text(rep, list[i]) << '\n';
    }
  }
}

void cmd_coords(const Options& opt, std::ostream& out) {
  ModelFile model = load_model(opt.model_path);
  const Representation& rep = named_rep(model, opt.rep);
  const auto basis = resolve_elements(rep.alg_m(), opt.basis);
  auto e = rep.alg_m().element(opt.elem);
  if (!e) {
    throw_parse(ErrorKind::UnknownElement,
                "unknown element label '" + opt.elem + "' in " + rep.alg_m().name());
  }
  Term word = coordinates_of(rep, basis, *e);
  const std::string text = print_term(word, rep.alg_m(), rep.alg_a());
  if (opt.json_mode) {
    out << json{{"elem", opt.elem}, {"word", text}}.dump() << '\n';
  } else {
    out << "elem " << opt.elem << " word " << text << '\n';
  }
}

void cmd_manifold(const Options& opt, std::ostream& out) {
  ModelFile model = load_model(opt.model_path);
  const Representation& rep = named_rep(model, opt.rep);
  BasisManifold manifold =
      basis_manifold(rep, Basis{resolve_elements(rep.alg_m(), opt.basis)}, opt.budget);
  for (std::size_t i = 0; i < manifold.orbit.size(); ++i) {
    if (opt.json_mode) {
      json line;
      line["basis"] = i;
      line["elements"] = label_array(rep, manifold.orbit[i].elements);
      line["via"] = i;
      out << line.dump() << '\n';
    } else {
      out << "basis " << i << ": " << basis_text(rep, manifold.orbit[i])
          << " via auto " << i << '\n';
    }
  }
}

void cmd_passive(const Options& opt, std::ostream& out) {
  ModelFile model = load_model(opt.model_path);
  const Representation& rep = named_rep(model, opt.rep);
  BasisManifold manifold =
      basis_manifold(rep, Basis{resolve_elements(rep.alg_m(), opt.basis)}, opt.budget);
  if (opt.auto_index >= manifold.group.autos.size()) {
    throw_parse(ErrorKind::IndexOutOfRange,
                "automorphism index " + std::to_string(opt.auto_index) +
                    " out of range (group order " +
                    std::to_string(manifold.group.autos.size()) + ")");
  }
  Basis point{resolve_elements(rep.alg_m(), opt.set)};
  Basis result = passive(manifold, opt.auto_index, point);
  if (opt.json_mode) {
    out << json{{"basis", label_array(rep, result.elements)}}.dump() << '\n';
  } else {
    out << "basis: " << basis_text(rep, result) << '\n';
  }
}

void cmd_coordxform(const Options& opt, std::ostream& out) {
  ModelFile model = load_model(opt.model_path);
  const Representation& rep = named_rep(model, opt.rep);
  Basis from{resolve_elements(rep.alg_m(), opt.from)};
  Basis to{resolve_elements(rep.alg_m(), opt.to)};
  Term word =
      parse_slotted_term(opt.term, rep.alg_m(), rep.alg_a(), from.elements.size());
  Term result = coordinate_transform(rep, from, to, word, opt.budget);
  const std::string text = print_term(result, rep.alg_m(), rep.alg_a());
  if (opt.json_mode) {
    out << json{{"word", text}}.dump() << '\n';
  } else {
    out << "word " << text << '\n';
  }
}

void cmd_geom(const Options& opt, std::ostream& out) {
  ModelFile model = load_model(opt.model_path);
  const GeometryDecl* decl = model.find_geometry(opt.geometry);
  if (!decl) {
    throw_parse(ErrorKind::UnknownSymbol, "unknown geometry '" + opt.geometry + "'");
  }
  GeomContextPtr context = make_geom_context(model, *decl, opt.budget);
  Basis seed{opt.basis.empty()
                 ? decl->basis_g
                 : resolve_elements(context->rep_g.alg_m(), opt.basis)};
  Term word = parse_slotted_term(opt.term.empty() ? "$0" : opt.term,
                                 context->rep_g.alg_m(), context->rep_g.alg_a(),
                                 seed.elements.size());
  GeometricObject object = geom_orbit(context, seed, word);
  if (opt.json_mode) {
    json line;
    line["type"] = context->name;
    line["seed_basis"] = label_array(context->rep_g, seed.elements);
    line["seed_word"] =
        print_term(word, context->rep_g.alg_m(), context->rep_g.alg_a());
    line["orbit_size"] = object.orbit.size();
    line["representative"] =
        context->rep_g.alg_m().label(representative(object));
    out << line.dump() << '\n';
  } else {
    out << geom_text(object) << '\n';
  }
}

void cmd_check(const Options& opt, std::ostream& out) {
  std::optional<std::string> violated;
  try {
    ModelFile model = load_model(opt.model_path);
    for (const Representation& rep : model.representations) {
      if (auto violation = rep.first_violation()) {
        violated = rep.name() + ": " + *violation;
        break;
      }
    }
    if (!violated) {
      for (const GeometryDecl& decl : model.geometries) {
        make_geom_context(model, decl, opt.budget);
      }
    }
  } catch (const Error& e) {
    if (e.category() == ErrorCategory::parse) throw;
    violated = std::string(e.what());
  }
  if (opt.json_mode) {
    json line;
    line["check"] = violated ? "violated" : "ok";
    if (violated) line["detail"] = *violated;
    out << line.dump() << '\n';
  } else if (violated) {
    out << "violated: " << *violated << '\n';
  } else {
    out << "ok\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"representations of universal algebras on finite carriers"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--model", opt.model_path, "model file")->required();
    cmd->add_flag("--json", opt.json_mode, "line-delimited JSON output");
    cmd->add_option("--budget", opt.budget, "enumeration budget");
  };
  auto add_rep = [&](CLI::App* cmd) {
    cmd->add_option("--rep", opt.rep, "representation name")->required();
  };

  CLI::App* closure_cmd = app.add_subcommand("closure", "generated subrepresentation");
  add_common(closure_cmd);
  add_rep(closure_cmd);
  closure_cmd->add_option("--set", opt.set, "comma-separated element labels")
      ->required();

  CLI::App* basis_cmd = app.add_subcommand("basis", "test whether a set is a basis");
  add_common(basis_cmd);
  add_rep(basis_cmd);
  basis_cmd->add_option("--set", opt.set, "comma-separated element labels")->required();

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "shrink a generating set to a basis");
  add_common(reduce_cmd);
  add_rep(reduce_cmd);
  reduce_cmd->add_option("--set", opt.set, "comma-separated element labels")->required();

  CLI::App* endos_cmd = app.add_subcommand("endos", "enumerate endomorphisms");
  add_common(endos_cmd);
  add_rep(endos_cmd);
  endos_cmd->add_option("--set", opt.set, "generating set")->required();

  CLI::App* autos_cmd = app.add_subcommand("autos", "enumerate automorphisms");
  add_common(autos_cmd);
  add_rep(autos_cmd);
  autos_cmd->add_option("--set", opt.set, "generating set")->required();

  CLI::App* coords_cmd = app.add_subcommand("coords", "coordinates of an element");
  add_common(coords_cmd);
  add_rep(coords_cmd);
  coords_cmd->add_option("--basis", opt.basis, "ordered generating set")->required();
  coords_cmd->add_option("--elem", opt.elem, "element label")->required();

  CLI::App* manifold_cmd = app.add_subcommand("manifold", "orbit of a basis under G(f)");
  add_common(manifold_cmd);
  add_rep(manifold_cmd);
  manifold_cmd->add_option("--basis", opt.basis, "reference basis")->required();

  CLI::App* passive_cmd = app.add_subcommand("passive", "apply a passive transformation");
  add_common(passive_cmd);
  add_rep(passive_cmd);
  passive_cmd->add_option("--basis", opt.basis, "reference basis")->required();
  passive_cmd->add_option("--auto", opt.auto_index, "automorphism index")->required();
  passive_cmd->add_option("--set", opt.set, "manifold point to transform")->required();

  CLI::App* xform_cmd =
      app.add_subcommand("coordxform", "rewrite a word to another basis");
  add_common(xform_cmd);
  add_rep(xform_cmd);
  xform_cmd->add_option("--from", opt.from, "source basis")->required();
  xform_cmd->add_option("--to", opt.to, "target basis")->required();
  xform_cmd->add_option("--term", opt.term, "slotted word over the source basis")
      ->required();

  CLI::App* geom_cmd = app.add_subcommand("geom", "geometric object orbit");
  add_common(geom_cmd);
  geom_cmd->add_option("--geometry", opt.geometry, "geometry block name")->required();
  geom_cmd->add_option("--basis", opt.basis, "seed basis (defaults to basisG)");
  geom_cmd->add_option("--term", opt.term, "seed word (defaults to $0)");

  CLI::App* check_cmd = app.add_subcommand("check", "validate a model file");
  add_common(check_cmd);

  std::vector<const char*> argv;
  argv.push_back("uarep");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    out << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (closure_cmd->parsed()) {
      cmd_closure(opt, out);
    } else if (basis_cmd->parsed()) {
      cmd_basis(opt, out);
    } else if (reduce_cmd->parsed()) {
      cmd_reduce(opt, out);
    } else if (endos_cmd->parsed()) {
      cmd_endos(opt, out, false);
    } else if (autos_cmd->parsed()) {
      cmd_endos(opt, out, true);
    } else if (coords_cmd->parsed()) {
      cmd_coords(opt, out);
    } else if (manifold_cmd->parsed()) {
      cmd_manifold(opt, out);
    } else if (passive_cmd->parsed()) {
      cmd_passive(opt, out);
    } else if (xform_cmd->parsed()) {
      cmd_coordxform(opt, out);
    } else if (geom_cmd->parsed()) {
      cmd_geom(opt, out);
    } else if (check_cmd->parsed()) {
      cmd_check(opt, out);
    }
  } catch (const Error& e) {
    if (opt.json_mode) {
      out << json{{"error", std::string(e.name())}, {"detail", e.what()}}.dump()
          << '\n';
    } else {
      out << e.what() << '\n';
    }
    return e.category() == ErrorCategory::parse ? 2 : 1;
  }
  return 0;
}

}  // namespace uarep
