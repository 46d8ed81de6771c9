#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace uarep::tests {

std::string fixture_path(const std::string& name) {
  return std::string(UAREP_SOURCE_DIR) + "/models/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

namespace {
ModelFile load(const std::string& name) {
  return parse_model(read_file(fixture_path(name)));
}
}  // namespace

const ModelFile& cyc6() {
  static const ModelFile model = load("CYC6.alg");
  return model;
}

const ModelFile& vec2() {
  static const ModelFile model = load("VEC2.alg");
  return model;
}

const ModelFile& gset() {
  static const ModelFile model = load("GSET.alg");
  return model;
}

const Representation& rep(const ModelFile& model, const std::string& name) {
  const Representation* found = model.find_representation(name);
  if (!found) throw std::runtime_error("fixture lacks representation " + name);
  return *found;
}

const Representation& triv() {
  static const ModelFile model = parse_model(R"(
algebra T1 {
  elements: u;
  op mul/2 { (u, u) = u; }
}
algebra C2 {
  elements: e, t;
  op mul/2 { (e, e) = e; (e, t) = t; (t, e) = t; (t, t) = e; }
}
representation f {
  omega1: T1;
  omega2: C2;
  mode: monoid(mul, u);
  action { (u, e) = e; (u, t) = t; }
}
)");
  return rep(model);
}

std::size_t elem(const Representation& rep, const std::string& label) {
  auto e = rep.alg_m().element(label);
  if (!e) throw std::runtime_error("fixture lacks element " + label);
  return *e;
}

std::size_t a_elem(const Representation& rep, const std::string& label) {
  auto e = rep.alg_a().element(label);
  if (!e) throw std::runtime_error("fixture lacks A-element " + label);
  return *e;
}

std::vector<std::size_t> elems(const Representation& rep,
                               std::initializer_list<const char*> labels) {
  std::vector<std::size_t> out;
  for (const char* label : labels) out.push_back(elem(rep, label));
  return out;
}

}  // namespace uarep::tests
