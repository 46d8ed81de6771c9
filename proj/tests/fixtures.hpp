#ifndef UAREP_TESTS_FIXTURES_HPP_
#define UAREP_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "uarep/model.hpp"

namespace uarep::tests {

// Shipped fixture models, loaded once from models/.
const ModelFile& cyc6();
const ModelFile& vec2();
const ModelFile& gset();

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);

const Representation& rep(const ModelFile& model, const std::string& name = "f");

// A two-element semigroup with a trivial automorphism group.
const Representation& triv();

std::size_t elem(const Representation& rep, const std::string& label);
std::size_t a_elem(const Representation& rep, const std::string& label);
std::vector<std::size_t> elems(const Representation& rep,
                               std::initializer_list<const char*> labels);

}  // namespace uarep::tests

#endif  // UAREP_TESTS_FIXTURES_HPP_
