#pragma once

#include "fiberlab/graph.hpp"
#include "fiberlab/module.hpp"
#include "fiberlab/presentation.hpp"

#include <json.hpp>

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fiberlab::cli {

// K<n>, P<n>, C<n>, E<n> (edgeless) and T<n> (n triangles sharing a vertex).
Graph named_graph(std::string_view name);
// A graph name, or the path of an edge-list / graph JSON file.
Graph load_graph(const std::string& spec);

// sigma(G), kprime(G), kdprime(G,v), tilde(G,v), edge(G), ex311(n), ex45, ex46a,
// ex46b, ex54R, ex54S. G is anything load_graph accepts; v is an index or label.
// Throws std::invalid_argument on an unknown name.
Presentation named_ring(std::string_view name, const FieldSpec& field);
std::vector<std::string> ring_names();

// k, free, free:<r>, canonical, cyclic:<f1>,<f2>,... or a module JSON file.
template <class K>
FPModule<K> load_module(std::shared_ptr<const LocalAlgebra<K>> a, const std::string& spec);

// {"label", "field", "vars", "dim", "actions": [one matrix per variable, rows of strings]}
template <class K>
nlohmann::json module_to_json(const FPModule<K>& m);
template <class K>
FPModule<K> module_from_json(std::shared_ptr<const LocalAlgebra<K>> a, const nlohmann::json& j);

// Exit codes: 0 success, 1 a check failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fiberlab::cli
