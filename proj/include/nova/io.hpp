// JSON definition files and verification reports.
//
// Every object is a DefinitionFile:
//   {"kind", "name", "dim", "basis", "entries", optional "class", "weight", "q"}
// with rationals written as strings. A bundle additionally carries "parts",
// an array of DefinitionFiles sharing the bundle's purpose.

#ifndef NOVA_IO_HPP
#define NOVA_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nova/algebra.hpp"
#include "nova/bialgebra.hpp"
#include "nova/poly.hpp"
#include "nova/report.hpp"

namespace nova {

using Json = nlohmann::ordered_json;

enum class DefKind { Algebra, Coproduct, RMatrix, Map, Form, Bundle };
std::string_view to_string(DefKind k);

struct Definition {
  DefKind kind = DefKind::Algebra;
  std::string name;
  std::vector<std::string> basis;
  std::string cls;
  std::optional<Scalar> weight;
  std::optional<Scalar> q;
  Json entries = Json::array();
  std::vector<Definition> parts;

  std::size_t dim() const { return basis.size(); }
};

/// Validates structure, labels, and literals. `where` prefixes error messages.
Definition parse_definition(const Json& j, const std::string& where = "definition");
Definition parse_definition_text(std::string_view text, const std::string& where = "definition");
Definition load_definition_file(const std::filesystem::path& path);
Json to_json(const Definition& d);
/// Pretty JSON with a trailing newline.
std::string dump(const Json& j);

Algebra to_algebra(const Definition& d);
Coproduct to_coproduct(const Definition& d);
/// Coefficient matrix of an rmatrix or form definition.
Tensor2 to_tensor(const Definition& d);
/// Polynomial coefficients; constant entries become degree-0 polynomials.
PolyMatrix to_poly_tensor(const Definition& d);
StructureMap to_map(const Definition& d);
BilinearForm to_form(const Definition& d);

Definition from_algebra(const Algebra& a);
Definition from_coproduct(const Coproduct& c);
Definition from_rmatrix(const Tensor2& r, const std::vector<std::string>& basis, std::string name);
Definition from_map(const StructureMap& m, const std::vector<std::string>& basis);
Definition from_form(const BilinearForm& f, const std::vector<std::string>& basis);
Definition make_bundle(std::string name, std::string cls, std::vector<Definition> parts);

/// Parts of a bundle, or the definition itself when it is not a bundle.
std::vector<Definition> flatten(const Definition& d);

/// Reads an algebra, coproduct, and the maps of classes "derivation" and
/// "admissible-theta" from a list of definitions; later definitions win.
BialgebraBundle to_bialgebra_bundle(const std::vector<Definition>& defs);

Json report_json(const std::string& command, const Report& report, const std::vector<Definition>& objects,
                 const std::string& verdict);

}  // namespace nova

#endif  // NOVA_IO_HPP
