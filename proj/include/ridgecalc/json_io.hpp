#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

#include "ridgecalc/knumber.hpp"
#include "ridgecalc/multiadditive.hpp"
#include "ridgecalc/polyfunc.hpp"
#include "ridgecalc/polymultivar.hpp"
#include "ridgecalc/ridge.hpp"
#include "ridgecalc/unipoly.hpp"

namespace ridgecalc {

using Json = nlohmann::json;

// Writers always produce the canonical object forms. Readers throw ParseError
// on malformed input and accept a KNumber written as an object, a rational
// string "p/q", an expression string such as "1 + sqrt2", or an integer. An
// object's "basis" must match the basis it is read into.

Json to_json(const KNumber& a);
KNumber knumber_from_json(const Json& j, const BasisPtr& basis);
/// Basis of an object-form KNumber.
BasisPtr basis_from_json(const Json& radicals);

Json to_json(const AdditiveMap& a);
AdditiveMap additive_map_from_json(const Json& j, const BasisPtr& basis);

Json to_json(const MultiAdditiveSym& f);
MultiAdditiveSym multi_additive_from_json(const Json& j, const BasisPtr& basis);

Json to_json(const PolyFunc& f);
PolyFunc polyfunc_from_json(const Json& j, const BasisPtr& basis);

/// Ascending coefficient array.
Json to_json(const UniPoly& u);
UniPoly unipoly_from_json(const Json& j, const BasisPtr& basis);

/// {"coeffs": {"e1,...,en": KNumber}}
Json to_json(const PolyMultivar& p);
PolyMultivar polymultivar_from_json(const Json& j, const BasisPtr& basis, std::size_t nvars);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

/// {"n", "radicals", "terms": [{"direction", "smooth", "wild"}]}.
/// `radicals` replaces the file's radicals when the file has none.
Json problem_to_json(const RidgeSum& s);
RidgeSum problem_from_json(const Json& j, const std::optional<std::vector<long>>& radicals = std::nullopt);

struct SolutionFile {
  std::vector<UniPoly> g;
  PolyMultivar p;
  Certificate certificate;
  /// The problem the solution was computed for; needed by verify.
  std::optional<RidgeSum> problem;
};

Json solution_to_json(const SolutionFile& s);
SolutionFile solution_from_json(const Json& j, const std::optional<std::vector<long>>& radicals = std::nullopt);

/// Throws ParseError (I/O failures included).
Json read_json_file(const std::string& path);
/// Two-space indented with a trailing newline.
void write_json_file(const std::string& path, const Json& j);
std::string dump_json(const Json& j);

}  // namespace ridgecalc
