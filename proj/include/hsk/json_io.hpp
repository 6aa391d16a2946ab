#pragma once

// JSON encodings shared by the cache, the C API and the CLI.
//   Scalar   {"den": int, "num": [int x phi(m)]}, optional "embed": [re, im]
//   Diagram  [row lengths]
//   Element  {"n": int, "terms": [{"perm": [one-line], "coeff": Scalar}]}
// Integers that do not fit in 64 bits are written as decimal strings.

#include <json.hpp>

#include "hsk/diagrams.hpp"
#include "hsk/hecke.hpp"
#include "hsk/linalg.hpp"
#include "hsk/scalar.hpp"

namespace hsk {

using Json = nlohmann::ordered_json;

Json bigint_to_json(const mpz_class& v);
mpz_class bigint_from_json(const Json& j);

Json to_json(const Scalar& s, bool with_embedding = false);
Scalar scalar_from_json(const Params& p, const Json& j);

Json to_json(const YoungDiagram& d);
// Throws UsageError on malformed input, DomainError on a non-partition.
YoungDiagram diagram_from_json(const Json& j);

Json to_json(const HeckeElement& x);
HeckeElement element_from_json(const Params& p, const Json& j);

Json to_json(const Matrix& m, bool with_embedding = false);
Matrix matrix_from_json(const Params& p, const Json& j);

Json complex_to_json(std::complex<double> z);

}  // namespace hsk
