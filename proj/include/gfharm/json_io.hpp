#pragma once

#include <json.hpp>

#include "gfharm/field.hpp"
#include "gfharm/hilbert.hpp"
#include "gfharm/operator.hpp"

namespace gfharm {

using Json = nlohmann::ordered_json;

/// {"coeffs": [...], "scale_exp": 0, "denom": q, "N": N, "p": p}
Json to_json(const CycloScalar& x);
/// Accepts the encoding above; a nonzero "scale_exp" is folded back through sqrt(p).
CycloScalar scalar_from_json(const RingPtr& ring, const Json& j);

/// {"dim", "backend", "N", "p", "entries"} with entries row-major. Exact entries are
/// scalar objects, float entries are [re, im]. With `with_float` an exact matrix also
/// carries a "float" array.
Json to_json(const OperatorMatrix& m, bool with_float = false);
/// Rebuilds the matrix. Entries given as numbers or [re, im] pairs yield a float matrix
/// unless "backend" says otherwise. `ring` is used when the JSON has no "N"/"p".
OperatorMatrix matrix_from_json(const Json& j, RingPtr ring = nullptr);

/// {"dim", "values"} with values encoded like matrix entries.
Json to_json(const StateVector& v);
StateVector state_from_json(const Json& j, RingPtr ring = nullptr);

/// Elements, traces per divisor, Gram matrix and inverse, dual basis, subfields.
Json field_report(const GaloisField& field);

}  // namespace gfharm
