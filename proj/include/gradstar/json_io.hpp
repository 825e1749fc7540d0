#ifndef GRADSTAR_JSON_IO_HPP
#define GRADSTAR_JSON_IO_HPP

#include <json.hpp>

#include "gradstar/jordan_complex.hpp"
#include "gradstar/jordan_real.hpp"
#include "gradstar/matrix.hpp"
#include "gradstar/mupoly.hpp"
#include "gradstar/poly.hpp"

namespace gradstar {

using Json = nlohmann::json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// Polynomials carry no field tag on the wire; parsing infers complex mode
// from any nonzero imaginary part unless the caller forces a mode.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);
Poly poly_from_json(const Json& j, Field field);

Json mupoly_to_json(const MuPoly& v);
MuPoly mupoly_from_json(const Json& j);
MuPoly mupoly_from_json(const Json& j, Field field);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json system_to_json(const StarSystem& sys);
StarSystem system_from_json(const Json& j);

Json oneform_to_json(const OneForm& w);

// {"field":"complex","eigenvalues":[{"lambda":{...},"blocks":[...]}]} or
// {"field":"real","alpha":"0","beta":"1","blocks":[2,1]}
bool spec_is_real(const Json& j);
JordanSpecC spec_c_from_json(const Json& j);
Json spec_c_to_json(const JordanSpecC& spec);
JordanSpecR spec_r_from_json(const Json& j);
Json spec_r_to_json(const JordanSpecR& spec);

// Coefficient table {"k,j": scalar record}.
std::map<std::pair<size_t, size_t>, Scalar> coeff_table_from_json(const Json& j);

Json solution_pair_to_json(const SolutionPair& p);

}  // namespace gradstar

#endif
