#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "faf/bratteli.hpp"
#include "faf/contfrac.hpp"
#include "faf/jacobi_perron.hpp"
#include "faf/lattice.hpp"
#include "faf/real_scalar.hpp"

namespace faf {

using Json = nlohmann::ordered_json;

/// JSON number when the value fits in int64, decimal string otherwise.
Json integer_json(const BigInt& z);
BigInt integer_from_json(const Json& j);

/// Rationals print as "p/q"; number-field elements as
/// {"min_poly": [c0, ..., 1], "coords": ["p/q", ...], "embedding": ["lo", "hi"]};
/// intervals as {"interval": ["lo", "hi"], "precision": bits}.
Json to_json(const RealScalar& x);
RealScalar scalar_from_json(const Json& j);

/// "p/q", a decimal, "alg(poly;lo,hi)" (the generator), "alg(poly;lo,hi;c0,c1,...)"
/// or a JSON scalar object. Throws ParseError.
RealScalar parse_scalar(std::string_view text);

/// Number field element from a polynomial, an isolating interval "lo,hi" and
/// optional comma-separated power-basis coordinates.
RealScalar algebraic_scalar(std::string_view poly, std::string_view embed, std::string_view coords);

/// Scientific notation with `digits` significant digits, for display only.
std::string decimal(const BigRational& q, int digits = 20);

Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const IntervalReal& x);
Json to_json(const CFExpansion& e);
Json to_json(const TailReport& r);
Json to_json(const JPExpansion& e);
Json to_json(const JPLimitReport& r);
Json to_json(const PerronReport& r);
Json to_json(const ESDivergenceReport& r);
Json to_json(const ConvergenceCertificate& c);
Json to_json(const BratteliDiagram& d);
Json to_json(const TraceEstimate& t);
Json to_json(const ProjectivePseudoLattice& p);
Json to_json(const FunctorBundle& b);

/// [[b_1, ..., b_{n-1}], ...]; entries may be numbers or integer strings.
std::vector<JPDigit> digits_from_json(const Json& j);
BratteliDiagram diagram_from_json(const Json& j);

}  // namespace faf
