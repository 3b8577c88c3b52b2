#ifndef QI_IO_HPP
#define QI_IO_HPP

#include <string>
#include <utility>

#include "qi/berezin.hpp"
#include "qi/lambda.hpp"
#include "qi/lmo.hpp"
#include "qi/manifold.hpp"
#include "qi/rw.hpp"

namespace qi::io {

// Manifold spec: {"name": ..., "b1": int, "torOrder": int, and exactly one
// of "cupTriple" (b1=3), "linkingMu" (b1=2), "alexander" (b1=1, the
// symmetrized half coefficients t^0..t^d)}.
ClassicalData parse_manifold(const std::string& json_text);

// Space spec: {"name": ..., "n": int, "eulerChar": rational, "pairing":
// {"m1+m2+...": rational, ...}} with one key per partition of n.
WeightData parse_space(const std::string& json_text);

// {"n": int, "z": [entry...]} / {"n": int, "g": [entry...]}; entries are
// rationals or polynomial expressions in named symbols.
ZVector parse_z_vector(const std::string& json_text);
GData parse_g_data(const std::string& json_text);

// {"size": int, "entries": [[...], ...]} with rational entries.
AntisymMatrix parse_antisym_matrix(const std::string& json_text);

enum class Format { Table, Machine };

std::string render_diagram_series(const FormalDiagramSeries& s, Format format);
std::string render_lambda(const LambdaVector& l, Format format);
std::string render_consum(const ConsumReport& r, Format format);

}  // namespace qi::io

#endif
