#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "polyapprox/embedding.hpp"
#include "polyapprox/gram.hpp"
#include "polyapprox/schemes.hpp"
#include "polyapprox/series.hpp"
#include "polyapprox/spaces.hpp"

// JSON documents in and out. Complex numbers are [re, im]; a bare number is
// read as a real value. Malformed input throws kConfigError with the dotted
// path of the offending field first in the message, e.g.
// "space.alpha[3]: expected a number".
namespace polyapprox::io {

// {"kind": "weighted", "p": 2, "alpha": [...] | {"rule": ..., ...}, "horizon": N}
// {"kind": "hardy", "horizon": N}
// {"kind": "gram", "matrix": [[[re,im],...],...] | [[re,im],...] row-major}
// {"kind": "sup", "oversampling": 16, "horizon": N}
// {"kind": "hb", "b": [[re,im],...], "horizon": N, "working_factor": 4}
// Weight rules: {"rule": "constant", "value": c}, {"rule": "linear"},
// {"rule": "geometric", "base": q}. A missing horizon falls back to
// default_horizon.
SpaceHandle space_from_json(const std::string& text, std::size_t default_horizon,
                            std::string_view field = "space");
std::string space_to_json(const SpaceHandle& space);

// {"rows": [[a00], [a10, a11], ...]}
TriangularArray array_from_json(const std::string& text,
                                std::string_view field = "array");
std::string array_to_json(const TriangularArray& a);

// {"alpha": [...] | rule object, "p": 2, "M": 1, "horizon": N}
embedding::EmbeddingSpec embedding_spec_from_json(const std::string& text,
                                                  std::size_t default_horizon,
                                                  std::string_view field = "spec");

// Row-major nested [re, im] pairs.
std::string gram_to_json(const GramMatrix& g);
GramMatrix gram_from_json(const std::string& text, std::string_view field = "matrix");

// [[re, im], ...] coefficient list.
TaylorPoly poly_from_json(const std::string& text, std::string_view field = "coeffs");
std::string poly_to_json(const TaylorPoly& p);

}  // namespace polyapprox::io
