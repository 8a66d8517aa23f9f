#pragma once

#include <nlohmann/json.hpp>

#include "hnlab/hn_polygon.hpp"
#include "hnlab/local_model.hpp"
#include "hnlab/multi_poly.hpp"
#include "hnlab/p1.hpp"
#include "hnlab/rz.hpp"
#include "hnlab/tor.hpp"

// Wire formats. Scalars are JSON integers, or "num/den" strings for
// non-integral rationals. Parsing failures raise InputError.
namespace hnlab::io {

using nlohmann::json;

json to_json(const Scalar& s);
Scalar scalar_from_json(Field field, const json& j);

/// {"summands": [{"num": d, "den": h, "mult": m}, ...]} in descending slope order.
json to_json(const hn::SlopeMultiset& t);
hn::HNType hn_type_from_json(const json& j);
hn::NewtonSlopes newton_from_json(const json& j);

/// Sorted integer array, descending.
json to_json(const p1::SplitType& s);
p1::SplitType split_type_from_json(const json& j);

/// Coefficient array of x^(deg-i) y^i; [] is the zero form.
json to_json(const BinaryForm& f);
BinaryForm form_from_json(Field field, const json& j);

/// {"source": [...], "target": [...], "entries": [[coeff arrays]]}, entries[j][i].
json to_json(const p1::GradedMap& m);
p1::GradedMap graded_map_from_json(Field field, const json& j);

/// [{"coeff": c, "exp": [e_1, ..., e_n]}, ...]
json to_json(const MultiPoly& p);
MultiPoly multi_poly_from_json(Field field, const json& j);

/// [{"type": [...], "count": c}, ...] sorted by type.
json to_json(const p1::FrequencyTable& t);

/// Ascending coefficient array.
json to_json(const KtPoly& p);
KtPoly kt_poly_from_json(Field field, const json& j);

/// Rows of ascending coefficient arrays.
json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(Field field, const json& j);

json to_json(const tor::KtModule& m);

json to_json(const rz::TangentProfile& t);

}  // namespace hnlab::io
