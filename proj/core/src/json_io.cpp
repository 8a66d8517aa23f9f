#include "hnlab/json_io.hpp"

namespace hnlab::io {

namespace {

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

long as_long(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<long>();
}

}  // namespace

json to_json(const Scalar& s) {
  if (!s.field().is_rational()) return static_cast<long>(s.residue());
  const mpq_class& q = s.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Scalar scalar_from_json(Field field, const json& j) {
  if (j.is_number_integer()) return field.from_int(j.get<long>());
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) throw InputError("bad scalar \"" + j.get<std::string>() + "\"");
    q.canonicalize();
    return Scalar(field, q);
  }
  throw InputError("scalar must be an integer or a \"num/den\" string");
}

json to_json(const hn::SlopeMultiset& t) {
  json arr = json::array();
  for (const auto& [s, m] : t.summands()) arr.push_back({{"num", s.num()}, {"den", s.den()}, {"mult", m}});
  return {{"summands", arr}};
}

namespace {

template <class T>
T slope_multiset_from_json(const json& j) {
  const json& arr = field_of(j, "summands");
  if (!arr.is_array()) throw InputError("\"summands\" must be an array");
  T out;
  for (const auto& e : arr) {
    const long num = as_long(field_of(e, "num"), "num");
    const long den = as_long(field_of(e, "den"), "den");
    const long mult = as_long(field_of(e, "mult"), "mult");
    if (mult <= 0) throw InputError("multiplicity must be positive");
    const hn::Slope s(num, den);
    if (s.den() != den) throw InputError("slope " + std::to_string(num) + "/" + std::to_string(den) + " is not reduced");
    out.add(s, static_cast<std::size_t>(mult));
  }
  return out;
}

}  // namespace

hn::HNType hn_type_from_json(const json& j) { return slope_multiset_from_json<hn::HNType>(j); }

hn::NewtonSlopes newton_from_json(const json& j) { return slope_multiset_from_json<hn::NewtonSlopes>(j); }

json to_json(const p1::SplitType& s) { return s.twists(); }

p1::SplitType split_type_from_json(const json& j) {
  if (!j.is_array()) throw InputError("splitting type must be an integer array");
  std::vector<long> t;
  for (const auto& e : j) t.push_back(as_long(e, "twist"));
  return p1::SplitType(std::move(t));
}

json to_json(const BinaryForm& f) {
  json arr = json::array();
  if (f.is_zero()) return arr;
  for (const auto& c : f.coefficients()) arr.push_back(to_json(c));
  return arr;
}

BinaryForm form_from_json(Field field, const json& j) {
  if (!j.is_array()) throw InputError("binary form must be a coefficient array");
  std::vector<Scalar> c;
  for (const auto& e : j) c.push_back(scalar_from_json(field, e));
  if (c.empty()) return BinaryForm::zero(field);
  return BinaryForm::from_coefficients(field, std::move(c));
}

json to_json(const p1::GradedMap& m) {
  json entries = json::array();
  for (std::size_t j = 0; j < m.target().size(); ++j) {
    json row = json::array();
    for (std::size_t i = 0; i < m.source().size(); ++i) row.push_back(to_json(m.entry(j, i)));
    entries.push_back(row);
  }
  return {{"source", m.source()}, {"target", m.target()}, {"entries", entries}};
}

p1::GradedMap graded_map_from_json(Field field, const json& j) {
  std::vector<long> source, target;
  for (const auto& e : field_of(j, "source")) source.push_back(as_long(e, "source twist"));
  for (const auto& e : field_of(j, "target")) target.push_back(as_long(e, "target twist"));
  const json& rows = field_of(j, "entries");
  if (!rows.is_array() || rows.size() != target.size()) throw InputError("\"entries\" needs one row per target summand");
  std::vector<BinaryForm> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != source.size()) throw InputError("each entry row needs one form per source summand");
    for (const auto& e : row) entries.push_back(form_from_json(field, e));
  }
  return p1::GradedMap(field, std::move(source), std::move(target), std::move(entries));
}

json to_json(const MultiPoly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({{"coeff", to_json(c)}, {"exp", e}});
  return arr;
}

MultiPoly multi_poly_from_json(Field field, const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("polynomial must be a nonempty term array");
  const std::size_t n = field_of(j.front(), "exp").size();
  MultiPoly p(field, n);
  for (const auto& term : j) {
    MultiPoly::Exponents e;
    for (const auto& x : field_of(term, "exp")) {
      const long v = as_long(x, "exponent");
      if (v < 0) throw InputError("exponents must be nonnegative");
      e.push_back(static_cast<unsigned>(v));
    }
    p.add_term(scalar_from_json(field, field_of(term, "coeff")), e);
  }
  return p;
}

json to_json(const p1::FrequencyTable& t) {
  json arr = json::array();
  for (const auto& [type, count] : t.counts) arr.push_back({{"type", to_json(type)}, {"count", count}});
  return arr;
}

json to_json(const KtPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

KtPoly kt_poly_from_json(Field field, const json& j) {
  if (!j.is_array()) throw InputError("polynomial in t must be a coefficient array");
  std::vector<Scalar> c;
  for (const auto& e : j) c.push_back(scalar_from_json(field, e));
  return KtPoly(field, std::move(c));
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

PolyMatrix poly_matrix_from_json(Field field, const json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.front().size() : 0;
  PolyMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = kt_poly_from_json(field, j[i][c]);
  }
  return m;
}

json to_json(const tor::KtModule& m) {
  json torsion = json::array();
  for (const auto& d : m.torsion()) torsion.push_back(to_json(d));
  return {{"free_rank", m.free_rank()}, {"torsion", torsion}};
}

json to_json(const rz::TangentProfile& t) {
  return {{"profile", to_json(t.hn)},
          {"slopes", t.hn.to_string()},
          {"zero_mult", t.zero_mult},
          {"special", t.special},
          {"smooth", t.smooth},
          {"dimAx", t.dim_ax},
          {"admissible", t.admissible}};
}

}  // namespace hnlab::io
