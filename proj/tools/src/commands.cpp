#include "commands.hpp"

#include <algorithm>
#include <sstream>

#include "hnlab/hn_polygon.hpp"
#include "hnlab/json_io.hpp"
#include "hnlab/local_model.hpp"
#include "hnlab/multilinear.hpp"
#include "hnlab/p1.hpp"
#include "hnlab/rz.hpp"
#include "hnlab/tor.hpp"
#include "sampling.hpp"

namespace hnlab::cli {

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("input is missing \"") + key + "\"");
  return doc.at(key);
}

std::vector<std::string> row(std::initializer_list<std::string> cells) { return cells; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json h0_json(const hn::H0Dim& h) { return h.infinite ? json("infinite") : json(h.value); }

std::string h0_text(const hn::H0Dim& h) { return h.infinite ? "infinite" : std::to_string(h.value); }

std::string module_text(const tor::KtModule& m) { return m.to_string(); }

}  // namespace

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q" || text == "rationals") return Field::rationals();
  std::string digits = text;
  if (digits.rfind("F_", 0) == 0)
    digits = digits.substr(2);
  else if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'p'))
    digits = digits.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
      digits.size() > 12)
    throw InputError("field must be q or an odd prime, got '" + text + "'");
  return Field::prime(std::stoull(digits));
}

json parse_compact_slopes(const std::string& text) {
  hn::SlopeMultiset t;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    const hn::Slope s = hn::Slope::parse(item.substr(0, colon));
    long mult = 1;
    if (colon != std::string::npos) {
      const std::string m = item.substr(colon + 1);
      std::size_t used = 0;
      try {
        mult = std::stol(m, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != m.size() || mult <= 0) throw InputError("bad multiplicity in '" + item + "'");
    }
    t.add(s, static_cast<std::size_t>(mult));
  }
  return io::to_json(t);
}

// --- hn ----------------------------------------------------------------------

Report hn_command(const std::string& op, const json& doc) {
  Report r;
  r.subcommand = "hn " + op;
  r.inputs = doc;
  if (op == "pdiv" || op == "isocrystal") {
    const hn::NewtonSlopes n = io::newton_from_json(require(doc, "slopes"));
    const hn::HNType e = op == "pdiv" ? hn::bundle_of_pdiv(n) : hn::bundle_of_isocrystal(n);
    r.results["bundle"] = io::to_json(e);
    r.results["isoclinic"] = hn::is_isoclinic(n);
    r.table = {row({"newton", n.to_string()}), row({"bundle", e.to_string()}), row({"isoclinic", yes_no(hn::is_isoclinic(n))})};
    return r;
  }
  const hn::HNType t = io::hn_type_from_json(require(doc, "slopes"));
  if (op == "dual") {
    const hn::HNType d = hn::dual(t);
    r.results["dual"] = io::to_json(d);
    r.table = {row({"type", t.to_string()}), row({"dual", d.to_string()})};
  } else if (op == "tensor") {
    const hn::HNType other = io::hn_type_from_json(require(doc, "with"));
    const hn::HNType p = hn::tensor(t, other);
    r.results["tensor"] = io::to_json(p);
    r.table = {row({"type", t.to_string()}), row({"with", other.to_string()}), row({"tensor", p.to_string()})};
  } else if (op == "info") {
    if (t.empty()) throw InputError("hn info needs a nonempty type");
    const hn::H0Dim h0 = hn::h0_dim(t);
    r.results["rank"] = hn::rank(t);
    r.results["degree"] = hn::degree(t);
    r.results["mu_max"] = hn::mu_max(t).to_string();
    r.results["mu_min"] = hn::mu_min(t).to_string();
    r.results["h0"] = h0_json(h0);
    r.results["h1_vanishes"] = hn::h1_vanishes(t);
    r.results["all_slopes_positive"] = hn::all_slopes_positive(t);
    r.table = {row({"type", t.to_string()}),
               row({"rank", std::to_string(hn::rank(t))}),
               row({"degree", std::to_string(hn::degree(t))}),
               row({"mu_max", hn::mu_max(t).to_string()}),
               row({"mu_min", hn::mu_min(t).to_string()}),
               row({"h0", h0_text(h0)}),
               row({"h1_vanishes", yes_no(hn::h1_vanishes(t))}),
               row({"all_slopes_positive", yes_no(hn::all_slopes_positive(t))})};
  } else {
    throw InputError("unknown hn operation '" + op + "'");
  }
  return r;
}

// --- p1 ----------------------------------------------------------------------

Report p1_kernel(const Common& c, const json& doc) {
  const Field f = parse_field(c.field);
  const p1::GradedMap phi = io::graded_map_from_json(f, require(doc, "map"));
  const p1::SplitType k = p1::kernel_split_type(phi);
  Report r;
  r.subcommand = "p1 kernel";
  r.inputs = {{"field", f.name()}, {"input", doc}};
  r.results["generic_rank"] = p1::generic_rank(phi);
  r.results["fiberwise_surjective"] = p1::is_fiberwise_surjective(phi);
  r.results["kernel"] = io::to_json(k);
  r.results["kernel_rank"] = k.rank();
  r.results["kernel_degree"] = k.degree();
  r.results["h0"] = p1::h0_twist(k, 0);
  r.results["h1"] = p1::h1_twist(k, 0);
  r.table = {row({"source", phi.source_type().to_string()}),
             row({"target", phi.target_type().to_string()}),
             row({"generic rank", std::to_string(p1::generic_rank(phi))}),
             row({"fiberwise surjective", yes_no(p1::is_fiberwise_surjective(phi))}),
             row({"kernel", k.to_string()}),
             row({"h0 / h1", std::to_string(p1::h0_twist(k, 0)) + " / " + std::to_string(p1::h1_twist(k, 0))})};
  return r;
}

Report p1_modify(const Common& c, const json& doc) {
  const Field f = parse_field(c.field);
  const p1::SplitType e = io::split_type_from_json(require(doc, "type"));
  const json& pt = require(doc, "point");
  if (!pt.is_array() || pt.size() != 2) throw InputError("point must be [x, y]");
  const p1::ProjectivePoint point(io::scalar_from_json(f, pt[0]), io::scalar_from_json(f, pt[1]));
  const json& basis = require(doc, "basis");
  if (!basis.is_array()) throw InputError("basis must be an array of column vectors");
  std::vector<std::vector<Scalar>> columns;
  for (const json& col : basis) {
    if (!col.is_array() || col.size() != e.rank()) throw InputError("each basis vector needs one entry per summand");
    std::vector<Scalar> v;
    for (const json& x : col) v.push_back(io::scalar_from_json(f, x));
    columns.push_back(std::move(v));
  }
  const p1::FiberSubspace k(point, Matrix::from_columns(f, e.rank(), columns));
  const local_model::ModificationReport m = local_model::modification_degree_check(e, k);
  Report r;
  r.subcommand = "p1 modify";
  r.inputs = {{"field", f.name()}, {"input", doc}};
  r.results["modified"] = io::to_json(m.modified);
  r.results["degree_drop"] = m.degree_drop;
  r.results["codim"] = m.codim;
  r.results["balanced"] = m.balanced;
  r.table = {row({"original", m.original.to_string()}),
             row({"modified", m.modified.to_string()}),
             row({"degree drop", std::to_string(m.degree_drop)}),
             row({"codim K", std::to_string(m.codim)})};
  return r;
}

Report p1_jacobian(const Common& c, const QuarticParams& q, const std::optional<json>& doc) {
  const Field f = parse_field(c.field);
  std::optional<MultiPoly> p;
  std::vector<BinaryForm> g;
  std::size_t draws = 0;
  Report r;
  r.subcommand = "p1 jacobian";
  if (doc) {
    p = io::multi_poly_from_json(f, require(*doc, "polynomial"));
    const json& gj = require(*doc, "g");
    if (!gj.is_array()) throw InputError("g must be an array of binary forms");
    for (const json& x : gj) g.push_back(io::form_from_json(f, x));
    r.inputs = {{"field", f.name()}, {"input", *doc}};
  } else {
    // same draw order as p1 sample: P, then g_1..g_n; redraw until D_g P is surjective
    SplitMix64 rng(c.seed);
    constexpr std::size_t max_draws = 10000;
    for (draws = 1; draws <= max_draws; ++draws) {
      p = p1::random_homogeneous(f, q.variables, q.poly_degree, rng, q.bound);
      g.clear();
      for (std::size_t i = 0; i < q.variables; ++i) g.push_back(p1::random_form(f, q.form_degree, rng, q.bound));
      const bool degenerate =
          p->is_zero() || std::all_of(g.begin(), g.end(), [](const BinaryForm& x) { return x.is_zero(); });
      if (!degenerate && p1::jacobian_analysis(*p, g).surjective) break;
    }
    if (draws > max_draws) throw InputError("no surjective instance within 10000 draws");
    r.inputs = {{"field", f.name()}, {"seed", c.seed}, {"n", q.variables}, {"d", q.form_degree},
                {"delta", q.poly_degree}, {"bound", q.bound}};
    json gj = json::array();
    for (const auto& x : g) gj.push_back(io::to_json(x));
    r.results["instance"] = {{"polynomial", io::to_json(*p)}, {"g", gj}, {"draws", draws}};
  }
  const p1::JacobianReport j = p1::jacobian_analysis(*p, g);
  r.results["hom_dim"] = j.hom_dim;
  r.results["surjective"] = j.surjective;
  r.results["kernel"] = io::to_json(j.kernel);
  r.results["kernel_rank"] = j.kernel.rank();
  r.results["kernel_degree"] = j.kernel.degree();
  r.results["h0_kernel"] = j.h0_kernel;
  r.results["generic"] = j.generic;
  r.table = {row({"P", p->to_string()})};
  for (std::size_t i = 0; i < g.size(); ++i) r.table.push_back(row({"g" + std::to_string(i + 1), g[i].to_string()}));
  r.table.push_back(row({"hom dim", std::to_string(j.hom_dim)}));
  r.table.push_back(row({"surjective", yes_no(j.surjective)}));
  r.table.push_back(row({"kernel", j.kernel.to_string()}));
  r.table.push_back(row({"h0 kernel", std::to_string(j.h0_kernel)}));
  r.table.push_back(row({"generic", yes_no(j.generic)}));
  return r;
}

Report p1_sample(const Common& c, const QuarticParams& q) {
  p1::SampleConfig cfg;
  cfg.field = parse_field(c.field);
  cfg.variables = q.variables;
  cfg.form_degree = q.form_degree;
  cfg.poly_degree = q.poly_degree;
  cfg.coefficient_bound = q.bound;
  cfg.trials = c.trials;
  cfg.seed = c.seed;
  const p1::FrequencyTable t = p1::sample_experiment(cfg);
  Report r;
  r.subcommand = "p1 sample";
  r.inputs = {{"field", cfg.field.name()}, {"seed", c.seed}, {"trials", c.trials}, {"n", q.variables},
              {"d", q.form_degree},        {"delta", q.poly_degree}, {"bound", q.bound}};
  r.results["frequencies"] = io::to_json(t);
  r.results["accepted"] = t.accepted;
  r.results["rejected"] = t.rejected;
  r.table = {row({"kernel type", "count"})};
  for (const auto& [type, count] : t.counts) r.table.push_back(row({type.to_string(), std::to_string(count)}));
  r.table.push_back(row({"accepted", std::to_string(t.accepted)}));
  r.table.push_back(row({"rejected", std::to_string(t.rejected)}));
  return r;
}

// --- checks ------------------------------------------------------------------

Report minor_check(const Common& c, std::optional<std::size_t> n, std::optional<std::size_t> r_fixed) {
  const Field f = parse_field(c.field);
  if (n && (*n < 1 || *n > 8)) throw InputError("--n must lie in 1..8");
  if (r_fixed && n && *r_fixed > *n) throw InputError("--r must not exceed --n");
  SplitMix64 rng(c.seed);
  std::size_t held = 0;
  json failures = json::array();
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const std::size_t size = n ? *n : static_cast<std::size_t>(rng.between(1, 5));
    const std::size_t r = r_fixed ? std::min(*r_fixed, size) : static_cast<std::size_t>(rng.between(0, static_cast<long>(size)));
    const multilinear::LemmaReport rep = multilinear::lemma_kernel_check(random_rank_matrix(f, size, r, rng), r);
    const bool ok = rep.holds && rep.dim_kernel == rep.expected;
    held += ok;
    if (!ok) failures.push_back({{"trial", trial}, {"n", size}, {"r", r}, {"dim_kernel", rep.dim_kernel}, {"dim_K", rep.dim_K}});
  }
  Report out;
  out.subcommand = "minor-check";
  out.inputs = {{"field", f.name()}, {"seed", c.seed}, {"trials", c.trials}};
  if (n) out.inputs["n"] = *n;
  if (r_fixed) out.inputs["r"] = *r_fixed;
  out.results = {{"held", held}, {"failures", failures}};
  out.pass = held == c.trials;
  out.table = {row({"trials", std::to_string(c.trials)}), row({"held", std::to_string(held)})};
  return out;
}

Report trace_check(const Common& c, std::optional<std::size_t> n) {
  const Field f = parse_field(c.field);
  if (n && (*n < 1 || *n > 8)) throw InputError("--n must lie in 1..8");
  SplitMix64 rng(c.seed);
  std::size_t equal = 0;
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const std::size_t size = n ? *n : static_cast<std::size_t>(rng.between(1, 5));
    const Matrix alpha = random_matrix(f, size, size, rng);
    const Matrix s = random_matrix(f, size, size, rng);
    equal += multilinear::trace_wedge_check(alpha, s).equal;
  }
  Report out;
  out.subcommand = "trace-check";
  out.inputs = {{"field", f.name()}, {"seed", c.seed}, {"trials", c.trials}};
  if (n) out.inputs["n"] = *n;
  out.results = {{"equal", equal}};
  out.pass = equal == c.trials;
  out.table = {row({"trials", std::to_string(c.trials)}), row({"equal", std::to_string(equal)})};
  return out;
}

Report tor_check(const Common& c, bool general, const std::optional<json>& doc) {
  const Field f = parse_field(c.field);
  Report out;
  out.subcommand = "tor-check";
  auto check = [](const PolyMatrix& i1, const PolyMatrix& i2) {
    return tor::complex_homology_check(tor::PresentedSES(i1), tor::PresentedSES(i2));
  };
  if (doc) {
    const PolyMatrix i1 = io::poly_matrix_from_json(f, require(*doc, "i1"));
    const PolyMatrix i2 = io::poly_matrix_from_json(f, require(*doc, "i2"));
    const tor::HomologyReport h = check(i1, i2);
    out.inputs = {{"field", f.name()}, {"input", *doc}};
    out.results = {{"h2", io::to_json(h.homology.h2)},
                   {"h1", io::to_json(h.homology.h1)},
                   {"h0", io::to_json(h.homology.h0)},
                   {"tor1", io::to_json(h.expected_tor)},
                   {"tensor", io::to_json(h.expected_tensor)},
                   {"h2_zero", h.h2_zero},
                   {"h1_matches_tor", h.h1_matches_tor},
                   {"h0_matches_tensor", h.h0_matches_tensor}};
    out.pass = h.passed();
    out.table = {row({"H2", module_text(h.homology.h2)}),
                 row({"H1", module_text(h.homology.h1)}),
                 row({"Tor1(B, B')", module_text(h.expected_tor)}),
                 row({"H0", module_text(h.homology.h0)}),
                 row({"B (x) B'", module_text(h.expected_tensor)})};
    return out;
  }
  SplitMix64 rng(c.seed);
  std::size_t passed = 0;
  json failures = json::array();
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const PolyMatrix i1 = random_inclusion(f, 3, 4, !general, rng);
    const PolyMatrix i2 = random_inclusion(f, 3, 4, !general, rng);
    const tor::HomologyReport h = check(i1, i2);
    passed += h.passed();
    if (!h.passed()) failures.push_back({{"trial", trial}, {"i1", io::to_json(i1)}, {"i2", io::to_json(i2)}});
  }
  out.inputs = {{"field", f.name()}, {"seed", c.seed}, {"trials", c.trials}, {"torsion", general ? "general" : "t-power"}};
  out.results = {{"passed", passed}, {"failures", failures}};
  out.pass = passed == c.trials;
  out.table = {row({"trials", std::to_string(c.trials)}), row({"passed", std::to_string(passed)})};
  return out;
}

// --- local model -------------------------------------------------------------

namespace {

local_model::MatrixOverKt read_member(Field f, const json& doc) {
  const json& d = require(doc, "d");
  if (!d.is_number_integer() || d.get<long>() < 0) throw InputError("d must be a nonnegative integer");
  local_model::MatrixOverKt m{io::poly_matrix_from_json(f, require(doc, "matrix")), d.get<std::size_t>()};
  if (m.entries.rows() != m.entries.cols()) throw InputError("matrix must be square");
  if (m.d > m.size()) throw InputError("d must not exceed the matrix size");
  return m;
}

}  // namespace

Report local_model_check(const Common& c, const json& doc) {
  const Field f = parse_field(c.field);
  const local_model::MatrixOverKt m = read_member(f, doc);
  const local_model::MembershipReport rep = local_model::check_point_of_Y(m);
  Report out;
  out.subcommand = "local-model check";
  out.inputs = {{"field", f.name()}, {"input", doc}};
  out.results = {{"det_ok", rep.det_ok},
                 {"rank_mod_t", rep.rank_mod_t},
                 {"member", rep.member},
                 {"determinant", io::to_json(rep.determinant)}};
  out.pass = rep.member;
  out.table = {row({"det", rep.determinant.to_string()}),
               row({"det = t^d unit", yes_no(rep.det_ok)}),
               row({"rank mod t", std::to_string(rep.rank_mod_t)}),
               row({"member", yes_no(rep.member)})};
  return out;
}

Report local_model_factor(const Common& c, const json& doc) {
  const Field f = parse_field(c.field);
  const local_model::MatrixOverKt m = read_member(f, doc);
  std::vector<std::vector<std::size_t>> orders;
  if (doc.contains("column_orders")) {
    const json& co = doc.at("column_orders");
    if (!co.is_array()) throw InputError("column_orders must be an array of permutations");
    for (const json& o : co) {
      std::vector<std::size_t> perm;
      if (!o.is_array()) throw InputError("column_orders must be an array of permutations");
      for (const json& x : o) {
        if (!x.is_number_unsigned()) throw InputError("column order entries must be nonnegative integers");
        perm.push_back(x.get<std::size_t>());
      }
      std::vector<std::size_t> sorted = perm;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw InputError("column order is not a permutation");
      if (perm.size() != m.size()) throw InputError("column order has the wrong length");
      orders.push_back(std::move(perm));
    }
  }
  Report out;
  out.subcommand = "local-model factor";
  out.inputs = {{"field", f.name()}, {"input", doc}};
  try {
    const local_model::BlockFactorization bf = local_model::factor(m, orders);
    const bool round_trip = local_model::reconstruct(bf) == m.entries;
    const bool det_identity = local_model::determinant_identity_holds(m, bf);
    const bool q_unit = !determinant(bf.q).coeff(0).is_zero();
    out.results = {{"column_order", bf.column_order},
                   {"p", io::to_json(bf.p)},
                   {"q", io::to_json(bf.q)},
                   {"precision", bf.precision},
                   {"row_ops", bf.row_ops.size()},
                   {"round_trip", round_trip},
                   {"det_identity", det_identity},
                   {"det_q_unit", q_unit}};
    out.pass = round_trip && det_identity && q_unit;
    std::string order;
    for (std::size_t j : bf.column_order) order += (order.empty() ? "" : " ") + std::to_string(j);
    out.table = {row({"column order", order}),
                 row({"precision", "t^" + std::to_string(bf.precision)}),
                 row({"P", bf.p.to_string()}),
                 row({"Q", bf.q.to_string()}),
                 row({"round trip", yes_no(round_trip)}),
                 row({"det identity", yes_no(det_identity)}),
                 row({"det Q(0) != 0", yes_no(q_unit)})};
  } catch (const local_model::ChartError& e) {
    out.results = {{"chart_error", e.what()}};
    out.pass = false;
    out.table = {row({"chart error", e.what()})};
  }
  return out;
}

// --- rz ----------------------------------------------------------------------

Report rz_enumerate(long height, long dim, const std::optional<std::string>& slope_min,
                    const std::optional<std::string>& slope_max) {
  const rz::RZDatum datum = rz::RZDatum::make(height, dim);
  // tangent slopes lie in [0, 1/n] when d = 1; no default bound is known otherwise
  if (!slope_max && dim != 1) throw InputError("--slope-max is required when --dim is not 1");
  const hn::Slope lo = slope_min ? hn::Slope::parse(*slope_min) : hn::Slope(0);
  const hn::Slope hi = slope_max ? hn::Slope::parse(*slope_max) : hn::Slope(1, height);
  const auto [rank, degree] = rz::tangent_rank_degree(datum);
  const auto all = rz::enumerate_profiles(rank, degree, lo, hi);
  Report out;
  out.subcommand = "rz enumerate";
  out.inputs = {{"height", height}, {"dim", dim}, {"slope_min", lo.to_string()}, {"slope_max", hi.to_string()}};
  json profiles = json::array();
  std::size_t admissible = 0;
  out.table = {row({"profile", "class", "dim A_x", "admissible"})};
  for (const auto& p : all) {
    const rz::TangentProfile t = rz::annotate(p, datum);
    admissible += t.admissible;
    profiles.push_back(io::to_json(t));
    out.table.push_back(row({p.to_string(), t.special ? "special" : "nonspecial smooth",
                             t.special ? std::to_string(t.dim_ax) : "-", yes_no(t.admissible)}));
  }
  json allowed = json::array();
  for (std::size_t m : rz::allowed_zero_multiplicities(height)) allowed.push_back(m);
  out.results = {{"rank", rank},
                 {"degree", degree},
                 {"profiles", profiles},
                 {"enumerated", all.size()},
                 {"admissible", admissible},
                 {"allowed_zero_multiplicities", allowed}};
  out.table.insert(out.table.begin(), row({"rank " + std::to_string(rank) + ", degree " + std::to_string(degree) +
                                           ", slopes in [" + lo.to_string() + ", " + hi.to_string() + "]"}));
  return out;
}

}  // namespace hnlab::cli
