// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "hnlab/hn_polygon.hpp"
#include "hnlab/local_model.hpp"
#include "hnlab/multilinear.hpp"
#include "hnlab/p1.hpp"
#include "hnlab/rz.hpp"
#include "hnlab/tor.hpp"

using namespace hnlab;
using hn::HNType;
using hn::Slope;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

const Field Q = Field::rationals();
const Field F101 = Field::prime(101);

// --- 1, 2, 3: Lubin-Tate tables ---------------------------------------------

Outcome lubin_tate_n2() {
  const rz::RZDatum datum = rz::RZDatum::make(2, 1);
  const auto [rank, degree] = rz::tangent_rank_degree(datum);
  const auto all = rz::enumerate_profiles(rank, degree, Slope(0), Slope(1, 2));
  const auto kept = rz::filter_admissible(all, datum);
  Outcome o;
  o.pass = kept.size() == 2 && all.size() == 2 &&
           kept[0].hn == HNType{{Slope(1, 2), 1}, {Slope(0), 1}} && kept[0].special && !kept[0].smooth &&
           kept[1].hn == HNType{{Slope(1, 3), 1}} && !kept[1].special && kept[1].smooth;
  std::ostringstream s;
  for (const auto& t : kept) s << t.hn.to_string() << (t.special ? " special; " : " nonspecial smooth; ");
  o.detail = s.str();
  return o;
}

Outcome lubin_tate_n3() {
  const rz::RZDatum datum = rz::RZDatum::make(3, 1);
  const auto [rank, degree] = rz::tangent_rank_degree(datum);
  const auto all = rz::enumerate_profiles(rank, degree, Slope(0), Slope(1, 3));
  const std::vector<HNType> five{
      HNType{{Slope(1, 3), 2}, {Slope(0), 2}}, HNType{{Slope(1, 3), 1}, {Slope(1, 4), 1}, {Slope(0), 1}},
      HNType{{Slope(1, 3), 1}, {Slope(1, 5), 1}}, HNType{{Slope(2, 7), 1}, {Slope(0), 1}}, HNType{{Slope(1, 4), 2}}};
  const auto kept = rz::filter_admissible(all, datum);
  Outcome o;
  o.pass = all == five && kept.size() == 3 && kept[0].hn == five[0] && kept[0].dim_ax == 3 && kept[1].hn == five[2] &&
           kept[2].hn == five[4];
  std::ostringstream s;
  s << all.size() << " enumerated, kept:";
  for (const auto& t : kept) s << ' ' << t.hn.to_string() << "[dimAx=" << t.dim_ax << ']';
  o.detail = s.str();
  return o;
}

Outcome tangent_bundle_numbers() {
  Outcome o;
  for (long n = 2; n <= 8; ++n) {
    const auto [rank, degree] = rz::tangent_rank_degree(rz::RZDatum::make(n, 1));
    if (rank != static_cast<std::size_t>(n * n - 1) || degree != n - 1) {
      o.pass = false;
      o.detail += "n=" + std::to_string(n) + " wrong; ";
    }
  }
  if (o.pass) o.detail = "n = 2..8";
  return o;
}

// --- 4, 5: the quartic example -----------------------------------------------

struct QuarticTally {
  std::size_t instances = 0;
  std::size_t conforming = 0;
  std::size_t generic = 0;  // {0,-1}
  std::size_t special = 0;  // {1,-2}
  std::size_t draws = 0;
};

QuarticTally tally_q, tally_p;

QuarticTally run_quartic(Field f, std::uint64_t seed, std::size_t wanted) {
  QuarticTally t;
  SplitMix64 rng(seed);
  while (t.instances < wanted) {
    ++t.draws;
    const MultiPoly p = p1::random_homogeneous(f, 3, 4, rng, 1);
    std::vector<BinaryForm> g;
    for (int i = 0; i < 3; ++i) g.push_back(p1::random_form(f, 1, rng, 1));
    if (p.is_zero() || std::all_of(g.begin(), g.end(), [](const BinaryForm& x) { return x.is_zero(); })) continue;
    const p1::JacobianReport r = p1::jacobian_analysis(p, g);
    if (!r.surjective) continue;
    ++t.instances;
    const bool type_a = r.kernel == p1::SplitType{0, -1};
    const bool type_b = r.kernel == p1::SplitType{1, -2};
    t.generic += type_a;
    t.special += type_b;
    const bool ok = r.hom_dim == 12 && r.kernel.rank() == 2 && r.kernel.degree() == -1 && (type_a || type_b) &&
                    ((r.h0_kernel == 1) == type_a) && r.h0_kernel == oracle::kernel_h0(r.derivative, 0) &&
                    r.generic == type_a;
    t.conforming += ok;
  }
  return t;
}

std::string describe(const char* name, const QuarticTally& t) {
  std::ostringstream s;
  s << name << ": " << t.conforming << '/' << t.instances << " conform, {0,-1}=" << t.generic << " {1,-2}=" << t.special;
  return s.str();
}

Outcome quartic_example() {
  tally_p = run_quartic(F101, 0, 500);
  tally_q = run_quartic(Q, 0, 500);
  Outcome o;
  o.pass = tally_p.conforming == tally_p.instances && tally_q.conforming == tally_q.instances;
  o.detail = describe("F_101", tally_p) + "; " + describe("Q", tally_q);
  return o;
}

Outcome genericity() {
  const std::size_t generic = tally_p.generic + tally_q.generic;
  const std::size_t special = tally_p.special + tally_q.special;
  const std::size_t total = tally_p.instances + tally_q.instances;
  Outcome o;
  o.pass = generic > 0 && special > 0 && 2 * generic > total;
  std::ostringstream s;
  s << "{0,-1}=" << generic << " {1,-2}=" << special << " of " << total << " (F_101 {1,-2}=" << tally_p.special
    << ", Q {1,-2}=" << tally_q.special << ')';
  o.detail = s.str();
  return o;
}

// --- 6, 7: multilinear -------------------------------------------------------

Outcome minor_lemma() {
  SplitMix64 rng(6);
  Outcome o;
  std::size_t ok = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Field f = trial % 2 ? Q : F101;
    const std::size_t n = rng.between(1, 5), r = rng.between(0, static_cast<long>(n));
    const auto rep = multilinear::lemma_kernel_check(oracle::random_rank_matrix(f, n, r, rng), r);
    ok += rep.holds && rep.dim_kernel == n * n - (n - r) * (n - r);
  }
  o.pass = ok == 500;
  o.detail = std::to_string(ok) + "/500";
  return o;
}

Outcome trace_wedge() {
  SplitMix64 rng(7);
  std::size_t ok = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng.between(1, 5);
    ok += multilinear::trace_wedge_check(oracle::random_matrix(Q, n, n, rng, 5), oracle::random_matrix(Q, n, n, rng, 5)).equal;
  }
  return {ok == 500, std::to_string(ok) + "/500"};
}

// --- 8: Tor ------------------------------------------------------------------

Outcome tor_lemma() {
  SplitMix64 rng(8);
  std::size_t ok = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Field f = trial % 2 ? Q : F101;
    const bool t_power = trial % 4 < 2;
    const auto a = oracle::random_presentation(f, 3, 4, rng, t_power);
    const auto b = oracle::random_presentation(f, 3, 4, rng, t_power);
    ok += tor::complex_homology_check(tor::PresentedSES(a.inclusion), tor::PresentedSES(b.inclusion)).passed();
  }
  return {ok == 300, std::to_string(ok) + "/300"};
}

// --- 9: local model ----------------------------------------------------------

Outcome local_model_round_trip() {
  SplitMix64 rng(9);
  std::size_t ok = 0, unit = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Field f = trial % 2 ? Q : F101;
    const std::size_t n = rng.between(1, 4), d = rng.between(0, static_cast<long>(n));
    const local_model::MatrixOverKt m{oracle::random_member(f, n, d, 3, rng), d};
    const auto bf = local_model::factor(m, oracle::all_permutations(n));
    ok += local_model::reconstruct(bf) == m.entries && local_model::determinant_identity_holds(m, bf);
    unit += !determinant(bf.q).coeff(0).is_zero();
  }
  return {ok == 300 && unit == 300, std::to_string(ok) + "/300 round trips, " + std::to_string(unit) + "/300 det Q(0) != 0"};
}

// --- 10: slope dictionary ----------------------------------------------------

Outcome slope_dictionary() {
  SplitMix64 rng(10);
  std::size_t ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    hn::NewtonSlopes h;
    const int parts = static_cast<int>(rng.between(1, 4));
    for (int k = 0; k < parts; ++k) {
      const long den = rng.between(1, 8);
      h.add(Slope(rng.between(0, den), den), static_cast<std::size_t>(rng.between(1, 3)));
    }
    ok += hn::bundle_of_pdiv(h).summands() == h.summands();
  }
  bool lt = true;
  for (long n = 1; n <= 8; ++n) lt = lt && hn::bundle_of_pdiv(hn::NewtonSlopes{{Slope(1, n), 1}}) == HNType{{Slope(1, n), 1}};
  return {ok == 200 && lt, std::to_string(ok) + "/200, Lubin-Tate 1/n for n = 1..8 " + (lt ? "ok" : "wrong")};
}

// --- 11: enumerator against brute force ---------------------------------------

Outcome enumerator_oracle() {
  const auto bounds = oracle::farey_range(-1, 1, 8);
  std::size_t cases = 0, agree = 0;
  for (std::size_t rank = 1; rank <= 12; ++rank)
    for (std::size_t i = 0; i < bounds.size(); ++i)
      for (std::size_t j = i; j < bounds.size(); ++j) {
        const auto expected = oracle::brute_force_profiles_by_degree(rank, bounds[i], bounds[j]);
        for (long degree = -6; degree <= 6; ++degree) {
          ++cases;
          const auto it = expected.find(degree);
          const std::vector<HNType> want = it == expected.end() ? std::vector<HNType>{} : it->second;
          agree += rz::enumerate_profiles(rank, degree, bounds[i], bounds[j]) == want;
        }
      }
  return {agree == cases, std::to_string(agree) + "/" + std::to_string(cases) + " (rank <= 12, |degree| <= 6, " +
                              std::to_string(bounds.size()) + " bounds in [-1, 1] with denominator <= 8)"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Lubin-Tate n=2 table", 1.0, lubin_tate_n2},
      {2, "Lubin-Tate n=3 table", 1.0, lubin_tate_n3},
      {3, "tangent rank/degree", 0.0, tangent_bundle_numbers},
      {4, "quartic example over F_101 and Q", 30.0, quartic_example},
      {5, "genericity of {0,-1}", 0.0, genericity},
      {6, "minor-map lemma", 30.0, minor_lemma},
      {7, "trace-wedge identity", 0.0, trace_wedge},
      {8, "Tor lemma", 0.0, tor_lemma},
      {9, "local model round trip", 0.0, local_model_round_trip},
      {10, "slope dictionary", 0.0, slope_dictionary},
      {11, "enumerator oracle equivalence", 0.0, enumerator_oracle},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit == 0.0 || seconds < c.time_limit;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("criterion %2d %-36s %s  %.3fs%s  %s\n", c.id, c.name.c_str(), pass ? "PASS" : "FAIL", seconds,
                in_time ? "" : " (over time limit)", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
