#include "hnlab/p1.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hnlab/poly_matrix.hpp"

namespace hnlab::p1 {

SplitType::SplitType(std::initializer_list<long> twists) : SplitType(std::vector<long>(twists)) {}

SplitType::SplitType(std::vector<long> twists) : twists_(std::move(twists)) {
  std::sort(twists_.begin(), twists_.end(), std::greater<>());
}

long SplitType::degree() const { return std::accumulate(twists_.begin(), twists_.end(), 0L); }

std::string SplitType::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < twists_.size(); ++i) os << (i ? "," : "") << twists_[i];
  os << '}';
  return os.str();
}

std::size_t h0_twist(const SplitType& s, long m) {
  std::size_t h = 0;
  for (long c : s.twists()) h += static_cast<std::size_t>(std::max(0L, c + m + 1));
  return h;
}

std::size_t h1_twist(const SplitType& s, long m) {
  std::size_t h = 0;
  for (long c : s.twists()) h += static_cast<std::size_t>(std::max(0L, -c - m - 1));
  return h;
}

GradedMap::GradedMap(Field field, std::vector<long> source, std::vector<long> target, std::vector<BinaryForm> entries)
    : field_(field), source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (entries_.size() != source_.size() * target_.size()) throw InputError("graded map entry count does not match its shape");
  for (std::size_t j = 0; j < target_.size(); ++j)
    for (std::size_t i = 0; i < source_.size(); ++i) {
      const BinaryForm& e = entry(j, i);
      if (!(e.field() == field_)) throw InputError("graded map entries from mixed fields");
      if (!e.is_zero() && e.degree() != target_[j] - source_[i])
        throw InputError("graded map entry (" + std::to_string(j) + "," + std::to_string(i) + ") has degree " +
                         std::to_string(e.degree()) + ", expected " + std::to_string(target_[j] - source_[i]));
    }
}

GradedMap GradedMap::identity(Field field, const std::vector<long>& twists) {
  std::vector<BinaryForm> entries;
  for (std::size_t j = 0; j < twists.size(); ++j)
    for (std::size_t i = 0; i < twists.size(); ++i)
      entries.push_back(i == j ? BinaryForm::monomial(field.one(), 0, 0) : BinaryForm::zero(field));
  return GradedMap(field, twists, twists, std::move(entries));
}

ProjectivePoint::ProjectivePoint(Scalar x, Scalar y) : x_(std::move(x)), y_(std::move(y)) {
  if (!(x_.field() == y_.field())) throw InputError("point coordinates from mixed fields");
  if (!x_.is_zero()) {
    y_ = y_ / x_;
    x_ = x_.field().one();
  } else if (!y_.is_zero()) {
    y_ = y_.field().one();
  } else {
    throw InputError("(0:0) is not a point of P^1");
  }
}

FiberSubspace::FiberSubspace(ProjectivePoint p, Matrix b) : point(std::move(p)), basis(std::move(b)) {
  if (!(basis.field() == point.x().field()) && basis.rows() * basis.cols() > 0)
    throw InputError("fiber subspace and point from mixed fields");
  if (rank(basis) != basis.cols()) throw InputError("fiber subspace basis columns are linearly dependent");
}

namespace {

PolyMatrix dehomogenized(const GradedMap& phi) {
  PolyMatrix m(phi.field(), phi.target().size(), phi.source().size());
  for (std::size_t j = 0; j < phi.target().size(); ++j)
    for (std::size_t i = 0; i < phi.source().size(); ++i) m(j, i) = phi.entry(j, i).dehomogenize();
  return m;
}

// Matrix of H^0(phi(m)) in monomial bases x^(D-k) y^k.
Matrix graded_piece(const GradedMap& phi, long m) {
  const Field f = phi.field();
  std::vector<std::size_t> row_offset, col_offset;
  std::size_t rows = 0, cols = 0;
  for (long b : phi.target()) {
    row_offset.push_back(rows);
    rows += static_cast<std::size_t>(std::max(0L, b + m + 1));
  }
  for (long a : phi.source()) {
    col_offset.push_back(cols);
    cols += static_cast<std::size_t>(std::max(0L, a + m + 1));
  }
  Matrix out(f, rows, cols);
  for (std::size_t i = 0; i < phi.source().size(); ++i) {
    const long da = phi.source()[i] + m;
    if (da < 0) continue;
    for (std::size_t j = 0; j < phi.target().size(); ++j) {
      const BinaryForm& e = phi.entry(j, i);
      if (e.is_zero()) continue;
      const long de = e.degree();
      // x^(da-k) y^k times sum_l e_l x^(de-l) y^l lands at index k + l of degree da+de
      for (long k = 0; k <= da; ++k)
        for (long l = 0; l <= de; ++l) out(row_offset[j] + k + l, col_offset[i] + k) += e.coeff(l);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::size_t generic_rank(const GradedMap& phi) { return rank_over_fractions(dehomogenized(phi)); }

std::size_t graded_kernel_dim(const GradedMap& phi, long m) {
  const Matrix piece = graded_piece(phi, m);
  return piece.cols() - rank(piece);
}

SplitType split_type_from_h0(const std::function<std::size_t(long)>& h0, long m_start, std::size_t rank, long m_cap) {
  if (rank == 0) return SplitType{};
  if (h0(m_start) != 0) throw std::logic_error("split_type_from_h0: h0 does not vanish at the starting twist");
  std::vector<long> twists;
  std::size_t prev_h0 = 0, prev_delta = 0;
  for (long m = m_start + 1;; ++m) {
    if (m > m_cap)
      throw std::runtime_error("splitting type scan exceeded twist " + std::to_string(m_cap) + " with " +
                               std::to_string(prev_delta) + " of " + std::to_string(rank) + " summands found");
    const std::size_t cur = h0(m);
    const std::size_t delta = cur - prev_h0;  // #{l : c_l >= -m}
    if (delta < prev_delta || delta > rank) throw std::logic_error("splitting type scan: inconsistent Hilbert function");
    for (std::size_t k = prev_delta; k < delta; ++k) twists.push_back(-m);
    prev_h0 = cur;
    prev_delta = delta;
    if (delta == rank) break;
  }
  return SplitType(std::move(twists));
}

SplitType kernel_split_type(const GradedMap& phi) {
  const auto& a = phi.source();
  if (a.empty()) return SplitType{};
  const std::size_t rho = generic_rank(phi);
  const std::size_t r = a.size() - rho;
  if (r == 0) return SplitType{};

  const long a_max = *std::max_element(a.begin(), a.end());
  std::vector<long> b = phi.target();
  std::sort(b.begin(), b.end(), std::greater<>());
  const long image_degree_bound = std::accumulate(b.begin(), b.begin() + static_cast<long>(rho), 0L);
  const long source_degree = std::accumulate(a.begin(), a.end(), 0L);
  // c_min >= deg(ker) - (r-1) a_max and deg(ker) >= sum a - (sum of the largest rho b's)
  const long c_min_bound = source_degree - image_degree_bound - static_cast<long>(r - 1) * a_max;
  return split_type_from_h0([&](long m) { return graded_kernel_dim(phi, m); }, -a_max - 1, r, -c_min_bound + 1);
}

bool is_fiberwise_surjective(const GradedMap& phi) {
  const std::size_t t = phi.target().size(), s = phi.source().size();
  if (t == 0) return true;
  if (t > s) return false;
  if (generic_rank(phi) < t) return false;
  const PolyMatrix m = dehomogenized(phi);
  const long target_degree = std::accumulate(phi.target().begin(), phi.target().end(), 0L);
  BinaryForm g = BinaryForm::zero(phi.field());
  std::vector<std::size_t> all_rows(t);
  std::iota(all_rows.begin(), all_rows.end(), 0);
  for (const auto& cols : subsets(s, t)) {
    PolyMatrix minor(phi.field(), t, t);
    long degree = target_degree;
    for (std::size_t jj = 0; jj < t; ++jj) {
      degree -= phi.source()[cols[jj]];
      for (std::size_t ii = 0; ii < t; ++ii) minor(ii, jj) = m(ii, cols[jj]);
    }
    const KtPoly det = determinant(minor);
    if (det.is_zero()) continue;
    g = gcd(g, BinaryForm::homogenize(det, degree));
    if (g.degree() == 0) return true;
  }
  return !g.is_zero() && g.degree() == 0;
}

std::size_t modified_h0(const SplitType& e, const FiberSubspace& k, long m) {
  const std::size_t r = e.rank();
  if (k.basis.rows() != r) throw InputError("fiber subspace lives in a space of the wrong dimension");
  const Field f = k.point.x().field();
  // rows of q cut out K inside the fiber
  const Matrix q = kernel_basis(k.basis.transpose()).transpose();
  std::size_t cols = 0;
  for (long c : e.twists()) cols += static_cast<std::size_t>(std::max(0L, c + m + 1));
  Matrix eval(f, r, cols);
  std::size_t col = 0;
  for (std::size_t l = 0; l < r; ++l) {
    const long deg = e.twists()[l] + m;
    for (long j = 0; j <= deg; ++j, ++col)
      eval(l, col) = BinaryForm::monomial(f.one(), deg, j).evaluate(k.point.x(), k.point.y());
  }
  if (q.rows() == 0) return cols;
  const Matrix conditions = q * eval;
  return cols - rank(conditions);
}

SplitType modify(const SplitType& e, const FiberSubspace& k) {
  if (e.empty()) return e;
  if (k.dimension() > e.rank()) throw InputError("fiber subspace larger than the fiber");
  const long c_max = e.twists().front(), c_min = e.twists().back();
  return split_type_from_h0([&](long m) { return modified_h0(e, k, m); }, -c_max - 1, e.rank(), -c_min + 2);
}

JacobianReport jacobian_analysis(const MultiPoly& p, const std::vector<BinaryForm>& g) {
  const Field f = p.field();
  const std::size_t n = p.variables();
  if (g.size() != n) throw InputError("jacobian_analysis: need one form per variable");
  const unsigned delta = p.homogeneous_degree();
  long d = -1;
  for (const auto& gi : g) {
    if (!(gi.field() == f)) throw InputError("jacobian_analysis: mixed fields");
    if (gi.is_zero()) continue;
    if (d < 0)
      d = gi.degree();
    else if (gi.degree() != d)
      throw InputError("jacobian_analysis: forms of different degrees");
  }
  if (d < 0) throw InputError("jacobian_analysis: all forms are zero, degree undetermined");

  std::vector<BinaryForm> entries;
  for (std::size_t i = 0; i < n; ++i) entries.push_back(substitute(partial(p, i), g));
  GradedMap dgp(f, std::vector<long>(n, d), {d * static_cast<long>(delta)}, std::move(entries));

  JacobianReport report{dgp, 0, false, SplitType{}, 0, false};
  report.hom_dim = n * static_cast<std::size_t>(d * (static_cast<long>(delta) - 1) + 1);
  report.surjective = is_fiberwise_surjective(dgp);
  report.kernel = kernel_split_type(dgp);
  report.h0_kernel = h0_twist(report.kernel, 0);
  report.generic = h1_twist(report.kernel, 0) == 0;
  return report;
}

namespace {

void exponent_vectors(std::size_t n, unsigned degree, std::vector<MultiPoly::Exponents>& out) {
  MultiPoly::Exponents cur(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  if (n == 0) return;
  rec(0, degree);
}

}  // namespace

MultiPoly random_homogeneous(Field field, std::size_t variables, unsigned degree, SplitMix64& rng, long bound) {
  std::vector<MultiPoly::Exponents> monomials;
  exponent_vectors(variables, degree, monomials);
  MultiPoly p(field, variables);
  for (const auto& e : monomials) p.add_term(rng.scalar(field, bound), e);
  return p;
}

BinaryForm random_form(Field field, long degree, SplitMix64& rng, long bound) {
  std::vector<Scalar> c;
  for (long i = 0; i <= degree; ++i) c.push_back(rng.scalar(field, bound));
  return BinaryForm::from_coefficients(field, std::move(c));
}

FrequencyTable sample_experiment(const SampleConfig& config) {
  if (!config.field.is_rational() && config.field.characteristic() == 2) throw InputError("odd prime required");
  FrequencyTable table;
  SplitMix64 rng(config.seed);
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const MultiPoly p = config.polynomial
                            ? *config.polynomial
                            : random_homogeneous(config.field, config.variables, config.poly_degree, rng,
                                                 config.coefficient_bound);
    std::vector<BinaryForm> g;
    for (std::size_t i = 0; i < config.variables; ++i)
      g.push_back(random_form(config.field, config.form_degree, rng, config.coefficient_bound));
    const bool degenerate = p.is_zero() || std::all_of(g.begin(), g.end(), [](const BinaryForm& x) { return x.is_zero(); });
    if (degenerate) {
      ++table.rejected;
      continue;
    }
    const JacobianReport report = jacobian_analysis(p, g);
    if (!report.surjective) {
      ++table.rejected;
      continue;
    }
    ++table.accepted;
    ++table.counts[report.kernel];
  }
  return table;
}

}  // namespace hnlab::p1
