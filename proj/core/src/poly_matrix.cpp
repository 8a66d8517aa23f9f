#include "hnlab/poly_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hnlab {

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, KtPoly(field)) {}

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<KtPoly> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw InputError("polynomial matrix entry count does not match its shape");
  for (const auto& e : entries_)
    if (!(e.field() == field_)) throw InputError("polynomial matrix entries from mixed fields");
}

PolyMatrix PolyMatrix::identity(Field field, std::size_t n) {
  PolyMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = KtPoly::constant(field.one());
  return m;
}

PolyMatrix PolyMatrix::diagonal(Field field, const std::vector<KtPoly>& diag) {
  PolyMatrix m(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

PolyMatrix PolyMatrix::from_ints(Field field, const std::vector<std::vector<std::vector<long>>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged polynomial matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = KtPoly::from_ints(field, rows[i][j]);
  }
  return m;
}

PolyMatrix PolyMatrix::constant(const Matrix& c) {
  PolyMatrix m(c.field(), c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = KtPoly::constant(c(i, j));
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("polynomial matrix product: shape mismatch");
  PolyMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const KtPoly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

PolyMatrix PolyMatrix::truncated(std::size_t precision) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = e.truncated(precision);
  return out;
}

Matrix PolyMatrix::at_zero() const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).coeff(0);
  return out;
}

long PolyMatrix::max_degree() const {
  long d = -1;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const KtPoly& p) { return p.is_zero(); });
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  if (!(a.field() == b.field())) throw InputError("kron: mixed fields");
  PolyMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw InputError("vstack: column count mismatch");
  PolyMatrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

PolyMatrix hstack(const PolyMatrix& left, const PolyMatrix& right) {
  if (left.rows() != right.rows()) throw InputError("hstack: row count mismatch");
  PolyMatrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

namespace {

void swap_rows(PolyMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_cols(PolyMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

// Zero a(i, c) against the pivot a(s, c) by a unimodular row operation; the pivot becomes the monic gcd.
// Touched entries are reduced modulo `mod`.
void combine_rows(PolyMatrix& a, std::size_t s, std::size_t i, std::size_t c, const KtPoly& mod) {
  const KtPoly p = a(s, c), b = a(i, c);
  if (p.divides(b)) {
    const KtPoly q = b / p;
    for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = (a(i, j) - q * a(s, j)) % mod;
    return;
  }
  const Bezout z = xgcd(p, b);
  const KtPoly u = p / z.g, v = b / z.g;
  for (std::size_t j = c; j < a.cols(); ++j) {
    const KtPoly top = (z.x * a(s, j) + z.y * a(i, j)) % mod;
    a(i, j) = (u * a(i, j) - v * a(s, j)) % mod;
    a(s, j) = top;
  }
}

// Column analogue of combine_rows; returns false when the pivot column picked up new entries.
bool combine_cols(PolyMatrix& a, std::size_t s, std::size_t j, std::size_t r, const KtPoly& mod) {
  const KtPoly p = a(r, s), b = a(r, j);
  if (p.divides(b)) {
    const KtPoly q = b / p;
    for (std::size_t i = r; i < a.rows(); ++i) a(i, j) = (a(i, j) - q * a(i, s)) % mod;
    return true;
  }
  const Bezout z = xgcd(p, b);
  const KtPoly u = p / z.g, v = b / z.g;
  bool untouched = true;
  for (std::size_t i = r; i < a.rows(); ++i) {
    const KtPoly left = (z.x * a(i, s) + z.y * a(i, j)) % mod;
    a(i, j) = (u * a(i, j) - v * a(i, s)) % mod;
    a(i, s) = left;
    if (i > r && !left.is_zero()) untouched = false;
  }
  return untouched;
}

// Bareiss elimination with column skipping. Entries stay minors, so every division is exact,
// and the last pivot is a nonzero rank x rank minor (1 for the zero matrix).
std::pair<std::size_t, KtPoly> bareiss_rank(const PolyMatrix& m) {
  PolyMatrix a = m;
  KtPoly prev = KtPoly::constant(a.field().one());
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, row, p);
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      for (std::size_t j = col + 1; j < a.cols(); ++j) a(i, j) = (a(row, col) * a(i, j) - a(i, col) * a(row, j)) / prev;
      a(i, col) = KtPoly(a.field());
    }
    prev = a(row, col);
    ++row;
  }
  return {row, prev};
}

KtPoly derivative(const KtPoly& p) {
  const Field f = p.field();
  std::vector<Scalar> c;
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) c.push_back(p.coefficients()[i] * f.from_int(static_cast<long>(i)));
  return KtPoly(f, std::move(c));
}

// Yun's algorithm (characteristic 0): monic d = prod f_k^k with the f_k squarefree and pairwise coprime.
std::vector<std::pair<KtPoly, std::size_t>> squarefree_parts(const KtPoly& d) {
  std::vector<std::pair<KtPoly, std::size_t>> out;
  const KtPoly dd = derivative(d);
  const KtPoly a = gcd(d, dd);
  KtPoly b = d / a;
  KtPoly c = dd / a;
  for (std::size_t k = 1; b.degree() > 0; ++k) {
    const KtPoly e = c - derivative(b);
    const KtPoly g = gcd(b, e);
    if (g.degree() > 0) out.emplace_back(g, k);
    b = b / g;
    c = e / g;
  }
  return out;
}

KtPoly power(const KtPoly& q, std::size_t k) {
  KtPoly out = KtPoly::constant(q.field().one());
  for (std::size_t i = 0; i < k; ++i) out = out * q;
  return out;
}

// Smith exponents of m + q^k (semi-local at q, q squarefree). Entries whose q-free part is coprime to q are
// units there, so a pivot of least q-valuation divides its row and column and no gcd steps are needed.
// If a pivot's q-free part shares a factor with q, that factor is returned in `factor` instead.
bool local_exponents(const PolyMatrix& m, const KtPoly& q, std::size_t k, std::vector<std::size_t>& exps,
                     KtPoly& factor) {
  const KtPoly big = power(q, k);
  PolyMatrix a = m;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) % big;
  auto valuation = [&](KtPoly x, KtPoly* rest) {
    std::size_t v = 0;
    if (x.is_zero()) return k;
    for (;;) {
      auto [quot, rem] = x.divmod(q);
      if (!rem.is_zero()) break;
      x = std::move(quot);
      ++v;
    }
    if (rest) *rest = std::move(x);
    return v;
  };
  exps.clear();
  for (std::size_t s = 0; s < std::min(a.rows(), a.cols()); ++s) {
    std::size_t best = k, bi = 0, bj = 0;
    for (std::size_t i = s; i < a.rows() && best > 0; ++i)
      for (std::size_t j = s; j < a.cols() && best > 0; ++j) {
        const std::size_t v = valuation(a(i, j), nullptr);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best == k) break;
    swap_rows(a, s, bi);
    swap_cols(a, s, bj);
    KtPoly unit(q.field());
    valuation(a(s, s), &unit);
    const Bezout bz = xgcd(unit, big);
    if (bz.g.degree() > 0) {
      factor = gcd(unit, q);
      return false;
    }
    const KtPoly inv = bz.x % big;
    const KtPoly qv = power(q, best);
    for (std::size_t i = s + 1; i < a.rows(); ++i) {
      if (a(i, s).is_zero()) continue;
      const KtPoly c = ((a(i, s) / qv) * inv) % big;
      for (std::size_t j = s + 1; j < a.cols(); ++j) a(i, j) = (a(i, j) - c * a(s, j)) % big;
      a(i, s) = KtPoly(q.field());
    }
    // clearing row s by column operations leaves the trailing block alone
    exps.push_back(best);
  }
  return true;
}

// Over Q the Euclidean steps blow up the coefficients, so the invariants are assembled prime-power by
// prime-power from the squarefree decomposition of D, splitting a part whenever it turns out reducible.
std::vector<KtPoly> local_invariants(const PolyMatrix& m, std::size_t r, const KtPoly& mod) {
  std::vector<KtPoly> out(r, KtPoly::constant(m.field().one()));
  std::vector<std::pair<KtPoly, std::size_t>> todo = squarefree_parts(mod);
  std::vector<std::size_t> exps;
  while (!todo.empty()) {
    const auto [q, k] = todo.back();
    todo.pop_back();
    KtPoly factor(q.field());
    if (!local_exponents(m, q, k, exps, factor)) {
      todo.emplace_back(q / factor, k);
      todo.emplace_back(factor, k);
      continue;
    }
    std::sort(exps.begin(), exps.end());
    exps.resize(r, k);
    for (std::size_t i = 0; i < r; ++i) out[i] = out[i] * power(q, exps[i]);
  }
  return out;
}

}  // namespace

// With L the column span of M, rank r, and D a nonzero r x r minor, D kills the torsion of k[t]^m / L.
// Any k[t]-combination of such minors works too; the gcd of a few keeps D (and the reduced entries)
// small. So L + D k[t]^m has invariants s_1 | ... | s_r | D | ... | D with s_i those of M, and that lattice
// can be reduced modulo D throughout: the diagonal found mod D gives s_i = gcd(p_i, D). Without the
// modulus, degrees in the trailing block grow without bound.
std::vector<KtPoly> smith_invariants(const PolyMatrix& m) {
  const auto [r, minor] = bareiss_rank(m);
  if (r == 0) return {};
  const Field f = m.field();
  KtPoly mod = minor.monic();
  // other orders usually pick other minors
  for (int flip = 0; flip < 2 && mod.degree() > 0; ++flip) {
    PolyMatrix b = m;
    for (std::size_t k = 0; k < (flip ? b.cols() / 2 : b.rows() / 2); ++k)
      flip ? swap_cols(b, k, b.cols() - 1 - k) : swap_rows(b, k, b.rows() - 1 - k);
    mod = gcd(mod, bareiss_rank(b).second);
  }
  if (mod.degree() == 0) return std::vector<KtPoly>(r, KtPoly::constant(f.one()));
  if (f.is_rational()) return local_invariants(m, r, mod);

  PolyMatrix a = m;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) % mod;
  std::vector<KtPoly> out;
  for (std::size_t s = 0; s < r; ++s) {
    // smallest-degree nonzero entry of the trailing block becomes the pivot
    long best = -1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = s; i < a.rows(); ++i)
      for (std::size_t j = s; j < a.cols(); ++j)
        if (!a(i, j).is_zero() && (best < 0 || a(i, j).degree() < best)) {
          best = a(i, j).degree();
          bi = i;
          bj = j;
        }
    if (best < 0) break;  // the rest is 0 mod D
    swap_rows(a, s, bi);
    swap_cols(a, s, bj);

    for (;;) {
      // each pass replaces the pivot by the gcd of its column (then row) through 2x2 unimodular steps;
      // the pivot degree only drops, so the loop ends
      for (std::size_t i = s + 1; i < a.rows(); ++i)
        if (!a(i, s).is_zero()) combine_rows(a, s, i, s, mod);
      bool clean = true;
      for (std::size_t j = s + 1; j < a.cols(); ++j)
        if (!a(s, j).is_zero() && !combine_cols(a, s, j, s, mod)) clean = false;
      if (!clean) continue;
      // divisibility: fold an offending row into the pivot row and re-clear
      bool divides_all = true;
      for (std::size_t i = s + 1; i < a.rows() && divides_all; ++i)
        for (std::size_t j = s + 1; j < a.cols(); ++j)
          if (!a(s, s).divides(a(i, j))) {
            for (std::size_t c = s; c < a.cols(); ++c) a(s, c) = (a(s, c) + a(i, c)) % mod;
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    out.push_back(gcd(a(s, s), mod));
  }
  while (out.size() < r) out.push_back(mod);
  return out;
}

std::size_t rank_over_fractions(const PolyMatrix& m) { return bareiss_rank(m).first; }

KtPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.field();
  if (n == 0) return KtPoly::constant(f.one());
  // Bareiss: every division below is exact
  PolyMatrix a = m;
  KtPoly prev = KtPoly::constant(f.one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return KtPoly(f);
      swap_rows(a, k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = KtPoly(f);
    }
    prev = a(k, k);
  }
  KtPoly det = a(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace hnlab
