#include "etalehom/lattice.hpp"

#include <algorithm>
#include <cassert>

#include "etalehom/errors.hpp"

namespace etalehom {
namespace {

// Nonzero entry of least absolute value in d[t.., t..]; stops early on a unit.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  mpz_srcptr best = nullptr;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      mpz_srcptr x = d(i, j).get_mpz_t();
      if (mpz_sgn(x) == 0) continue;
      if (best == nullptr || mpz_cmpabs(x, best) < 0) {
        best = x;
        pi = i;
        pj = j;
        if (mpz_cmpabs_ui(x, 1) == 0) return true;
      }
    }
  }
  return best != nullptr;
}

// Replaces rows a, b of m by (s*ra + t*rb, u*ra + v*rb) from column `from` on.
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                  const Integer& t, const Integer& u, const Integer& v, std::size_t from = 0) {
  Integer x, y;
  for (std::size_t j = from; j < m.cols(); ++j) {
    x = s * m(a, j) + t * m(b, j);
    y = u * m(a, j) + v * m(b, j);
    swap(m(a, j), x);
    swap(m(b, j), y);
  }
}

void combine_cols(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                  const Integer& t, const Integer& u, const Integer& v) {
  Integer x, y;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    x = s * m(i, a) + t * m(i, b);
    y = u * m(i, a) + v * m(i, b);
    swap(m(i, a), x);
    swap(m(i, b), y);
  }
}

std::size_t leading_col(const IntMatrix& h, std::size_t row, std::size_t from = 0) {
  std::size_t c = from;
  while (c < h.cols() && sgn(h(row, c)) == 0) ++c;
  return c;
}

// Row-style Hermite form in place, built one input row at a time so that the
// echelon part is always the canonical (fully reduced) basis of the rows seen
// so far; this keeps intermediate entries bounded. Rows past the returned
// pivot count are zero. When w is given, w * M = h is maintained.
std::vector<std::size_t> hermite_in_place(IntMatrix& h, IntMatrix* w) {
  const std::size_t n = h.cols();
  std::vector<std::size_t> piv;
  Integer q, g, s, t, ag, xg;
  for (std::size_t k = 0; k < h.rows(); ++k) {
    const std::size_t r = piv.size();
    h.swap_rows(r, k);
    if (w) w->swap_rows(r, k);

    std::size_t first_affected = piv.size();
    std::size_t lead = leading_col(h, r);
    std::size_t e = 0;
    for (; e < piv.size() && piv[e] <= lead; ++e) {
      const std::size_t c = piv[e];
      if (c != lead) continue;
      const Integer& a = h(e, c);
      const Integer& x = h(r, c);
      if (mpz_divisible_p(x.get_mpz_t(), a.get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), a.get_mpz_t());
        h.submul_row(r, e, q, c);
        if (w) w->submul_row(r, e, q);
      } else {
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
        mpz_divexact(ag.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(xg.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        combine_rows(h, e, r, s, t, -xg, ag, c);
        if (w) combine_rows(*w, e, r, s, t, -xg, ag);
        first_affected = std::min(first_affected, e);
      }
      lead = leading_col(h, r, c + 1);
    }
    if (lead == n) continue;

    for (std::size_t i = r; i > e; --i) {
      h.swap_rows(i, i - 1);
      if (w) w->swap_rows(i, i - 1);
    }
    piv.insert(piv.begin() + static_cast<std::ptrdiff_t>(e), lead);
    if (sgn(h(e, lead)) < 0) {
      h.negate_row(e);
      if (w) w->negate_row(e);
    }
    first_affected = std::min(first_affected, e);

    // Only pivots from first_affected on can have unreduced entries above them.
    for (std::size_t i = piv.size(); i-- > 0;) {
      for (std::size_t j = std::max(i + 1, first_affected); j < piv.size(); ++j) {
        const std::size_t c = piv[j];
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(j, c).get_mpz_t());
        if (sgn(q) == 0) continue;
        h.submul_row(i, j, q, c);
        if (w) w->submul_row(i, j, q);
      }
    }
  }
  return piv;
}

// Diagonalizes d in place into Smith form. When u / v are given they are
// updated so that the invariant u * M * v = d is preserved.
std::size_t smith_in_place(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  const std::size_t steps = std::min(rows, cols);
  Integer q;
  std::size_t r = 0;

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    if (u) u->swap_rows(t, pi);
    d.swap_cols(t, pj);
    if (v) v->swap_cols(t, pj);

    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.submul_row(i, t, q, t);
        if (u) u->submul_row(i, t, q);
        if (sgn(d(i, t)) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.submul_col(j, t, q, t);
        if (v) v->submul_col(j, t, q);
        if (sgn(d(t, j)) != 0) residue = true;
      }
      if (!residue) break;

      // Remainders are strictly smaller than the pivot: move the least one in.
      std::size_t best_i = t, best_j = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (sgn(d(i, t)) != 0 && mpz_cmpabs(d(i, t).get_mpz_t(), d(best_i, best_j).get_mpz_t()) < 0) best_i = i, best_j = t;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (sgn(d(t, j)) != 0 && mpz_cmpabs(d(t, j).get_mpz_t(), d(best_i, best_j).get_mpz_t()) < 0) best_i = t, best_j = j;
      d.swap_rows(t, best_i);
      if (u) u->swap_rows(t, best_i);
      d.swap_cols(t, best_j);
      if (v) v->swap_cols(t, best_j);
    }
    ++r;
  }

  for (std::size_t i = 0; i < r; ++i) {
    if (sgn(d(i, i)) < 0) {
      d.negate_row(i);
      if (u) u->negate_row(i);
    }
  }

  // diag(a, b) -> diag(g, ab/g) via
  //   [s t; -b/g a/g] * diag(a, b) * [1 -tb/g; 1 sa/g].
  Integer g, s, tt, ag, bg;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const Integer& a = d(i, i);
      const Integer& b = d(j, j);
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) continue;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_divexact(ag.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(bg.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
      if (u) combine_rows(*u, i, j, s, tt, -bg, ag);
      if (v) combine_cols(*v, i, j, 1, 1, -tt * bg, s * ag);
      d(j, j) = ag * b;
      d(i, i) = g;
    }
  }
  return r;
}

}  // namespace

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  while (r < D.rows() && r < D.cols() && sgn(D(r, r)) != 0) ++r;
  return r;
}

std::vector<Integer> SnfDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(D(i, i));
  return out;
}

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  SnfDecomposition out{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  hermite_in_place(out.D, &out.U);
  smith_in_place(out.D, &out.U, &out.V);
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t r = hermite_in_place(h, nullptr).size();
  return h.row_range(0, r);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix d = m;
  return hermite_in_place(d, nullptr).size();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

FgAbGroup cokernel_structure(const IntMatrix& m) {
  IntMatrix d = m;
  hermite_in_place(d, nullptr);
  const std::size_t r = smith_in_place(d, nullptr, nullptr);
  std::vector<Integer> factors;
  for (std::size_t i = 0; i < r; ++i)
    if (d(i, i) != 1) factors.push_back(d(i, i));
  return FgAbGroup(m.rows() - r, std::move(factors));
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const SnfDecomposition snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  if (r == m.cols()) return IntMatrix(m.cols(), 0);
  const IntMatrix basis = snf.V.col_range(r, m.cols());
  return hermite_normal_form(basis.transposed()).transposed();
}

IntMatrix image_basis(const IntMatrix& m) {
  IntMatrix h = hermite_normal_form(m.transposed());
  if (h.rows() == 0) return IntMatrix(m.rows(), 0);
  return h.transposed();
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("solve_integer: row count mismatch");
  const SnfDecomposition snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  const IntMatrix y = snf.U * b;
  IntMatrix z(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i < r) {
        if (!mpz_divisible_p(y(i, j).get_mpz_t(), snf.D(i, i).get_mpz_t())) return std::nullopt;
        mpz_divexact(z(i, j).get_mpz_t(), y(i, j).get_mpz_t(), snf.D(i, i).get_mpz_t());
      } else if (sgn(y(i, j)) != 0) {
        return std::nullopt;
      }
    }
  }
  return snf.V * z;
}

bool columns_in_lattice(const IntMatrix& a, const IntMatrix& b) {
  return solve_integer(a, b).has_value();
}

}  // namespace etalehom
