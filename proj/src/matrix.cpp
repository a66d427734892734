#include "lefschetz/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lefschetz {

namespace {

[[noreturn]] void bad_matrix(const std::string& what) {
  throw std::invalid_argument("matrix: " + what);
}

std::uint64_t residue_of(const mpq_class& value, std::uint64_t p) {
  const std::uint64_t num = mpz_fdiv_ui(value.get_num().get_mpz_t(), p);
  const std::uint64_t den = mpz_fdiv_ui(value.get_den().get_mpz_t(), p);
  if (den == 0) throw std::domain_error("matrix: denominator vanishes mod " + std::to_string(p));
  return den == 1 ? num : mulmod(num, invmod(den, p), p);
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field) {
  if (field_.is_rationals())
    qdata_.resize(rows * cols);
  else
    pdata_.assign(rows * cols, 0);
}

ExactMatrix ExactMatrix::identity(std::size_t n, FieldSpec field) {
  ExactMatrix m(n, n, field);
  for (std::size_t k = 0; k < n; ++k) m.set_integer(k, k, 1);
  return m;
}

const mpq_class& ExactMatrix::rational_at(std::size_t r, std::size_t c) const {
  if (!field_.is_rationals()) bad_matrix("rational access on a prime-field matrix");
  return qdata_[index(r, c)];
}

void ExactMatrix::set_rational(std::size_t r, std::size_t c, mpq_class value) {
  if (!field_.is_rationals()) bad_matrix("rational store on a prime-field matrix");
  value.canonicalize();
  qdata_[index(r, c)] = std::move(value);
}

std::uint64_t ExactMatrix::residue_at(std::size_t r, std::size_t c) const {
  if (!field_.is_prime_field()) bad_matrix("residue access on a rational matrix");
  return pdata_[index(r, c)];
}

void ExactMatrix::set_residue(std::size_t r, std::size_t c, std::uint64_t value) {
  if (!field_.is_prime_field()) bad_matrix("residue store on a rational matrix");
  pdata_[index(r, c)] = value % field_.characteristic();
}

void ExactMatrix::set_integer(std::size_t r, std::size_t c, long value) {
  if (field_.is_rationals()) {
    qdata_[index(r, c)] = value;
  } else {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t residue =
        value >= 0 ? static_cast<std::uint64_t>(value) % p
                   : p - 1 - (static_cast<std::uint64_t>(-(value + 1)) % p);
    pdata_[index(r, c)] = residue;
  }
}

bool ExactMatrix::is_zero() const {
  if (field_.is_rationals())
    return std::all_of(qdata_.begin(), qdata_.end(), [](const mpq_class& v) { return v == 0; });
  return std::all_of(pdata_.begin(), pdata_.end(), [](std::uint64_t v) { return v == 0; });
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ &&
         qdata_ == other.qdata_ && pdata_ == other.pdata_;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix out(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (field_.is_rationals())
        out.qdata_[out.index(c, r)] = qdata_[index(r, c)];
      else
        out.pdata_[out.index(c, r)] = pdata_[index(r, c)];
    }
  return out;
}

ExactMatrix ExactMatrix::scaled(const mpq_class& alpha) const {
  ExactMatrix out(rows_, cols_, field_);
  if (field_.is_rationals()) {
    for (std::size_t k = 0; k < qdata_.size(); ++k) out.qdata_[k] = qdata_[k] * alpha;
  } else {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t factor = residue_of(alpha, p);
    for (std::size_t k = 0; k < pdata_.size(); ++k) out.pdata_[k] = mulmod(pdata_[k], factor, p);
  }
  return out;
}

ExactMatrix ExactMatrix::reduced_mod(std::uint64_t p) const {
  if (!field_.is_rationals()) bad_matrix("reduced_mod expects a rational matrix");
  ExactMatrix out(rows_, cols_, FieldSpec::prime_field(p));
  for (std::size_t k = 0; k < qdata_.size(); ++k) out.pdata_[k] = residue_of(qdata_[k], p);
  return out;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field()) bad_matrix("multiply: field mismatch");
  if (a.cols() != b.rows()) bad_matrix("multiply: inner dimension mismatch");
  ExactMatrix out(a.rows(), b.cols(), a.field());
  if (a.field().is_rationals()) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const mpq_class& f = a.rational_at(r, k);
        if (f == 0) continue;
        for (std::size_t c = 0; c < b.cols(); ++c) {
          if (b.rational_at(k, c) == 0) continue;
          out.set_rational(r, c, out.rational_at(r, c) + f * b.rational_at(k, c));
        }
      }
  } else {
    const std::uint64_t p = a.field().characteristic();
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const std::uint64_t f = a.residue_at(r, k);
        if (f == 0) continue;
        for (std::size_t c = 0; c < b.cols(); ++c)
          out.set_residue(r, c, addmod(out.residue_at(r, c), mulmod(f, b.residue_at(k, c), p), p));
      }
  }
  return out;
}

namespace detail {

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.at(c, r) = at(r, c);
  return out;
}

RrefSummary rref_mod(ModMatrix& m, bool parallel) {
  RrefSummary summary;
  const std::uint64_t p = m.p;
#ifndef _OPENMP
  (void)parallel;
#endif
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    std::size_t pr = pivot_row;
    while (pr < m.rows && m.at(pr, col) == 0) ++pr;
    if (pr == m.rows) continue;
    if (pr != pivot_row)
      for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(pivot_row, j));
    const std::uint64_t pivot = m.at(pivot_row, col);
    if (pivot != 1) {
      const std::uint64_t inv = invmod(pivot, p);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(pivot_row, j) = mulmod(m.at(pivot_row, j), inv, p);
    }
    const std::int64_t row_count = static_cast<std::int64_t>(m.rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t i = 0; i < row_count; ++i) {
      if (i == static_cast<std::int64_t>(pivot_row)) continue;
      const std::size_t row = static_cast<std::size_t>(i);
      const std::uint64_t factor = m.at(row, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(row, j) = submod(m.at(row, j), mulmod(factor, m.at(pivot_row, j), p), p);
    }
    summary.pivot_cols.push_back(col);
    ++pivot_row;
  }
  summary.rank = pivot_row;
  return summary;
}

std::size_t rank_mod(ModMatrix m, bool parallel) { return rref_mod(m, parallel).rank; }

std::optional<std::vector<std::uint64_t>> kernel_vector_mod(ModMatrix m, bool parallel,
                                                            RrefSummary* summary_out) {
  const RrefSummary summary = rref_mod(m, parallel);
  if (summary_out) *summary_out = summary;
  if (summary.rank == m.cols) return std::nullopt;
  // First free column: read the kernel vector straight off the RREF.
  std::size_t free_col = 0;
  while (free_col < summary.pivot_cols.size() && summary.pivot_cols[free_col] == free_col)
    ++free_col;
  std::vector<std::uint64_t> v(m.cols, 0);
  v[free_col] = 1;
  for (std::size_t r = 0; r < summary.pivot_cols.size(); ++r)
    v[summary.pivot_cols[r]] = submod(0, m.at(r, free_col), m.p);
  return v;
}

std::size_t rank_bareiss(IntMatrix m) {
  const std::size_t steps = std::min(m.rows, m.cols);
  mpz_class previous = 1;
  std::size_t r = 0;
  for (; r < steps; ++r) {
    // Full pivoting on the smallest-magnitude nonzero entry keeps the
    // fraction-free intermediates (which are minors) from ballooning.
    std::size_t pi = r, pj = r;
    bool found = false;
    for (std::size_t i = r; i < m.rows; ++i)
      for (std::size_t j = r; j < m.cols; ++j) {
        const mpz_class& e = m.at(i, j);
        if (e == 0) continue;
        if (!found || mpz_cmpabs(e.get_mpz_t(), m.at(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != r)
      for (std::size_t j = r; j < m.cols; ++j) std::swap(m.at(pi, j), m.at(r, j));
    if (pj != r)
      for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, pj), m.at(i, r));
    mpz_class numerator;
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = r + 1; j < m.cols; ++j) {
        numerator = m.at(r, r) * m.at(i, j) - m.at(i, r) * m.at(r, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), numerator.get_mpz_t(), previous.get_mpz_t());
      }
      m.at(i, r) = 0;
    }
    previous = m.at(r, r);
  }
  return r;
}

ModMatrix reduce_int_mod(const IntMatrix& m, std::uint64_t p) {
  ModMatrix out(m.rows, m.cols, p);
  for (std::size_t k = 0; k < m.a.size(); ++k) out.a[k] = mpz_fdiv_ui(m.a[k].get_mpz_t(), p);
  return out;
}

IntMatrix int_matrix_from(const ExactMatrix& m) {
  if (!m.field().is_rationals()) bad_matrix("int_matrix_from expects a rational matrix");
  IntMatrix out(m.rows(), m.cols());
  mpz_class row_lcm, scale;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    row_lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
              m.rational_at(r, c).get_den().get_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& v = m.rational_at(r, c);
      mpz_divexact(scale.get_mpz_t(), row_lcm.get_mpz_t(), v.get_den().get_mpz_t());
      out.at(r, c) = v.get_num() * scale;
    }
  }
  return out;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& residue, const mpz_class& modulus) {
  if (modulus <= 1) return std::nullopt;
  mpz_class bound_sq = modulus / 2;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), bound_sq.get_mpz_t());
  mpz_class r0 = modulus, r1 = residue % modulus;
  if (r1 < 0) r1 += modulus;
  mpz_class t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    q = r0 / r1;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0) return std::nullopt;
  mpz_class num = r1, den = t1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && !(num == 0 && den == 1)) return std::nullopt;
  return mpq_class(num) / mpq_class(den);
}

namespace {

// x = a (mod m), x = b (mod q) -> x in [0, m q).
mpz_class crt_pair(const mpz_class& a, const mpz_class& m, const mpz_class& b,
                   const mpz_class& q) {
  mpz_class m_inv;
  if (mpz_invert(m_inv.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t()) == 0)
    throw std::logic_error("matrix: CRT moduli are not coprime");
  mpz_class delta = (b - a) % q;
  if (delta < 0) delta += q;
  return a + m * ((delta * m_inv) % q);
}

bool is_zero_product(const IntMatrix& m, const std::vector<mpz_class>& v) {
  mpz_class acc;
  for (std::size_t r = 0; r < m.rows; ++r) {
    acc = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (v[c] == 0) continue;
      acc += m.at(r, c) * v[c];
    }
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

KernelSearch integer_kernel_witness(const IntMatrix& m, int max_primes, bool parallel) {
  KernelSearch result;
  const std::vector<std::uint64_t> primes = witness_primes(std::max(max_primes, 1));
  std::vector<std::size_t> reference_pivots;
  bool have_reference = false;
  std::vector<mpz_class> combined(m.cols);
  mpz_class modulus = 1;
  for (std::uint64_t prime : primes) {
    ++result.primes_used;
    RrefSummary summary;
    auto kv = kernel_vector_mod(reduce_int_mod(m, prime), parallel, &summary);
    result.best_modular_rank = std::max(result.best_modular_rank, summary.rank);
    if (!kv) {
      // Full column rank mod one prime certifies full column rank over Q.
      result.outcome = KernelOutcome::full_rank;
      result.certifying_prime = prime;
      return result;
    }
    if (!have_reference) {
      have_reference = true;
      reference_pivots = summary.pivot_cols;
      result.certifying_prime = prime;
      for (std::size_t c = 0; c < m.cols; ++c) combined[c] = (*kv)[c];
      modulus = prime;
    } else {
      if (summary.pivot_cols != reference_pivots) continue;  // unusable structure
      const mpz_class prime_z(static_cast<unsigned long>(prime));
      for (std::size_t c = 0; c < m.cols; ++c)
        combined[c] = crt_pair(combined[c], modulus, mpz_class((*kv)[c]), prime_z);
      modulus *= prime_z;
    }
    // Reconstruct a rational vector from the residues, clear denominators,
    // and verify the integer identity exactly.
    std::vector<mpq_class> rational(m.cols);
    bool reconstructed = true;
    for (std::size_t c = 0; c < m.cols && reconstructed; ++c) {
      auto value = rational_reconstruct(combined[c], modulus);
      if (!value)
        reconstructed = false;
      else
        rational[c] = *value;
    }
    if (!reconstructed) continue;
    mpz_class denominator_lcm = 1;
    for (const mpq_class& v : rational)
      mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
              v.get_den().get_mpz_t());
    std::vector<mpz_class> candidate(m.cols);
    mpz_class scale, content = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
      mpz_divexact(scale.get_mpz_t(), denominator_lcm.get_mpz_t(),
                   rational[c].get_den().get_mpz_t());
      candidate[c] = rational[c].get_num() * scale;
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), candidate[c].get_mpz_t());
    }
    if (content == 0) continue;  // zero vector: reconstruction degenerated
    for (std::size_t c = 0; c < m.cols; ++c)
      mpz_divexact(candidate[c].get_mpz_t(), candidate[c].get_mpz_t(), content.get_mpz_t());
    if (is_zero_product(m, candidate)) {
      result.outcome = KernelOutcome::witness;
      result.vector = std::move(candidate);
      return result;
    }
  }
  result.outcome = KernelOutcome::inconclusive;
  return result;
}

}  // namespace detail

namespace {

std::size_t rank_impl(const ExactMatrix& m, bool parallel) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_prime_field()) {
    detail::ModMatrix mm(m.rows(), m.cols(), m.field().characteristic());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) mm.at(r, c) = m.residue_at(r, c);
    return detail::rank_mod(std::move(mm), parallel);
  }
  return detail::rank_bareiss(detail::int_matrix_from(m));
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return rank_impl(m, /*parallel=*/true); }

std::size_t rank_serial(const ExactMatrix& m) { return rank_impl(m, /*parallel=*/false); }

std::size_t rank(const ExactMatrix& m, const FieldSpec& field) {
  if (field == m.field()) return rank(m);
  if (m.field().is_rationals() && field.is_prime_field())
    return rank(m.reduced_mod(field.characteristic()));
  bad_matrix("rank: residues cannot be lifted back to the rationals");
}

BlockRankResult block_rank_check(const ExactMatrix& a, const ExactMatrix& p,
                                 const ExactMatrix& b, const mpq_class& alpha,
                                 const FieldSpec& field) {
  if (a.field() != field || p.field() != field || b.field() != field)
    bad_matrix("block_rank_check: matrices must live over the given field");
  if (alpha == 0) bad_matrix("block_rank_check: alpha must be a non-zero element");
  if (field.is_prime_field() &&
      mpz_fdiv_ui(alpha.get_num().get_mpz_t(), field.characteristic()) == 0)
    bad_matrix("block_rank_check: alpha must be a non-zero element");
  if (a.cols() != p.rows() || p.cols() != b.rows())
    bad_matrix("block_rank_check: dimension mismatch");

  const ExactMatrix ap = multiply(a, p);
  const ExactMatrix pb = multiply(p, b);
  const ExactMatrix apb = multiply(ap, b);
  const ExactMatrix alpha_p = p.scaled(alpha);

  ExactMatrix m(a.rows() + p.rows(), p.cols() + b.cols(), field);
  for (std::size_t r = 0; r < ap.rows(); ++r)
    for (std::size_t c = 0; c < ap.cols(); ++c) {
      if (field.is_rationals())
        m.set_rational(r, c, ap.rational_at(r, c));
      else
        m.set_residue(r, c, ap.residue_at(r, c));
    }
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c) {
      if (field.is_rationals())
        m.set_rational(a.rows() + r, c, alpha_p.rational_at(r, c));
      else
        m.set_residue(a.rows() + r, c, alpha_p.residue_at(r, c));
    }
  for (std::size_t r = 0; r < pb.rows(); ++r)
    for (std::size_t c = 0; c < pb.cols(); ++c) {
      if (field.is_rationals())
        m.set_rational(a.rows() + r, p.cols() + c, pb.rational_at(r, c));
      else
        m.set_residue(a.rows() + r, p.cols() + c, pb.residue_at(r, c));
    }

  BlockRankResult result;
  result.lhs_rank = rank(m);
  result.rhs_rank = rank(p) + rank(apb);
  result.equal = result.lhs_rank == result.rhs_rank;
  return result;
}

std::optional<std::vector<mpq_class>> kernel_vector(const ExactMatrix& m) {
  if (m.cols() == 0) return std::nullopt;
  if (m.field().is_prime_field()) {
    detail::ModMatrix mm(m.rows(), m.cols(), m.field().characteristic());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) mm.at(r, c) = m.residue_at(r, c);
    auto kv = detail::kernel_vector_mod(std::move(mm), /*parallel=*/true);
    if (!kv) return std::nullopt;
    std::vector<mpq_class> out(kv->size());
    for (std::size_t c = 0; c < kv->size(); ++c)
      out[c] = mpq_class(mpz_class(static_cast<unsigned long>((*kv)[c])));
    return out;
  }
  // Gauss-Jordan over mpq; fine for the small matrices this is used on.
  std::vector<mpq_class> work(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) work[r * m.cols() + c] = m.rational_at(r, c);
  auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return work[r * m.cols() + c]; };
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t pr = pivot_row;
    while (pr < m.rows() && at(pr, col) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != pivot_row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(at(pr, j), at(pivot_row, j));
    const mpq_class pivot = at(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) at(pivot_row, j) /= pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || at(i, col) == 0) continue;
      const mpq_class factor = at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) at(i, j) -= factor * at(pivot_row, j);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  if (pivot_cols.size() == m.cols()) return std::nullopt;
  std::size_t free_col = 0;
  while (free_col < pivot_cols.size() && pivot_cols[free_col] == free_col) ++free_col;
  std::vector<mpq_class> v(m.cols(), mpq_class(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -at(r, free_col);
  return v;
}

}  // namespace lefschetz
