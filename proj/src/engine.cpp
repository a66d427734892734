#include "lefschetz/engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lefschetz {

namespace {

using detail::IntMatrix;
using detail::KernelOutcome;
using detail::KernelSearch;
using detail::ModMatrix;

// Above this edge size, rational-side rank goes through the modular
// certificate route instead of direct fraction-free elimination.
constexpr std::size_t kBareissDirectLimit = 96;
constexpr int kWitnessPrimeBudget = 8;
// Exact map entries are multinomial coefficients bounded by t!, which fits
// an unsigned 64-bit slot up to t = 20.
constexpr int kU64ChainLimit = 20;

/// M^1_k as 0/1 sparse columns: row indices of x_v * m for m in B_k.
struct SparseStep {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::uint32_t>> col_rows;
};

std::vector<SparseStep> build_steps(const GradedQuotient& q) {
  const int socle = q.socle_degree();
  std::vector<SparseStep> steps;
  for (int k = 0; k + 1 <= socle; ++k) {
    const auto& source = q.basis(k);
    const auto& target = q.basis(k + 1);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> row_of;
    row_of.reserve(target.size() * 2);
    for (std::size_t r = 0; r < target.size(); ++r)
      row_of.emplace(target[r], static_cast<std::uint32_t>(r));
    SparseStep step;
    step.rows = target.size();
    step.cols = source.size();
    step.col_rows.resize(source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
      for (int v = 0; v < q.ambient(); ++v) {
        auto it = row_of.find(source[c].times_var(v));
        if (it != row_of.end()) step.col_rows[c].push_back(it->second);
      }
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

template <typename Value>
struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<Value> a;
  const Value& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

template <typename Value>
Dense<Value> dense_of_step(const SparseStep& step) {
  Dense<Value> out;
  out.rows = step.rows;
  out.cols = step.cols;
  out.a.assign(step.rows * step.cols, Value(0));
  for (std::size_t c = 0; c < step.cols; ++c)
    for (std::uint32_t r : step.col_rows[c]) out.a[r * step.cols + c] = Value(1);
  return out;
}

// next = step * cur, accumulating whole rows of cur into rows of next.
template <typename Value>
Dense<Value> left_multiply_plain(const SparseStep& step, const Dense<Value>& cur) {
  Dense<Value> next;
  next.rows = step.rows;
  next.cols = cur.cols;
  next.a.assign(next.rows * next.cols, Value(0));
  for (std::size_t k = 0; k < step.cols; ++k) {
    const Value* src = cur.a.data() + k * cur.cols;
    for (std::uint32_t r : step.col_rows[k]) {
      Value* dst = next.a.data() + static_cast<std::size_t>(r) * next.cols;
      for (std::size_t c = 0; c < next.cols; ++c) dst[c] += src[c];
    }
  }
  return next;
}

Dense<std::uint64_t> left_multiply_mod(const SparseStep& step, const Dense<std::uint64_t>& cur,
                                       std::uint64_t p) {
  Dense<std::uint64_t> next;
  next.rows = step.rows;
  next.cols = cur.cols;
  next.a.assign(next.rows * next.cols, 0);
  for (std::size_t k = 0; k < step.cols; ++k) {
    const std::uint64_t* src = cur.a.data() + k * cur.cols;
    for (std::uint32_t r : step.col_rows[k]) {
      std::uint64_t* dst = next.a.data() + static_cast<std::size_t>(r) * next.cols;
      for (std::size_t c = 0; c < next.cols; ++c) dst[c] = addmod(dst[c], src[c], p);
    }
  }
  return next;
}

/// Exact integer matrix of ell^t: A_i -> A_{i+t}.
IntMatrix int_map_matrix(const GradedQuotient& q, const std::vector<SparseStep>& steps, int i,
                         int t) {
  const std::size_t rows = static_cast<std::size_t>(q.dim(i + t));
  const std::size_t cols = static_cast<std::size_t>(q.dim(i));
  IntMatrix out(rows, cols);
  if (rows == 0 || cols == 0) return out;
  if (t <= kU64ChainLimit) {
    Dense<std::uint64_t> cur = dense_of_step<std::uint64_t>(steps[static_cast<std::size_t>(i)]);
    for (int s = 1; s < t; ++s)
      cur = left_multiply_plain(steps[static_cast<std::size_t>(i + s)], cur);
    for (std::size_t k = 0; k < cur.a.size(); ++k)
      out.a[k] = mpz_class(static_cast<unsigned long>(cur.a[k]));
  } else {
    Dense<mpz_class> cur = dense_of_step<mpz_class>(steps[static_cast<std::size_t>(i)]);
    for (int s = 1; s < t; ++s)
      cur = left_multiply_plain(steps[static_cast<std::size_t>(i + s)], cur);
    out.a = std::move(cur.a);
  }
  return out;
}

ModMatrix mod_map_matrix(const GradedQuotient& q, const std::vector<SparseStep>& steps, int i,
                         int t, std::uint64_t p) {
  const std::size_t rows = static_cast<std::size_t>(q.dim(i + t));
  const std::size_t cols = static_cast<std::size_t>(q.dim(i));
  ModMatrix out(rows, cols, p);
  if (rows == 0 || cols == 0) return out;
  Dense<std::uint64_t> cur = dense_of_step<std::uint64_t>(steps[static_cast<std::size_t>(i)]);
  if (p > 1)
    for (std::uint64_t& v : cur.a) v %= p;  // p = 2 turns the 1-entries into themselves
  for (int s = 1; s < t; ++s)
    cur = left_multiply_mod(steps[static_cast<std::size_t>(i + s)], cur, p);
  out.a = std::move(cur.a);
  return out;
}

ModMatrix transpose_mod(const ModMatrix& m) {
  ModMatrix out(m.cols, m.rows, m.p);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
  return out;
}

struct MapOutcome {
  std::size_t rank = 0;
  bool exact = true;
  bool full = false;
  std::string certificate;
  std::uint64_t prime = 0;
};

MapOutcome resolve_rational(const IntMatrix& m, bool parallel) {
  const std::size_t expected = std::min(m.rows, m.cols);
  if (expected == 0) return {0, true, true, "trivial", 0};
  if (std::max(m.rows, m.cols) <= kBareissDirectLimit) {
    const std::size_t r = detail::rank_bareiss(m);
    return {r, true, r == expected, "rational_elimination", 0};
  }
  // Large matrix: a full-rank witness mod one prime certifies a pass; a
  // verified integer kernel vector certifies a failure.
  const bool right_side = expected == m.cols;
  const KernelSearch search = detail::integer_kernel_witness(
      right_side ? m : m.transposed(), kWitnessPrimeBudget, parallel);
  switch (search.outcome) {
    case KernelOutcome::full_rank:
      return {expected, true, true, "prime_witness", search.certifying_prime};
    case KernelOutcome::witness:
      return {search.best_modular_rank, false, false, "kernel_witness", search.certifying_prime};
    case KernelOutcome::inconclusive:
      break;
  }
  const std::size_t r = detail::rank_bareiss(m);
  return {r, true, r == expected, "rational_elimination", 0};
}

std::vector<std::pair<Monomial, mpq_class>> collect_terms(const std::vector<Monomial>& basis,
                                                          const std::vector<mpq_class>& coeffs) {
  std::vector<std::pair<Monomial, mpq_class>> terms;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coeffs[k] != 0) terms.emplace_back(basis[k], coeffs[k]);
  if (terms.empty()) throw std::logic_error("engine: witness vector is zero");
  // Basis order is descending revlex, so the first term is the leading one;
  // normalize it to coefficient 1.
  const mpq_class lead = terms.front().second;
  for (auto& [monomial, coeff] : terms) coeff /= lead;
  return terms;
}

RankWitness extract_witness(const GradedQuotient& q, const std::vector<SparseStep>& steps,
                            const FieldSpec& field, int i, int t, bool parallel) {
  RankWitness witness;
  witness.source_degree = i;
  witness.power = t;
  const std::size_t rows = static_cast<std::size_t>(q.dim(i + t));
  const std::size_t cols = static_cast<std::size_t>(q.dim(i));
  const bool injective_expected = cols <= rows;
  witness.side = injective_expected ? WitnessSide::kernel : WitnessSide::cokernel;
  const std::vector<Monomial>& basis =
      injective_expected ? q.basis(i) : q.basis(i + t);
  std::vector<mpq_class> coeffs;

  if (field.is_prime_field()) {
    ModMatrix m = mod_map_matrix(q, steps, i, t, field.characteristic());
    if (!injective_expected) m = transpose_mod(m);
    auto kv = detail::kernel_vector_mod(std::move(m), parallel);
    if (!kv) throw std::logic_error("engine: expected a modular kernel vector");
    coeffs.resize(kv->size());
    for (std::size_t k = 0; k < kv->size(); ++k)
      coeffs[k] = mpq_class(mpz_class(static_cast<unsigned long>((*kv)[k])));
    // Normalize in the field: multiply by the inverse of the leading entry.
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
    const std::uint64_t inv =
        invmod(static_cast<std::uint64_t>(coeffs[lead].get_num().get_ui()),
               field.characteristic());
    for (auto& c : coeffs)
      c = mpq_class(mpz_class(static_cast<unsigned long>(
          mulmod(static_cast<std::uint64_t>(c.get_num().get_ui()), inv,
                 field.characteristic()))));
    witness.terms = collect_terms(basis, coeffs);
    witness.leading = witness.terms.front().first;
    return witness;
  }

  IntMatrix m = int_map_matrix(q, steps, i, t);
  if (!injective_expected) m = m.transposed();
  if (std::max(m.rows, m.cols) <= kBareissDirectLimit) {
    ExactMatrix em(m.rows, m.cols, FieldSpec::rationals());
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) em.set_rational(r, c, mpq_class(m.at(r, c)));
    auto kv = kernel_vector(em);
    if (!kv) throw std::logic_error("engine: expected a rational kernel vector");
    coeffs = std::move(*kv);
  } else {
    KernelSearch search = detail::integer_kernel_witness(m, kWitnessPrimeBudget, parallel);
    if (search.outcome != KernelOutcome::witness)
      throw std::logic_error("engine: kernel witness disappeared on re-extraction");
    coeffs.resize(search.vector.size());
    for (std::size_t k = 0; k < search.vector.size(); ++k)
      coeffs[k] = mpq_class(search.vector[k]);
  }
  witness.terms = collect_terms(basis, coeffs);
  witness.leading = witness.terms.front().first;
  return witness;
}

LefschetzReport run_checks(const MonomialIdeal& ideal, const FieldSpec& field,
                           LefschetzProperty property, const CheckOptions& options) {
  GradedQuotient q(ideal);
  const int socle = q.socle_degree();
  LefschetzReport report;
  report.property = property;
  report.field = field;
  report.socle_degree = socle;
  report.hilbert = q.hilbert();

  const std::vector<SparseStep> steps = build_steps(q);
  const int t_cap = property == LefschetzProperty::weak ? 1 : socle;

  // Report order is (power, source degree); chains run per source degree.
  std::vector<std::size_t> offset(static_cast<std::size_t>(std::max(t_cap, 0)) + 2, 0);
  for (int t = 1; t <= t_cap; ++t)
    offset[static_cast<std::size_t>(t) + 1] =
        offset[static_cast<std::size_t>(t)] + static_cast<std::size_t>(socle - t + 1);
  report.maps.resize(offset[static_cast<std::size_t>(t_cap) + 1]);
  const auto slot = [&](int t, int i) -> std::size_t {
    return offset[static_cast<std::size_t>(t)] + static_cast<std::size_t>(i);
  };

  const bool parallel = options.threads != 1;
#ifdef _OPENMP
  const int worker_count = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(worker_count) if (parallel)
#endif
  for (int i = 0; i < socle; ++i) {
    const int t_top = std::min(t_cap, socle - i);
    if (t_top < 1) continue;
    const bool u64_exact = field.is_rationals() && t_top <= kU64ChainLimit;
    const std::uint64_t p = field.characteristic();

    Dense<std::uint64_t> chain_u64;
    Dense<mpz_class> chain_mpz;
    if (field.is_prime_field() || u64_exact) {
      chain_u64 = dense_of_step<std::uint64_t>(steps[static_cast<std::size_t>(i)]);
    } else {
      chain_mpz = dense_of_step<mpz_class>(steps[static_cast<std::size_t>(i)]);
    }

    for (int t = 1; t <= t_top; ++t) {
      if (t > 1) {
        const SparseStep& step = steps[static_cast<std::size_t>(i + t - 1)];
        if (field.is_prime_field())
          chain_u64 = left_multiply_mod(step, chain_u64, p);
        else if (u64_exact)
          chain_u64 = left_multiply_plain(step, chain_u64);
        else
          chain_mpz = left_multiply_plain(step, chain_mpz);
      }
      MapCheck check;
      check.source_degree = i;
      check.power = t;
      check.rows = static_cast<std::size_t>(q.dim(i + t));
      check.cols = static_cast<std::size_t>(q.dim(i));
      check.expected_rank = std::min(check.rows, check.cols);

      if (field.is_prime_field()) {
        ModMatrix m(check.rows, check.cols, p);
        m.a = chain_u64.a;
        check.rank = detail::rank_mod(std::move(m), parallel);
        check.rank_exact = true;
        check.certificate = "modular";
        check.certificate_prime = p;
      } else {
        IntMatrix m(check.rows, check.cols);
        if (u64_exact) {
          for (std::size_t k = 0; k < chain_u64.a.size(); ++k)
            m.a[k] = mpz_class(static_cast<unsigned long>(chain_u64.a[k]));
        } else {
          m.a = chain_mpz.a;  // copy: the chain continues to higher powers
        }
        const MapOutcome outcome = resolve_rational(m, parallel);
        check.rank = outcome.rank;
        check.rank_exact = outcome.exact;
        check.certificate = outcome.certificate;
        check.certificate_prime = outcome.prime;
      }
      // A kernel-witness outcome proves the deficiency, so an inexact rank
      // value can only accompany a failed map.
      check.full_rank = check.rank_exact && check.rank == check.expected_rank;
      report.maps[slot(t, i)] = std::move(check);
    }
  }

  report.pass = std::all_of(report.maps.begin(), report.maps.end(),
                            [](const MapCheck& c) { return c.full_rank; });
  if (!report.pass && options.want_witness) {
    const MapCheck* failure = report.first_failure();
    report.witness = extract_witness(q, steps, field, failure->source_degree, failure->power,
                                     parallel);
  }
  return report;
}

}  // namespace

const MapCheck* LefschetzReport::first_failure() const {
  for (const MapCheck& check : maps)
    if (!check.full_rank) return &check;
  return nullptr;
}

ExactMatrix mult_matrix(const GradedQuotient& q, int i, int t, const FieldSpec& field) {
  if (i < 0 || t < 1) throw std::invalid_argument("mult_matrix: need i >= 0 and t >= 1");
  const std::vector<SparseStep> steps = build_steps(q);
  const std::size_t rows = static_cast<std::size_t>(q.dim(i + t));
  const std::size_t cols = static_cast<std::size_t>(q.dim(i));
  ExactMatrix out(rows, cols, field);
  if (rows == 0 || cols == 0) return out;
  if (field.is_prime_field()) {
    const ModMatrix m = mod_map_matrix(q, steps, i, t, field.characteristic());
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out.set_residue(r, c, m.at(r, c));
  } else {
    const IntMatrix m = int_map_matrix(q, steps, i, t);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out.set_rational(r, c, mpq_class(m.at(r, c)));
  }
  return out;
}

BlockDecomposition block_decomposition(const GradedQuotient& q, int i, int t,
                                       const FieldSpec& field) {
  if (i < 1 || t < 1) throw std::invalid_argument("block_decomposition: need i >= 1 and t >= 1");
  const GradedQuotient barred(delete_last_variable(q.ideal()));

  ExactMatrix top_left = mult_matrix(barred, i, t, field);
  ExactMatrix bottom_core =
      t == 1 ? ExactMatrix::identity(static_cast<std::size_t>(barred.dim(i)), field)
             : mult_matrix(barred, i, t - 1, field);
  ExactMatrix bottom_left = bottom_core.scaled(mpq_class(t));
  ExactMatrix bottom_right = mult_matrix(barred, i - 1, t, field);

  // Assemble [[top_left, 0], [bottom_left, bottom_right]] and compare with
  // the directly computed M_i^t; the split ordering of B_k makes the row
  // and column blocks line up without any permutation.
  const ExactMatrix direct = mult_matrix(q, i, t, field);
  bool matches = direct.rows() == top_left.rows() + bottom_left.rows() &&
                 direct.cols() == top_left.cols() + bottom_right.cols() &&
                 bottom_left.rows() == bottom_right.rows() &&
                 top_left.cols() == bottom_left.cols();
  if (matches) {
    ExactMatrix assembled(direct.rows(), direct.cols(), field);
    const std::size_t row_split = top_left.rows();
    const std::size_t col_split = top_left.cols();
    for (std::size_t r = 0; r < top_left.rows(); ++r)
      for (std::size_t c = 0; c < top_left.cols(); ++c) {
        if (field.is_rationals())
          assembled.set_rational(r, c, top_left.rational_at(r, c));
        else
          assembled.set_residue(r, c, top_left.residue_at(r, c));
      }
    for (std::size_t r = 0; r < bottom_left.rows(); ++r) {
      for (std::size_t c = 0; c < bottom_left.cols(); ++c) {
        if (field.is_rationals())
          assembled.set_rational(row_split + r, c, bottom_left.rational_at(r, c));
        else
          assembled.set_residue(row_split + r, c, bottom_left.residue_at(r, c));
      }
      for (std::size_t c = 0; c < bottom_right.cols(); ++c) {
        if (field.is_rationals())
          assembled.set_rational(row_split + r, col_split + c, bottom_right.rational_at(r, c));
        else
          assembled.set_residue(row_split + r, col_split + c, bottom_right.residue_at(r, c));
      }
    }
    matches = assembled == direct;
  }
  return BlockDecomposition{std::move(top_left), std::move(bottom_left),
                            std::move(bottom_right), matches};
}

LefschetzReport check_slp(const MonomialIdeal& ideal, const FieldSpec& field,
                          const CheckOptions& options) {
  return run_checks(ideal, field, LefschetzProperty::strong, options);
}

LefschetzReport check_wlp(const MonomialIdeal& ideal, const FieldSpec& field,
                          const CheckOptions& options) {
  return run_checks(ideal, field, LefschetzProperty::weak, options);
}

long hf_gap(HfGapKind kind, int d) {
  if (d < 3) throw std::invalid_argument("hf_gap: need d >= 3");
  if (kind == HfGapKind::n3_injectivity_gap) {
    const GradedQuotient q(power_family(3, d));
    return static_cast<long>(mpz_class(q.hilbert().at(d + 1) - q.hilbert().at(d - 2)).get_si());
  }
  const GradedQuotient q(power_family(4, d));
  return static_cast<long>(
      mpz_class(q.hilbert().at(2 * d - 3) - q.hilbert().at(2 * d - 2)).get_si());
}

namespace {

std::string format_terms(const std::vector<std::pair<Monomial, mpq_class>>& terms) {
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [monomial, coeff] = terms[k];
    mpq_class magnitude = coeff < 0 ? mpq_class(-coeff) : coeff;
    if (k == 0) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (magnitude != 1)
      out += magnitude.get_str() + "*";
    out += to_text(monomial);
  }
  return out;
}

}  // namespace

std::string to_text(const LefschetzReport& report) {
  std::ostringstream out;
  out << (report.property == LefschetzProperty::strong ? "SLP" : "WLP") << " over "
      << report.field.to_string() << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
  out << "socle degree: " << report.socle_degree << "\n";
  out << "hilbert: " << to_text(report.hilbert) << "\n";
  if (const MapCheck* failure = report.first_failure()) {
    out << "first failure: i=" << failure->source_degree << " t=" << failure->power << ": rank "
        << (failure->rank_exact ? "" : ">= ") << failure->rank << " < expected "
        << failure->expected_rank << " [" << failure->certificate << "]\n";
  }
  if (report.witness) {
    out << "witness ("
        << (report.witness->side == WitnessSide::kernel ? "kernel" : "cokernel functional")
        << ", i=" << report.witness->source_degree << ", t=" << report.witness->power
        << "): " << format_terms(report.witness->terms) << "\n";
  }
  out << "maps checked: " << report.maps.size() << "\n";
  for (const MapCheck& check : report.maps) {
    out << "  t=" << check.power << " i=" << check.source_degree << ": rank "
        << (check.rank_exact ? "" : ">= ") << check.rank << "/" << check.expected_rank << " "
        << (check.full_rank ? "ok" : "DEFICIENT") << " (" << check.certificate << ")\n";
  }
  return out.str();
}

}  // namespace lefschetz
