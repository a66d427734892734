#pragma once

#include <cstddef>

#include "lefschetz/field.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

/// Applies the differentiation action of g (in the polynomial ring) to f (in
/// the dual ring): x^b acts as the iterated partial derivative d^|b|/dX^b
/// with multiplicities, sending X^a to
/// prod_v a_v (a_v - 1) ... (a_v - b_v + 1) * X^(a-b) and to zero unless
/// b <= a componentwise.  Extended bilinearly.
MultivariatePoly apply_derivation(const MultivariatePoly& g, const MultivariatePoly& f);

/// Whether f lies in the inverse system of the monomial ideal, i.e. every
/// minimal generator contracts f to zero.
bool in_inverse_system(const MonomialIdeal& ideal, const MultivariatePoly& f);

struct DualityRanks {
  std::size_t primal_rank = 0;  ///< rank of multiplication by ell from degree i to i+1
  std::size_t dual_rank = 0;    ///< rank of contraction by ell from dual degree i+1 to i
};

/// Computes the rank of multiplication by ell = x_1 + ... + x_n from degree i
/// to degree i+1 of the quotient, and the rank of the contraction by ell on
/// the corresponding graded pieces of the inverse system.  Exact arithmetic
/// only: the field must be the rationals.
DualityRanks duality_rank(const MonomialIdeal& ideal, int i, const FieldSpec& field);

/// The bivariate kernel polynomial: the second mixed partial of
/// (y1^(d+1) - (-y2)^(d+1)) / (y1 + y2).
MultivariatePoly witness_fd_bivariate(int d);

/// The degree d-2 form f_d in three variables obtained from the bivariate
/// kernel polynomial by y1 -> x1 + x2, y2 -> x3.  Verifies internally that
/// (x1+x2+x3)^3 * f_d reduces to zero modulo power_family(3, d) and throws
/// std::logic_error if the kernel property fails.
MultivariatePoly witness_fd(int d);

/// Checks the exact polynomial identity
///   -(y1+y2)^3 * f_d^{biv} =
///     (d-1)(y1^(d+1) - (-y2)^(d+1)) + (d+1)(y1^d y2 + y1 (-y2)^d)
/// in the bivariate ring.
bool identity_check(int d);

struct N5Witness {
  MultivariatePoly kernel_f;  ///< degree 2d-2 element with ell * f in the ideal
  MultivariatePoly perp_F;    ///< degree 2d-1 dual form with ell o F = 0
};

/// Constructs and internally verifies the five-variable witnesses for the
/// power family with exponent d: kernel_f of degree 2d-2 multiplied by ell
/// lands in the ideal, and perp_F of degree 2d-1 lies in the inverse system
/// and is annihilated by contraction with ell.  Throws std::logic_error if
/// either verification fails.
N5Witness witness_n5(int d);

}  // namespace lefschetz
