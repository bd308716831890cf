#pragma once

// Inverse-Mellin machinery: the kernel psi attached to a Gamma datum, its
// closed form for single-factor kernels, vertical-line quadrature for the
// general case, and the weight function Phi_F.

#include "xideform/precision.hpp"
#include "xideform/selberg.hpp"

namespace xideform {

struct MellinKernel {
  GammaData gamma;  // alpha and Q play no role in the kernel itself
  enum class Mode { ClosedForm, Quadrature } mode = Mode::Quadrature;
};

// ClosedForm when exactly one Gamma factor remains after the polynomial
// reduction, Quadrature otherwise.
MellinKernel kernel_from_gamma(const GammaData& gamma);

// Exact finite-sum evaluation: the polynomial w^m (w-1)^m is folded into
// shifted Gamma factors by w Gamma(aw+b) = (1/a) Gamma(aw+b+1) - (b/a)
// Gamma(aw+b), and each Gamma(aw+b+j) inverts to (1/a) v^{(b+j)/a}
// e^{-v^{1/a}}.
CxR psi_closed(const MellinKernel& kernel, const Real& v);

// Numerical inverse Mellin along a vertical line right of all kernel poles.
ValueWithError psi_quad(const MellinKernel& kernel, const Real& v,
                        const PrecisionConfig& prec);

// Cheap upper bound on |psi(v)|, used for series truncation only.
Real psi_bound(const MellinKernel& kernel, const Real& v);

// Direct summation of the classical weight
//   Phi(u) = sum_n (2 pi^2 n^4 e^{9u} - 3 pi n^2 e^{5u}) e^{-pi n^2 e^{4u}}.
// The term count grows like e^{-4u}, so u < -2 is refused unless the caller
// opts into the (proven) evenness Phi(u) = Phi(-u).
ValueWithError phi_zeta(const Real& u, const PrecisionConfig& prec,
                        bool use_evenness = false);

// Phi_F(u) = 2 alpha e^u sum_n a_n psi(n e^{2u} / Q).
ValueWithError phi_F(const LFunctionSpec& spec, const Real& u,
                     const PrecisionConfig& prec);

}  // namespace xideform
