#pragma once

#include <complex>

namespace lossyspdc {

using cplx = std::complex<double>;

// e^z - 1 without cancellation near z = 0.
cplx cexpm1(cplx z);

// (e^z - 1)/z, equal to 1 at z = 0.
cplx exp_phi1(cplx z);

// Divided differences of exp: exp[a, b] = (e^b - e^a)/(b - a) and
// exp[a, b, c] = (exp[b, c] - exp[a, b])/(c - a). Both are symmetric in
// their nodes, finite at coincident nodes, and never overflow when every
// node has Re <= 0.
cplx exp_dd1(cplx a, cplx b);
cplx exp_dd2(cplx a, cplx b, cplx c);

// sin(z)/z.
cplx complex_sinc(cplx z);

// sin(z)/z * exp(-|Im z|), bounded for all z.
cplx scaled_sinc(cplx z);

}  // namespace lossyspdc
