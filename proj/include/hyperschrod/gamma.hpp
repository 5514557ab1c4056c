#pragma once

#include "hyperschrod/util.hpp"

namespace hyperschrod {

// Principal-branch log Gamma for complex arguments (Lanczos approximation,
// relative error below 1e-13 away from the poles).  Throws PoleError at the
// nonpositive integers.  Branch: arguments with Re z < 0.5 are handled by
// the recurrence log G(z) = log G(z+1) - Log z, which keeps exp(log_gamma)
// exact; only the real part and the exponential are consumed downstream.
cplx log_gamma(cplx z);

cplx gamma_fn(cplx z);

} // namespace hyperschrod
