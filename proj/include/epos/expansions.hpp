#pragma once

#include "epos/efunction.hpp"

namespace epos {

/// X of the n-vertex path: the sum of w_I e_I over compositions of n.
/// Only compositions with a nonzero weight are visited. Memoized; the
/// returned reference stays valid for the lifetime of the program.
const EFunction& path_csf_e(int n);

/// X of the three-legged spider S(a, b, c) with a >= b >= c >= 1 via
///   X_{P_n} + sum_{i=1}^{c} (X_{P_i} X_{P_{n-i}} - X_{P_{b+i}} X_{P_{n-b-i}}),
/// where n = a + b + c + 1. Throws DomainError when the legs are not a
/// partition.
EFunction spider_csf_e(int a, int b, int c);

/// X of S(4m+2, 2m, 1), a function of degree 6m+4.
EFunction spider4m_csf(int m);

}  // namespace epos
