#pragma once

#include "orbitq/partition.hpp"
#include "orbitq/root_system.hpp"

namespace orbitq {

/// Range convention for the remainder in n = q*m0 + s0.
enum class EkvConvention {
	Standard, // 0 <= s0 <= q-1
	SoEven,   // 1 <= s0 <= q, used for so_n with n even
};

struct EkvDecomposition
{
	int n;
	int q;
	int m0;
	int s0;
	EkvConvention convention;
};

EkvDecomposition decompose(int n, int q, EkvConvention convention);
EkvConvention convention_for(ClassicalFamily const &family);

/// K_n(q) = m0^2 (q - s0) + (m0 + 1)^2 s0
long long ekv_K(int n, int q, EkvConvention convention);

/// d_g(q) from the closed case formulas in n and q.
int d_classical(ClassicalFamily const &family, int q);

/// #{alpha in Delta : q | ht(alpha)} + rank, counted over all roots.
int d_via_heights(RootSystem const &rs, int q);

/// Signed correction term of the coprincipal case (q even, so_odd or sp):
/// the centralizer of O_q has dimension d(q) + correction for so_odd and
/// d(q/2) + correction for sp (the correction is <= 0 there).
int coprincipal_correction(ClassicalFamily const &family, int q);

/// The predicted dim g^f for f in O_q in the coprincipal case.
int coprincipal_centralizer_prediction(ClassicalFamily const &family, int q);

} // namespace orbitq
