#pragma once

#include "orbitq/orbits.hpp"
#include "orbitq/root_system.hpp"

#include <vector>

namespace orbitq {

/// lambda_q = rho/q - rho, or rho_check/q - rho in the coprincipal case.
struct LambdaQ
{
	CartanType ct;
	int q;
	Weight weight;
	OrbitCase case_tag;
};

/// The case follows from gcd(q, lacing); with extended set a non-coprime q
/// still gets rho/q - rho. Regular dominance of lambda_q + rho is checked.
LambdaQ lambda_q(CartanType ct, int q, bool extended = false);

struct IntegralCounts
{
	int by_pairing;
	int by_heights;
};

/// #{alpha : <lambda + rho, alpha^vee> in Z}, straight from the definition.
int count_by_pairing(LambdaQ const &lq);
/// The same count through divisibility of heights of coroots (or of long and
/// short roots separately in the coprincipal case).
int count_by_heights(LambdaQ const &lq);
IntegralCounts integral_counts(LambdaQ const &lq);
/// Both counts, which must agree; throws ConsistencyError otherwise.
int integral_count(LambdaQ const &lq);

/// dim N - |Delta(lambda_q)|
int var_dim_joseph(CartanType ct, int q, bool extended = false);

/// sigma with A_dual[sigma(i)][sigma(j)] = A[j][i], so that alpha_i^vee is the
/// simple root sigma(i) of the Langlands dual system.
std::vector<int> dual_simple_permutation(CartanType ct);

/// alpha^vee as a root of the Langlands dual system.
Root dual_coroot(RootSystem const &rs, Root const &alpha);

} // namespace orbitq
