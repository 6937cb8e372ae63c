#include "orbitq/integral_roots.hpp"

#include "orbitq/errors.hpp"

#include <fmt/format.h>

#include <map>
#include <mutex>
#include <numeric>

namespace orbitq {

LambdaQ lambda_q(CartanType ct, int q, bool extended)
{
	if (q < 1)
		throw InvalidInput("q must be positive");
	auto const &rs = root_system(ct);
	auto c = natural_case(rs.lacing(), q);
	if (c == OrbitCase::Coprincipal && std::gcd(q, rs.lacing()) != rs.lacing())
		throw InvalidInput(fmt::format("{}: gcd(q, r) is neither 1 nor r for q = {}", ct.str(), q));
	if (c == OrbitCase::Coprincipal && extended)
		c = OrbitCase::Extended;

	Weight const &top = c == OrbitCase::Coprincipal ? rs.rho_check() : rs.rho();
	LambdaQ lq{ct, q, top / Rational(q) - rs.rho(), c};

	Weight shifted = lq.weight + rs.rho();
	for (auto const &a : rs.positive_roots())
		if (rs.pairing(shifted, a) <= Rational(0))
			throw ConsistencyError(fmt::format("{} q={}: lambda_q + rho is not regular dominant at {}",
			                                   ct.str(), q, a.str()));
	return lq;
}

int count_by_pairing(LambdaQ const &lq)
{
	auto const &rs = root_system(lq.ct);
	Weight shifted = lq.weight + rs.rho();
	int count = 0;
	for (auto const &a : rs.roots())
		if (rs.pairing(shifted, a).is_integer())
			++count;
	return count;
}

std::vector<int> dual_simple_permutation(CartanType ct)
{
	static std::mutex mu;
	static std::map<CartanType, std::vector<int>> cache;
	std::lock_guard lock(mu);
	if (auto it = cache.find(ct); it != cache.end())
		return it->second;

	auto const &a = root_system(ct).cartan_matrix();
	auto const &ad = root_system(langlands_dual(ct)).cartan_matrix();
	int l = ct.rank();
	std::vector<int> sigma(l, -1);
	std::vector<bool> used(l, false);

	auto fits = [&](int i) {
		for (int j = 0; j <= i; ++j)
			if (ad[sigma[i]][sigma[j]] != a[j][i] || ad[sigma[j]][sigma[i]] != a[i][j])
				return false;
		return true;
	};
	auto search = [&](auto &&self, int i) -> bool {
		if (i == l)
			return true;
		for (int k = 0; k < l; ++k) {
			if (used[k])
				continue;
			sigma[i] = k;
			used[k] = true;
			if (fits(i) && self(self, i + 1))
				return true;
			used[k] = false;
		}
		sigma[i] = -1;
		return false;
	};
	if (!search(search, 0))
		throw ConsistencyError("no matching of simple coroots with the dual simple roots for " +
		                       ct.str());
	cache[ct] = sigma;
	return sigma;
}

Root dual_coroot(RootSystem const &rs, Root const &alpha)
{
	auto sigma = dual_simple_permutation(rs.type());
	auto cc = rs.coroot_coords(alpha);
	Root out{std::vector<int>(cc.size())};
	for (std::size_t i = 0; i < cc.size(); ++i)
		out.coords[sigma[i]] = cc[i];
	if (!root_system(langlands_dual(rs.type())).contains(out))
		throw ConsistencyError(fmt::format("coroot of {} is not a root of the dual system", alpha.str()));
	return out;
}

int count_by_heights(LambdaQ const &lq)
{
	auto const &rs = root_system(lq.ct);
	int q = lq.q;
	int count = 0;
	if (lq.case_tag == OrbitCase::Coprincipal) {
		int r = rs.lacing();
		if (q % r != 0)
			throw ConsistencyError("coprincipal count needs r | q");
		for (auto const &a : rs.roots()) {
			int ht = rs.height(a);
			int step = rs.is_long(a) ? q : q / r;
			if (ht % step == 0)
				++count;
		}
		return count;
	}
	auto const &dual = root_system(langlands_dual(lq.ct));
	for (auto const &a : rs.roots())
		if (dual.height(dual_coroot(rs, a)) % q == 0)
			++count;
	return count;
}

IntegralCounts integral_counts(LambdaQ const &lq)
{
	return {count_by_pairing(lq), count_by_heights(lq)};
}

int integral_count(LambdaQ const &lq)
{
	auto c = integral_counts(lq);
	if (c.by_pairing != c.by_heights)
		throw ConsistencyError(fmt::format("{} q={} {}: pairing count {} != height count {}",
		                                   lq.ct.str(), lq.q, to_string(lq.case_tag), c.by_pairing,
		                                   c.by_heights));
	return c.by_pairing;
}

int var_dim_joseph(CartanType ct, int q, bool extended)
{
	return root_system(ct).nilcone_dim() - integral_count(lambda_q(ct, q, extended));
}

} // namespace orbitq
