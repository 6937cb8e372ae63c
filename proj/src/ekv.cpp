#include "orbitq/ekv.hpp"

#include "orbitq/errors.hpp"

#include <fmt/format.h>

#include <numeric>

namespace orbitq {

EkvDecomposition decompose(int n, int q, EkvConvention convention)
{
	if (n < 1 || q < 1)
		throw InvalidInput(fmt::format("decompose needs n, q >= 1 (got n={}, q={})", n, q));
	EkvDecomposition d{n, q, n / q, n % q, convention};
	if (convention == EkvConvention::SoEven && d.s0 == 0) {
		d.m0 -= 1;
		d.s0 = q;
	}
	return d;
}

EkvConvention convention_for(ClassicalFamily const &family)
{
	if (family.kind() == MatrixFamily::SO && family.n() % 2 == 0)
		return EkvConvention::SoEven;
	return EkvConvention::Standard;
}

long long ekv_K(int n, int q, EkvConvention convention)
{
	auto d = decompose(n, q, convention);
	long long m = d.m0;
	return m * m * (q - d.s0) + (m + 1) * (m + 1) * d.s0;
}

int d_classical(ClassicalFamily const &family, int q)
{
	int n = family.n();
	auto dec = decompose(n, q, convention_for(family));
	long long K = ekv_K(n, q, dec.convention);
	long long m0 = dec.m0;
	bool q_odd = q % 2 == 1;
	bool m_odd = m0 % 2 != 0;

	if (family.kind() == MatrixFamily::SL)
		return static_cast<int>(K - 1);

	long long twice = 0;
	if (family.kind() == MatrixFamily::SP) {
		if (!q_odd)
			twice = K;
		else
			twice = K + (m_odd ? m0 + 1 : m0);
	} else if (n % 2 == 1) {
		if (!q_odd)
			twice = K - (2 * m0 + 1);
		else
			twice = K - (m_odd ? m0 : m0 + 1);
	} else {
		if (q_odd)
			twice = K - (m_odd ? m0 + 1 : m0);
		else
			twice = K - (m_odd ? 2 * (m0 + 1) : 2 * m0);
	}
	if (twice % 2 != 0)
		throw ConsistencyError(
		    fmt::format("2 d(q) = {} is odd for {} at q = {}", twice, family.str(), q));
	return static_cast<int>(twice / 2);
}

int d_via_heights(RootSystem const &rs, int q)
{
	if (q < 1)
		throw InvalidInput("q must be positive");
	int count = 0;
	for (auto const &r : rs.roots()) {
		int ht = std::accumulate(r.coords.begin(), r.coords.end(), 0);
		if (ht % q == 0)
			++count;
	}
	return count + rs.rank();
}

int coprincipal_correction(ClassicalFamily const &family, int q)
{
	if (q % 2 != 0)
		throw InvalidInput("the coprincipal case needs q even");
	int n = family.n();
	if (family.kind() == MatrixFamily::SO && n % 2 == 1) {
		auto d = decompose(n, q, EkvConvention::Standard);
		return d.m0 % 2 == 0 ? d.m0 : d.m0 + 1;
	}
	if (family.kind() == MatrixFamily::SP) {
		int half = q / 2;
		if (half % 2 == 0)
			return 0;
		auto d = decompose(n, half, EkvConvention::Standard);
		return d.m0 % 2 == 0 ? -d.m0 : -(d.m0 + 1);
	}
	throw InvalidInput(family.str() + " has no coprincipal case");
}

int coprincipal_centralizer_prediction(ClassicalFamily const &family, int q)
{
	int corr = coprincipal_correction(family, q);
	if (family.kind() == MatrixFamily::SP)
		return d_classical(family, q / 2) + corr;
	return d_classical(family, q) + corr;
}

} // namespace orbitq
