#include "orbitq/affine.hpp"

#include "orbitq/errors.hpp"
#include "orbitq/integral_roots.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace orbitq {

bool AffineRealRoot::positive() const
{
	if (n != 0)
		return n > 0;
	return std::any_of(finite.coords.begin(), finite.coords.end(), [](int c) { return c > 0; });
}

std::string AffineRealRoot::str() const { return fmt::format("{}{:+}d", finite.str(), n); }

bool is_admissible_number(CartanType ct, int p, int q)
{
	if (p < 1 || q < 1 || std::gcd(p, q) != 1)
		return false;
	auto const &rs = root_system(ct);
	int bound = std::gcd(q, rs.lacing()) == 1 ? rs.dual_coxeter_number() : rs.coxeter_number();
	return p >= bound;
}

AdmissibleLevel admissible_level(CartanType ct, int p, int q)
{
	if (!is_admissible_number(ct, p, q))
		throw InvalidInput(fmt::format("{}: p/q = {}/{} is not an admissible number", ct.str(), p, q));
	int hv = root_system(ct).dual_coxeter_number();
	return {ct, p, q, Rational(p, q) - Rational(hv)};
}

int minimal_admissible_p(CartanType ct, int q)
{
	for (int p = 1;; ++p)
		if (is_admissible_number(ct, p, q))
			return p;
}

Rational affine_pairing(RootSystem const &rs, AffineWeight const &w, AffineRealRoot const &r)
{
	Rational n2 = rs.norm2(r.finite);
	return Rational(2) * (rs.form(w.finite, rs.as_weight(r.finite)) + Rational(r.n) * w.k) / n2;
}

bool in_coweight_lattice(RootSystem const &rs, Coweight const &b)
{
	auto const &a = rs.cartan_matrix();
	for (int j = 0; j < rs.rank(); ++j) {
		Rational s = 0;
		for (int i = 0; i < rs.rank(); ++i)
			s += b.coords[i] * Rational(a[i][j]);
		if (!s.is_integer())
			return false;
	}
	return true;
}

Coweight coweight_from_weight(RootSystem const &rs, Weight const &w)
{
	Coweight b{std::vector<Rational>(rs.rank())};
	for (int i = 0; i < rs.rank(); ++i)
		b.coords[i] = w.coords[i] * rs.symmetrizers()[i];
	if (!in_coweight_lattice(rs, b))
		throw InvalidInput(fmt::format("{} is not in the coweight lattice", w.str()));
	return b;
}

Rational root_coweight_pairing(RootSystem const &rs, Root const &alpha, Coweight const &b)
{
	auto const &a = rs.cartan_matrix();
	Rational s = 0;
	for (int i = 0; i < rs.rank(); ++i) {
		int ai = 0;
		for (int j = 0; j < rs.rank(); ++j)
			ai += a[i][j] * alpha.coords[j];
		s += b.coords[i] * Rational(ai);
	}
	return s;
}

AffineRealRoot translate(RootSystem const &rs, Coweight const &beta, AffineRealRoot const &r)
{
	Rational shift = root_coweight_pairing(rs, r.finite, beta);
	if (!shift.is_integer())
		throw ConsistencyError("translation by a non-lattice coweight");
	return {r.finite, static_cast<int>(checked::sub(r.n, shift.to_integer()))};
}

AffineWeight lambda_hat_q(AdmissibleLevel const &level)
{
	auto const &rs = root_system(level.ct);
	Weight const &top = std::gcd(level.q, rs.lacing()) == 1 ? rs.rho() : rs.rho_check();
	return {top / Rational(level.q) - rs.rho(), level.k, Rational(0)};
}

bool in_closed_form_kLambda0(RootSystem const &rs, AdmissibleLevel const &level,
                             AffineRealRoot const &r)
{
	int q = level.q;
	int lacing = rs.lacing();
	if (std::gcd(q, lacing) == 1 || rs.is_long(r.finite))
		return r.n % q == 0;
	return r.n % (q / lacing) == 0;
}

namespace {

// x a + y b = g
void ext_gcd(long long a, long long b, long long &x, long long &y, long long &g)
{
	if (b == 0) {
		x = 1;
		y = 0;
		g = a;
		return;
	}
	long long x1, y1;
	ext_gcd(b, a % b, x1, y1, g);
	x = y1;
	y = x1 - (a / b) * y1;
}

} // namespace

Prop24Report verify_prop_2_4(CartanType ct, int p, int q, int window, bool enforce_admissible)
{
	AdmissibleLevel level;
	if (enforce_admissible) {
		level = admissible_level(ct, p, q);
	} else {
		if (p < 1 || q < 1 || std::gcd(p, q) != 1)
			throw InvalidInput("the window check needs coprime p, q >= 1");
		level = {ct, p, q, Rational(p, q) - Rational(root_system(ct).dual_coxeter_number())};
	}
	auto const &rs = root_system(ct);
	int const lacing = rs.lacing();
	bool const principal = std::gcd(q, lacing) == 1;
	Prop24Report rep{ct, p, q, window > 0 ? window : 3 * q,
	                 principal ? OrbitCase::Principal : OrbitCase::Coprincipal, {}, 0, 0, {}};
	if (rep.window < 3 * q)
		throw InvalidInput(fmt::format("window {} is below 3q = {}", rep.window, 3 * q));
	auto fail = [&](std::string msg) {
		if (rep.failures.size() < 20)
			rep.failures.push_back(std::move(msg));
	};

	// principal: c r p + d q = -1, mu = c r rho; coprincipal: c p - d q = -1, mu = c rho_check
	long long a = principal ? static_cast<long long>(lacing) * p : p;
	long long x, y, g;
	ext_gcd(a, q, x, y, g);
	if (g != 1)
		throw ConsistencyError("Bezout coefficients need coprime inputs");
	long long c = -x;
	long long d = principal ? -y : y;
	rep.bezout.push_back({c, d});
	rep.bezout.push_back({c + q, principal ? d - a : d + a});
	for (auto const &bz : rep.bezout) {
		long long lhs = principal ? bz.c * a + bz.d * q : bz.c * p - bz.d * q;
		if (lhs != -1)
			throw ConsistencyError("Bezout identity failed");
	}

	AffineWeight lam = lambda_hat_q(level);
	if (enforce_admissible && !(lam.finite == lambda_q(ct, q).weight))
		fail("restriction of lambda_hat_q to h differs from lambda_q");
	AffineWeight lam_rho{lam.finite + rs.rho(), lam.k + Rational(rs.dual_coxeter_number()), Rational(0)};
	AffineWeight k_rho{rs.rho(), level.k + Rational(rs.dual_coxeter_number()), Rational(0)};

	std::vector<Coweight> mus;
	for (auto const &bz : rep.bezout) {
		Weight mu = principal ? Rational(checked::mul(bz.c, lacing)) * rs.rho()
		                      : Rational(bz.c) * rs.rho_check();
		mus.push_back(coweight_from_weight(rs, mu));
	}

	for (auto const &alpha : rs.roots()) {
		for (int n = -rep.window; n <= rep.window; ++n) {
			AffineRealRoot r{alpha, n};
			++rep.roots_checked;
			Rational v = affine_pairing(rs, lam_rho, r);
			bool integral = v.is_integer();
			if (integral) {
				++rep.integral_in_window;
				if (r.positive() && v <= Rational(0))
					fail(fmt::format("{}: <lambda+rho, coroot> = {} is not positive", r.str(), v.str()));
			}
			bool k_integral = affine_pairing(rs, k_rho, r).is_integer();
			if (k_integral != in_closed_form_kLambda0(rs, level, r))
				fail(fmt::format("{}: Delta_hat(k Lambda_0) membership disagrees with its closed form",
				                 r.str()));
			for (std::size_t i = 0; i < mus.size(); ++i) {
				// r lies in t_{-mu}(S) iff t_{mu}(r) lies in S
				AffineRealRoot pre = translate(rs, mus[i], r);
				bool in_image = affine_pairing(rs, k_rho, pre).is_integer();
				if (in_image != integral)
					fail(fmt::format("{}: integral for lambda_hat_q = {}, in t_(-mu)(Delta_hat(k Lambda_0)) "
					                 "= {} (c = {})",
					                 r.str(), integral, in_image, rep.bezout[i].c));
			}
		}
	}
	return rep;
}

} // namespace orbitq
