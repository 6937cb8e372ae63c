#pragma once

#include "orbitq/orbits.hpp"
#include "orbitq/root_system.hpp"

#include <string>
#include <utility>
#include <vector>

namespace orbitq {

/// finite + k Lambda_0 + delta_coeff delta
struct AffineWeight
{
	Weight finite;
	Rational k;
	Rational delta_coeff;
};

/// alpha + n delta
struct AffineRealRoot
{
	Root finite;
	int n;

	bool positive() const;
	friend auto operator<=>(AffineRealRoot const &, AffineRealRoot const &) = default;
	std::string str() const;
};

struct AdmissibleLevel
{
	CartanType ct{Family::A, 1};
	int p = 0;
	int q = 0;
	Rational k; // -h^vee + p/q
};

/// gcd(p, q) = 1 and p >= h^vee when gcd(q, r) = 1, p >= h otherwise.
bool is_admissible_number(CartanType ct, int p, int q);
/// Throws InvalidInput unless is_admissible_number holds.
AdmissibleLevel admissible_level(CartanType ct, int p, int q);
/// Smallest admissible numerator for the denominator q.
int minimal_admissible_p(CartanType ct, int q);

/// <w, (alpha + n delta)^vee> = 2 ((w|alpha) + n k) / (alpha|alpha)
Rational affine_pairing(RootSystem const &rs, AffineWeight const &w, AffineRealRoot const &r);

/// Element of the coweight lattice, in coordinates over the simple coroots.
struct Coweight
{
	std::vector<Rational> coords;
};

/// The coweight identified with w through the form; throws unless it pairs
/// integrally with every simple root.
Coweight coweight_from_weight(RootSystem const &rs, Weight const &w);
bool in_coweight_lattice(RootSystem const &rs, Coweight const &b);
/// (alpha|beta) = <alpha, beta>
Rational root_coweight_pairing(RootSystem const &rs, Root const &alpha, Coweight const &b);

/// t_beta(alpha + n delta) = alpha + (n - (alpha|beta)) delta
AffineRealRoot translate(RootSystem const &rs, Coweight const &beta, AffineRealRoot const &r);

/// lambda_hat_q = k Lambda_0 + lambda_q for the admissible level k = -h^vee + p/q.
AffineWeight lambda_hat_q(AdmissibleLevel const &level);

/// Membership in Delta_hat(k Lambda_0) from the closed description: alpha + nq delta
/// in the principal case, and for r | q long roots at nq delta, short ones at n(q/r) delta.
bool in_closed_form_kLambda0(RootSystem const &rs, AdmissibleLevel const &level,
                             AffineRealRoot const &r);

struct BezoutChoice
{
	long long c;
	long long d;
};

struct Prop24Report
{
	CartanType ct;
	int p;
	int q;
	int window;
	OrbitCase case_tag;
	std::vector<BezoutChoice> bezout;
	long long roots_checked = 0;
	long long integral_in_window = 0;
	std::vector<std::string> failures;

	bool passed() const { return failures.empty(); }
};

/// Window check of Delta_hat(lambda_hat_q) = t_{-mu}(Delta_hat(k Lambda_0)) over all
/// alpha + n delta with |n| <= window, for two Bezout solutions. window = 0 means 3q.
/// With enforce_admissible off, a coprime pair p/q below the admissible bound is
/// run anyway and the resulting failures are reported.
Prop24Report verify_prop_2_4(CartanType ct, int p, int q, int window = 0,
                             bool enforce_admissible = true);

} // namespace orbitq
