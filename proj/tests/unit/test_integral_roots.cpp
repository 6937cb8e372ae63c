#include "orbitq/ekv.hpp"
#include "orbitq/errors.hpp"
#include "orbitq/integral_roots.hpp"
#include "orbitq/orbits.hpp"

#include <doctest.h>

using namespace orbitq;

TEST_SUITE("integral_roots")
{
	TEST_CASE("lambda_1 is zero")
	{
		for (auto ct : supported_types(6)) {
			auto lq = lambda_q(ct, 1);
			CHECK(lq.weight == Weight::zero(ct.rank()));
		}
	}

	TEST_CASE("rank one")
	{
		auto const &a1 = root_system(CartanType(Family::A, 1));
		auto lq = lambda_q(CartanType(Family::A, 1), 3);
		CHECK(a1.pairing(lq.weight + a1.rho(), a1.positive_roots()[0]) == Rational(1, 3));
		CHECK(lq.weight.coords[0] == Rational(-1, 3));
	}

	TEST_CASE("B2 coprincipal weight")
	{
		CartanType b2(Family::B, 2);
		auto const &rs = root_system(b2);
		auto lq = lambda_q(b2, 2);
		CHECK(lq.case_tag == OrbitCase::Coprincipal);
		CHECK(lq.weight + rs.rho() == rs.rho_check() / Rational(2));
		int integral = 0;
		for (auto const &a : rs.roots()) {
			Rational v = rs.pairing(lq.weight + rs.rho(), a);
			CHECK(v == rs.pairing(rs.rho_check(), a) / Rational(2));
			if (v.is_integer())
				++integral;
		}
		CHECK(integral_count(lq) == integral);
	}

	TEST_CASE("counts from the tables")
	{
		CHECK(integral_count(lambda_q(CartanType::parse("G2"), 4)) == 2);
		CHECK(integral_count(lambda_q(CartanType::parse("E7"), 9)) == 8);
		for (auto ct : supported_types(8))
			CHECK(integral_count(lambda_q(ct, 1)) == root_system(ct).nilcone_dim());
	}

	TEST_CASE("Joseph dimension")
	{
		CHECK(var_dim_joseph(CartanType::parse("F4"), 3) == 36);
		CHECK(var_dim_joseph(CartanType::parse("E8"), 5) == 200);
		for (auto ct : supported_types(8))
			CHECK(var_dim_joseph(ct, 1) == 0);
	}

	TEST_CASE("dual simple permutation")
	{
		for (auto ct : supported_types(8)) {
			auto sigma = dual_simple_permutation(ct);
			auto const &a = root_system(ct).cartan_matrix();
			auto const &ad = root_system(langlands_dual(ct)).cartan_matrix();
			for (int i = 0; i < ct.rank(); ++i)
				for (int j = 0; j < ct.rank(); ++j)
					CHECK(ad[sigma[i]][sigma[j]] == a[j][i]);
		}
		// coroots of long roots of G2 are the short roots of the dual and vice versa
		auto const &g2 = root_system(CartanType::parse("G2"));
		for (auto const &a : g2.roots())
			CHECK(root_system(CartanType::parse("G2")).is_long(dual_coroot(g2, a)) != g2.is_long(a));
	}

	TEST_CASE("both counts agree, regular dominance holds and the identity holds")
	{
		for (auto ct : supported_types(12)) {
			auto const &rs = root_system(ct);
			auto dual = langlands_dual(ct);
			for (int q = 1; q <= 2 * rs.coxeter_number(); ++q) {
				CAPTURE(ct.str());
				CAPTURE(q);
				auto lq = lambda_q(ct, q);
				auto c = integral_counts(lq);
				CHECK(c.by_pairing == c.by_heights);
				if (lq.case_tag == OrbitCase::Principal)
					CHECK(c.by_pairing == d_via_heights(root_system(dual), q) - rs.rank());
				CHECK(c.by_pairing == rs.nilcone_dim() - dim_Nq(ct, q));
				auto o = orbit_q(ct, q);
				if (auto const *orb = o.classical())
					CHECK(c.by_pairing == centralizer_dim(*orb) - rs.rank());
			}
		}
	}

	TEST_CASE("tabulated counts")
	{
		for (auto const &row : exceptional_rows())
			for (auto const &it : row.q.items) {
				CAPTURE(row.type.str());
				CAPTURE(it.q);
				CHECK(integral_count(lambda_q(row.type, it.q, it.not_coprime)) == row.integral_roots);
				CHECK(var_dim_joseph(row.type, it.q, it.not_coprime) == row.dim);
			}
	}
}
