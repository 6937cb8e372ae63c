#include "orbitq/errors.hpp"
#include "orbitq/partition.hpp"
#include "orbitq/root_system.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace orbitq;
using orbitq::testing::exponent_fixture;

namespace {

RootSystem const &rs(char const *name) { return root_system(CartanType::parse(name)); }

Root simple(int rank, int i)
{
	Root r{std::vector<int>(rank, 0)};
	r.coords[i] = 1;
	return r;
}

} // namespace

TEST_SUITE("rootsys")
{
	TEST_CASE("rank bounds are enforced")
	{
		CHECK_THROWS_AS(CartanType(Family::D, 3), InvalidInput);
		CHECK_THROWS_AS(CartanType(Family::B, 1), InvalidInput);
		CHECK_THROWS_AS(CartanType(Family::E, 9), InvalidInput);
		CHECK_THROWS_AS(CartanType(Family::F, 3), InvalidInput);
		CHECK_THROWS_AS(CartanType::parse("X3"), InvalidInput);
		CHECK_NOTHROW(CartanType(Family::A, 1));
		CHECK(CartanType::parse("e8").str() == "E8");
	}

	TEST_CASE("small and large examples")
	{
		auto const &a2 = rs("A2");
		CHECK(a2.roots().size() == 6);
		CHECK(a2.coxeter_number() == 3);
		CHECK(a2.dual_coxeter_number() == 3);
		CHECK(a2.lacing() == 1);

		auto const &g2 = rs("G2");
		CHECK(g2.roots().size() == 12);
		CHECK(g2.lacing() == 3);
		CHECK(g2.nilcone_dim() == 12);

		auto const &e8 = rs("E8");
		CHECK(e8.roots().size() == 240);
		CHECK(e8.coxeter_number() == 30);
		CHECK(e8.dual_coxeter_number() == 30);
	}

	TEST_CASE("heights")
	{
		auto const &a2 = rs("A2");
		CHECK(a2.height(Root{{1, 1}}) == 2);
		CHECK(rs("G2").height(rs("G2").theta()) == 5);
		CHECK(rs("G2").height(rs("G2").theta()) == rs("G2").coxeter_number() - 1);
		// the highest root of E8 has the largest coefficient sum among all roots
		auto const &e8 = rs("E8");
		int top = 0;
		for (auto const &r : e8.roots()) {
			int s = 0;
			for (int c : r.coords)
				s += c;
			top = std::max(top, s);
		}
		CHECK(top == 29);
		CHECK(e8.height(e8.theta()) == top);
		CHECK(e8.exponents().back() + 1 == e8.coxeter_number());
		CHECK_THROWS_AS(a2.height(Root{{2, 1}}), InvalidInput);
	}

	TEST_CASE("pairings")
	{
		for (auto ct : supported_types(6)) {
			auto const &r = root_system(ct);
			for (int i = 0; i < ct.rank(); ++i)
				CHECK(r.pairing(r.rho(), simple(ct.rank(), i)) == Rational(1));
		}
		// B2: <rho_check, alpha^vee> = 2 (rho_check|alpha) / (alpha|alpha) with (rho_check|alpha) = ht(alpha)
		auto const &b2 = rs("B2");
		for (auto const &a : b2.positive_roots()) {
			Rational expect = Rational(b2.height(a)) * Rational(2) / b2.norm2(a);
			CHECK(b2.pairing(b2.rho_check(), a) == expect);
			if (b2.is_long(a))
				CHECK(b2.pairing(b2.rho_check(), a) == Rational(b2.height(a)));
			else
				CHECK(b2.pairing(b2.rho_check(), a) == Rational(2 * b2.height(a)));
		}
	}

	TEST_CASE("Langlands duality")
	{
		CHECK(langlands_dual(CartanType(Family::B, 3)) == CartanType(Family::C, 3));
		CHECK(langlands_dual(CartanType(Family::F, 4)) == CartanType(Family::F, 4));
		CHECK(langlands_dual(CartanType(Family::A, 5)) == CartanType(Family::A, 5));
		for (auto ct : supported_types(10)) {
			auto d = langlands_dual(ct);
			CHECK(langlands_dual(d) == ct);
			CHECK(root_system(d).rank() == root_system(ct).rank());
			CHECK(root_system(d).exponents() == root_system(ct).exponents());
		}
	}

	TEST_CASE("exponents")
	{
		CHECK(rs("A2").exponents() == std::vector<int>{1, 2});
		CHECK(rs("G2").exponents() == std::vector<int>{1, 5});
		CHECK(rs("E8").exponents() == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
	}

	TEST_CASE("height multiplicities are dual to the exponents")
	{
		for (auto ct : supported_types(12)) {
			auto const &r = root_system(ct);
			std::map<int, int> mult;
			for (auto const &a : r.positive_roots())
				mult[r.height(a)] += 1;
			std::vector<int> p;
			for (auto [h, m] : mult)
				p.push_back(m);
			CHECK(std::is_sorted(p.rbegin(), p.rend()));
			std::vector<int> e = exponent_fixture(ct);
			std::sort(e.rbegin(), e.rend());
			CHECK(dual_partition(Partition(p)) == Partition(e));
			CHECK(r.exponents() == exponent_fixture(ct));
			CHECK(p.front() == ct.rank());
			CHECK(static_cast<int>(p.size()) == r.coxeter_number() - 1);
		}
	}

	TEST_CASE("structural invariants")
	{
		for (auto ct : supported_types(9)) {
			CAPTURE(ct.str());
			auto const &r = root_system(ct);
			CHECK(r.nilcone_dim() == r.dim() - r.rank());
			CHECK(r.positive_roots().size() * 2 == r.roots().size());
			int max_h = 0, at_max = 0;
			for (auto const &a : r.roots()) {
				bool pos = std::all_of(a.coords.begin(), a.coords.end(), [](int c) { return c >= 0; });
				bool neg = std::all_of(a.coords.begin(), a.coords.end(), [](int c) { return c <= 0; });
				CHECK((pos || neg));
				CHECK(r.form(r.rho_check(), r.as_weight(a)) == Rational(r.height(a)));
				CHECK(r.norm2(a) <= Rational(2));
				if (r.height(a) > max_h) {
					max_h = r.height(a);
					at_max = 1;
				} else if (r.height(a) == max_h) {
					++at_max;
				}
			}
			CHECK(at_max == 1);
			CHECK(r.norm2(r.theta()) == Rational(2));
			CHECK(r.coxeter_number() == max_h + 1);
			CHECK(r.dual_coxeter_number() == (r.pairing(r.rho(), r.theta()) + Rational(1)).to_integer());
			if (r.lacing() == 1)
				CHECK(r.theta_short() == r.theta());
			else
				CHECK(!r.is_long(r.theta_short()));
		}
	}

	TEST_CASE("long roots of C and short roots of B")
	{
		for (int l = 2; l <= 12; ++l) {
			auto const &c = root_system(CartanType(Family::C, l));
			std::vector<int> hts;
			for (auto const &a : c.positive_roots())
				if (c.is_long(a))
					hts.push_back(c.height(a));
			std::sort(hts.begin(), hts.end());
			std::vector<int> odd;
			for (int i = 1; i <= 2 * l - 1; i += 2)
				odd.push_back(i);
			CHECK(hts == odd);

			auto const &b = root_system(CartanType(Family::B, l));
			hts.clear();
			for (auto const &a : b.positive_roots())
				if (!b.is_long(a))
					hts.push_back(b.height(a));
			std::sort(hts.begin(), hts.end());
			std::vector<int> all;
			for (int i = 1; i <= l; ++i)
				all.push_back(i);
			CHECK(hts == all);
		}
	}
}
