#include "orbitq/ekv.hpp"
#include "orbitq/orbits.hpp"

#include <doctest.h>

#include <numeric>

using namespace orbitq;

namespace {

std::vector<ClassicalFamily> families_up_to_rank(int max_rank)
{
	std::vector<ClassicalFamily> out;
	for (auto ct : supported_types(max_rank))
		if (ct.is_classical())
			out.push_back(ClassicalFamily::from_cartan_type(ct));
	return out;
}

int count_height_divisible(RootSystem const &rs, int q, bool long_roots)
{
	int c = 0;
	for (auto const &a : rs.roots())
		if (rs.is_long(a) == long_roots && rs.height(a) % q == 0)
			++c;
	return c;
}

} // namespace

TEST_SUITE("ekv")
{
	TEST_CASE("K_n(q)")
	{
		CHECK(ekv_K(7, 3, EkvConvention::Standard) == 17);
		for (int q = 1; q <= 9; ++q)
			CHECK(ekv_K(q, q, EkvConvention::Standard) == q);
		CHECK(ekv_K(8, 3, EkvConvention::SoEven) == 22);
		auto d = decompose(9, 3, EkvConvention::SoEven);
		CHECK(d.m0 == 2);
		CHECK(d.s0 == 3);
	}

	TEST_CASE("d_g(q) examples")
	{
		CHECK(d_classical({MatrixFamily::SL, 7}, 3) == 16);
		CHECK(d_classical({MatrixFamily::SP, 4}, 2) == 4);
		CHECK(d_via_heights(root_system(CartanType(Family::C, 2)), 2) == 4);
		CHECK(d_classical({MatrixFamily::SO, 7}, 2) == 9);
		CHECK(d_via_heights(root_system(CartanType(Family::B, 3)), 2) == 9);
		CHECK(d_via_heights(root_system(CartanType(Family::A, 2)), 2) == 4);
		CHECK(d_classical({MatrixFamily::SL, 3}, 2) == 4);
		CHECK(d_via_heights(root_system(CartanType(Family::G, 2)), 7) == 2);
		for (auto ct : supported_types(8))
			CHECK(d_via_heights(root_system(ct), 1) == root_system(ct).dim());
	}

	TEST_CASE("coprincipal corrections")
	{
		CHECK(coprincipal_correction({MatrixFamily::SO, 7}, 2) == 4);
		CHECK(coprincipal_correction({MatrixFamily::SP, 4}, 4) == 0);
		CHECK(coprincipal_correction({MatrixFamily::SP, 6}, 2) == -6);
	}

	TEST_CASE("EKV relation for classical types up to rank 12")
	{
		for (auto const &f : families_up_to_rank(12)) {
			auto const &rs = root_system(*f.cartan_type());
			for (int q = 1; q <= 2 * rs.coxeter_number(); ++q) {
				CAPTURE(f.str());
				CAPTURE(q);
				CHECK(d_via_heights(rs, q) == d_classical(f, q));
			}
		}
	}

	TEST_CASE("d is the same for a type and its dual")
	{
		for (auto ct : supported_types(12)) {
			auto const &rs = root_system(ct);
			for (int q = 1; q <= 2 * rs.coxeter_number(); ++q)
				CHECK(d_via_heights(rs, q) == d_via_heights(root_system(langlands_dual(ct)), q));
		}
	}

	TEST_CASE("centralizer of O_q in the principal and coprincipal cases")
	{
		for (auto const &f : families_up_to_rank(12)) {
			int h = root_system(*f.cartan_type()).coxeter_number();
			for (int q = 1; q <= 2 * h; ++q) {
				CAPTURE(f.str());
				CAPTURE(q);
				if (std::gcd(q, f.lacing()) == 1) {
					auto o = orbit_q_classical(f, q, OrbitCase::Principal);
					CHECK(centralizer_dim(*o.classical()) == d_classical(f, q));
				} else {
					auto o = orbit_q_classical(f, q, OrbitCase::Coprincipal);
					CHECK(centralizer_dim(*o.classical()) == coprincipal_centralizer_prediction(f, q));
				}
			}
		}
	}

	TEST_CASE("short and long root bookkeeping")
	{
		for (int l = 2; l <= 12; ++l) {
			auto const &b = root_system(CartanType(Family::B, l));
			auto const &c = root_system(CartanType(Family::C, l));
			int n = 2 * l + 1;
			for (int q = 2; q <= 2 * b.coxeter_number(); q += 2) {
				CAPTURE(l);
				CAPTURE(q);
				int diff = count_height_divisible(b, q / 2, false) - count_height_divisible(b, q, false);
				int m0 = n / q;
				CHECK(diff == (m0 % 2 == 0 ? m0 : m0 + 1));
				CHECK(count_height_divisible(c, q, true) == 0);
			}
		}
	}
}
