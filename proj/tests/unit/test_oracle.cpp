#include "orbitq/oracle.hpp"
#include "orbitq/orbits.hpp"

#include <doctest.h>

using namespace orbitq;

namespace {

ClassicalFamily fam(MatrixFamily k, int n)
{
	return ClassicalFamily(k, n);
}

std::vector<ClassicalFamily> families_up_to(int max_n)
{
	std::vector<ClassicalFamily> out;
	for (int n = 2; n <= max_n; ++n) {
		out.push_back(fam(MatrixFamily::SL, n));
		if (n >= 5)
			out.push_back(fam(MatrixFamily::SO, n));
		if (n % 2 == 0)
			out.push_back(fam(MatrixFamily::SP, n));
	}
	return out;
}

} // namespace

TEST_SUITE("oracle")
{
	TEST_CASE("matrix realizations")
	{
		for (auto const &f : families_up_to(8)) {
			auto const &r = realization(f);
			CAPTURE(f.str());
			CHECK(r.dim() == f.dim());
			for (auto const &b : r.basis())
				CHECK(r.contains(b));
		}
		CHECK(realization(fam(MatrixFamily::SL, 4)).dim() == 15);
		CHECK(realization(fam(MatrixFamily::SO, 7)).dim() == 21);
		CHECK(realization(fam(MatrixFamily::SP, 6)).dim() == 21);
		CHECK(realization(fam(MatrixFamily::SO, 8)).dim() == 28);
	}

	TEST_CASE("coordinates")
	{
		auto const &r = realization(fam(MatrixFamily::SO, 6));
		IntMatrix x = 3 * r.basis()[2] - 2 * r.basis()[7];
		auto c = r.coords(x);
		for (int k = 0; k < r.dim(); ++k)
			CHECK(c[k] == (k == 2 ? 3 : k == 7 ? -2 : 0));
		CHECK_THROWS(r.coords(IntMatrix::identity(6)));
	}

	TEST_CASE("rank identity of the representatives")
	{
		auto x = nilpotent_from_partition(fam(MatrixFamily::SL, 3), Partition({2, 1})).matrix;
		CHECK(rank(x) == 1);
		CHECK((x * x).is_zero());

		auto y = nilpotent_from_partition(fam(MatrixFamily::SO, 7), Partition({3, 3, 1})).matrix;
		CHECK(rank(y) == 4);
		CHECK(rank(y * y) == 2);
		CHECK((y * y * y).is_zero());

		auto z = nilpotent_from_partition(fam(MatrixFamily::SP, 4), Partition({2, 2})).matrix;
		CHECK(rank(z) == 2);
		CHECK((z * z).is_zero());

		for (auto const &f : families_up_to(9))
			for (auto const &p : partitions_of(f.n())) {
				if (!is_member(f, p))
					continue;
				for (int v = 0; v < 2; ++v) {
					auto rep = nilpotent_from_partition(f, p, v);
					CAPTURE(f.str());
					CAPTURE(p.str());
					CHECK(realization(f).contains(rep.matrix));
					CHECK(satisfies_rank_identity(rep.matrix, p));
				}
			}
	}

	TEST_CASE("ad nilpotency order")
	{
		CHECK(ad_nilpotency_order(nilpotent_from_partition(fam(MatrixFamily::SL, 2), Partition({2}))) == 3);
		CHECK(ad_nilpotency_order(nilpotent_from_partition(fam(MatrixFamily::SL, 3), Partition({2, 1}))) == 3);
		CHECK(ad_nilpotency_order(nilpotent_from_partition(fam(MatrixFamily::SL, 3), Partition({1, 1, 1}))) == 1);
		// sl_n: (ad x)^N = 0 exactly for N >= 2 lambda_1 - 1
		for (int n = 2; n <= 7; ++n)
			for (auto const &p : partitions_of(n))
				CHECK(measure_orbit(fam(MatrixFamily::SL, n), p).ad_order == 2 * p.largest() - 1);
	}

	TEST_CASE("little adjoint order")
	{
		CHECK(little_adjoint_order(nilpotent_from_partition(fam(MatrixFamily::SO, 7), Partition({3, 3, 1}))) == 3);
		CHECK(little_adjoint_order(nilpotent_from_partition(fam(MatrixFamily::SP, 4), Partition({2, 2}))) == 3);
		CHECK(little_adjoint_order(nilpotent_from_partition(fam(MatrixFamily::SP, 2), Partition({2}))) == 1);
		CHECK(measure_orbit(fam(MatrixFamily::SL, 4), Partition({4})).little_order == 0);
	}

	TEST_CASE("centralizer nullity")
	{
		CHECK(centralizer_nullity(nilpotent_from_partition(fam(MatrixFamily::SL, 4), Partition({2, 2}))) == 7);
		CHECK(centralizer_nullity(nilpotent_from_partition(fam(MatrixFamily::SO, 7), Partition({7}))) == 3);
		for (auto const &f : families_up_to(8))
			for (auto const &p : partitions_of(f.n())) {
				if (!is_member(f, p) || (f.kind() == MatrixFamily::SO && p.very_even()))
					continue;
				CAPTURE(f.str());
				CAPTURE(p.str());
				CHECK(measure_orbit(f, p).centralizer == centralizer_dim(ClassicalOrbit(f, p)));
			}
	}

	TEST_CASE("variants give the same measurements")
	{
		for (auto const &f : families_up_to(8))
			for (auto const &p : partitions_of(f.n())) {
				if (!is_member(f, p))
					continue;
				auto a = nilpotent_from_partition(f, p, 0);
				auto b = nilpotent_from_partition(f, p, 1);
				CAPTURE(f.str());
				CAPTURE(p.str());
				CHECK(ad_nilpotency_order(a) == ad_nilpotency_order(b));
				CHECK(centralizer_nullity(a) == centralizer_nullity(b));
				if (f.lacing() == 2)
					CHECK(little_adjoint_order(a) == little_adjoint_order(b));
			}
	}

	TEST_CASE("largest orbit in the variety")
	{
		auto m = max_orbit_in_Nq(fam(MatrixFamily::SL, 7), 3, OrbitCase::Principal);
		CHECK(m.partition == Partition({3, 3, 1}));
		CHECK(m.unique);

		auto one = max_orbit_in_Nq(fam(MatrixFamily::SL, 2), 1, OrbitCase::Principal);
		CHECK(one.partition == Partition({1, 1}));
		CHECK(one.dim == 0);

		auto sp = max_orbit_in_Nq(fam(MatrixFamily::SP, 4), 2, OrbitCase::Coprincipal);
		CHECK(sp.partition == orbit_q_classical(fam(MatrixFamily::SP, 4), 2, OrbitCase::Coprincipal)
		                          .classical()
		                          ->partition());

		CHECK_THROWS(max_orbit_in_Nq(fam(MatrixFamily::SL, 11), 3, OrbitCase::Principal));
	}

	TEST_CASE("agreement with the case lists for n <= 10")
	{
		for (auto const &f : families_up_to(10))
			for (int q = 1; q <= f.n() + 2; ++q) {
				auto c = natural_case(f.lacing(), q);
				auto expected = orbit_q_classical(f, q, c);
				auto got = max_orbit_in_Nq(f, q, c);
				CAPTURE(f.str());
				CAPTURE(q);
				CHECK(got.unique);
				CHECK(got.partition == expected.classical()->partition());
				CHECK(got.dim == expected.dim);
			}
	}
}
