#include "qiso/lattice.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace qiso;

TEST(GroupElement, Arithmetic)
{
	GroupElement a{1, -2}, b{3, 5};
	EXPECT_EQ(a + b, (GroupElement{4, 3}));
	EXPECT_EQ(a - b, (GroupElement{-2, -7}));
	EXPECT_EQ(-a, (GroupElement{-1, 2}));
	EXPECT_EQ(3 * a, (GroupElement{3, -6}));
	EXPECT_EQ(a.l1_norm(), 3);
	EXPECT_EQ(b.max_norm(), 5);
	EXPECT_TRUE(GroupElement(2).is_zero());
	EXPECT_EQ((GroupElement{0, 4}).support_size(), 1u);
	EXPECT_THROW(a + GroupElement{1}, std::invalid_argument);
}

TEST(GroupElement, Rendering)
{
	EXPECT_EQ((GroupElement{-3}).to_string(), "-3");
	EXPECT_EQ((GroupElement{1, -1}).to_string(), "(1,-1)");
}

TEST(IntMatrix, ProductAndDeterminant)
{
	IntMatrix swap(2);
	swap.at(0, 1) = 1;
	swap.at(1, 0) = 1;
	EXPECT_EQ(swap.determinant(), -1);
	EXPECT_EQ(swap * swap, IntMatrix::identity(2));
	EXPECT_EQ(swap.apply(GroupElement{2, 0}), (GroupElement{0, 2}));
	EXPECT_EQ((-IntMatrix::identity(3)).determinant(), -1);
}

TEST(Lattice, IndexOfSpan)
{
	EXPECT_EQ(lattice_index({GroupElement{2}, GroupElement{3}}, 1), 1);
	EXPECT_EQ(lattice_index({GroupElement{2}, GroupElement{4}}, 1), 2);
	EXPECT_EQ(lattice_index({GroupElement{1, 0}, GroupElement{2, 0}}, 2), 0);
	EXPECT_EQ(lattice_index({GroupElement{1, 1}, GroupElement{1, -1}}, 2), 2);
	EXPECT_EQ(lattice_index({GroupElement{1, 1}, GroupElement{1, -1}, GroupElement{1, 0}}, 2), 1);
}

TEST(Lattice, BezoutOnRandomLists)
{
	std::mt19937 rng(7);
	std::uniform_int_distribution<std::int64_t> d(1, 60);
	for (int trial = 0; trial < 200; ++trial)
	{
		std::vector<std::int64_t> v(1 + trial % 4);
		for (auto &x : v)
			x = d(rng);
		std::int64_t g = 0;
		auto m = bezout_coefficients(v, g);
		std::int64_t expect = 0, sum = 0;
		for (std::size_t i = 0; i < v.size(); ++i)
		{
			expect = std::gcd(expect, v[i]);
			sum += m[i] * v[i];
		}
		EXPECT_EQ(g, expect);
		EXPECT_EQ(sum, g);
	}
}
