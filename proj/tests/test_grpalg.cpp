#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qiso;
using oracle::make_set;
using oracle::z_set;

namespace {

std::vector<GenSet> tested_sets()
{
	return {z_set({1}),       z_set({1, 2}),    z_set({2, 3}),        z_set({1, 2, 3}),
	        z_set({2, 3, 7}), z_set({1, 5}),    z_set({1, 2, 4}),     oracle::s_prime(),
	        oracle::s_double_prime(), make_set(2, {{1, 0}, {-1, 0}, {1, 1}, {-1, -1}})};
}

} // namespace

TEST(GenSet, RejectsInvalidSets)
{
	EXPECT_THROW(make_set(1, {{2}, {-2}}), InvalidGenSet);
	EXPECT_THROW(make_set(1, {{0}, {1}, {-1}}), InvalidGenSet);
	EXPECT_THROW(make_set(1, {{1}, {-1}, {1}}), InvalidGenSet);
	EXPECT_THROW(make_set(1, {{1}, {-1}, {2}}), InvalidGenSet);
	EXPECT_THROW(make_set(2, {{1, 0}, {-1, 0}, {2, 0}, {-2, 0}}), InvalidGenSet);
	EXPECT_THROW(make_set(2, {{1, 0}, {-1, 0}, {1}, {-1}}), InvalidGenSet);
	EXPECT_THROW(make_set(1, {}), InvalidGenSet);
}

TEST(GenSet, DisplayOrder)
{
	auto S = z_set({3, 1});
	ASSERT_EQ(S.display_order().size(), 4u);
	EXPECT_EQ(S.display_order()[0], GroupElement{1});
	EXPECT_EQ(S.display_order()[1], GroupElement{-1});
	EXPECT_EQ(S.display_order()[2], GroupElement{3});
	auto T = oracle::s_double_prime();
	EXPECT_EQ(T.display_order()[4], (GroupElement{2, 0}));
	EXPECT_EQ(T.alphabet().symbol_count(), 36u);
}

TEST(WordLength, MatchesIntegerProgramOracleOnZ)
{
	for (const auto &S : tested_sets())
	{
		if (S.rank() != 1)
			continue;
		auto table = oracle::length_table(S, 24);
		for (std::int64_t g = -20; g <= 20; ++g)
		{
			GroupElement e{g};
			ASSERT_TRUE(table.count(e));
			EXPECT_EQ(word_length(e, S), table.at(e)) << "g=" << g;
		}
	}
}

TEST(WordLength, BallMatchesOracleOnZ2)
{
	for (const auto &S : tested_sets())
	{
		if (S.rank() != 2)
			continue;
		auto table = oracle::length_table(S, 6);
		auto ball = word_length_ball(S, 6);
		std::map<GroupElement, int> expect;
		for (const auto &[g, l] : table)
			if (l <= 6)
				expect[g] = l;
		EXPECT_EQ(ball, expect);
		for (const auto &[g, l] : expect)
			EXPECT_EQ(word_length(g, S), l);
	}
}

TEST(WordLength, SwapWitnessForSDoublePrime)
{
	auto S = oracle::s_double_prime();
	EXPECT_EQ(word_length(GroupElement{2, 0}, S), 1);
	EXPECT_EQ(word_length(GroupElement{0, 2}, S), 2);
}

TEST(IdentityPairs, MatchExhaustiveEnumeration)
{
	for (const auto &S : tested_sets())
	{
		if (S.size() > 6)
			continue;
		for (int L = 1; L <= 4; ++L)
		{
			auto pairs = enumerate_identity_pairs(S, L);
			std::set<std::pair<std::vector<GroupElement>, std::vector<GroupElement>>> got;
			for (const auto &[a, b] : pairs)
			{
				EXPECT_EQ(a.sum, b.sum);
				EXPECT_TRUE(a < b);
				got.insert({a.letters, b.letters});
			}
			EXPECT_EQ(got.size(), pairs.size());
			EXPECT_EQ(got, oracle::exhaustive_identity_pairs(S, L)) << "L=" << L;
		}
	}
}

TEST(Convolution, MatchesDoubleSumOracle)
{
	auto S = z_set({1, 2});
	for (const auto &g : S.elements())
		for (const auto &h : S.elements())
		{
			auto x = generator_action(g, S), y = generator_action(h, S);
			EXPECT_EQ(convolve(x, y).support(), oracle::double_sum(x.support(), y.support()));
		}
}

TEST(Convolution, AssociativeOnRandomElements)
{
	for (const auto &S : {z_set({1, 2}), oracle::s_double_prime()})
	{
		oracle::PolyGen gen(S.alphabet().symbol_count(), 99);
		auto random_element = [&]() {
			ActionElement x(S.rank());
			int n = gen.uniform(1, 3);
			for (int i = 0; i < n; ++i)
			{
				std::vector<std::int64_t> c(S.rank());
				for (auto &v : c)
					v = gen.uniform(-3, 3);
				GroupElement g(c);
				x.add(g, gen.poly(3, 2));
			}
			return x;
		};
		for (int trial = 0; trial < 200; ++trial)
		{
			auto x = random_element(), y = random_element(), z = random_element();
			auto left = convolve(convolve(x, y), z);
			auto right = convolve(x, convolve(y, z));
			EXPECT_EQ(left, right);
			EXPECT_EQ(left.support(), oracle::double_sum(oracle::double_sum(x.support(), y.support()), z.support()));
		}
	}
}

TEST(Convolution, UnitAndCoefficients)
{
	auto S = z_set({1, 2});
	auto x = generator_action(GroupElement{2}, S);
	EXPECT_EQ(convolve(ActionElement::unit(1), x), x);
	EXPECT_EQ(convolve(x, ActionElement::unit(1)), x);
	EXPECT_EQ(coefficient(x, GroupElement{-1}), NcPolynomial::symbol(S.alphabet().symbol(GroupElement{2}, GroupElement{-1})));
	EXPECT_TRUE(coefficient(x, GroupElement{5}).is_zero());
}

TEST(WordAction, EqualSumWordsHaveMatchingSupports)
{
	auto S = z_set({1, 2});
	GroupWord a({GroupElement{2}}, 1), b({GroupElement{1}, GroupElement{1}}, 1);
	auto x = word_action(a, S), y = word_action(b, S);
	EXPECT_EQ(x.support().size(), 4u);
	EXPECT_TRUE(y.support().count(GroupElement{4}));
	EXPECT_EQ(word_action(GroupWord({}, 1), S), ActionElement::unit(1));
}
