#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qiso;
using oracle::z_set;

namespace {

const DerivationReport &cached(const std::string &key, const GenSet &S)
{
	static std::map<std::string, DerivationReport> cache;
	auto it = cache.find(key);
	if (it == cache.end())
		it = cache.emplace(key, saturate(S, default_config(S))).first;
	return it->second;
}

} // namespace

TEST(Laurent, Arithmetic)
{
	auto t = LaurentElem::monomial({1});
	auto one = LaurentElem::constant(1, Rational(1));
	EXPECT_EQ(t * t.star(), one);
	EXPECT_EQ((t + one) * (t - one), t * t - one);
	EXPECT_EQ(t.render(), "t");
	EXPECT_EQ(LaurentElem::monomial({2, -1}, Rational(3)).render(), "3·t1^2·t2^-1");
	EXPECT_TRUE((t - t).is_zero());
}

TEST(BlockAlgebra, ComponentwiseProduct)
{
	BlockAlgebraElem x(2, 1);
	x[0] = LaurentElem::monomial({1});
	EXPECT_EQ(x.render(), "(t, 0)");
	auto u = BlockAlgebraElem::unit(2, 1);
	EXPECT_EQ(x * u, x);
	EXPECT_EQ((x * x.star())[0], LaurentElem::constant(1, Rational(1)));
	EXPECT_TRUE((x * x.star())[1].is_zero());
}

TEST(MetricAut, GroupsOfTestedSets)
{
	EXPECT_EQ(metric_aut_group(z_set({1, 2})).order(), 2u);
	EXPECT_EQ(metric_aut_group(oracle::s_prime()).order(), 8u);
	EXPECT_EQ(metric_aut_group(oracle::s_double_prime()).order(), 4u);
	auto hex = oracle::make_set(2, {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}});
	EXPECT_EQ(metric_aut_group(hex).order(), 12u);
}

TEST(MetricAutProperty, ClosedAndContainsMinusIdentity)
{
	for (const auto &S : {z_set({1}), z_set({2, 3, 7}), oracle::s_prime(), oracle::s_double_prime(),
	                      oracle::make_set(2, {{1, 0}, {-1, 0}, {1, 1}, {-1, -1}})})
	{
		auto G = metric_aut_group(S);
		EXPECT_TRUE(G.closed_under_product());
		EXPECT_TRUE(G.contains(IntMatrix::identity(S.rank())));
		EXPECT_TRUE(G.contains(-IntMatrix::identity(S.rank())));
		for (const auto &M : G.elements)
		{
			EXPECT_EQ(std::abs(M.determinant()), 1);
			for (const auto &s : S.elements())
				EXPECT_TRUE(S.contains(M.apply(s)));
		}
	}
}

TEST(ModelProperty, EvaluationIsMultiplicativeAndStarPreserving)
{
	for (const auto &S : {z_set({1, 2}), oracle::s_double_prime()})
	{
		const auto &A = S.alphabet();
		for (const auto &m : {doubling_assignment(S), isometry_assignment(S)})
		{
			oracle::PolyGen gen(A.symbol_count(), 5);
			for (int i = 0; i < 200; ++i)
			{
				auto p = gen.poly(3, 3), q = gen.poly(3, 3);
				EXPECT_EQ(evaluate(p * q, m), evaluate(p, m) * evaluate(q, m));
				EXPECT_EQ(evaluate(p + q, m), evaluate(p, m) + evaluate(q, m));
				EXPECT_EQ(evaluate(adjoint(p, A), m), evaluate(p, m).star());
			}
		}
	}
}

TEST(ModelProperty, AssignedMatricesAreUnitary)
{
	for (const auto &S : {z_set({1}), z_set({2, 3}), oracle::s_prime(), oracle::s_double_prime()})
	{
		auto v = verify_relations(unitarity_relations(S), S, isometry_assignment(S));
		EXPECT_TRUE(v.ok());
	}
}

TEST(ModelProperty, HomomorphismRelationsHoldInModels)
{
	auto S = z_set({1, 2});
	std::vector<NcPolynomial> rels;
	for (const auto &pair : enumerate_identity_pairs(S, 3))
		for (auto &r : homomorphism_relations(pair, S))
			rels.push_back(std::move(r));
	EXPECT_GT(rels.size(), 100u);
	EXPECT_TRUE(verify_relations(rels, S, isometry_assignment(S)).ok());
	EXPECT_TRUE(verify_relations(rels, S, doubling_assignment(S)).ok());
}

TEST(Models, ViolationIsReported)
{
	auto S = z_set({1});
	const auto &A = S.alphabet();
	Symbol a = A.symbol(GroupElement{1}, GroupElement{1});
	auto v = verify_relations({NcPolynomial::symbol(a)}, S, doubling_assignment(S));
	ASSERT_EQ(v.violations.size(), 1u);
	EXPECT_FALSE(v.ok());
}

TEST(Models, DoublingRequiresAxisGenerators)
{
	auto S = oracle::make_set(2, {{1, 0}, {-1, 0}, {1, 1}, {-1, -1}});
	EXPECT_THROW(doubling_assignment(S), TemplateInapplicable);
}

TEST(Classify, DoublingWithWitness)
{
	auto S = z_set({2, 3});
	auto c = classify(cached("23", S));
	ASSERT_TRUE(c.matched);
	EXPECT_EQ(c.template_name, "doubling of C*(Z)");
	ASSERT_EQ(c.witnesses.size(), 1u);
	EXPECT_TRUE(c.witnesses[0].verified);
	EXPECT_EQ(c.witnesses[0].rendered, "q[3|3]*·q[2|2]·q[2|2]");
	EXPECT_EQ(c.witnesses[0].image.render(), "(t, 0)");
	EXPECT_EQ(c.invariants.block_profile, std::vector<std::size_t>{2});
	EXPECT_EQ(c.invariants.aut_order, 2u);
}

TEST(Classify, SoundnessOfEveryLoggedRelation)
{
	auto S = z_set({2, 3});
	const auto &r = cached("23", S);
	for (const auto &m : {doubling_assignment(S), isometry_assignment(S)})
	{
		auto v = verify_soundness(r, m);
		EXPECT_TRUE(v.ok()) << m.name;
		EXPECT_GE(v.relations_checked, r.log.size());
	}
}

TEST(InvariantProperty, RelabelingInvariance)
{
	// Listing order of S does not matter.
	auto a = classify(cached("1-2", z_set({1, 2})));
	auto b = classify(cached("2-1", oracle::make_set(1, {{-2}, {1}, {2}, {-1}})));
	EXPECT_EQ(a.invariants.block_profile, b.invariants.block_profile);
	EXPECT_EQ(a.invariants.zero_pattern, b.invariants.zero_pattern);
	EXPECT_EQ(a.template_name, b.template_name);
	// A lattice automorphism carries S'' to an isomorphic problem.
	auto t = oracle::make_set(2, {{1, 1}, {0, 1}, {-1, -1}, {0, -1}, {2, 2}, {-2, -2}});
	auto c = classify(cached("S''", oracle::s_double_prime()));
	auto d = classify(cached("S''-sheared", t));
	EXPECT_EQ(c.invariants.block_profile, d.invariants.block_profile);
	EXPECT_EQ(c.invariants.aut_order, d.invariants.aut_order);
	EXPECT_EQ(c.invariants.commutativity, d.invariants.commutativity);
	EXPECT_EQ(cached("S''", oracle::s_double_prime()).zero_symbols.size(),
	          cached("S''-sheared", t).zero_symbols.size());
}

TEST(Compare, InvariantLevel)
{
	auto a = classify(cached("S'", oracle::s_prime()));
	auto b = classify(cached("S''", oracle::s_double_prime()));
	auto c = compare(a, b);
	EXPECT_TRUE(c.distinguished);
	EXPECT_FALSE(c.zero_patterns_equal);
	auto x = classify(cached("1", z_set({1})));
	auto y = classify(cached("23", z_set({2, 3})));
	EXPECT_FALSE(compare(x, y).distinguished);
}

TEST(Coassociativity, DoublingRanks)
{
	for (std::size_t n : {1u, 2u, 3u})
	{
		auto v = doubling_coassociativity_check(n);
		EXPECT_TRUE(v.ok());
		EXPECT_EQ(v.cases.size(), 2 * (1 + 2 * n));
	}
}
