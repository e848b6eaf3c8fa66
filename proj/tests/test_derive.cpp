#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qiso;
using oracle::z_set;

namespace {

Symbol sym(const GenSet &S, std::int64_t r, std::int64_t c) { return S.alphabet().symbol(GroupElement{r}, GroupElement{c}); }

NcPolynomial word(std::initializer_list<Symbol> w) { return NcPolynomial(SymbolWord(w)); }

} // namespace

TEST(InferenceRule, NamesRoundTrip)
{
	for (std::size_t i = 0; i < inference_rule_count; ++i)
	{
		auto r = static_cast<InferenceRule>(i);
		EXPECT_EQ(parse_inference_rule(to_string(r)), r);
	}
	EXPECT_FALSE(parse_inference_rule("modus-ponens"));
}

TEST(Config, DefaultWordLength)
{
	EXPECT_EQ(default_max_word_len(z_set({1})), 4);
	EXPECT_EQ(default_max_word_len(z_set({2, 3, 7})), 7);
	EXPECT_EQ(default_max_word_len(oracle::s_double_prime()), 4);
	EngineConfig c;
	c.max_word_len = 1;
	EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Seeding, UnitarityRelations)
{
	auto S = z_set({1, 2});
	auto rels = unitarity_relations(S);
	EXPECT_EQ(rels.size(), 32u);
	for (const auto &r : rels)
		EXPECT_EQ(r.degree(), 2u);
}

TEST(Seeding, HomomorphismRelationsOfPowerIdentity)
{
	auto S = z_set({1, 2});
	IdentityPair pair{GroupWord({GroupElement{2}}, 1), GroupWord({GroupElement{1}, GroupElement{1}}, 1)};
	auto rels = homomorphism_relations(pair, S);
	Symbol x = sym(S, 1, 2);
	bool square = false;
	for (const auto &r : rels)
		square = square || r.monic() == word({x, x});
	EXPECT_TRUE(square);
}

TEST(Saturate, TrivialSet)
{
	auto S = z_set({1});
	auto r = saturate(S, default_config(S));
	EXPECT_TRUE(r.fixpoint);
	EXPECT_TRUE(r.zero_symbols.empty());
	Symbol A = sym(S, 1, 1), B = sym(S, 1, -1);
	EXPECT_TRUE(r.derives(word({A, B})));
	EXPECT_TRUE(r.derives(word({B, A})));
	EXPECT_EQ(r.normal_symbols.size(), 4u);
}

TEST(Saturate, OneTwoEndpoint)
{
	auto S = z_set({1, 2});
	auto r = saturate(S, default_config(S));
	EXPECT_TRUE(r.fixpoint);
	EXPECT_EQ(r.zero_symbols.size(), 8u);
	for (auto s : r.zero_symbols)
		EXPECT_NE(S.alphabet().row(s).l1_norm(), S.alphabet().col(s).l1_norm());
	EXPECT_TRUE(r.derives(word({sym(S, 1, 1), sym(S, 1, 1)}) - word({sym(S, 2, 2)})));
	auto U = reduced_unitary(r);
	EXPECT_TRUE(U.entries[0][2].is_zero());
	EXPECT_EQ(U.entries[1][0], NcPolynomial::symbol(sym(S, -1, 1)));
}

TEST(Saturate, LogInvariants)
{
	auto S = z_set({2, 3});
	auto r = saturate(S, default_config(S));
	ASSERT_TRUE(r.fixpoint);
	for (std::size_t i = 0; i < r.log.size(); ++i)
	{
		const auto &d = r.log[i];
		EXPECT_EQ(d.id, i);
		for (auto s : d.sources)
			EXPECT_LT(s, d.id);
		EXPECT_FALSE(d.relation.is_zero());
		EXPECT_EQ(NcPolynomial::from_terms(d.relation.terms()), d.relation);
	}
	for (std::size_t i = 1; i < r.zero_count_by_round.size(); ++i)
		EXPECT_GE(r.zero_count_by_round[i], r.zero_count_by_round[i - 1]);
	for (const auto &[lhs, rhs] : r.system.rules())
		EXPECT_EQ(r.system.normal_form(rhs), rhs);
}

TEST(Saturate, Deterministic)
{
	auto S = z_set({2, 3});
	auto a = saturate(S, default_config(S));
	auto b = saturate(S, default_config(S));
	ASSERT_EQ(a.log.size(), b.log.size());
	for (std::size_t i = 0; i < a.log.size(); ++i)
		EXPECT_EQ(a.log[i].relation, b.log[i].relation);
	EXPECT_EQ(a.system.rules(), b.system.rules());
}

TEST(Saturate, DisabledRulesAreNeverLogged)
{
	auto S = z_set({2, 3});
	auto c = default_config(S);
	c.set_enabled(InferenceRule::positivity_split, false);
	c.set_enabled(InferenceRule::xx_star_zero, false);
	auto r = saturate(S, c);
	for (const auto &d : r.log)
	{
		EXPECT_NE(d.rule, InferenceRule::positivity_split);
		EXPECT_NE(d.rule, InferenceRule::xx_star_zero);
	}
	// The nilpotent-normal route alone still forces every zero.
	EXPECT_TRUE(r.fixpoint);
	EXPECT_EQ(r.zero_symbols.size(), 8u);
	EXPECT_TRUE(std::any_of(r.log.begin(), r.log.end(), [](const Deduction &d) {
		return d.effective && d.rule == InferenceRule::nilpotent_normal_zero;
	}));
}

TEST(Saturate, RoundBudgetClearsFixpoint)
{
	auto S = z_set({2, 3});
	auto c = default_config(S);
	c.max_rounds = 1;
	auto r = saturate(S, c);
	EXPECT_FALSE(r.fixpoint);
	EXPECT_EQ(r.rounds, 1);
}

TEST(EntryLabels, RankOne)
{
	auto S = z_set({1, 2});
	EXPECT_EQ(entry_label(sym(S, 1, 1), S), "A_{11}");
	EXPECT_EQ(entry_label(sym(S, 1, -2), S), "A_{14}");
	EXPECT_EQ(entry_label(sym(S, -2, -2), S), "A_{23}*");
	EXPECT_EQ(entry_label(sym(S, -1, 2), S), "A_{14}*");
	auto T = oracle::s_prime();
	EXPECT_EQ(entry_label(T.alphabet().symbol(GroupElement{1, 0}, GroupElement{1, 0}), T), "q[(1,0)|(1,0)]");
}
