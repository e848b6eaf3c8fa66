#include "qiso/cli.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qiso;

TEST(ParseSpec, ValidDocuments)
{
	auto s = parse_spec(R"({"rank": 1, "generators": [[1], [-1], [2], [-2]]})");
	EXPECT_EQ(s.rank, 1u);
	EXPECT_EQ(make_genset(s).positive_representatives().size(), 2u);
	auto t = parse_spec(R"({"rank": 2, "generators": [[1,0],[0,1],[-1,0],[0,-1],[2,0],[-2,0]],
	                       "options": {"max_word_len": 5, "rules": {"positivity-split": false}}})");
	EXPECT_EQ(t.max_word_len, 5);
	EXPECT_EQ(t.rules.at("positivity-split"), false);
	auto S = make_genset(t);
	EXPECT_FALSE(make_config(t, S).is_enabled(InferenceRule::positivity_split));
	EXPECT_EQ(make_config(t, S).max_word_len, 5);
}

TEST(ParseSpec, Rejections)
{
	auto rejects = [](const std::string &doc, const std::string &needle) {
		try
		{
			parse_spec(doc);
		}
		catch (const SpecError &e)
		{
			EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
			return;
		}
		ADD_FAILURE() << "accepted: " << doc;
	};
	rejects(R"({"rank": 1, "generators": [[2], [-2]]})", "do not generate");
	rejects(R"({"rank": 1, "generators": [[0], [1], [-1]]})", "identity");
	rejects(R"({"rank": 1, "generators": [[1], [-1], [1]]})", "duplicate");
	rejects(R"({"rank": 1, "generators": [[1], [-1], [2]]})", "not symmetric");
	rejects(R"({"rank": 2, "generators": [[1], [-1]]})", "length 1");
	rejects(R"({"rank": 1, "generators": [[1], [-1]], "colour": 3})", "unknown field");
	rejects(R"({"rank": 1, "generators": [[1], [-1]], "options": {"rules": {"magic": true}}})", "unknown rule");
	rejects(R"({"rank": 1, "generators": [[1.5], [-1]]})", "integer");
	rejects(R"({"rank": 1, "generators": )", "malformed");
	rejects(R"({"generators": [[1], [-1]]})", "rank");
}

TEST(ParseSpec, SymmetrizeAddsInversesWithWarning)
{
	auto s = parse_spec(R"({"rank": 1, "generators": [[1], [2]], "options": {"symmetrize": true}})");
	EXPECT_EQ(s.warnings.size(), 2u);
	EXPECT_EQ(make_genset(s).size(), 4u);
	EXPECT_THROW(parse_spec(R"({"rank": 1, "generators": [[1], [2]]})"), SpecError);
}

TEST(SpecProperty, RoundTrip)
{
	std::mt19937 rng(11);
	auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
	for (int trial = 0; trial < 200; ++trial)
	{
		ProblemSpec s;
		s.rank = static_cast<std::size_t>(pick(1, 2));
		std::set<std::vector<std::int64_t>> gens;
		for (std::size_t i = 0; i < s.rank; ++i)
		{
			std::vector<std::int64_t> e(s.rank, 0);
			e[i] = 1;
			gens.insert(e);
		}
		for (int k = pick(0, 3); k > 0; --k)
		{
			std::vector<std::int64_t> v(s.rank);
			for (auto &c : v)
				c = pick(-4, 4);
			if (std::any_of(v.begin(), v.end(), [](auto c) { return c != 0; }))
				gens.insert(v);
		}
		for (auto v : std::vector<std::vector<std::int64_t>>(gens.begin(), gens.end()))
		{
			for (auto &c : v)
				c = -c;
			gens.insert(v);
		}
		s.generators.assign(gens.begin(), gens.end());
		std::shuffle(s.generators.begin(), s.generators.end(), rng);
		if (pick(0, 1))
			s.max_word_len = pick(2, 6);
		if (pick(0, 1))
			s.max_rounds = pick(1, 50);
		if (pick(0, 1))
			s.rules[to_string(static_cast<InferenceRule>(pick(0, inference_rule_count - 1)))] = pick(0, 1);
		s.spectral_radius = pick(1, 12);
		EXPECT_EQ(parse_spec(render_spec(s)), s);
	}
}

TEST(GeneratorList, Parsing)
{
	EXPECT_EQ(parse_generator_list("1;-1;2;-2"), (std::vector<std::vector<std::int64_t>>{{1}, {-1}, {2}, {-2}}));
	EXPECT_EQ(parse_generator_list("1,0;0,-1"), (std::vector<std::vector<std::int64_t>>{{1, 0}, {0, -1}}));
	EXPECT_THROW(parse_generator_list("1;x"), SpecError);
	EXPECT_THROW(parse_generator_list(""), SpecError);
}

TEST(Execute, DeriveReportAndExitCode)
{
	auto s = parse_spec(R"({"rank": 1, "generators": [[1], [-1], [5], [-5]]})");
	auto r = execute(s, Command::derive);
	EXPECT_EQ(r.exit_code, exit_ok);
	EXPECT_EQ(r.doc["schema_version"], report_schema_version);
	EXPECT_EQ(r.doc["classification"]["template"], "doubling of C*(Z)");
	EXPECT_EQ(r.doc["status"]["code"], 0);
	EXPECT_EQ(r.doc["invariants"]["zero_pattern"][0], "**00");
	EXPECT_NE(render_text(r).find("A_{11}"), std::string::npos);
}

TEST(Execute, BudgetExhaustedExitCode)
{
	auto s = parse_spec(R"({"rank": 1, "generators": [[2], [-2], [3], [-3]], "options": {"max_rounds": 1}})");
	EXPECT_EQ(execute(s, Command::derive).exit_code, exit_budget_exhausted);
}

TEST(Execute, ReportIsDeterministic)
{
	auto s = parse_spec(R"({"rank": 1, "generators": [[2], [-2], [3], [-3]]})");
	EXPECT_EQ(execute(s, Command::derive).doc.dump(), execute(s, Command::derive).doc.dump());
}

TEST(Execute, SpectralAndDoublingCommands)
{
	auto s = parse_spec(R"({"rank": 2, "generators": [[1,0],[0,1],[-1,0],[0,-1],[2,0],[-2,0]],
	                       "options": {"spectral_radius": 3}})");
	auto r = execute(s, Command::spectral);
	EXPECT_EQ(r.exit_code, exit_ok);
	EXPECT_EQ(r.doc["spectral"]["aut_order"], 4);
	EXPECT_EQ(r.doc["spectral"]["non_isometries"].size(), 4u);
	ProblemSpec d;
	d.rank = 2;
	auto c = execute(d, Command::doubling_check);
	EXPECT_EQ(c.exit_code, exit_ok);
	EXPECT_TRUE(c.doc["coassociativity"]["ok"].get<bool>());
}

TEST(Execute, CompareNeedsSecondSpec)
{
	auto s = parse_spec(R"({"rank": 1, "generators": [[1], [-1]]})");
	EXPECT_THROW(execute(s, Command::compare), SpecError);
	auto r = execute(s, Command::compare, parse_spec(R"({"rank": 1, "generators": [[2], [-2], [3], [-3]]})"));
	EXPECT_FALSE(r.doc["comparison"]["distinguished"].get<bool>());
}
