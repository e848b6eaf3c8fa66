// Command-line front end: qiso <command> [--spec FILE | --rank N --gens LIST] [options]

#include "qiso/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Input {
	std::string spec_file;
	std::string gens;
	std::size_t rank = 0;
};

void add_input(CLI::App *app, Input &in, const std::string &suffix)
{
	app->add_option("--spec" + suffix, in.spec_file, "problem document (JSON)");
	app->add_option("--gens" + suffix, in.gens, "generators, e.g. \"1;-1;2;-2\" or \"1,0;0,1;-1,0;0,-1\"");
	app->add_option("--rank" + suffix, in.rank, "lattice rank (default: inferred from --gens)");
}

struct Overrides {
	std::optional<int> max_word_len;
	std::optional<int> max_rounds;
	std::optional<int> spectral_radius;
	std::vector<std::string> disabled;
	bool symmetrize = false;
};

qiso::ProblemSpec load(const Input &in, const Overrides &ov, const std::string &suffix)
{
	using qiso::SpecError;
	qiso::ProblemSpec spec;
	if (!in.spec_file.empty())
	{
		if (!in.gens.empty())
			throw SpecError("--spec" + suffix + " and --gens" + suffix + " are exclusive");
		std::ifstream f(in.spec_file);
		if (!f)
			throw SpecError("cannot read " + in.spec_file);
		std::stringstream ss;
		ss << f.rdbuf();
		spec = qiso::parse_spec(ss.str());
	}
	else
	{
		if (in.gens.empty())
			throw SpecError("need --spec" + suffix + " or --gens" + suffix);
		nlohmann::ordered_json doc;
		auto gens = qiso::parse_generator_list(in.gens);
		doc["rank"] = in.rank ? in.rank : gens.front().size();
		doc["generators"] = gens;
		spec = qiso::spec_from_json(doc);
	}
	if (ov.max_word_len)
		spec.max_word_len = ov.max_word_len;
	if (ov.max_rounds)
		spec.max_rounds = ov.max_rounds;
	if (ov.spectral_radius)
		spec.spectral_radius = *ov.spectral_radius;
	if (ov.symmetrize)
		spec.symmetrize = true;
	for (const auto &r : ov.disabled)
	{
		if (!qiso::parse_inference_rule(r))
			throw SpecError("unknown rule '" + r + "'");
		spec.rules[r] = false;
	}
	// Revalidate with the overrides applied.
	return qiso::spec_from_json(qiso::spec_to_json(spec));
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Quantum isometry groups of (Z^n, S): relation derivation and verification"};
	app.require_subcommand(1);
	Input in1, in2;
	Overrides ov;
	std::string out_file, format = "json";

	auto common = [&](CLI::App *sub, bool input) {
		if (input)
			add_input(sub, in1, "");
		sub->add_option("--max-word-len", ov.max_word_len, "word length L for seeding relations");
		sub->add_option("--max-rounds", ov.max_rounds, "round budget");
		sub->add_option("--spectral-radius", ov.spectral_radius, "truncation radius for spectral checks");
		sub->add_option("--disable", ov.disabled, "disable an inference rule (repeatable)");
		sub->add_flag("--symmetrize", ov.symmetrize, "add missing inverses with a warning");
		sub->add_option("--out", out_file, "write the report to FILE instead of stdout");
		sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
	};
	auto *derive = app.add_subcommand("derive", "saturate, classify and check soundness");
	auto *verify = app.add_subcommand("verify", "derive plus spectral and coproduct checks");
	auto *compare = app.add_subcommand("compare", "compare two problems at invariant level");
	auto *spectral = app.add_subcommand("spectral", "Dirac commutation checks at classical points");
	auto *doubling = app.add_subcommand("doubling-check", "coassociativity of the doubled coproduct");
	for (auto *s : {derive, verify, compare, spectral})
		common(s, true);
	add_input(compare, in2, "2");
	std::size_t doubling_rank = 1;
	doubling->add_option("--rank", doubling_rank, "rank of the tensor of doublings")->check(CLI::Range(1, 6));
	doubling->add_option("--out", out_file, "write the report to FILE instead of stdout");
	doubling->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));

	CLI11_PARSE(app, argc, argv);

	qiso::RunReport report;
	try
	{
		auto command = *qiso::parse_command(app.get_subcommands().front()->get_name());
		qiso::ProblemSpec spec;
		std::optional<qiso::ProblemSpec> other;
		if (command == qiso::Command::doubling_check)
			spec.rank = doubling_rank;
		else
			spec = load(in1, ov, "");
		if (command == qiso::Command::compare)
			other = load(in2, ov, "2");
		report = qiso::execute(spec, command, other);
	}
	catch (const qiso::SpecError &e)
	{
		std::cerr << "qiso: invalid input: " << e.what() << "\n";
		return qiso::exit_invalid_input;
	}
	catch (const std::invalid_argument &e)
	{
		std::cerr << "qiso: invalid input: " << e.what() << "\n";
		return qiso::exit_invalid_input;
	}
	catch (const qiso::InconsistentPresentation &e)
	{
		std::cerr << "qiso: derivation reached 1 = 0: " << e.what() << "\n";
		return qiso::exit_soundness_failure;
	}

	std::string text = format == "json" ? report.doc.dump(2) + "\n" : qiso::render_text(report);
	if (out_file.empty())
		std::cout << text;
	else
	{
		std::ofstream f(out_file);
		if (!f)
		{
			std::cerr << "qiso: cannot write " << out_file << "\n";
			return qiso::exit_invalid_input;
		}
		f << text;
	}
	return report.exit_code;
}
