#include "qiso/cli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qiso {

using nlohmann::ordered_json;

namespace {

const std::set<std::string> top_keys{"rank", "generators", "options"};
const std::set<std::string> option_keys{"max_word_len", "max_rounds", "rules", "spectral_radius", "symmetrize"};

std::int64_t as_int(const ordered_json &v, const std::string &what)
{
	if (!v.is_number_integer())
		throw SpecError(what + " must be an integer");
	return v.get<std::int64_t>();
}

std::string join(const std::vector<std::string> &xs, const std::string &sep)
{
	std::string out;
	for (std::size_t i = 0; i < xs.size(); ++i)
		out += (i ? sep : "") + xs[i];
	return out;
}

std::string pattern_row(const std::vector<bool> &row)
{
	std::string s;
	for (bool z : row)
		s += z ? '0' : '*';
	return s;
}

} // namespace

ProblemSpec spec_from_json(const ordered_json &doc)
{
	if (!doc.is_object())
		throw SpecError("problem document must be an object");
	for (const auto &[k, v] : doc.items())
		if (!top_keys.count(k))
			throw SpecError("unknown field '" + k + "'");
	if (!doc.contains("rank"))
		throw SpecError("missing field 'rank'");
	if (!doc.contains("generators"))
		throw SpecError("missing field 'generators'");
	ProblemSpec spec;
	std::int64_t rank = as_int(doc["rank"], "rank");
	if (rank < 1)
		throw SpecError("rank must be at least 1");
	spec.rank = static_cast<std::size_t>(rank);
	const auto &gens = doc["generators"];
	if (!gens.is_array())
		throw SpecError("generators must be an array of integer vectors");
	for (const auto &g : gens)
	{
		if (!g.is_array())
			throw SpecError("each generator must be an array of integers");
		std::vector<std::int64_t> v;
		for (const auto &x : g)
			v.push_back(as_int(x, "generator coordinate"));
		spec.generators.push_back(std::move(v));
	}
	if (doc.contains("options"))
	{
		const auto &o = doc["options"];
		if (!o.is_object())
			throw SpecError("options must be an object");
		for (const auto &[k, v] : o.items())
			if (!option_keys.count(k))
				throw SpecError("unknown option '" + k + "'");
		if (o.contains("max_word_len"))
			spec.max_word_len = static_cast<int>(as_int(o["max_word_len"], "max_word_len"));
		if (o.contains("max_rounds"))
			spec.max_rounds = static_cast<int>(as_int(o["max_rounds"], "max_rounds"));
		if (o.contains("spectral_radius"))
			spec.spectral_radius = static_cast<int>(as_int(o["spectral_radius"], "spectral_radius"));
		if (o.contains("symmetrize"))
		{
			if (!o["symmetrize"].is_boolean())
				throw SpecError("symmetrize must be a boolean");
			spec.symmetrize = o["symmetrize"].get<bool>();
		}
		if (o.contains("rules"))
		{
			if (!o["rules"].is_object())
				throw SpecError("rules must be an object of booleans");
			for (const auto &[k, v] : o["rules"].items())
			{
				if (!parse_inference_rule(k))
					throw SpecError("unknown rule '" + k + "'");
				if (!v.is_boolean())
					throw SpecError("rule toggle '" + k + "' must be a boolean");
				spec.rules[k] = v.get<bool>();
			}
		}
	}
	if (spec.max_word_len && *spec.max_word_len < 2)
		throw SpecError("max_word_len must be at least 2");
	if (spec.max_rounds && *spec.max_rounds < 1)
		throw SpecError("max_rounds must be at least 1");
	if (spec.spectral_radius < 1)
		throw SpecError("spectral_radius must be at least 1");
	// Validate now so bad input is reported at parse time.
	ProblemSpec probe = spec;
	make_genset(probe);
	spec.warnings = probe.warnings;
	return spec;
}

ProblemSpec parse_spec(const std::string &text)
{
	ordered_json doc;
	try
	{
		doc = ordered_json::parse(text);
	}
	catch (const ordered_json::parse_error &e)
	{
		throw SpecError(std::string("malformed document: ") + e.what());
	}
	return spec_from_json(doc);
}

ordered_json spec_to_json(const ProblemSpec &spec)
{
	ordered_json doc;
	doc["rank"] = spec.rank;
	doc["generators"] = spec.generators;
	ordered_json o = ordered_json::object();
	if (spec.max_word_len)
		o["max_word_len"] = *spec.max_word_len;
	if (spec.max_rounds)
		o["max_rounds"] = *spec.max_rounds;
	if (!spec.rules.empty())
	{
		ordered_json r = ordered_json::object();
		for (const auto &[k, v] : spec.rules)
			r[k] = v;
		o["rules"] = r;
	}
	o["spectral_radius"] = spec.spectral_radius;
	o["symmetrize"] = spec.symmetrize;
	doc["options"] = o;
	return doc;
}

std::string render_spec(const ProblemSpec &spec) { return spec_to_json(spec).dump(2); }

GenSet make_genset(ProblemSpec &spec)
{
	std::vector<GroupElement> gens;
	for (const auto &v : spec.generators)
	{
		if (v.size() != spec.rank)
			throw SpecError("generator of length " + std::to_string(v.size()) + " in a rank " +
			                std::to_string(spec.rank) + " problem");
		gens.emplace_back(v);
	}
	if (spec.symmetrize)
	{
		std::set<GroupElement> have(gens.begin(), gens.end());
		std::vector<GroupElement> added;
		for (const auto &g : gens)
			if (!have.count(-g))
			{
				have.insert(-g);
				added.push_back(-g);
				spec.warnings.push_back("added missing inverse " + (-g).to_string());
			}
		gens.insert(gens.end(), added.begin(), added.end());
	}
	try
	{
		return GenSet(spec.rank, gens);
	}
	catch (const InvalidGenSet &e)
	{
		throw SpecError(std::string("invalid generating set: ") + e.what());
	}
}

EngineConfig make_config(const ProblemSpec &spec, const GenSet &S)
{
	EngineConfig c = default_config(S);
	if (spec.max_word_len)
		c.max_word_len = *spec.max_word_len;
	if (spec.max_rounds)
		c.max_rounds = *spec.max_rounds;
	for (const auto &[name, on] : spec.rules)
		c.set_enabled(*parse_inference_rule(name), on);
	return c;
}

std::vector<std::vector<std::int64_t>> parse_generator_list(const std::string &text)
{
	std::vector<std::vector<std::int64_t>> out;
	std::stringstream groups(text);
	std::string group;
	while (std::getline(groups, group, ';'))
	{
		std::vector<std::int64_t> v;
		std::stringstream coords(group);
		std::string c;
		while (std::getline(coords, c, ','))
		{
			std::size_t used = 0;
			std::int64_t x = 0;
			try
			{
				x = std::stoll(c, &used);
			}
			catch (const std::exception &)
			{
				throw SpecError("bad coordinate '" + c + "' in --gens");
			}
			if (c.find_first_not_of(" \t", used) != std::string::npos)
				throw SpecError("bad coordinate '" + c + "' in --gens");
			v.push_back(x);
		}
		if (v.empty())
			throw SpecError("empty generator in --gens");
		out.push_back(std::move(v));
	}
	if (out.empty())
		throw SpecError("--gens is empty");
	return out;
}

std::optional<Command> parse_command(const std::string &name)
{
	for (auto c : {Command::derive, Command::verify, Command::compare, Command::spectral, Command::doubling_check})
		if (name == to_string(c))
			return c;
	return std::nullopt;
}

const char *to_string(Command c)
{
	switch (c)
	{
	case Command::derive:
		return "derive";
	case Command::verify:
		return "verify";
	case Command::compare:
		return "compare";
	case Command::spectral:
		return "spectral";
	case Command::doubling_check:
		return "doubling-check";
	}
	return "?";
}

// --- report sections ---------------------------------------------------------

namespace {

struct Run {
	ProblemSpec spec;
	GenSet S;
	DerivationReport report;
	Classification cls;
	std::vector<SoundnessVerdict> soundness;
};

ordered_json derivation_json(const DerivationReport &r, bool with_log)
{
	const GenSet &S = r.S;
	const auto &A = S.alphabet();
	ordered_json d;
	d["max_word_len"] = r.config.max_word_len;
	d["max_rounds"] = r.config.max_rounds;
	d["rounds"] = r.rounds;
	d["fixpoint"] = r.fixpoint;
	d["deferred_relations"] = r.deferred_relations;
	d["deferred_words"] = r.deferred_words;
	d["symbol_count"] = A.symbol_count();
	auto names = [&](const std::vector<Symbol> &xs) {
		ordered_json a = ordered_json::array();
		for (auto s : xs)
			a.push_back(A.render(s));
		return a;
	};
	d["zero_symbols"] = names(r.zero_symbols);
	d["surviving_symbols"] = names(r.surviving_symbols);
	d["normal_symbols"] = names(r.normal_symbols);
	ordered_json rels = ordered_json::array();
	for (const auto &p : r.survivor_relations)
		rels.push_back(p.render(A));
	d["relations"] = rels;
	auto U = reduced_unitary(r);
	ordered_json idx = ordered_json::array();
	for (const auto &g : U.index)
		idx.push_back(g.to_string());
	ordered_json entries = ordered_json::array(), labeled = ordered_json::array();
	for (const auto &row : U.entries)
	{
		ordered_json er = ordered_json::array(), pr = ordered_json::array();
		for (const auto &e : row)
		{
			er.push_back(e.render(A));
			pr.push_back(render_labels(e, S));
		}
		entries.push_back(er);
		labeled.push_back(pr);
	}
	d["reduced_unitary"] = {{"index", idx}, {"entries", entries}};
	if (S.rank() == 1)
		d["reduced_unitary"]["entries_labeled"] = labeled;
	d["zero_count_by_round"] = r.zero_count_by_round;
	d["max_reduction_steps"] = r.max_reduction_steps;
	std::map<std::string, std::size_t> by_rule;
	for (const auto &x : r.log)
		++by_rule[to_string(x.rule)];
	ordered_json counts = ordered_json::object();
	for (std::size_t i = 0; i < inference_rule_count; ++i)
	{
		const char *n = to_string(static_cast<InferenceRule>(i));
		counts[n] = by_rule[n];
	}
	d["log_size"] = r.log.size();
	d["log_counts"] = counts;
	if (with_log)
	{
		ordered_json log = ordered_json::array();
		for (const auto &x : r.log)
			log.push_back({{"id", x.id},
			               {"rule", to_string(x.rule)},
			               {"relation", x.relation.render(A)},
			               {"sources", x.sources},
			               {"note", x.note},
			               {"round", x.round},
			               {"effective", x.effective}});
		d["log"] = log;
	}
	return d;
}

ordered_json invariants_json(const Invariants &inv)
{
	ordered_json pattern = ordered_json::array();
	for (const auto &row : inv.zero_pattern)
		pattern.push_back(pattern_row(row));
	return {{"zero_pattern", pattern},
	        {"block_profile", inv.block_profile},
	        {"commutativity", to_string(inv.commutativity)},
	        {"aut_order", inv.aut_order}};
}

ordered_json classification_json(const Classification &c)
{
	ordered_json j;
	j["matched"] = c.matched;
	j["template"] = c.template_name;
	j["reason"] = c.reason;
	j["component_labels"] = c.component_labels;
	ordered_json a = ordered_json::array();
	for (const auto &[s, img] : c.assignment)
		a.push_back({{"symbol", s}, {"image", img}});
	j["assignment"] = a;
	ordered_json ws = ordered_json::array();
	for (const auto &w : c.witnesses)
	{
		ordered_json comb = ordered_json::array();
		for (const auto &[g, m] : w.combination)
			comb.push_back({{"generator", g.to_string()}, {"coefficient", m}});
		ws.push_back({{"axis", w.axis + 1},
		              {"combination", comb},
		              {"word", w.rendered},
		              {"image", w.image.render()},
		              {"verified", w.verified}});
	}
	j["surjectivity_witnesses"] = ws;
	return j;
}

ordered_json soundness_json(const SoundnessVerdict &v)
{
	ordered_json viol = ordered_json::array();
	for (const auto &x : v.violations)
		viol.push_back({{"source", x.source}, {"relation", x.relation}, {"value", x.value}});
	return {{"model", v.model},
	        {"relations_checked", v.relations_checked},
	        {"unitary", v.unitary},
	        {"violations", viol},
	        {"ok", v.ok()}};
}

ordered_json commutation_json(const CommutationVerdict &v)
{
	ordered_json j{{"matrix", v.matrix},
	               {"checked", v.checked},
	               {"commutes", v.commutes},
	               {"trace_preserved", v.trace_preserved}};
	if (v.witness)
		j["witness"] = {{"g", v.witness->g.to_string()},
		                {"image", v.witness->image.to_string()},
		                {"length", v.witness->length},
		                {"image_length", v.witness->image_length}};
	return j;
}

// Signed permutation matrices of size n.
std::vector<IntMatrix> signed_permutations(std::size_t n)
{
	std::vector<std::size_t> perm(n);
	for (std::size_t i = 0; i < n; ++i)
		perm[i] = i;
	std::vector<IntMatrix> out;
	do
	{
		for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask)
		{
			IntMatrix M(n);
			for (std::size_t i = 0; i < n; ++i)
				M.at(i, perm[i]) = (mask >> i) & 1 ? -1 : 1;
			out.push_back(M);
		}
	} while (std::next_permutation(perm.begin(), perm.end()));
	std::sort(out.begin(), out.end());
	return out;
}

ordered_json spectral_json(const GenSet &S, int radius, bool &ok)
{
	auto T = build_dirac(S, radius);
	auto G = metric_aut_group(S);
	ordered_json iso = ordered_json::array(), non = ordered_json::array();
	ok = G.closed_under_product();
	for (const auto &M : G.elements)
	{
		auto v = commutation_check({M}, T);
		point_unitary({M}, T);
		ok = ok && v.ok();
		iso.push_back(commutation_json(v));
	}
	// Signed coordinate permutations outside the group must fail.
	for (const auto &M : signed_permutations(S.rank()))
	{
		if (G.contains(M))
			continue;
		auto v = commutation_check({M}, T);
		ok = ok && !v.commutes;
		non.push_back(commutation_json(v));
	}
	return {{"radius", radius},
	        {"basis_size", T.basis.size()},
	        {"aut_order", G.order()},
	        {"isometries", iso},
	        {"non_isometries", non},
	        {"ok", ok}};
}

ordered_json coassociativity_json(const CoassociativityVerdict &v)
{
	ordered_json cases = ordered_json::array();
	for (const auto &c : v.cases)
		cases.push_back({{"generator", c.generator}, {"m", c.m.to_string()}, {"terms", c.terms}, {"equal", c.equal}});
	return {{"rank", v.rank}, {"cases", cases}, {"ok", v.ok()}};
}

Run run_derivation(ProblemSpec spec)
{
	GenSet S = make_genset(spec);
	EngineConfig cfg = make_config(spec, S);
	DerivationReport report = saturate(S, cfg);
	Classification cls = classify(report);
	std::vector<SoundnessVerdict> sound;
	try
	{
		sound.push_back(verify_soundness(report, doubling_assignment(S)));
	}
	catch (const TemplateInapplicable &)
	{
	}
	sound.push_back(verify_soundness(report, isometry_assignment(S)));
	return {std::move(spec), S, std::move(report), std::move(cls), std::move(sound)};
}

int run_status(const Run &r)
{
	for (const auto &v : r.soundness)
		if (!v.ok())
			return exit_soundness_failure;
	return r.report.fixpoint ? exit_ok : exit_budget_exhausted;
}

ordered_json run_json(const Run &r, bool with_log)
{
	ordered_json j;
	j["spec"] = spec_to_json(r.spec);
	j["warnings"] = r.spec.warnings;
	j["derivation"] = derivation_json(r.report, with_log);
	j["classification"] = classification_json(r.cls);
	j["invariants"] = invariants_json(r.cls.invariants);
	ordered_json s = ordered_json::array();
	for (const auto &v : r.soundness)
		s.push_back(soundness_json(v));
	j["soundness"] = s;
	return j;
}

const char *status_meaning(int code)
{
	switch (code)
	{
	case exit_ok:
		return "ok";
	case exit_invalid_input:
		return "invalid input";
	case exit_budget_exhausted:
		return "budget exhausted without fixpoint";
	case exit_soundness_failure:
		return "soundness failure";
	}
	return "?";
}

} // namespace

RunReport execute(ProblemSpec spec, Command command, std::optional<ProblemSpec> other)
{
	RunReport out;
	ordered_json &doc = out.doc;
	doc["schema_version"] = report_schema_version;
	doc["command"] = to_string(command);
	int code = exit_ok;
	auto worst = [&](int c) {
		if (c == exit_soundness_failure || (c == exit_budget_exhausted && code == exit_ok))
			code = c;
	};
	switch (command)
	{
	case Command::derive:
	case Command::verify:
	{
		Run r = run_derivation(spec);
		worst(run_status(r));
		ordered_json j = run_json(r, true);
		for (auto &[k, v] : j.items())
			doc[k] = v;
		if (command == Command::verify)
		{
			bool ok = true;
			doc["spectral"] = spectral_json(r.S, r.spec.spectral_radius, ok);
			auto co = doubling_coassociativity_check(r.S.rank());
			doc["coassociativity"] = coassociativity_json(co);
			if (!ok || !co.ok())
				worst(exit_soundness_failure);
		}
		break;
	}
	case Command::compare:
	{
		if (!other)
			throw SpecError("compare needs a second problem");
		Run a = run_derivation(spec);
		Run b = run_derivation(*other);
		worst(run_status(a));
		worst(run_status(b));
		Comparison c = compare(a.cls, b.cls);
		doc["left"] = run_json(a, false);
		doc["right"] = run_json(b, false);
		doc["comparison"] = {{"distinguished", c.distinguished},
		                     {"verdict", c.distinguished ? "distinguished" : "not distinguished at available invariants"},
		                     {"differing_invariants", c.differing},
		                     {"zero_patterns_equal", c.zero_patterns_equal}};
		break;
	}
	case Command::spectral:
	{
		GenSet S = make_genset(spec);
		doc["spec"] = spec_to_json(spec);
		doc["warnings"] = spec.warnings;
		bool ok = true;
		doc["spectral"] = spectral_json(S, spec.spectral_radius, ok);
		if (!ok)
			worst(exit_soundness_failure);
		break;
	}
	case Command::doubling_check:
	{
		auto co = doubling_coassociativity_check(spec.rank);
		doc["coassociativity"] = coassociativity_json(co);
		if (!co.ok())
			worst(exit_soundness_failure);
		break;
	}
	}
	doc["status"] = {{"code", code}, {"meaning", status_meaning(code)}};
	out.exit_code = code;
	return out;
}

// --- text rendering --------------------------------------------------------------

namespace {

void matrix_text(std::ostringstream &os, const ordered_json &U, bool labeled)
{
	const auto &rows = labeled && U.contains("entries_labeled") ? U["entries_labeled"] : U["entries"];
	std::vector<std::vector<std::string>> cells;
	std::size_t width = 1;
	for (const auto &row : rows)
	{
		std::vector<std::string> r;
		for (const auto &e : row)
		{
			r.push_back(e.get<std::string>());
			width = std::max(width, r.back().size());
		}
		cells.push_back(std::move(r));
	}
	for (const auto &r : cells)
	{
		os << "  [";
		for (std::size_t i = 0; i < r.size(); ++i)
			os << (i ? "  " : " ") << r[i] << std::string(width - r[i].size(), ' ');
		os << " ]\n";
	}
}

void run_text(std::ostringstream &os, const ordered_json &j)
{
	const auto &d = j["derivation"];
	os << "generators: " << j["spec"]["generators"].dump() << " (rank " << j["spec"]["rank"] << ")\n";
	for (const auto &w : j["warnings"])
		os << "warning: " << w.get<std::string>() << "\n";
	os << "max word length " << d["max_word_len"] << ", rounds " << d["rounds"] << ", "
	   << (d["fixpoint"].get<bool>() ? "fixpoint" : "budget exhausted") << ", " << d["log_size"] << " deductions\n";
	if (d["deferred_relations"].get<std::size_t>() || d["deferred_words"].get<std::size_t>())
		os << "deferred: " << d["deferred_relations"] << " relations, " << d["deferred_words"] << " words\n";
	os << "zero symbols (" << d["zero_symbols"].size() << " of " << d["symbol_count"] << ")\n";
	os << "reduced fundamental unitary, index " << d["reduced_unitary"]["index"].dump() << ":\n";
	matrix_text(os, d["reduced_unitary"], true);
	os << "relations among survivors: " << d["relations"].size() << "\n";
	const auto &c = j["classification"];
	if (c["matched"].get<bool>())
	{
		os << "classification: " << c["template"].get<std::string>() << "\n";
		for (const auto &w : c["surjectivity_witnesses"])
			os << "  witness axis " << w["axis"] << ": " << w["word"].get<std::string>() << " -> "
			   << w["image"].get<std::string>() << (w["verified"].get<bool>() ? "" : " (NOT verified)") << "\n";
	}
	else
		os << "classification: no template (" << c["reason"].get<std::string>() << ")\n";
	const auto &inv = j["invariants"];
	os << "invariants: block profile " << inv["block_profile"].dump() << ", commutative "
	   << inv["commutativity"].get<std::string>() << ", aut order " << inv["aut_order"] << "\n";
	os << "zero pattern:\n";
	for (const auto &row : inv["zero_pattern"])
		os << "  " << row.get<std::string>() << "\n";
	for (const auto &s : j["soundness"])
		os << "soundness vs " << s["model"].get<std::string>() << ": " << s["relations_checked"] << " relations, "
		   << s["violations"].size() << " violations" << (s["unitary"].get<bool>() ? "" : ", NOT unitary") << "\n";
}

void spectral_text(std::ostringstream &os, const ordered_json &s)
{
	os << "spectral: radius " << s["radius"] << ", " << s["basis_size"] << " basis vectors, " << s["aut_order"]
	   << " isometries\n";
	for (const auto &v : s["isometries"])
		os << "  " << v["matrix"].get<std::string>() << (v["commutes"].get<bool>() ? " commutes" : " FAILS") << "\n";
	for (const auto &v : s["non_isometries"])
	{
		os << "  " << v["matrix"].get<std::string>() << (v["commutes"].get<bool>() ? " commutes (unexpected)" : " fails");
		if (v.contains("witness"))
			os << ": l(" << v["witness"]["g"].get<std::string>() << ") = " << v["witness"]["length"] << " but l("
			   << v["witness"]["image"].get<std::string>() << ") = " << v["witness"]["image_length"];
		os << "\n";
	}
}

} // namespace

std::string render_text(const RunReport &report)
{
	const auto &doc = report.doc;
	std::ostringstream os;
	os << "qiso " << doc["command"].get<std::string>() << "\n";
	if (doc.contains("derivation"))
		run_text(os, doc);
	if (doc.contains("comparison"))
	{
		os << "-- left\n";
		run_text(os, doc["left"]);
		os << "-- right\n";
		run_text(os, doc["right"]);
		const auto &c = doc["comparison"];
		os << "comparison: " << c["verdict"].get<std::string>();
		if (!c["differing_invariants"].empty())
		{
			std::vector<std::string> d = c["differing_invariants"];
			os << " (" << join(d, ", ") << ")";
		}
		os << "\n";
	}
	if (doc.contains("spectral"))
		spectral_text(os, doc["spectral"]);
	if (doc.contains("coassociativity"))
	{
		const auto &co = doc["coassociativity"];
		os << "doubling coassociativity, rank " << co["rank"] << ": " << (co["ok"].get<bool>() ? "ok" : "FAILED")
		   << " on " << co["cases"].size() << " cases\n";
	}
	os << "status: " << doc["status"]["code"] << " (" << doc["status"]["meaning"].get<std::string>() << ")\n";
	return os.str();
}

} // namespace qiso
