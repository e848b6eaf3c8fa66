#pragma once

// Problem documents, orchestration and report emission for the qiso tool.

#include "qiso/derive.hpp"
#include "qiso/models.hpp"
#include "qiso/spectral.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qiso {

inline constexpr int report_schema_version = 1;

enum ExitCode : int {
	exit_ok = 0,
	exit_invalid_input = 1,
	exit_budget_exhausted = 2,
	exit_soundness_failure = 3,
};

class SpecError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

struct ProblemSpec {
	std::size_t rank = 0;
	std::vector<std::vector<std::int64_t>> generators;
	std::optional<int> max_word_len;
	std::optional<int> max_rounds;
	// Only rules listed in the document; missing rules stay enabled.
	std::map<std::string, bool> rules;
	int spectral_radius = 10;
	bool symmetrize = false;

	// Filled by parse_spec / make_genset; not serialized.
	std::vector<std::string> warnings;

	friend bool operator==(const ProblemSpec &a, const ProblemSpec &b)
	{
		return a.rank == b.rank && a.generators == b.generators && a.max_word_len == b.max_word_len &&
		       a.max_rounds == b.max_rounds && a.rules == b.rules && a.spectral_radius == b.spectral_radius &&
		       a.symmetrize == b.symmetrize;
	}
};

// Parses and validates a JSON problem document:
//   {"rank": 1, "generators": [[1], [-1]], "options": {...}}
ProblemSpec parse_spec(const std::string &text);
ProblemSpec spec_from_json(const nlohmann::ordered_json &doc);
nlohmann::ordered_json spec_to_json(const ProblemSpec &spec);
std::string render_spec(const ProblemSpec &spec);

// Applies symmetrization (recording a warning) and builds the GenSet.
// Throws SpecError naming the violated condition.
GenSet make_genset(ProblemSpec &spec);
EngineConfig make_config(const ProblemSpec &spec, const GenSet &S);

// "1;-1;2;-2" or "1,0;0,1;-1,0;0,-1"
std::vector<std::vector<std::int64_t>> parse_generator_list(const std::string &text);

enum class Command { derive, verify, compare, spectral, doubling_check };
std::optional<Command> parse_command(const std::string &name);
const char *to_string(Command c);

struct RunReport {
	nlohmann::ordered_json doc;
	int exit_code = exit_ok;
};

// For compare, `other` is required; for doubling-check only the rank is used.
RunReport execute(ProblemSpec spec, Command command, std::optional<ProblemSpec> other = std::nullopt);

std::string render_text(const RunReport &report);

} // namespace qiso
