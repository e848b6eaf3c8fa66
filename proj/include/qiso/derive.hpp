#pragma once

// Deduction engine for the fundamental unitary of the quantum isometry group
// of (Z^n, S): generates coefficient relations from group identities and
// unitarity, closes them under involution and antipode, applies C*-algebra
// inference rules, and saturates to a fixpoint.

#include "qiso/grpalg.hpp"
#include "qiso/ncalg.hpp"

#include <array>
#include <deque>
#include <unordered_map>
#include <optional>
#include <string>
#include <vector>

namespace qiso {

enum class InferenceRule : std::uint8_t {
	homomorphism,
	unitarity,
	involution_closure,
	antipode_closure,
	positivity_split,
	xx_star_zero,
	normality_tactic,
	nilpotent_normal_zero,
};
inline constexpr std::size_t inference_rule_count = 8;

const char *to_string(InferenceRule rule);
std::optional<InferenceRule> parse_inference_rule(const std::string &name);

struct Deduction {
	std::size_t id = 0;
	NcPolynomial relation;
	InferenceRule rule = InferenceRule::homomorphism;
	std::vector<std::size_t> sources;
	std::string note;
	int round = 0;
	// False when the relation was already implied by the rewrite system.
	bool effective = true;
};

struct EngineConfig {
	int max_word_len = 4;
	int max_rounds = 400;
	std::array<bool, inference_rule_count> enabled{true, true, true, true, true, true, true, true};
	// Relations with more terms are parked until zero symbols shrink them.
	std::size_t max_relation_terms = 4000;
	// Words whose expansion would exceed this many paths wait for pruning.
	std::size_t max_expansion_terms = 400000;

	bool is_enabled(InferenceRule r) const { return enabled[static_cast<std::size_t>(r)]; }
	void set_enabled(InferenceRule r, bool on) { enabled[static_cast<std::size_t>(r)] = on; }
	void validate() const;
};

// n = 1: max(4, max_{i<j} lcm(a_i, a_j) / a_i); n > 1: 4.
int default_max_word_len(const GenSet &S);
EngineConfig default_config(const GenSet &S);

struct FundamentalUnitary {
	// Display order a1, -a1, a2, -a2, ...
	std::vector<GroupElement> index;
	// entries[r][c] for index[r], index[c]
	std::vector<std::vector<NcPolynomial>> entries;
};

FundamentalUnitary initial_unitary(const GenSet &S);

class DerivationState;

struct DerivationReport {
	GenSet S;
	EngineConfig config;
	std::vector<Deduction> log;
	std::vector<Symbol> zero_symbols;
	std::vector<Symbol> surviving_symbols;
	std::vector<Symbol> normal_symbols;
	// Final rules not of the form "symbol = 0", as relations lhs - rhs.
	std::vector<NcPolynomial> survivor_relations;
	RewriteSystem system;
	bool fixpoint = false;
	int rounds = 0;
	// Zero-symbol count after each round.
	std::vector<std::size_t> zero_count_by_round;
	std::size_t deferred_relations = 0;
	std::size_t deferred_words = 0;
	std::size_t max_reduction_steps = 0;

	bool is_zero(Symbol s) const;
	// True when rel reduces to 0 under the final rewrite system.
	bool derives(const NcPolynomial &rel) const { return system.reduces_to_zero(rel); }
};

class InconsistentPresentation : public std::runtime_error {
public:
	InconsistentPresentation(const std::string &what, std::vector<Deduction> log)
	    : std::runtime_error(what), log_(std::move(log))
	{
	}
	const std::vector<Deduction> &log() const { return log_; }

private:
	std::vector<Deduction> log_;
};

// Coefficient comparison of alpha(w1) and alpha(w2) at every group element
// in the union of supports; identically zero differences are omitted. With a
// rewrite system, every partial product is reduced modulo it (sound pruning).
std::vector<NcPolynomial> homomorphism_relations(const IdentityPair &pair, const GenSet &S,
                                                 const RewriteSystem *prune = nullptr);

// Row relations sum_c q[r|c] q[r'|c]* - delta_{r,r'} and column relations
// sum_r q[r|c]* q[r|c'] - delta_{c,c'}, for all index pairs.
std::vector<NcPolynomial> unitarity_relations(const GenSet &S);

// Working memory of the saturation loop.
class DerivationState {
public:
	DerivationState(const GenSet &S, const EngineConfig &config);

	const GenSet &gens() const { return S_; }
	const Alphabet &alphabet() const { return S_.alphabet(); }
	const RewriteSystem &system() const { return system_; }
	const std::vector<Deduction> &log() const { return log_; }
	int round() const { return round_; }

	// Queues a candidate deduction. Oversized relations are parked instead;
	// returns false for those and for zero relations.
	bool submit(Deduction d);
	// Drains the pending queue. Returns the number of effective deductions.
	std::size_t process_pending();
	bool has_pending() const { return !pending_.empty(); }

	std::vector<Symbol> survivors() const;
	bool is_normal(Symbol s) const;

	// Positive homogeneous relations eligible for the two-sided product move.
	const std::vector<std::size_t> &positive_pool() const { return positive_pool_; }
	// Relations with a nonzero constant term (unitarity and its closures).
	const std::vector<std::size_t> &constant_pool() const { return constant_pool_; }

	// Parked relations are re-examined after new zero symbols appear.
	std::size_t release_parked();
	std::size_t parked_count() const { return parked_.size(); }

	void begin_round() { ++round_; }
	[[noreturn]] void fail(const std::string &why) const;

private:
	void queue_closures(const Deduction &d);
	std::string key(const NcPolynomial &p) const;

	GenSet S_;
	EngineConfig config_;
	RewriteSystem system_;
	std::vector<Deduction> log_;
	std::deque<Deduction> pending_;
	std::vector<Deduction> parked_;
	std::size_t parked_zero_count_ = 0;
	std::unordered_map<std::string, std::size_t> seen_;
	std::vector<std::size_t> positive_pool_;
	std::vector<std::size_t> constant_pool_;
	int round_ = 0;
};

// One application of every enabled inference rule (positivity split with the
// two-sided product move, xx*-zero, normality, nilpotent/normal cancellation)
// to the current state. Returns candidate deductions; duplicates of logged
// relations may be included and are dropped by submit().
std::vector<Deduction> apply_inference(const DerivationState &state);

// Throws InconsistentPresentation when 1 = 0 is derived.
DerivationReport saturate(const GenSet &S, const EngineConfig &config);

FundamentalUnitary reduced_unitary(const DerivationReport &report);

// Label A_{ij} / A_{ij}* for rank-1 sets, q[r|c] otherwise.
std::string entry_label(Symbol s, const GenSet &S);
std::string render_labels(const NcPolynomial &p, const GenSet &S);

} // namespace qiso
