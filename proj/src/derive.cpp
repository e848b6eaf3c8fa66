#include "qiso/derive.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qiso {

namespace {

constexpr const char *rule_names[inference_rule_count] = {
    "homomorphism",     "unitarity",       "involution-closure", "antipode-closure",
    "positivity-split", "xx*-zero",        "normality-tactic",   "nilpotent-normal-zero",
};

// Terms in positive-pool / constant-pool relations.
constexpr std::size_t pool_term_limit = 64;

bool same_sign(const NcPolynomial &p)
{
	if (p.is_zero())
		return false;
	bool pos = p.terms().front().coeff > Rational(0);
	for (const auto &t : p.terms())
		if ((t.coeff > Rational(0)) != pos)
			return false;
	return true;
}

bool is_power(const SymbolWord &w, Symbol &base)
{
	if (w.size() < 2)
		return false;
	for (auto c : w)
		if (c != w[0])
			return false;
	base = w[0];
	return true;
}

SymbolWord power(Symbol s, std::size_t m) { return SymbolWord(m, s); }

ActionElement reduced(const ActionElement &x, const RewriteSystem *sys)
{
	if (!sys)
		return x;
	ActionElement out(x.rank());
	for (const auto &[g, p] : x.support())
		out.add(g, sys->normal_form(p));
	return out;
}

ActionElement pruned_action(const GroupWord &w, const GenSet &S, const RewriteSystem *sys)
{
	ActionElement acc = ActionElement::unit(S.rank());
	for (const auto &g : w.letters)
		acc = reduced(convolve(acc, reduced(generator_action(g, S), sys)), sys);
	return acc;
}

std::vector<std::pair<GroupElement, NcPolynomial>> coefficient_relations(const IdentityPair &pair,
                                                                         const GenSet &S,
                                                                         const RewriteSystem *sys)
{
	ActionElement x = pruned_action(pair.first, S, sys);
	ActionElement y = pruned_action(pair.second, S, sys);
	std::set<GroupElement> support;
	for (const auto &[g, p] : x.support())
		support.insert(g);
	for (const auto &[g, p] : y.support())
		support.insert(g);
	std::vector<std::pair<GroupElement, NcPolynomial>> out;
	for (const auto &g : support)
	{
		NcPolynomial d = coefficient(x, g) - coefficient(y, g);
		if (sys)
			d = sys->normal_form(d);
		if (!d.is_zero())
			out.emplace_back(g, std::move(d));
	}
	return out;
}

// Upper bound on the number of monomials produced while expanding w.
double expansion_estimate(const GroupWord &w, const GenSet &S, const RewriteSystem &sys)
{
	const auto &A = S.alphabet();
	double total = 1;
	for (const auto &g : w.letters)
	{
		std::size_t live = 0;
		for (const auto &c : S.elements())
			if (!sys.is_zero_symbol(A.symbol(g, c)))
				++live;
		total *= static_cast<double>(live);
	}
	return total;
}

struct Batch {
	std::vector<IdentityPair> pairs;
	bool prune = true;
	std::string label;
};

GroupWord make_word(std::vector<GroupElement> letters, std::size_t rank) { return GroupWord(std::move(letters), rank); }

std::vector<Batch> build_batches(const GenSet &S, int L)
{
	const std::size_t n = S.rank();
	std::vector<Batch> batches;
	Batch first;
	first.prune = false;
	first.label = "length <= 2";
	for (const auto &x : S.elements())
	{
		first.pairs.emplace_back(make_word({x, -x}, n), make_word({}, n));
		for (const auto &y : S.elements())
			if (x < y)
				first.pairs.emplace_back(make_word({x, y}, n), make_word({y, x}, n));
	}
	// Pairs with a single-letter side go in a second batch so the tactics see
	// the two-letter identities before rewriting alone can shortcut them.
	Batch single;
	single.prune = false;
	single.label = "single letter against length 2";
	auto classes = identity_classes(S, L);
	for (const auto &[sum, words] : classes)
		for (std::size_t i = 1; i < words.size(); ++i)
			if (words[i].length() <= 2)
				(words[0].length() == 1 ? single : first).pairs.emplace_back(words[0], words[i]);
	batches.push_back(std::move(first));
	if (!single.pairs.empty())
		batches.push_back(std::move(single));

	std::set<std::pair<std::vector<GroupElement>, std::vector<GroupElement>>> done;
	for (const auto &b : batches)
		for (const auto &p : b.pairs)
			done.insert({p.first.letters, p.second.letters});
	auto pure = [](const GroupWord &w) {
		return w.length() >= 1 && std::all_of(w.letters.begin(), w.letters.end(),
		                                      [&](const GroupElement &g) { return g == w.letters[0]; });
	};
	for (int t = 3; t <= L; ++t)
	{
		Batch b;
		b.label = "powers of length " + std::to_string(t);
		for (const auto &[sum, words] : classes)
			for (std::size_t i = 0; i < words.size(); ++i)
				for (std::size_t j = i + 1; j < words.size(); ++j)
				{
					const auto &u = words[i];
					const auto &v = words[j];
					if (static_cast<int>(std::max(u.length(), v.length())) != t || !pure(u) || !pure(v))
						continue;
					if (done.insert({u.letters, v.letters}).second)
						b.pairs.emplace_back(u, v);
				}
		if (!b.pairs.empty())
			batches.push_back(std::move(b));
	}
	for (int t = 3; t <= L; ++t)
	{
		Batch b;
		b.label = "words of length " + std::to_string(t);
		for (const auto &[sum, words] : classes)
			for (std::size_t i = 1; i < words.size(); ++i)
				if (static_cast<int>(words[i].length()) == t &&
				    done.insert({words[0].letters, words[i].letters}).second)
					b.pairs.emplace_back(words[0], words[i]);
		if (!b.pairs.empty())
			batches.push_back(std::move(b));
	}
	return batches;
}

// u with u·u* equal to w in the current quotient, if one of the natural
// splits of w works.
std::optional<SymbolWord> star_root(const SymbolWord &w, const NcPolynomial &nfw, const RewriteSystem &sys,
                                    const Alphabet &A)
{
	if (w.size() % 2 != 0 || w.empty())
		return std::nullopt;
	std::size_t m = w.size() / 2;
	SymbolWord cands[2] = {w.substr(0, m), adjoint(w.substr(m), A)};
	for (const auto &u : cands)
		if (sys.normal_form(u + adjoint(u, A)) == nfw)
			return u;
	return std::nullopt;
}

} // namespace

const char *to_string(InferenceRule rule) { return rule_names[static_cast<std::size_t>(rule)]; }

std::optional<InferenceRule> parse_inference_rule(const std::string &name)
{
	for (std::size_t i = 0; i < inference_rule_count; ++i)
		if (name == rule_names[i])
			return static_cast<InferenceRule>(i);
	return std::nullopt;
}

void EngineConfig::validate() const
{
	if (max_word_len < 2)
		throw std::invalid_argument("max_word_len must be at least 2");
	if (max_rounds < 1)
		throw std::invalid_argument("max_rounds must be at least 1");
	if (max_relation_terms < 1 || max_expansion_terms < 1)
		throw std::invalid_argument("term limits must be positive");
}

int default_max_word_len(const GenSet &S)
{
	if (S.rank() != 1)
		return 4;
	auto reps = S.positive_representatives();
	std::int64_t best = 4;
	for (std::size_t i = 0; i < reps.size(); ++i)
		for (std::size_t j = i + 1; j < reps.size(); ++j)
		{
			std::int64_t a = reps[i][0], b = reps[j][0];
			best = std::max(best, std::lcm(a, b) / a);
		}
	return static_cast<int>(best);
}

EngineConfig default_config(const GenSet &S)
{
	EngineConfig c;
	c.max_word_len = default_max_word_len(S);
	return c;
}

FundamentalUnitary initial_unitary(const GenSet &S)
{
	FundamentalUnitary u;
	u.index = S.display_order();
	for (const auto &r : u.index)
	{
		std::vector<NcPolynomial> row;
		for (const auto &c : u.index)
			row.push_back(NcPolynomial::symbol(S.alphabet().symbol(r, c)));
		u.entries.push_back(std::move(row));
	}
	return u;
}

bool DerivationReport::is_zero(Symbol s) const { return system.is_zero_symbol(s); }

std::vector<NcPolynomial> homomorphism_relations(const IdentityPair &pair, const GenSet &S,
                                                 const RewriteSystem *prune)
{
	std::vector<NcPolynomial> out;
	for (auto &[g, p] : coefficient_relations(pair, S, prune))
		out.push_back(std::move(p));
	return out;
}

std::vector<NcPolynomial> unitarity_relations(const GenSet &S)
{
	const auto &A = S.alphabet();
	const auto &idx = S.elements();
	std::vector<NcPolynomial> out;
	for (const auto &r : idx)
		for (const auto &r2 : idx)
		{
			std::vector<NcTerm> terms;
			for (const auto &c : idx)
				terms.push_back({SymbolWord{A.symbol(r, c), A.adjoint(A.symbol(r2, c))}, Rational(1)});
			if (r == r2)
				terms.push_back({SymbolWord(), Rational(-1)});
			out.push_back(NcPolynomial::from_terms(std::move(terms)));
		}
	for (const auto &c : idx)
		for (const auto &c2 : idx)
		{
			std::vector<NcTerm> terms;
			for (const auto &r : idx)
				terms.push_back({SymbolWord{A.adjoint(A.symbol(r, c)), A.symbol(r, c2)}, Rational(1)});
			if (c == c2)
				terms.push_back({SymbolWord(), Rational(-1)});
			out.push_back(NcPolynomial::from_terms(std::move(terms)));
		}
	return out;
}

DerivationState::DerivationState(const GenSet &S, const EngineConfig &config)
    : S_(S), config_(config), system_(S.alphabet().symbol_count())
{
}

std::string DerivationState::key(const NcPolynomial &p) const
{
	std::string k;
	for (const auto &t : p.terms())
	{
		for (auto c : t.word)
		{
			k.push_back(static_cast<char>(c & 0xff));
			k.push_back(static_cast<char>(c >> 8));
		}
		k += '/' + t.coeff.str() + ';';
	}
	return k;
}

bool DerivationState::submit(Deduction d)
{
	if (d.relation.is_zero())
		return false;
	if (d.relation.size() > config_.max_relation_terms)
	{
		parked_.push_back(std::move(d));
		return false;
	}
	pending_.push_back(std::move(d));
	return true;
}

void DerivationState::fail(const std::string &why) const { throw InconsistentPresentation(why, log_); }

void DerivationState::queue_closures(const Deduction &d)
{
	const auto &A = alphabet();
	std::string tag = d.rule == InferenceRule::homomorphism && d.relation.degree() <= 2 ? " (pattern-derived)" : "";
	std::string src = "#" + std::to_string(d.id);
	if (config_.is_enabled(InferenceRule::involution_closure))
		submit({0, adjoint(d.relation, A), InferenceRule::involution_closure, {d.id}, "adjoint of " + src});
	if (config_.is_enabled(InferenceRule::antipode_closure))
	{
		NcPolynomial k = antipode(d.relation, A);
		submit({0, k, InferenceRule::antipode_closure, {d.id}, "antipode of " + src + tag});
		submit({0, adjoint(k, A), InferenceRule::antipode_closure, {d.id}, "adjoint of antipode of " + src + tag});
	}
}

std::size_t DerivationState::process_pending()
{
	std::size_t effective = 0;
	while (!pending_.empty())
	{
		Deduction d = std::move(pending_.front());
		pending_.pop_front();
		std::string k = key(d.relation.monic());
		if (seen_.count(k))
			continue;
		bool changed = false;
		try
		{
			changed = system_.add_relation(d.relation);
		}
		catch (const InconsistencyError &)
		{
			d.id = log_.size();
			d.round = round_;
			log_.push_back(d);
			fail("derived 1 = 0 from " + d.relation.render(alphabet()));
		}
		bool positive = d.relation.size() <= pool_term_limit && d.relation.constant_term() == Rational(0) &&
		                d.relation.size() >= 2 && same_sign(d.relation);
		bool constant = d.relation.size() <= pool_term_limit && d.relation.constant_term() != Rational(0);
		bool seeded = d.rule == InferenceRule::homomorphism || d.rule == InferenceRule::unitarity;
		if (!changed && seeded && !positive && !constant)
		{
			seen_.emplace(std::move(k), std::size_t(-1));
			continue;
		}
		d.id = log_.size();
		d.round = round_;
		d.effective = changed;
		seen_.emplace(std::move(k), d.id);
		if (positive)
			positive_pool_.push_back(d.id);
		if (constant)
			constant_pool_.push_back(d.id);
		log_.push_back(d);
		if (changed)
		{
			++effective;
			queue_closures(log_.back());
		}
	}
	return effective;
}

std::vector<Symbol> DerivationState::survivors() const
{
	std::vector<Symbol> out;
	for (std::size_t s = 0; s < alphabet().symbol_count(); ++s)
		if (!system_.is_zero_symbol(static_cast<Symbol>(s)))
			out.push_back(static_cast<Symbol>(s));
	return out;
}

bool DerivationState::is_normal(Symbol s) const
{
	const auto &A = alphabet();
	Symbol t = A.adjoint(s);
	return system_.has(s, Fact::normal) ||
	       system_.reduces_to_zero(NcPolynomial(SymbolWord{s, t}) - NcPolynomial(SymbolWord{t, s}));
}

std::size_t DerivationState::release_parked()
{
	std::size_t zeros = system_.zero_symbols().size();
	if (zeros == parked_zero_count_ || parked_.empty())
		return 0;
	parked_zero_count_ = zeros;
	std::vector<Deduction> keep;
	std::size_t released = 0;
	for (auto &d : parked_)
	{
		std::vector<NcTerm> live;
		for (const auto &t : d.relation.terms())
			if (std::none_of(t.word.begin(), t.word.end(), [&](Symbol s) { return system_.is_zero_symbol(s); }))
				live.push_back(t);
		d.relation = NcPolynomial::from_terms(std::move(live));
		if (d.relation.size() <= config_.max_relation_terms)
		{
			d.relation = system_.normal_form(d.relation);
			if (submit(std::move(d)))
				++released;
		}
		else
			keep.push_back(std::move(d));
	}
	parked_ = std::move(keep);
	return released;
}

std::vector<Deduction> apply_inference(const DerivationState &state)
{
	const auto &A = state.alphabet();
	const auto &sys = state.system();
	const auto &log = state.log();
	std::vector<Deduction> out;
	std::vector<Symbol> live = state.survivors();

	// Positive sums, optionally sandwiched between two symbols.
	for (auto id : state.positive_pool())
	{
		const NcPolynomial &P = log[id].relation;
		std::vector<std::pair<SymbolWord, SymbolWord>> sandwiches{{SymbolWord(), SymbolWord()}};
		for (const auto &t : P.terms())
			if (t.word.size() == 2)
				sandwiches.push_back({SymbolWord(1, A.adjoint(t.word[1])), SymbolWord(1, A.adjoint(t.word[0]))});
		std::sort(sandwiches.begin(), sandwiches.end());
		sandwiches.erase(std::unique(sandwiches.begin(), sandwiches.end()), sandwiches.end());
		for (const auto &[x, y] : sandwiches)
		{
			std::vector<NcTerm> sum;
			std::vector<SymbolWord> roots;
			bool ok = true;
			for (const auto &t : P.terms())
			{
				SymbolWord w = x + t.word + y;
				NcPolynomial nfw = sys.normal_form(w);
				if (nfw.is_zero())
					continue;
				auto u = star_root(w, nfw, sys, A);
				if (!u)
				{
					ok = false;
					break;
				}
				sum.push_back({*u + adjoint(*u, A), t.coeff});
				roots.push_back(*u);
			}
			if (!ok || roots.empty())
				continue;
			std::string how = x.empty() ? "#" + std::to_string(id)
			                            : A.render(x) + " · #" + std::to_string(id) + " · " + A.render(y);
			out.push_back({0, NcPolynomial::from_terms(sum), InferenceRule::positivity_split, {id},
			               "sum of y·y* from " + how});
			for (const auto &u : roots)
				out.push_back({0, NcPolynomial(u), InferenceRule::xx_star_zero, {id}, "y·y* = 0 in split of " + how});
		}
	}

	// Normality from the unitarity relations.
	for (auto x : live)
	{
		if (state.is_normal(x))
			continue;
		Symbol xs = A.adjoint(x);
		SymbolWord xxs{x, xs}, xsx{xs, x};
		NcPolynomial left_target = sys.normal_form(NcPolynomial(SymbolWord{x, x, xs}) - NcPolynomial::symbol(x));
		NcPolynomial right_target = sys.normal_form(NcPolynomial(SymbolWord{xs, x, x}) - NcPolynomial::symbol(x));
		std::vector<Deduction> found;
		auto match = [&](const NcPolynomial &target, const SymbolWord &pattern, bool from_left) -> bool {
			if (target.is_zero())
				return true;
			for (auto id : state.constant_pool())
			{
				const NcPolynomial &P = log[id].relation;
				if (std::none_of(P.terms().begin(), P.terms().end(),
				                 [&](const NcTerm &t) { return t.word == pattern; }))
					continue;
				NcPolynomial R = sys.normal_form(from_left ? mul(SymbolWord(1, x), P, SymbolWord())
				                                           : mul(SymbolWord(), P, SymbolWord(1, x)));
				if (!R.is_zero() && R.monic() == target.monic())
				{
					found.push_back({0, R, InferenceRule::normality_tactic, {id},
					                 (from_left ? A.render(x) + " · #" : "#") + std::to_string(id) +
					                     (from_left ? "" : " · " + A.render(x))});
					return true;
				}
			}
			return false;
		};
		if (!match(left_target, xxs, true) || !match(right_target, xsx, false))
			continue;
		std::vector<std::size_t> src;
		for (const auto &d : found)
			src.push_back(d.sources[0]);
		for (auto &d : found)
			out.push_back(std::move(d));
		out.push_back({0, NcPolynomial(xxs) - NcPolynomial(xsx), InferenceRule::normality_tactic, src,
		               A.render(x) + " is normal: x²x* = x and x*x² = x"});
	}

	// Nilpotent normal elements vanish; normal powers cancel.
	std::size_t M = 2;
	for (const auto &[lhs, rhs] : sys.rules())
		M = std::max(M, lhs.size());
	std::vector<Symbol> normal;
	for (auto y : live)
		if (state.is_normal(y))
			normal.push_back(y);
	auto zero_of = [&](const SymbolWord &w) { return sys.normal_form(w).is_zero(); };
	for (auto y : normal)
		for (std::size_t m = 2; m <= M; ++m)
			if (zero_of(power(y, m)))
			{
				out.push_back({0, NcPolynomial::symbol(y), InferenceRule::nilpotent_normal_zero, {},
				               A.render(y) + "^" + std::to_string(m) + " = 0 and " + A.render(y) + " is normal"});
				break;
			}
	// Binomial rules y^m -> c·z and z -> c·y^m give w·y^m = 0 from w·z = 0.
	std::vector<std::pair<Symbol, SymbolWord>> powers; // (y, z) with y^m equal to a multiple of z
	for (const auto &[lhs, rhs] : sys.rules())
	{
		if (!rhs.is_monomial())
			continue;
		Symbol y;
		if (is_power(lhs, y) && state.is_normal(y))
			powers.push_back({y, rhs.leading().word});
		if (is_power(rhs.leading().word, y) && state.is_normal(y))
			powers.push_back({y, lhs});
	}
	for (auto y : normal)
		for (std::size_t m = 2; m <= M; ++m)
			powers.push_back({y, power(y, m)});
	std::set<SymbolWord> emitted;
	for (const auto &[y, z] : powers)
		for (auto w : live)
		{
			SymbolWord wy{w, y}, yw{y, w};
			if (!emitted.count(wy) && zero_of(SymbolWord(1, w) + z) && !zero_of(wy))
			{
				emitted.insert(wy);
				out.push_back({0, NcPolynomial(wy), InferenceRule::nilpotent_normal_zero, {},
				               A.render(w) + "·" + A.render(z) + " = 0 with " + A.render(z) + " a power of normal " +
				                   A.render(y)});
			}
			if (!emitted.count(yw) && zero_of(z + SymbolWord(1, w)) && !zero_of(yw))
			{
				emitted.insert(yw);
				out.push_back({0, NcPolynomial(yw), InferenceRule::nilpotent_normal_zero, {},
				               A.render(z) + "·" + A.render(w) + " = 0 with " + A.render(z) + " a power of normal " +
				                   A.render(y)});
			}
		}
	return out;
}

DerivationReport saturate(const GenSet &S, const EngineConfig &config)
{
	config.validate();
	DerivationState state(S, config);
	const int L = config.max_word_len;
	auto on = [&](InferenceRule r) { return config.is_enabled(r); };

	std::vector<Batch> batches;
	if (on(InferenceRule::homomorphism))
		batches = build_batches(S, L);
	std::size_t next_batch = 0;
	std::vector<IdentityPair> deferred_pairs;
	std::size_t deferred_zero_count = 0;

	auto seed_pairs = [&](const std::vector<IdentityPair> &pairs, bool prune) {
		std::vector<IdentityPair> later;
		for (const auto &pair : pairs)
		{
			const RewriteSystem &sys = state.system();
			if (prune && std::max(expansion_estimate(pair.first, S, sys), expansion_estimate(pair.second, S, sys)) >
			                 static_cast<double>(config.max_expansion_terms))
			{
				later.push_back(pair);
				continue;
			}
			for (auto &[g, rel] : coefficient_relations(pair, S, prune ? &sys : nullptr))
				state.submit({0, std::move(rel), InferenceRule::homomorphism, {},
				              pair.first.to_string() + " ~ " + pair.second.to_string() + " at " + g.to_string()});
			// Reduce modulo everything learned so far before the next expansion.
			if (prune)
				state.process_pending();
		}
		return later;
	};
	auto inference = [&]() {
		auto cands = apply_inference(state);
		for (auto &d : cands)
			if (on(d.rule))
				state.submit(std::move(d));
		return state.process_pending();
	};

	DerivationReport report{S, config, {}, {}, {}, {}, {}, RewriteSystem(), false, 0, {}, 0, 0, 0};
	try
	{
		state.begin_round();
		if (on(InferenceRule::unitarity))
			for (auto &rel : unitarity_relations(S))
				state.submit({0, std::move(rel), InferenceRule::unitarity, {}, "unitarity"});
		state.process_pending();
		if (next_batch < batches.size())
		{
			const auto &b = batches[next_batch++];
			deferred_pairs = seed_pairs(b.pairs, b.prune);
			state.process_pending();
		}
		report.zero_count_by_round.push_back(state.system().zero_symbols().size());

		for (;;)
		{
			if (state.round() >= config.max_rounds)
				break;
			state.begin_round();
			std::size_t effective = inference();
			if (effective == 0)
			{
				std::size_t zeros = state.system().zero_symbols().size();
				if (state.release_parked() > 0)
					effective += state.process_pending();
				if (!deferred_pairs.empty() && zeros != deferred_zero_count)
				{
					deferred_zero_count = zeros;
					auto pairs = std::move(deferred_pairs);
					deferred_pairs = seed_pairs(pairs, true);
					effective += state.process_pending() + 1;
				}
				else if (next_batch < batches.size())
				{
					const auto &b = batches[next_batch++];
					auto later = seed_pairs(b.pairs, b.prune);
					deferred_pairs.insert(deferred_pairs.end(), later.begin(), later.end());
					effective += state.process_pending() + 1;
				}
			}
			report.zero_count_by_round.push_back(state.system().zero_symbols().size());
			if (effective == 0)
			{
				report.fixpoint = true;
				break;
			}
		}
	}
	catch (const InconsistencyError &e)
	{
		state.fail(e.what());
	}

	report.rounds = state.round();
	report.log = state.log();
	report.deferred_relations = state.parked_count();
	report.deferred_words = deferred_pairs.size();
	if (report.deferred_relations || report.deferred_words)
		report.fixpoint = false;
	report.system = state.system();
	report.max_reduction_steps = report.system.max_reduction_steps();
	const auto &A = S.alphabet();
	for (std::size_t i = 0; i < A.symbol_count(); ++i)
	{
		auto s = static_cast<Symbol>(i);
		if (report.system.is_zero_symbol(s))
			report.zero_symbols.push_back(s);
		else
		{
			report.surviving_symbols.push_back(s);
			if (state.is_normal(s))
			{
				report.normal_symbols.push_back(s);
				report.system.mark(s, Fact::normal);
			}
			SymbolWord p{s, A.adjoint(s)};
			if (report.system.reduces_to_zero(NcPolynomial(p + p) - NcPolynomial(p)))
				report.system.mark(s, Fact::projection);
		}
	}
	for (const auto &[lhs, rhs] : report.system.rules())
	{
		if (lhs.size() == 1 && rhs.is_zero())
			continue;
		report.survivor_relations.push_back(NcPolynomial(lhs) - report.system.normal_form(rhs));
	}
	return report;
}

FundamentalUnitary reduced_unitary(const DerivationReport &report)
{
	FundamentalUnitary u = initial_unitary(report.S);
	for (auto &row : u.entries)
		for (auto &e : row)
			e = report.system.normal_form(e);
	return u;
}

std::string entry_label(Symbol s, const GenSet &S)
{
	const auto &A = S.alphabet();
	if (S.rank() != 1)
		return A.render(s);
	auto reps = S.positive_representatives();
	GroupElement r = A.row(s), c = A.col(s);
	bool star = !is_positive_representative(r);
	if (star)
	{
		r = -r;
		c = -c;
	}
	auto pos = [&](const GroupElement &g) {
		GroupElement a = is_positive_representative(g) ? g : -g;
		return static_cast<std::size_t>(std::find(reps.begin(), reps.end(), a) - reps.begin()) + 1;
	};
	std::size_t i = pos(r);
	std::size_t j = 2 * pos(c) - (is_positive_representative(c) ? 1 : 0);
	std::string sep = i < 10 && j < 10 ? "" : ",";
	return "A_{" + std::to_string(i) + sep + std::to_string(j) + "}" + (star ? "*" : "");
}

std::string render_labels(const NcPolynomial &p, const GenSet &S)
{
	return p.render([&](Symbol s) { return entry_label(s, S); });
}

} // namespace qiso
