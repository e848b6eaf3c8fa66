#include "qiso/ncalg.hpp"

#include <algorithm>
#include <sstream>

namespace qiso {

std::string to_string(const Rational &r)
{
	return r.str();
}

Alphabet::Alphabet(std::vector<GroupElement> generators) : gens_(std::move(generators))
{
	std::sort(gens_.begin(), gens_.end());
	if (gens_.size() * gens_.size() > 0xFFFF)
		throw std::invalid_argument("generating set too large for the symbol alphabet");
	neg_.resize(gens_.size());
	for (std::size_t i = 0; i < gens_.size(); ++i)
		neg_[i] = index_of(-gens_[i]);
}

std::size_t Alphabet::index_of(const GroupElement &g) const
{
	auto it = std::lower_bound(gens_.begin(), gens_.end(), g);
	if (it == gens_.end() || *it != g)
		throw std::invalid_argument("element " + g.to_string() + " is not in the generating set");
	return static_cast<std::size_t>(it - gens_.begin());
}

std::string Alphabet::render(Symbol s) const
{
	return "q[" + row(s).to_string() + "|" + col(s).to_string() + "]";
}

std::string Alphabet::render(const SymbolWord &w) const
{
	if (w.empty())
		return "1";
	std::string out;
	for (std::size_t i = 0; i < w.size(); ++i)
	{
		if (i)
			out += "·";
		out += render(w[i]);
	}
	return out;
}

NcPolynomial::NcPolynomial(Rational c)
{
	if (c != Rational(0))
		terms_.push_back({SymbolWord(), c});
}

NcPolynomial::NcPolynomial(SymbolWord w, Rational c)
{
	if (c != Rational(0))
		terms_.push_back({std::move(w), c});
}

NcPolynomial NcPolynomial::from_terms(std::vector<NcTerm> terms)
{
	std::sort(terms.begin(), terms.end(),
	          [](const NcTerm &a, const NcTerm &b) { return word_less(b.word, a.word); });
	NcPolynomial p;
	for (auto &t : terms)
	{
		if (!p.terms_.empty() && p.terms_.back().word == t.word)
			p.terms_.back().coeff += t.coeff;
		else
		{
			if (!p.terms_.empty() && p.terms_.back().coeff == Rational(0))
				p.terms_.pop_back();
			p.terms_.push_back(std::move(t));
		}
	}
	if (!p.terms_.empty() && p.terms_.back().coeff == Rational(0))
		p.terms_.pop_back();
	return p;
}

Rational NcPolynomial::constant_term() const
{
	if (!terms_.empty() && terms_.back().word.empty())
		return terms_.back().coeff;
	return Rational(0);
}

NcPolynomial NcPolynomial::monic() const
{
	if (terms_.empty())
		return *this;
	NcPolynomial p(*this);
	Rational inv = Rational(1) / terms_.front().coeff;
	for (auto &t : p.terms_)
		t.coeff *= inv;
	return p;
}

std::set<Symbol> NcPolynomial::symbols() const
{
	std::set<Symbol> out;
	for (const auto &t : terms_)
		out.insert(t.word.begin(), t.word.end());
	return out;
}

NcPolynomial NcPolynomial::operator-() const
{
	NcPolynomial p(*this);
	for (auto &t : p.terms_)
		t.coeff = -t.coeff;
	return p;
}

namespace {

// Merge two canonical term lists, scaling the second by `sign`.
std::vector<NcTerm> merge_terms(const std::vector<NcTerm> &a, const std::vector<NcTerm> &b, int sign)
{
	std::vector<NcTerm> out;
	out.reserve(a.size() + b.size());
	std::size_t i = 0, j = 0;
	while (i < a.size() || j < b.size())
	{
		if (j == b.size() || (i < a.size() && word_less(b[j].word, a[i].word)))
			out.push_back(a[i++]);
		else if (i == a.size() || word_less(a[i].word, b[j].word))
		{
			out.push_back(b[j++]);
			if (sign < 0)
				out.back().coeff = -out.back().coeff;
		}
		else
		{
			Rational c = sign < 0 ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
			if (c != Rational(0))
				out.push_back({a[i].word, c});
			++i;
			++j;
		}
	}
	return out;
}

} // namespace

NcPolynomial &NcPolynomial::operator+=(const NcPolynomial &other)
{
	if (other.terms_.empty())
		return *this;
	terms_ = merge_terms(terms_, other.terms_, +1);
	return *this;
}

NcPolynomial &NcPolynomial::operator-=(const NcPolynomial &other)
{
	if (other.terms_.empty())
		return *this;
	terms_ = merge_terms(terms_, other.terms_, -1);
	return *this;
}

NcPolynomial &NcPolynomial::operator*=(const Rational &c)
{
	if (c == Rational(0))
		terms_.clear();
	for (auto &t : terms_)
		t.coeff *= c;
	return *this;
}

std::string NcPolynomial::render(const Alphabet &alphabet) const
{
	return render([&](Symbol s) { return alphabet.render(s); });
}

std::string NcPolynomial::render(const std::function<std::string(Symbol)> &label) const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &t : terms_)
	{
		Rational c = t.coeff;
		if (first)
		{
			if (c < Rational(0))
			{
				out += "-";
				c = -c;
			}
		}
		else
		{
			out += c < Rational(0) ? " - " : " + ";
			if (c < Rational(0))
				c = -c;
		}
		first = false;
		if (t.word.empty())
			out += to_string(c);
		else
		{
			if (c != Rational(1))
				out += to_string(c) + "·";
			for (std::size_t i = 0; i < t.word.size(); ++i)
			{
				if (i)
					out += "·";
				out += label(t.word[i]);
			}
		}
	}
	return out;
}

NcPolynomial mul(const NcPolynomial &p, const NcPolynomial &q)
{
	if (p.is_zero() || q.is_zero())
		return NcPolynomial();
	std::vector<NcTerm> terms;
	terms.reserve(p.size() * q.size());
	for (const auto &a : p.terms())
		for (const auto &b : q.terms())
			terms.push_back({a.word + b.word, a.coeff * b.coeff});
	return NcPolynomial::from_terms(std::move(terms));
}

NcPolynomial operator*(const NcPolynomial &p, const NcPolynomial &q) { return mul(p, q); }

NcPolynomial mul(const SymbolWord &left, const NcPolynomial &p, const SymbolWord &right)
{
	// Same-length prefix/suffix preserves the relative order of terms of equal
	// degree, and degrees shift uniformly, so the result is already canonical.
	std::vector<NcTerm> terms;
	terms.reserve(p.size());
	for (const auto &t : p.terms())
		terms.push_back({left + t.word + right, t.coeff});
	NcPolynomial out;
	out = NcPolynomial::from_terms(std::move(terms));
	return out;
}

SymbolWord adjoint(const SymbolWord &w, const Alphabet &alphabet)
{
	SymbolWord out(w.rbegin(), w.rend());
	for (auto &s : out)
		s = alphabet.adjoint(s);
	return out;
}

SymbolWord antipode(const SymbolWord &w, const Alphabet &alphabet)
{
	SymbolWord out(w.rbegin(), w.rend());
	for (auto &s : out)
		s = alphabet.antipode(s);
	return out;
}

NcPolynomial adjoint(const NcPolynomial &p, const Alphabet &alphabet)
{
	std::vector<NcTerm> terms;
	terms.reserve(p.size());
	// Rational coefficients are self-conjugate.
	for (const auto &t : p.terms())
		terms.push_back({adjoint(t.word, alphabet), t.coeff});
	return NcPolynomial::from_terms(std::move(terms));
}

NcPolynomial antipode(const NcPolynomial &p, const Alphabet &alphabet)
{
	std::vector<NcTerm> terms;
	terms.reserve(p.size());
	for (const auto &t : p.terms())
		terms.push_back({antipode(t.word, alphabet), t.coeff});
	return NcPolynomial::from_terms(std::move(terms));
}

RewriteSystem::RewriteSystem(std::size_t symbol_count)
    : zero_(symbol_count, false), facts_(symbol_count, 0), symbol_count_(symbol_count)
{
}

void RewriteSystem::rebuild_index() const
{
	rule_list_.clear();
	by_first_.assign(symbol_count_, {});
	for (const auto &[lhs, rhs] : rules_)
	{
		by_first_[static_cast<std::size_t>(lhs[0])].push_back(static_cast<std::uint32_t>(rule_list_.size()));
		rule_list_.push_back({lhs, rhs});
	}
	index_dirty_ = false;
}

std::optional<RewriteSystem::Redex> RewriteSystem::find_redex(const SymbolWord &w) const
{
	if (index_dirty_)
		rebuild_index();
	for (std::size_t i = 0; i < w.size(); ++i)
	{
		if (static_cast<std::size_t>(w[i]) >= by_first_.size())
			continue;
		for (auto idx : by_first_[static_cast<std::size_t>(w[i])])
		{
			const auto &rule = rule_list_[idx];
			if (rule.lhs.size() <= w.size() - i && w.compare(i, rule.lhs.size(), rule.lhs) == 0)
				return Redex{i, &rule};
		}
	}
	return std::nullopt;
}

NcPolynomial RewriteSystem::reduce_word(const SymbolWord &w, std::size_t &steps) const
{
	for (auto s : w)
		if (is_zero_symbol(s))
			return NcPolynomial();
	if (auto it = cache_.find(w); it != cache_.end())
		return it->second;
	auto redex = find_redex(w);
	if (!redex)
		return NcPolynomial(w);
	++steps;
	NcPolynomial out;
	const auto &lhs = redex->rule->lhs;
	for (const auto &t : redex->rule->rhs.terms())
	{
		SymbolWord next = w.substr(0, redex->pos) + t.word + w.substr(redex->pos + lhs.size());
		NcPolynomial part = reduce_word(next, steps);
		part *= t.coeff;
		out += part;
	}
	cache_.emplace(w, out);
	return out;
}

NcPolynomial RewriteSystem::normal_form(const SymbolWord &w) const
{
	std::size_t steps = 0;
	auto out = reduce_word(w, steps);
	max_steps_ = std::max(max_steps_, steps);
	return out;
}

NcPolynomial RewriteSystem::normal_form(const NcPolynomial &p) const
{
	if (rules_.empty())
		return p;
	std::size_t steps = 0;
	std::vector<NcTerm> acc;
	acc.reserve(p.size());
	for (const auto &t : p.terms())
	{
		auto part = reduce_word(t.word, steps);
		for (const auto &u : part.terms())
			acc.push_back({u.word, u.coeff * t.coeff});
	}
	max_steps_ = std::max(max_steps_, steps);
	return NcPolynomial::from_terms(std::move(acc));
}

bool RewriteSystem::add_relation(const NcPolynomial &rel)
{
	bool changed = false;
	std::vector<NcPolynomial> queue{rel};
	while (!queue.empty())
	{
		NcPolynomial p = normal_form(queue.back());
		queue.pop_back();
		if (p.is_zero())
			continue;
		if (p.is_constant())
			throw InconsistencyError("derived 1 = 0");
		p = p.monic();
		SymbolWord lhs = p.leading().word;
		for (auto s : p.symbols())
			ensure_symbol(s);
		NcPolynomial rhs = NcPolynomial(lhs) - p;
		if (!rhs.is_zero() && !word_less(rhs.leading().word, lhs))
			throw std::logic_error("rule not decreasing: " + std::to_string(p.size()) + " terms, lead coeff " + to_string(p.leading().coeff) + " rhs lead coeff " + to_string(rhs.leading().coeff));
		for (auto it = rules_.begin(); it != rules_.end();)
		{
			if (it->first.find(lhs) != SymbolWord::npos)
			{
				queue.push_back(NcPolynomial(it->first) - it->second);
				if (it->first.size() == 1 && it->second.is_zero())
					zero_[static_cast<std::size_t>(it->first[0])] = false;
				it = rules_.erase(it);
			}
			else
				++it;
		}
		if (lhs.size() == 1 && rhs.is_zero())
		{
			zero_[static_cast<std::size_t>(lhs[0])] = true;
			facts_[static_cast<std::size_t>(lhs[0])] |= static_cast<std::uint8_t>(Fact::zero);
		}
		SymbolWord key = lhs;
		rules_.emplace(std::move(lhs), std::move(rhs));
		cache_.clear();
		index_dirty_ = true;
		changed = true;
		// Right-hand sides stay in normal form.
		for (auto &[l, r] : rules_)
		{
			bool hit = std::any_of(r.terms().begin(), r.terms().end(),
			                       [&](const NcTerm &t) { return t.word.find(key) != SymbolWord::npos; });
			if (!hit || l == key)
				continue;
			r = normal_form(r);
			cache_.clear();
			if (l.size() == 1 && r.is_zero())
			{
				zero_[static_cast<std::size_t>(l[0])] = true;
				facts_[static_cast<std::size_t>(l[0])] |= static_cast<std::uint8_t>(Fact::zero);
			}
		}
		index_dirty_ = true;
	}
	return changed;
}

std::vector<NcPolynomial> RewriteSystem::relations() const
{
	std::vector<NcPolynomial> out;
	out.reserve(rules_.size());
	for (const auto &[lhs, rhs] : rules_)
		out.push_back(NcPolynomial(lhs) - rhs);
	return out;
}

std::vector<Symbol> RewriteSystem::zero_symbols() const
{
	std::vector<Symbol> out;
	for (std::size_t s = 0; s < symbol_count_; ++s)
		if (normal_form(SymbolWord(1, static_cast<Symbol>(s))).is_zero())
			out.push_back(static_cast<Symbol>(s));
	return out;
}

void RewriteSystem::ensure_symbol(Symbol s)
{
	auto need = static_cast<std::size_t>(s) + 1;
	if (need > symbol_count_)
	{
		symbol_count_ = need;
		zero_.resize(need, false);
		facts_.resize(need, 0);
		index_dirty_ = true;
	}
}

void RewriteSystem::mark(Symbol s, Fact f)
{
	ensure_symbol(s);
	facts_[static_cast<std::size_t>(s)] |= static_cast<std::uint8_t>(f);
}

bool RewriteSystem::has(Symbol s, Fact f) const
{
	if (f == Fact::zero)
		return normal_form(SymbolWord(1, s)).is_zero();
	if (static_cast<std::size_t>(s) >= facts_.size())
		return false;
	return (facts_[static_cast<std::size_t>(s)] & static_cast<std::uint8_t>(f)) != 0;
}

NcPolynomial normal_form(const NcPolynomial &p, const RewriteSystem &system)
{
	return system.normal_form(p);
}

} // namespace qiso
