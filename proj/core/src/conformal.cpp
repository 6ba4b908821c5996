#include "confemb/conformal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace confemb {

namespace {

struct Fraction {
  Polynomial num;
  Polynomial den;
};

// Numerator of sum_i num_i / den_i over the common denominator prod_i den_i.
Polynomial numerator_of_sum(const std::vector<Fraction>& terms) {
  Polynomial acc;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Polynomial t = terms[i].num;
    for (std::size_t j = 0; j < terms.size(); ++j)
      if (j != i) t = t * terms[j].den;
    acc = acc + t;
  }
  return acc;
}

Fraction central_charge_term(const Ideal& I) {
  const Rational nd = I.index * I.dimension();
  return {Polynomial::linear(nd, 0), Polynomial::linear(I.index, I.dual_coxeter())};
}

Rational critical_of(const Ideal& I) { return Rational(-I.dual_coxeter()) / I.index; }

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Rational> roots_avoiding(const Polynomial& p, const std::vector<Rational>& excluded) {
  if (p.is_zero()) throw std::logic_error("central-charge equation holds identically");
  if (p.degree() < 1) return {};
  std::vector<Rational> out;
  for (const auto& r : split_rational_roots(p).roots)
    if (!std::binary_search(excluded.begin(), excluded.end(), r)) out.push_back(r);
  return out;
}

std::vector<Rational> intersect(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Rational ApTerms::total() const {
  Rational acc = center_term;
  for (const auto& t : ideal_terms) acc += t;
  return acc;
}

ApTerms ap_terms(const ReductiveSubalgebra& k, const Branching& b, std::size_t component, const Rational& level) {
  if (component >= b.components.size()) throw std::out_of_range("component index out of range");
  const BranchingComponent& c = b.components[component];
  if (c.ideal_weights.size() != k.ideals.size()) throw std::invalid_argument("component/ideal count mismatch");
  ApTerms out;
  for (std::size_t j = 0; j < k.ideals.size(); ++j) {
    const Ideal& I = k.ideals[j];
    const Rational cas = casimir_eigenvalue(*I.system, c.ideal_weights[j]);
    const Rational den = 2 * (I.index * level + I.dual_coxeter());
    if (sgn(den) == 0) {
      if (sgn(cas) == 0) {
        out.ideal_terms.emplace_back(0);
        continue;
      }
      throw CriticalLevelError("critical denominator for ideal " + I.label() + " at k = " + to_string(level),
                               I.label());
    }
    out.ideal_terms.push_back(cas / den);
  }
  const Rational cn = center_norm(k, c.center_weight);
  if (sgn(cn) != 0) {
    if (sgn(level) == 0) throw std::domain_error("center term undefined at k = 0");
    out.center_term = cn / (2 * level);
  }
  return out;
}

Rational ap_value(const ReductiveSubalgebra& k, const Branching& b, std::size_t component, const Rational& level) {
  return ap_terms(k, b, component, level).total();
}

ApCheck ap_check(const ReductiveSubalgebra& k, const Branching& b, const Rational& level) {
  ApCheck out;
  out.conformal = !b.components.empty();
  for (std::size_t i = 0; i < b.components.size(); ++i) {
    const Rational r = ap_value(k, b, i, level) - 1;
    if (sgn(r) != 0) out.conformal = false;
    out.residuals.push_back(r);
  }
  return out;
}

std::vector<Rational> excluded_levels(const ReductiveSubalgebra& k) {
  std::vector<Rational> out;
  for (const auto& I : k.ideals) out.push_back(critical_of(I));
  out.emplace_back(-dual_coxeter(*k.ambient));
  if (k.center_dim > 0) out.emplace_back(0);
  sort_unique(out);
  return out;
}

Polynomial ap_polynomial(const ReductiveSubalgebra& k, const Branching& b, std::size_t component) {
  if (component >= b.components.size()) throw std::out_of_range("component index out of range");
  const BranchingComponent& c = b.components[component];
  std::vector<Fraction> terms;
  for (std::size_t j = 0; j < k.ideals.size(); ++j) {
    const Ideal& I = k.ideals[j];
    const Rational cas = casimir_eigenvalue(*I.system, c.ideal_weights[j]);
    if (sgn(cas) == 0) continue;
    terms.push_back({Polynomial::constant(cas), Polynomial::linear(2 * I.index, 2 * I.dual_coxeter())});
  }
  const Rational cn = center_norm(k, c.center_weight);
  if (sgn(cn) != 0) terms.push_back({Polynomial::constant(cn), Polynomial::linear(2, 0)});
  terms.push_back({Polynomial::constant(-1), Polynomial::constant(1)});
  return numerator_of_sum(terms);
}

std::vector<Rational> ConformalVerdict::non_integrable_levels() const {
  std::vector<Rational> out;
  for (const auto& l : levels)
    if (!is_positive_integer(l)) out.push_back(l);
  return out;
}

ConformalVerdict conformal_levels(const ReductiveSubalgebra& k, const Branching& b) {
  if (b.components.empty()) throw std::domain_error("trivial embedding");
  ConformalVerdict v;
  v.embedding = k.name.empty() ? k.display_name() + " < " + k.ambient->type().name() : k.name;
  v.excluded_levels = excluded_levels(k);
  Polynomial g;
  for (std::size_t i = 0; i < b.components.size(); ++i) {
    v.component_polynomials.push_back(ap_polynomial(k, b, i));
    g = gcd(g, v.component_polynomials.back());
  }
  v.common_factor = g;
  if (g.degree() >= 1) {
    const RationalRootSplit split = split_rational_roots(g);
    for (const auto& r : split.roots) {
      if (std::binary_search(v.excluded_levels.begin(), v.excluded_levels.end(), r)) v.suppressed_levels.push_back(r);
      else v.levels.push_back(r);
    }
    v.irrational_factor = split.residual;
  } else {
    v.irrational_factor = Polynomial::constant(1);
  }
  return v;
}

Rational central_charge(const ReductiveSubalgebra& k, const Rational& level) {
  Rational c = 0;
  for (const auto& I : k.ideals) c += confemb::central_charge(*I.system, I.index * level);
  if (k.center_dim > 0) c += central_charge_abelian(k.center_dim, level);
  return c;
}

bool central_charge_match(const ReductiveSubalgebra& k, const Rational& level) {
  return central_charge(k, level) == confemb::central_charge(*k.ambient, level);
}

std::vector<Rational> central_charge_levels(const ReductiveSubalgebra& k) {
  std::vector<Fraction> terms;
  std::vector<Rational> excluded{Rational(0)};
  for (const auto& I : k.ideals) {
    terms.push_back(central_charge_term(I));
    excluded.push_back(critical_of(I));
  }
  if (k.center_dim > 0) terms.push_back({Polynomial::constant(k.center_dim), Polynomial::constant(1)});
  const auto whole = ReductiveSubalgebra::whole(k.ambient);
  Fraction top = central_charge_term(whole.ideals.front());
  terms.push_back({Rational(-1) * top.num, top.den});
  excluded.push_back(critical_of(whole.ideals.front()));
  sort_unique(excluded);
  return roots_avoiding(numerator_of_sum(terms), excluded);
}

std::string Chain::to_string() const {
  std::string out;
  for (auto it = links.rbegin(); it != links.rend(); ++it) {
    if (!out.empty()) out += " < ";
    out += it->subalgebra.type_key();
  }
  return out;
}

Chain trivial_chain(std::shared_ptr<const RootSystem> g) {
  Chain c;
  c.links.push_back(ChainLink{ReductiveSubalgebra::whole(std::move(g)), 0, {0}, 0});
  return c;
}

Chain extend_chain(const Chain& chain, const IdealChild& child) {
  Chain out = chain;
  out.links.push_back(ChainLink{child.subalgebra, child.replaced_ideal, child.new_ideals, child.new_center_dims});
  return out;
}

namespace {

struct TermToken {
  SimpleLieType type;
  std::optional<Rational> index;
};

struct TermSpec {
  std::vector<TermToken> ideals;
  int center_dim = 0;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return out;
}

TermSpec parse_term(const std::string& text) {
  TermSpec t;
  for (const std::string& tok : split(text, "+")) {
    if (tok.empty()) throw std::invalid_argument("empty token in '" + text + "'");
    std::string lower;
    for (char c : tok) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "u1" || lower == "z" || lower == "gl1" || lower == "so2") {
      ++t.center_dim;
      continue;
    }
    TermToken tt;
    std::string body = tok;
    if (const auto open = tok.find('['); open != std::string::npos) {
      if (tok.back() != ']') throw std::invalid_argument("bad index in '" + tok + "'");
      tt.index = parse_rational(tok.substr(open + 1, tok.size() - open - 2));
      body = tok.substr(0, open);
    }
    tt.type = SimpleLieType::parse(body);
    t.ideals.push_back(tt);
  }
  return t;
}

bool term_matches(const TermSpec& spec, const ReductiveSubalgebra& k) {
  if (spec.center_dim != k.center_dim || spec.ideals.size() != k.ideals.size()) return false;
  std::vector<bool> used(k.ideals.size(), false);
  // Indexed tokens claim their ideal first.
  std::vector<const TermToken*> order;
  for (const auto& t : spec.ideals)
    if (t.index) order.push_back(&t);
  for (const auto& t : spec.ideals)
    if (!t.index) order.push_back(&t);
  for (const TermToken* t : order) {
    bool found = false;
    for (std::size_t i = 0; i < k.ideals.size() && !found; ++i) {
      if (used[i] || k.ideals[i].type != t->type) continue;
      if (t->index && *t->index != k.ideals[i].index) continue;
      used[i] = true;
      found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

Chain parse_chain(const std::string& spec) {
  const auto terms = split(spec, "<");
  if (terms.size() < 2) throw std::invalid_argument("chain needs at least two terms: '" + spec + "'");
  const TermSpec top = parse_term(terms.back());
  if (top.ideals.size() != 1 || top.center_dim != 0 || top.ideals.front().index)
    throw std::invalid_argument("the last chain term must be a simple algebra: '" + terms.back() + "'");
  Chain chain = trivial_chain(shared_root_system(top.ideals.front().type));
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    const TermSpec want = parse_term(*it);
    const ReductiveSubalgebra& cur = chain.bottom();
    std::vector<IdealChild> matches;
    std::set<std::string> keys;
    for (std::size_t j = 0; j < cur.ideals.size(); ++j)
      for (auto& child : maximal_subalgebras_of_ideal(cur, j))
        if (term_matches(want, child.subalgebra)) {
          keys.insert(child.subalgebra.type_key());
          matches.push_back(std::move(child));
        }
    if (matches.empty())
      throw std::invalid_argument("'" + *it + "' is not a maximal equal-rank subalgebra of an ideal of " +
                                  cur.type_key());
    if (keys.size() > 1) {
      std::string msg = "ambiguous chain term '" + *it + "'; candidates:";
      for (const auto& key : keys) msg += " " + key;
      throw std::invalid_argument(msg);
    }
    chain = extend_chain(chain, matches.front());
  }
  return chain;
}

Chain resolve_subalgebra(const std::string& spec, int max_depth) {
  const auto slash = spec.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("embedding spec needs 'ambient/subalgebra': '" + spec + "'");
  const SimpleLieType g = SimpleLieType::parse(trim(spec.substr(0, slash)));
  const TermSpec want = parse_term(trim(spec.substr(slash + 1)));

  std::vector<Chain> frontier{trivial_chain(shared_root_system(g))};
  std::set<std::string> visited{frontier.front().bottom().type_key()};
  std::map<std::string, Chain> matches;
  for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
    std::vector<Chain> next;
    for (const Chain& c : frontier) {
      const ReductiveSubalgebra& cur = c.bottom();
      for (std::size_t j = 0; j < cur.ideals.size(); ++j)
        for (const auto& child : maximal_subalgebras_of_ideal(cur, j)) {
          const std::string key = child.subalgebra.type_key();
          if (!visited.insert(key).second) continue;
          Chain ext = extend_chain(c, child);
          if (term_matches(want, child.subalgebra)) matches.emplace(key, ext);
          next.push_back(std::move(ext));
        }
    }
    // Shallowest matches win.
    if (!matches.empty()) break;
    frontier = std::move(next);
  }
  if (matches.empty()) throw std::invalid_argument("no equal-rank subalgebra matches '" + spec + "'");
  if (matches.size() > 1) {
    std::string msg = "ambiguous embedding '" + spec + "'; candidates:";
    for (const auto& [key, chain] : matches) msg += " " + key;
    throw std::invalid_argument(msg);
  }
  return matches.begin()->second;
}

ChainCheck chain_conformal_check(const Chain& chain, const Rational& level) {
  if (chain.depth() < 1) throw std::invalid_argument("chain has no steps");
  ChainCheck out;
  out.conformal = true;
  for (std::size_t s = 1; s < chain.links.size(); ++s) {
    const ChainLink& parent = chain.links[s - 1];
    const ChainLink& link = chain.links[s];
    const Ideal& replaced = parent.subalgebra.ideals.at(link.replaced_ideal);
    ChainStepReport rep;
    rep.step = s;
    rep.replaced = replaced.label();
    try {
      rep.replaced_charge = confemb::central_charge(*replaced.system, replaced.index * level);
      for (std::size_t idx : link.new_ideals) {
        const Ideal& I = link.subalgebra.ideals.at(idx);
        rep.replacing_charge += confemb::central_charge(*I.system, I.index * level);
        rep.replacing += (rep.replacing.empty() ? "" : "+") + I.label();
      }
    } catch (const CriticalLevelError& e) {
      throw CriticalLevelError("step " + std::to_string(s) + ": " + e.what(), e.algebra());
    }
    if (link.new_center_dims > 0) {
      if (sgn(level) == 0) throw std::domain_error("step " + std::to_string(s) + ": center at k = 0");
      rep.replacing_charge += link.new_center_dims;
      for (int i = 0; i < link.new_center_dims; ++i) rep.replacing += (rep.replacing.empty() ? "" : "+") + std::string("u1");
    }
    rep.equal = rep.replaced_charge == rep.replacing_charge;
    out.conformal = out.conformal && rep.equal;
    out.steps.push_back(std::move(rep));
  }
  return out;
}

std::vector<Rational> chain_step_levels(const Chain& chain, std::size_t step) {
  if (step < 1 || step > chain.depth()) throw std::out_of_range("chain step out of range");
  const ChainLink& parent = chain.links[step - 1];
  const ChainLink& link = chain.links[step];
  const Ideal& replaced = parent.subalgebra.ideals.at(link.replaced_ideal);
  std::vector<Fraction> terms;
  std::vector<Rational> excluded{Rational(0), critical_of(replaced)};
  for (std::size_t idx : link.new_ideals) {
    const Ideal& I = link.subalgebra.ideals.at(idx);
    terms.push_back(central_charge_term(I));
    excluded.push_back(critical_of(I));
  }
  if (link.new_center_dims > 0)
    terms.push_back({Polynomial::constant(link.new_center_dims), Polynomial::constant(1)});
  Fraction top = central_charge_term(replaced);
  terms.push_back({Rational(-1) * top.num, top.den});
  sort_unique(excluded);
  return roots_avoiding(numerator_of_sum(terms), excluded);
}

std::vector<Rational> chain_levels(const Chain& chain) {
  if (chain.depth() < 1) throw std::invalid_argument("chain has no steps");
  std::vector<Rational> acc = chain_step_levels(chain, 1);
  for (std::size_t s = 2; s <= chain.depth() && !acc.empty(); ++s) acc = intersect(acc, chain_step_levels(chain, s));
  return acc;
}

namespace {

void enumerate_from(const Chain& chain, const std::vector<Rational>& levels, int max_depth, bool include_integrable,
                    std::map<std::pair<std::string, Rational>, ChainLevel>& found) {
  if (chain.depth() >= 1) {
    for (const auto& l : levels) {
      if (!include_integrable && is_positive_integer(l)) continue;
      found.try_emplace({chain.to_string(), l}, ChainLevel{chain, l});
    }
  }
  if (static_cast<int>(chain.depth()) >= max_depth) return;
  const ReductiveSubalgebra& cur = chain.bottom();
  for (std::size_t j = 0; j < cur.ideals.size(); ++j) {
    for (const auto& child : maximal_subalgebras_of_ideal(cur, j)) {
      Chain next = extend_chain(chain, child);
      std::vector<Rational> step = chain_step_levels(next, next.depth());
      std::vector<Rational> acc = chain.depth() == 0 ? step : intersect(levels, step);
      // Every extension inherits this step's constraint, so an empty set prunes.
      if (acc.empty()) continue;
      enumerate_from(next, acc, max_depth, include_integrable, found);
    }
  }
}

}  // namespace

std::vector<ChainLevel> enumerate_conformal_chains(std::shared_ptr<const RootSystem> g, int max_depth,
                                                   bool include_integrable) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
  std::map<std::pair<std::string, Rational>, ChainLevel> found;
  enumerate_from(trivial_chain(std::move(g)), {}, max_depth, include_integrable, found);
  std::vector<ChainLevel> out;
  for (auto& [key, value] : found) out.push_back(std::move(value));
  std::stable_sort(out.begin(), out.end(), [](const ChainLevel& a, const ChainLevel& b) {
    if (a.chain.depth() != b.chain.depth()) return a.chain.depth() < b.chain.depth();
    if (a.level != b.level) return a.level < b.level;
    return a.chain.to_string() < b.chain.to_string();
  });
  return out;
}

}  // namespace confemb
