// Acceptance checks: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "confemb/catalog.hpp"
#include "confemb/conformal.hpp"

using namespace confemb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    failures.push_back(what);
  }
};

using Levels = std::vector<Rational>;

bool contains(const Levels& v, const Rational& q) { return std::find(v.begin(), v.end(), q) != v.end(); }

std::string str(const Levels& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "}";
}

Levels sorted(Levels v) {
  std::sort(v.begin(), v.end());
  return v;
}

ConformalVerdict verdict_of(const ReductiveSubalgebra& k) { return conformal_levels(k, orthocomplement_branching(k)); }

std::vector<SimpleLieType> all_types_up_to_rank(int r) {
  std::vector<SimpleLieType> out;
  for (int n = 1; n <= r; ++n) out.push_back(SimpleLieType::make(Family::A, n));
  for (int n = 2; n <= r; ++n) out.push_back(SimpleLieType::make(Family::B, n));
  for (int n = 3; n <= r; ++n) out.push_back(SimpleLieType::make(Family::C, n));
  for (int n = 4; n <= r; ++n) out.push_back(SimpleLieType::make(Family::D, n));
  for (int n = 6; n <= 8; ++n) out.push_back(SimpleLieType::make(Family::E, n));
  out.push_back(SimpleLieType::make(Family::F, 4));
  out.push_back(SimpleLieType::make(Family::G, 2));
  return out;
}

// Tolerance: every comparison below is exact rational equality.

Outcome criterion1() {
  Outcome o;
  int cases = 0, exceptions = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto g = shared_root_system(SimpleLieType::make(Family::A, n));
    for (int h = 1; h <= n; ++h) {
      const int p = h, q = n + 1 - h;
      const ConformalVerdict v = verdict_of(equal_rank_subalgebra(g, {0, h}));
      const Rational half = ratio(-(n + 1), 2);
      // -1 needs both sl factors; -(n+1)/2 is critical for both when p = q.
      Levels expected;
      if (p > 1 && q > 1) expected.push_back(-1);
      if (p != q) expected.push_back(half);
      if (p == 1 || q == 1 || p == q) ++exceptions;
      const std::string tag = "A" + std::to_string(n) + " h=" + std::to_string(h);
      o.expect(v.non_integrable_levels() == sorted(expected), tag + " levels " + str(v.non_integrable_levels()));
      if (p == q) o.expect(contains(v.suppressed_levels, half), tag + " missing suppressed " + to_string(half));
      ++cases;
    }
  }
  o.detail = std::to_string(cases) + " subalgebras, {-1, -(n+1)/2} with " + std::to_string(exceptions) +
             " low-rank exceptions (p or q = 1: -1 absent; p = q: -(n+1)/2 critical, suppressed)";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const DeclaredEmbedding d = d4_example();
  const Rational k(-2);
  for (std::size_t i = 0; i < d.branching.components.size(); ++i) {
    const Rational v = ap_value(d.subalgebra, d.branching, i, k);
    o.expect(v == 1, "component " + std::to_string(i) + " gives " + to_string(v));
  }
  // V(omega_2) x V(2 eta_1) x V(2 eta).
  const BranchingComponent target{{Weight::from_ints({0, 1})}, {2, 2}, 1};
  const auto it = std::find(d.branching.components.begin(), d.branching.components.end(), target);
  o.expect(it != d.branching.components.end(), "component (omega_2; 2, 2) missing");
  if (it != d.branching.components.end()) {
    const ApTerms t =
        ap_terms(d.subalgebra, d.branching, static_cast<std::size_t>(it - d.branching.components.begin()), k);
    o.expect(t.ideal_terms.size() == 1 && t.ideal_terms[0] == ratio(4, 3), "sl3 term is not 4/3");
    o.expect(t.center_term == ratio(-1, 3), "center term is not -1/3");
    o.detail = to_string(t.ideal_terms[0]) + " + (" + to_string(t.center_term) + ") = 1; all " +
               std::to_string(d.branching.components.size()) + " components equal 1 at k = -2";
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::set<std::string> expected = {
      "A1+A1+A3+u1 < A1+A5 < E6 @ -3", "A1+A1+A3+u1 < D5+u1 < E6 @ -3", "A1+A4+u1 < A1+A5 < E6 @ -3",
      "D4+u1+u1 < D5+u1 < E6 @ -3",    "A1+A1+A1+D4 < A1+D6 < E7 @ -4", "A1+D5+u1 < A1+D6 < E7 @ -4",
      "A1+A1+B2 < A1+C3 < F4 @ -5/2",
  };
  std::set<std::string> found;
  for (const char* t : {"E6", "E7", "F4"})
    for (const auto& cl : enumerate_conformal_chains(shared_root_system(SimpleLieType::parse(t)), 2))
      if (cl.chain.depth() == 2) found.insert(cl.chain.to_string() + " @ " + to_string(cl.level));
  std::vector<std::string> missing, extra;
  std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(), std::back_inserter(missing));
  std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(), std::back_inserter(extra));
  for (const auto& m : missing) o.expect(false, "missing " + m);
  for (const auto& e : extra) o.expect(false, "extra " + e);
  o.detail = "3a all seven present: " + std::string(missing.empty() ? "PASS" : "FAIL") +
             "; 3b no others: " + (extra.empty() ? "PASS" : "FAIL (" + std::to_string(extra.size()) + " extra)");
  return o;
}

// Solves s(s-1)/2 + (n-s)(n-s-1)/2 = dim k for the so(s) x so(n-s) split.
int orthogonal_split(int n, int dim_k) {
  for (int s = 1; s <= n / 2; ++s)
    if (s * (s - 1) / 2 + (n - s) * (n - s - 1) / 2 == dim_k) return s;
  return -1;
}

Outcome criterion4() {
  Outcome o;
  int checked = 0;
  auto check = [&](const std::string& tag, const ConformalVerdict& v, const Levels& expected,
                   const std::optional<Rational>& suppressed) {
    ++checked;
    o.expect(v.non_integrable_levels() == sorted(expected), tag + " gives " + str(v.non_integrable_levels()));
    if (suppressed) o.expect(contains(v.suppressed_levels, *suppressed), tag + " missing suppressed " + to_string(*suppressed));
  };
  // so(s) x so(n-s) in so(n), 7 <= n <= 12, and gl(m) in so(2m), 4 <= m <= 6.
  for (int n = 7; n <= 12; ++n) {
    const int m = n / 2;
    const SimpleLieType t = SimpleLieType::make(n % 2 ? Family::B : Family::D, m);
    for (const auto& ms : borel_de_siebenthal(t)) {
      const auto& k = ms.subalgebra;
      const std::string tag = t.name() + " > " + k.type_key();
      const bool gl = n % 2 == 0 && k.center_dim == 1 && k.ideals.size() == 1 &&
                      k.ideals[0].type == SimpleLieType::make(Family::A, m - 1);
      const ConformalVerdict v = verdict_of(k);
      if (gl) {
        check(tag, v, {-2}, std::nullopt);
        continue;
      }
      const int s = orthogonal_split(n, k.dimension());
      o.expect(s > 0, tag + " is not so(s) x so(n-s)");
      const Rational level = Rational(2) - ratio(n, 2);
      if (2 * s == n) check(tag, v, {}, level);
      else check(tag, v, {level}, std::nullopt);
    }
  }
  // sp(2h) x sp(2n-2h) and gl(n) in sp(2n), 2 <= n <= 6 (sp(4) is handled as so(5)).
  for (int n = 2; n <= 6; ++n) {
    const SimpleLieType t = SimpleLieType::parse("sp" + std::to_string(2 * n));
    for (const auto& ms : borel_de_siebenthal(t)) {
      const auto& k = ms.subalgebra;
      const std::string tag = "sp" + std::to_string(2 * n) + " > " + k.type_key();
      const ConformalVerdict v = verdict_of(k);
      const Rational big = Rational(-1) - ratio(n, 2);
      if (k.center_dim == 1) {
        check(tag, v, {ratio(-1, 2)}, std::nullopt);
        continue;
      }
      o.expect(k.ideals.size() == 2, tag + " is not sp x sp");
      if (k.ideals.size() != 2) continue;
      const int h = k.ideals[0].type.rank;
      if (2 * h == n) check(tag, v, {ratio(-1, 2)}, big);
      else check(tag, v, {big, ratio(-1, 2)}, std::nullopt);
    }
  }
  o.detail = std::to_string(checked) + " subalgebras: 2-n/2, -2, -1/2, -1-n/2 (critical cases suppressed)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::map<std::string, CriticalCase> cases;
  for (auto& c : critical_scan(builtin_critical_catalog())) cases.emplace(c.id, c);
  auto get = [&](const std::string& id) -> const CriticalCase* {
    const auto it = cases.find(id);
    o.expect(it != cases.end(), "no case " + id);
    return it == cases.end() ? nullptr : &it->second;
  };
  auto level_is = [&](const std::string& id, const Rational& want) {
    if (const auto* c = get(id)) o.expect(c->level == want, id + " level");
  };
  auto verdict_is = [&](const std::string& id, KernelVerdict want) {
    if (const auto* c = get(id)) o.expect(c->verdict == want, id + " verdict " + to_string(c->verdict));
  };
  auto s = [](int n) { return std::to_string(n); };
  for (int n = 2; n <= 4; ++n) {
    const std::string id = "sp-sp-so:n=" + s(n);
    level_is(id, Rational(-1) - ratio(1, n));
    verdict_is(id, KernelVerdict::trivial);
    if (const auto* c = get(id)) o.expect(c->printed_lambda && *c->printed_lambda == c->lambda, id + " lambda");
  }
  for (int n = 3; n <= 6; ++n) {
    const std::string id = "so-so-so:n=" + s(n);
    level_is(id, Rational(-1) + ratio(2, n));
    verdict_is(id, KernelVerdict::trivial);
    // The derived L(theta) entry is the Casimir value 2(n-2); so(3) and so(4)
    // are sl2 factors with their own normalization.
    if (const auto* c = get(id); c && n >= 5) {
      bool has = false;
      for (std::size_t i = 0; i < c->lambda.rows(); ++i)
        for (std::size_t j = 0; j < c->lambda.cols(); ++j) has = has || c->lambda(i, j) == 2 * (n - 2);
      o.expect(has, id + " lacks the Casimir value 2(n-2)");
    }
  }
  for (int n = 1; n <= 4; ++n) {
    const std::string id = "sp-so-sp:n=" + s(n);
    level_is(id, ratio(-1, 2));
    verdict_is(id, KernelVerdict::nontrivial);
    const auto* c = get(id);
    if (!c) continue;
    if (n >= 2) {
      o.expect(c->printed_lambda && *c->printed_lambda == c->lambda, id + " lambda");
      o.expect(c->kernel == std::vector<RationalVector>{{1, ratio(-1, 2)}}, id + " kernel");
    } else {
      // n = 1: so(4) splits into two sl2 columns.
      o.expect(c->lambda.cols() == 3 && c->kernel.size() == 2, id + " kernel");
    }
  }
  for (int n = 3; n <= 6; ++n) {
    level_is("so-so-so2n:n=" + s(n), Rational(2 - n));
    verdict_is("so-so-so2n:n=" + s(n), KernelVerdict::nontrivial);
  }
  for (int n = 1; n <= 4; ++n) {
    level_is("sp-sp-sp4n:n=" + s(n), Rational(-1 - n));
    verdict_is("sp-sp-sp4n:n=" + s(n), KernelVerdict::nontrivial);
  }
  level_is("sl5-sl5-e8", -5);
  verdict_is("sl5-sl5-e8", KernelVerdict::trivial);
  if (const auto* c = get("sl5-sl5-e8")) {
    bool has = false;
    for (std::size_t i = 0; i < c->lambda.rows(); ++i)
      for (std::size_t j = 0; j < c->lambda.cols(); ++j) has = has || c->lambda(i, j) == ratio(24, 5);
    o.expect(has, "sl5-sl5-e8 lacks the Casimir value 24/5");
  }
  level_is("sl3-cubed-e6", -3);
  verdict_is("sl3-cubed-e6", KernelVerdict::nontrivial);
  if (const auto* c = get("sl2-fourth-so8")) {
    o.expect(c->kernel.size() == 3, "sl2^4 kernel dimension");
    for (const auto& z : c->kernel) {
      Rational sum = 0;
      for (const auto& x : z) sum += x;
      o.expect(sum == 0, "sl2^4 kernel vector with nonzero sum");
    }
  }
  if (const auto* c = get("sl2-cubed-sp8")) o.expect(c->kernel.size() == 2, "sl2^3 kernel dimension");
  int differs = 0;
  for (const auto& [id, c] : cases) differs += c.printed_differs ? 1 : 0;
  o.detail = std::to_string(cases.size()) + " cases; " + std::to_string(differs) +
             " printed matrices differ from the Casimir values, verdicts unchanged";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto pairs = builtin_symmetric_catalog();
  std::set<std::string> families;
  int mutated = 0;
  for (const auto& p : pairs) {
    families.insert(p.family);
    const Rational r = sst_identity_check(p);
    o.expect(r == 0, p.name + " residual " + to_string(r));
    for (const auto& [kind, m] : mutations(p)) {
      ++mutated;
      o.expect(sst_identity_check(m) != 0, p.name + " " + kind + " mutation gives 0");
    }
  }
  o.expect(pairs.size() >= 12, "fewer than 12 pairs");
  o.expect(families.size() >= 5, "fewer than 5 families");
  o.detail = std::to_string(pairs.size()) + " pairs in " + std::to_string(families.size()) + " families residual 0; " +
             std::to_string(mutated) + " mutations nonzero";
  return o;
}

Outcome criterion7() {
  Outcome o;
  int types = 0, subalgebras = 0, samples = 0;
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<int> num(-80, 80), den(1, 12);
  for (const auto& t : all_types_up_to_rank(8)) {
    ++types;
    const auto g = shared_root_system(t);
    o.expect(casimir_eigenvalue(*g, g->theta_weight()) == 2 * dual_coxeter(*g), t.name() + " Cas(theta)");
    for (const auto& m : borel_de_siebenthal(g)) {
      ++subalgebras;
      const auto& k = m.subalgebra;
      const Branching b = orthocomplement_branching(k);
      const BranchingReport r = validate_branching(k, b);
      o.expect(r.ok && r.actual_dimension == g->dimension() - k.dimension(), t.name() + " > " + k.type_key() + " bookkeeping");
      const Levels excluded = excluded_levels(k);
      // k = 0 is left out: both central charges vanish there identically.
      for (int i = 0; i < 20;) {
        const Rational level = ratio(num(rng), den(rng));
        if (level == 0 || contains(excluded, level)) continue;
        ++i;
        ++samples;
        o.expect(ap_check(k, b, level).conformal == central_charge_match(k, level),
                 t.name() + " > " + k.type_key() + " disagree at " + to_string(level));
      }
      // The conformal levels themselves, where both sides hold.
      for (const auto& level : conformal_levels(k, b).levels)
        o.expect(central_charge_match(k, level), t.name() + " > " + k.type_key() + " c differs at " + to_string(level));
    }
  }
  o.detail = std::to_string(types) + " types, " + std::to_string(subalgebras) + " maximal subalgebras, " +
             std::to_string(samples) + " random levels";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t weights = 0;
  for (int m = 5; m <= 16; ++m) {
    const LevelBoundReport r = level_bound_check(m);
    weights += r.weights_checked;
    o.expect(r.ok, "so" + std::to_string(m) + " bound fails");
    o.expect(r.max_level <= 1, "so" + std::to_string(m) + " max level " + to_string(r.max_level));
    for (const auto& k : r.positive_integer_levels) o.expect(k == 1, "so" + std::to_string(m) + " level " + to_string(k));
  }
  o.detail = std::to_string(weights) + " weights over so(5)..so(16), every solution k <= 1";
  return o;
}

struct Criterion {
  Outcome (*run)();
  double budget_seconds;
};

const Criterion kCriteria[] = {
    {criterion1, 1}, {criterion2, 1}, {criterion3, 30}, {criterion4, 5},
    {criterion5, 5}, {criterion6, 5}, {criterion7, 60}, {criterion8, 10},
};

bool run(int n) {
  const Criterion& c = kCriteria[n - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < c.budget_seconds;
  std::ostringstream line;
  line << ((o.pass && in_time) ? "PASS" : "FAIL") << " criterion " << n << ": " << o.detail << " [" << secs
       << " s, budget " << c.budget_seconds << " s]";
  std::cout << line.str() << '\n';
  for (const auto& f : o.failures) std::cout << "  " << f << '\n';
  if (!in_time) std::cout << "  over the time budget\n";
  return o.pass && in_time;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "Run one criterion (1-8); all when omitted")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);
  bool ok = true;
  if (criterion) ok = run(criterion);
  else
    for (int n = 1; n <= 8; ++n) ok = run(n) && ok;
  return ok ? 0 : 1;
}
