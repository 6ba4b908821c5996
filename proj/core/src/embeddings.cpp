#include "confemb/embeddings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace confemb {

namespace {

using IntMatrix = std::vector<std::vector<int>>;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Backtracking search for permutations p with pattern[a][b] == target[p[a]][p[b]].
void match_nodes(const IntMatrix& pattern, const IntMatrix& target, std::vector<int>& perm, std::vector<bool>& used,
                 std::vector<std::vector<int>>& out, bool first_only) {
  const std::size_t depth = perm.size();
  const std::size_t n = pattern.size();
  if (depth == n) {
    out.push_back(perm);
    return;
  }
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (target[cand][cand] != pattern[depth][depth]) continue;
    bool ok = true;
    for (std::size_t a = 0; a < depth && ok; ++a) {
      const auto pa = static_cast<std::size_t>(perm[a]);
      ok = pattern[a][depth] == target[pa][cand] && pattern[depth][a] == target[cand][pa];
    }
    if (!ok) continue;
    used[cand] = true;
    perm.push_back(static_cast<int>(cand));
    match_nodes(pattern, target, perm, used, out, first_only);
    perm.pop_back();
    used[cand] = false;
    if (first_only && !out.empty()) return;
  }
}

std::optional<std::vector<int>> find_isomorphism(const IntMatrix& pattern, const IntMatrix& target) {
  if (pattern.size() != target.size()) return std::nullopt;
  std::vector<int> perm;
  std::vector<bool> used(target.size(), false);
  std::vector<std::vector<int>> out;
  match_nodes(pattern, target, perm, used, out, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

// Type of a connected Cartan matrix, and the map type node -> matrix node.
std::pair<SimpleLieType, std::vector<int>> identify_type(const IntMatrix& cartan) {
  const int m = static_cast<int>(cartan.size());
  // A before B before C: C2 is reported as B2 and D3 never arises.
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    SimpleLieType t{f, m};
    try {
      t = SimpleLieType::make(f, m);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (f == Family::D && m == 3) continue;
    if (auto perm = find_isomorphism(shared_root_system(t)->cartan(), cartan)) return {t, *perm};
  }
  throw std::invalid_argument("roots do not form the simple system of a simple Lie algebra");
}

Rational ambient_form(const RootSystem& rs, const RationalVector& a, const RationalVector& b) {
  const RationalMatrix& g = rs.gram();
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc += a[i] * g(i, j) * b[j];
  }
  return acc;
}

RationalVector to_rational(const Root& r) {
  RationalVector v;
  v.reserve(r.size());
  for (int x : r) v.emplace_back(x);
  return v;
}

Root map_root(const Root& local, const std::vector<Root>& images, std::size_t ambient_rank) {
  Root out(ambient_rank, 0);
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (local[i] == 0) continue;
    for (std::size_t k = 0; k < ambient_rank; ++k) out[k] += local[i] * images[i][k];
  }
  return out;
}

RationalVector map_vector(const RationalVector& local, const std::vector<Root>& images, std::size_t ambient_rank) {
  RationalVector out(ambient_rank, Rational(0));
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (sgn(local[i]) == 0) continue;
    for (std::size_t k = 0; k < ambient_rank; ++k) out[k] += local[i] * images[i][k];
  }
  return out;
}

bool ideal_less(const Ideal& a, const Ideal& b) {
  if (a.type != b.type) return a.type < b.type;
  if (a.index != b.index) return a.index < b.index;
  return a.simple_roots < b.simple_roots;
}

}  // namespace

RationalVector primitive_vector(const RationalVector& v) {
  mpz_class den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  mpz_class content = 0;
  std::vector<mpz_class> ints;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (den / x.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  if (content == 0) throw std::invalid_argument("primitive_vector of the zero vector");
  for (const auto& n : ints) {
    if (n != 0) {
      if (n < 0) content = -content;
      break;
    }
  }
  RationalVector out;
  for (auto& n : ints) out.emplace_back(mpz_class(n / content));
  return out;
}

std::string Ideal::label() const {
  std::string s = type.name();
  if (index != 1) s += "[" + to_string(index) + "]";
  return s;
}

Ideal make_declared_ideal(SimpleLieType type, const Rational& index) {
  if (sgn(index) <= 0) throw std::invalid_argument("Dynkin index must be positive");
  Ideal out;
  out.type = type.canonical();
  out.index = index;
  out.system = shared_root_system(out.type);
  return out;
}

bool ReductiveSubalgebra::regular() const {
  for (const auto& I : ideals)
    if (static_cast<int>(I.simple_roots.size()) != I.type.rank) return false;
  return static_cast<int>(center_basis.size()) == center_dim;
}

int ReductiveSubalgebra::rank() const {
  int r = center_dim;
  for (const auto& I : ideals) r += I.type.rank;
  return r;
}

int ReductiveSubalgebra::dimension() const {
  int d = center_dim;
  for (const auto& I : ideals) d += I.dimension();
  return d;
}

bool ReductiveSubalgebra::is_whole() const { return dimension() == ambient->dimension(); }

std::string ReductiveSubalgebra::type_key() const {
  std::vector<std::string> parts;
  for (const auto& I : ideals) parts.push_back(I.label());
  for (int i = 0; i < center_dim; ++i) parts.emplace_back("u1");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "+" : "") + parts[i];
  return out.empty() ? "0" : out;
}

std::string ReductiveSubalgebra::display_name() const {
  std::vector<std::string> parts;
  for (const auto& I : ideals) parts.push_back(I.type.name());
  for (int i = 0; i < center_dim; ++i) parts.emplace_back("Z");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "x" : "") + parts[i];
  return out.empty() ? "0" : out;
}

std::vector<Root> ReductiveSubalgebra::roots() const {
  if (!regular()) throw std::invalid_argument("roots() requires a regular subalgebra");
  const auto n = static_cast<std::size_t>(ambient->rank());
  std::vector<Root> out;
  for (const auto& I : ideals)
    for (const Root& r : I.system->roots()) out.push_back(map_root(r, I.simple_roots, n));
  std::sort(out.begin(), out.end());
  return out;
}

ReductiveSubalgebra ReductiveSubalgebra::whole(std::shared_ptr<const RootSystem> g) {
  ReductiveSubalgebra k;
  Ideal I;
  I.type = g->type();
  I.simple_roots = g->simple_roots();
  I.index = 1;
  I.system = g;
  k.ideals.push_back(std::move(I));
  k.ambient = std::move(g);
  return k;
}

ReductiveSubalgebra regular_subalgebra(std::shared_ptr<const RootSystem> g, const std::vector<Root>& simple_roots,
                                       const std::vector<RationalVector>& center_seed, bool fill_center) {
  const RootSystem& rs = *g;
  const auto n = static_cast<std::size_t>(rs.rank());
  const std::size_t m = simple_roots.size();
  for (const Root& r : simple_roots)
    if (r.size() != n || !rs.is_root(r)) throw std::invalid_argument("regular_subalgebra: not an ambient root");

  IntMatrix cartan(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Rational v = 2 * rs.root_form(simple_roots[i], simple_roots[j]) / rs.norm(simple_roots[i]);
      if (!is_integer(v) || (i != j && sgn(v) > 0))
        throw std::invalid_argument("regular_subalgebra: roots do not form a simple system");
      cartan[i][j] = static_cast<int>(v.get_num().get_si());
    }

  if (m > 0) {
    RationalMatrix span(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < n; ++k) span(i, k) = simple_roots[i][k];
    if (rank(span) != m) throw std::invalid_argument("regular_subalgebra: roots are linearly dependent");
  }

  ReductiveSubalgebra out;
  out.ambient = g;

  // Connected components of the Dynkin graph.
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < m; ++w)
        if (comp[w] < 0 && cartan[v][w] != 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < m; ++i)
      if (comp[i] == c) nodes.push_back(i);
    IntMatrix sub(nodes.size(), std::vector<int>(nodes.size()));
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = 0; b < nodes.size(); ++b) sub[a][b] = cartan[nodes[a]][nodes[b]];
    auto [type, perm] = identify_type(sub);
    Ideal I;
    I.type = type;
    I.system = shared_root_system(type);
    Rational longest = 0;
    for (int p : perm) {
      const Root& r = simple_roots[nodes[static_cast<std::size_t>(p)]];
      I.simple_roots.push_back(r);
      longest = std::max(longest, rs.norm(r));
    }
    I.index = 2 / longest;
    out.ideals.push_back(std::move(I));
  }
  std::sort(out.ideals.begin(), out.ideals.end(), ideal_less);

  std::vector<RationalVector> taken;
  for (const Root& r : simple_roots) taken.push_back(to_rational(r));
  for (const auto& z : center_seed) {
    if (z.size() != n) throw std::invalid_argument("regular_subalgebra: center vector has wrong length");
    for (const auto& t : taken)
      if (sgn(ambient_form(rs, z, t)) != 0)
        throw std::invalid_argument("regular_subalgebra: center vector is not orthogonal");
    out.center_basis.push_back(primitive_vector(z));
    taken.push_back(z);
  }
  if (fill_center && !taken.empty()) {
    RationalMatrix constraints(taken.size(), n);
    for (std::size_t i = 0; i < taken.size(); ++i)
      for (std::size_t k = 0; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc += taken[i][l] * rs.gram()(l, k);
        constraints(i, k) = acc;
      }
    for (RationalVector v : null_space(constraints)) {
      // Gram-Schmidt against the vectors added so far.
      for (const auto& z : out.center_basis) {
        const Rational c = ambient_form(rs, v, z) / ambient_form(rs, z, z);
        for (std::size_t k = 0; k < n; ++k) v[k] -= c * z[k];
      }
      out.center_basis.push_back(primitive_vector(v));
    }
  } else if (fill_center && taken.empty()) {
    // Cartan subalgebra only: orthogonalize the simple-root basis.
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector v(n, Rational(0));
      v[i] = 1;
      for (const auto& z : out.center_basis) {
        const Rational c = ambient_form(rs, v, z) / ambient_form(rs, z, z);
        for (std::size_t k = 0; k < n; ++k) v[k] -= c * z[k];
      }
      out.center_basis.push_back(primitive_vector(v));
    }
  }
  out.center_dim = static_cast<int>(out.center_basis.size());
  for (const auto& z : out.center_basis) out.center_form.push_back(1 / ambient_form(rs, z, z));
  return out;
}

ReductiveSubalgebra equal_rank_subalgebra(std::shared_ptr<const RootSystem> g, std::vector<int> deleted) {
  const int r = g->rank();
  std::sort(deleted.begin(), deleted.end());
  for (int d : deleted)
    if (d < 0 || d > r) throw std::invalid_argument("equal_rank_subalgebra: node out of range");
  std::vector<Root> simple;
  for (int node = 0; node <= r; ++node) {
    if (std::binary_search(deleted.begin(), deleted.end(), node)) continue;
    if (node == 0) {
      Root neg = g->theta();
      for (int& x : neg) x = -x;
      simple.push_back(std::move(neg));
    } else {
      Root e(static_cast<std::size_t>(r), 0);
      e[static_cast<std::size_t>(node - 1)] = 1;
      simple.push_back(std::move(e));
    }
  }
  return regular_subalgebra(std::move(g), simple, {}, true);
}

std::vector<std::vector<int>> diagram_automorphisms(const std::vector<std::vector<int>>& cartan) {
  std::vector<int> perm;
  std::vector<bool> used(cartan.size(), false);
  std::vector<std::vector<int>> out;
  match_nodes(cartan, cartan, perm, used, out, false);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MaximalSubalgebra> borel_de_siebenthal(std::shared_ptr<const RootSystem> g) {
  const std::vector<int> marks = g->marks();
  const auto autos = diagram_automorphisms(g->extended_cartan());

  std::vector<std::vector<int>> candidates;
  for (int i = 1; i <= g->rank(); ++i) {
    const int mark = marks[static_cast<std::size_t>(i)];
    if (mark == 1) candidates.push_back({0, i});
    else if (is_prime(mark)) candidates.push_back({i});
  }

  auto canonical = [&](const std::vector<int>& nodes) {
    std::vector<int> best;
    for (const auto& p : autos) {
      std::vector<int> img;
      for (int v : nodes) img.push_back(p[static_cast<std::size_t>(v)]);
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    }
    return best;
  };

  std::vector<MaximalSubalgebra> out;
  std::map<std::vector<int>, std::size_t> seen;
  for (const auto& c : candidates) {
    const auto key = canonical(c);
    if (auto it = seen.find(key); it != seen.end()) {
      ++out[it->second].orbit_size;
      continue;
    }
    seen.emplace(key, out.size());
    out.push_back(MaximalSubalgebra{equal_rank_subalgebra(g, c), c, 1});
  }
  return out;
}

std::vector<MaximalSubalgebra> borel_de_siebenthal(SimpleLieType type) {
  return borel_de_siebenthal(shared_root_system(type));
}

std::vector<IdealChild> maximal_subalgebras_of_ideal(const ReductiveSubalgebra& k, std::size_t j) {
  if (!k.regular()) throw std::invalid_argument("maximal_subalgebras_of_ideal requires a regular subalgebra");
  if (j >= k.ideals.size()) throw std::out_of_range("ideal index out of range");
  const Ideal& target = k.ideals[j];
  const auto n = static_cast<std::size_t>(k.ambient->rank());

  std::vector<IdealChild> out;
  for (const auto& mc : borel_de_siebenthal(target.system)) {
    std::vector<Root> simple;
    for (std::size_t i = 0; i < k.ideals.size(); ++i) {
      if (i == j) continue;
      simple.insert(simple.end(), k.ideals[i].simple_roots.begin(), k.ideals[i].simple_roots.end());
    }
    std::set<Root> mapped;
    for (const auto& I : mc.subalgebra.ideals)
      for (const Root& r : I.simple_roots) {
        Root a = map_root(r, target.simple_roots, n);
        mapped.insert(a);
        simple.push_back(std::move(a));
      }
    std::vector<RationalVector> seed = k.center_basis;
    for (const auto& z : mc.subalgebra.center_basis) seed.push_back(map_vector(z, target.simple_roots, n));

    IdealChild child;
    child.subalgebra = regular_subalgebra(k.ambient, simple, seed, false);
    child.subalgebra.name.clear();
    child.replaced_ideal = j;
    child.new_center_dims = mc.subalgebra.center_dim;
    child.deleted_nodes = mc.deleted_nodes;
    child.orbit_size = mc.orbit_size;
    for (std::size_t i = 0; i < child.subalgebra.ideals.size(); ++i)
      if (mapped.contains(child.subalgebra.ideals[i].simple_roots.front())) child.new_ideals.push_back(i);
    out.push_back(std::move(child));
  }
  return out;
}

std::vector<Root> highest_weight_roots(const ReductiveSubalgebra& k) {
  const RootSystem& rs = *k.ambient;
  const auto kroots = k.roots();
  const std::set<Root> in_k(kroots.begin(), kroots.end());
  std::vector<Root> ideal_simple;
  for (const auto& I : k.ideals) ideal_simple.insert(ideal_simple.end(), I.simple_roots.begin(), I.simple_roots.end());

  std::vector<Root> out;
  for (const Root& beta : rs.roots()) {
    if (in_k.contains(beta)) continue;
    bool highest = true;
    for (const Root& gamma : ideal_simple) {
      Root sum = beta;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += gamma[i];
      if (rs.is_root(sum)) {
        highest = false;
        break;
      }
    }
    if (highest) out.push_back(beta);
  }
  return out;
}

Branching orthocomplement_branching(const ReductiveSubalgebra& k) {
  if (!k.regular() || !k.equal_rank()) {
    throw std::invalid_argument(
        "orthocomplement_branching needs a regular equal-rank subalgebra; use declare_branching for '" +
        k.display_name() + "'");
  }
  const RootSystem& rs = *k.ambient;
  std::map<std::pair<std::vector<Weight>, RationalVector>, int> agg;
  for (const Root& beta : highest_weight_roots(k)) {
    std::vector<Weight> weights;
    for (const auto& I : k.ideals) {
      RationalVector c;
      for (const Root& gamma : I.simple_roots) c.push_back(2 * rs.root_form(beta, gamma) / rs.norm(gamma));
      weights.emplace_back(std::move(c));
    }
    RationalVector center;
    const RationalVector b = to_rational(beta);
    for (const auto& z : k.center_basis) center.push_back(ambient_form(rs, b, z));
    ++agg[{std::move(weights), std::move(center)}];
  }
  Branching out;
  out.source = BranchingSource::computed;
  for (auto& [key, mult] : agg) out.components.push_back(BranchingComponent{key.first, key.second, mult});
  return out;
}

std::int64_t component_dimension(const ReductiveSubalgebra& k, const BranchingComponent& c) {
  std::int64_t d = c.multiplicity;
  for (std::size_t j = 0; j < k.ideals.size(); ++j) d *= weyl_dim(*k.ideals[j].system, c.ideal_weights[j]);
  return d;
}

BranchingReport validate_branching(const ReductiveSubalgebra& k, const Branching& b) {
  BranchingReport rep;
  rep.expected_dimension = k.ambient->dimension() - k.dimension();
  for (std::size_t i = 0; i < b.components.size(); ++i) {
    const auto& c = b.components[i];
    const std::string where = "component " + std::to_string(i) + ": ";
    bool shape_ok = true;
    if (c.multiplicity < 1) {
      rep.problems.push_back(where + "multiplicity must be positive");
      shape_ok = false;
    }
    if (c.ideal_weights.size() != k.ideals.size()) {
      rep.problems.push_back(where + "expected " + std::to_string(k.ideals.size()) + " ideal weights");
      shape_ok = false;
    } else {
      for (std::size_t j = 0; j < k.ideals.size(); ++j) {
        const Weight& w = c.ideal_weights[j];
        if (w.rank() != static_cast<std::size_t>(k.ideals[j].type.rank)) {
          rep.problems.push_back(where + "weight " + std::to_string(j) + " has the wrong rank");
          shape_ok = false;
        } else if (!w.dominant_integral()) {
          rep.problems.push_back(where + "weight " + std::to_string(j) + " is not dominant integral");
          shape_ok = false;
        }
      }
    }
    if (c.center_weight.size() != static_cast<std::size_t>(k.center_dim)) {
      rep.problems.push_back(where + "center weight needs " + std::to_string(k.center_dim) + " entries");
      shape_ok = false;
    }
    if (shape_ok) rep.actual_dimension += component_dimension(k, c);
  }
  if (rep.actual_dimension != rep.expected_dimension) {
    rep.problems.push_back("dimension mismatch: dim g - dim k = " + std::to_string(rep.expected_dimension) +
                           " but components sum to " + std::to_string(rep.actual_dimension));
  }
  rep.ok = rep.problems.empty();
  return rep;
}

Branching declare_branching(const ReductiveSubalgebra& k, std::vector<BranchingComponent> components) {
  Branching b{std::move(components), BranchingSource::declared};
  BranchingReport rep = validate_branching(k, b);
  if (!rep.ok) {
    std::string msg = "declared branching rejected for " + k.display_name() + ":";
    for (const auto& p : rep.problems) msg += " " + p + ";";
    throw BranchingError(msg, std::move(rep));
  }
  return b;
}

Rational dynkin_index_of_rep(SimpleLieType type, const Representation& rep) {
  const auto rs = shared_root_system(type);
  Rational acc = 0;
  std::int64_t total = 0;
  for (const auto& [w, mult] : rep) {
    const std::int64_t d = weyl_dim(*rs, w);
    total += mult * d;
    acc += Rational(mult) * Rational(d) * casimir_eigenvalue(*rs, w);
  }
  if (total == 0) throw std::invalid_argument("dynkin_index_of_rep: zero-dimensional representation");
  return acc / (2 * rs->dimension());
}

Representation restrict_to_ideal(const ReductiveSubalgebra& k, const Branching& b, std::size_t j) {
  if (j >= k.ideals.size()) throw std::out_of_range("ideal index out of range");
  Representation out;
  for (const auto& c : b.components) {
    std::int64_t other = c.multiplicity;
    for (std::size_t i = 0; i < k.ideals.size(); ++i)
      if (i != j) other *= weyl_dim(*k.ideals[i].system, c.ideal_weights[i]);
    out.emplace_back(c.ideal_weights[j], other);
  }
  return out;
}

Rational center_norm(const ReductiveSubalgebra& k, const RationalVector& center_weight) {
  if (center_weight.size() != k.center_form.size())
    throw std::invalid_argument("center weight length does not match the center form");
  Rational acc = 0;
  for (std::size_t i = 0; i < center_weight.size(); ++i) acc += center_weight[i] * center_weight[i] * k.center_form[i];
  return acc;
}

}  // namespace confemb
