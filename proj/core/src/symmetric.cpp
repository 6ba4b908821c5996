#include "confemb/symmetric.hpp"

#include <algorithm>
#include <set>

#include "confemb/conformal.hpp"

namespace confemb {

namespace {

void check_shape(const SymmetricPair& pair) {
  for (const auto& c : pair.isotropy) {
    if (c.ideal_weights.size() != pair.simple.size())
      throw std::invalid_argument(pair.name + ": component needs one weight per simple summand");
    if (c.center_weight.size() != static_cast<std::size_t>(pair.abelian_dim))
      throw std::invalid_argument(pair.name + ": center weight length mismatch");
    if (c.multiplicity < 1) throw std::invalid_argument(pair.name + ": multiplicity must be positive");
    for (std::size_t j = 0; j < pair.simple.size(); ++j) {
      if (c.ideal_weights[j].rank() != static_cast<std::size_t>(pair.simple[j].rank) ||
          !c.ideal_weights[j].dominant_integral())
        throw std::invalid_argument(pair.name + ": weight is not dominant integral for " + pair.simple[j].name());
    }
  }
}

std::int64_t component_dim(const SymmetricPair& pair, const BranchingComponent& c) {
  std::int64_t d = c.multiplicity;
  for (std::size_t j = 0; j < pair.simple.size(); ++j) d *= weyl_dim(*shared_root_system(pair.simple[j]), c.ideal_weights[j]);
  return d;
}

}  // namespace

std::int64_t k_dimension(const SymmetricPair& pair) {
  std::int64_t d = pair.abelian_dim;
  for (const auto& t : pair.simple) d += t.dimension();
  return d;
}

std::int64_t isotropy_dimension(const SymmetricPair& pair) {
  check_shape(pair);
  std::int64_t d = 0;
  for (const auto& c : pair.isotropy) d += component_dim(pair, c);
  return d;
}

Rational isotropy_index(const SymmetricPair& pair, std::size_t j) {
  check_shape(pair);
  if (j >= pair.simple.size()) throw std::out_of_range("summand index out of range");
  Representation rep;
  for (const auto& c : pair.isotropy) {
    std::int64_t other = c.multiplicity;
    for (std::size_t i = 0; i < pair.simple.size(); ++i)
      if (i != j) other *= weyl_dim(*shared_root_system(pair.simple[i]), c.ideal_weights[i]);
    rep.emplace_back(c.ideal_weights[j], other);
  }
  return dynkin_index_of_rep(pair.simple[j], rep);
}

Rational sst_identity_check(const SymmetricPair& pair) {
  const std::int64_t dim_v = isotropy_dimension(pair);
  if (k_dimension(pair) + dim_v != pair.dim_r) {
    throw std::invalid_argument(pair.name + ": dim k + dim V = " + std::to_string(k_dimension(pair) + dim_v) +
                                " but dim r = " + std::to_string(pair.dim_r));
  }
  Rational acc = pair.abelian_dim;
  for (std::size_t j = 0; j < pair.simple.size(); ++j) {
    const Rational n = isotropy_index(pair, j);
    const Rational g = Rational(dual_coxeter(*shared_root_system(pair.simple[j]))) / n;
    acc += Rational(pair.simple[j].dimension()) / (1 + g);
  }
  return acc - Rational(dim_v) / 2;
}

ReductiveSubalgebra so_v_embedding(const SymmetricPair& pair) {
  if (pair.simple.empty()) throw std::invalid_argument(pair.name + ": k is abelian");
  if (pair.abelian_dim > 0) throw std::invalid_argument(pair.name + ": no center form inside so(V) is recorded");
  const std::int64_t dim_v = isotropy_dimension(pair);
  if (dim_v < 5) throw std::invalid_argument(pair.name + ": so(V) is not simple of rank >= 2");
  ReductiveSubalgebra k;
  k.ambient = shared_root_system(SimpleLieType::parse("so" + std::to_string(dim_v)));
  for (std::size_t j = 0; j < pair.simple.size(); ++j)
    k.ideals.push_back(make_declared_ideal(pair.simple[j], isotropy_index(pair, j)));
  if (k.dimension() >= k.ambient->dimension()) throw std::invalid_argument(pair.name + ": k fills so(V)");
  k.name = pair.name + " in so(" + std::to_string(dim_v) + ")";
  return k;
}

bool sst_level_one_ap(const SymmetricPair& pair, const std::vector<BranchingComponent>& so_complement) {
  const ReductiveSubalgebra k = so_v_embedding(pair);
  const Branching b = declare_branching(k, so_complement);
  return ap_check(k, b, Rational(1)).conformal;
}

std::vector<std::pair<std::string, SymmetricPair>> mutations(const SymmetricPair& pair) {
  std::vector<std::pair<std::string, SymmetricPair>> out;
  auto consistent = [](SymmetricPair p) {
    p.dim_r = k_dimension(p) + isotropy_dimension(p);
    p.so_complement.reset();
    return p;
  };
  if (pair.isotropy.size() > 1) {
    SymmetricPair p = pair;
    p.isotropy.erase(p.isotropy.begin());
    p.name += " [drop]";
    out.emplace_back("drop", consistent(std::move(p)));
  }
  if (!pair.isotropy.empty()) {
    SymmetricPair p = pair;
    p.isotropy.front().multiplicity *= 2;
    p.name += " [double]";
    out.emplace_back("double", consistent(std::move(p)));
  }
  if (!pair.isotropy.empty()) {
    SymmetricPair p = pair;
    auto& weights = p.isotropy.front().ideal_weights;
    auto it = std::find_if(weights.begin(), weights.end(), [](const Weight& w) { return !w.is_zero(); });
    if (it == weights.end() && !weights.empty()) it = weights.begin();
    if (it != weights.end()) {
      it->coords.back() += 1;
      p.name += " [shift]";
      out.emplace_back("shift", consistent(std::move(p)));
    }
  }
  return out;
}

LevelBoundReport level_bound_check(int m) {
  if (m < 5) throw std::invalid_argument("level_bound_check needs m >= 5");
  LevelBoundReport rep;
  rep.m = m;
  const auto rs = shared_root_system(SimpleLieType::parse("so" + std::to_string(m)));
  const Weight rho = rs->rho();

  std::vector<Weight> root_weights;
  for (const Root& a : rs->roots()) {
    root_weights.push_back(rs->to_weight(a));
    const Rational p = rs->pairing(rho, a);
    if (p > rep.max_rho_pairing) rep.max_rho_pairing = p;
  }
  std::set<Weight> lambdas{Weight::zero(static_cast<std::size_t>(rs->rank()))};
  for (std::size_t i = 0; i < root_weights.size(); ++i) {
    lambdas.insert(root_weights[i]);
    for (std::size_t j = i; j < root_weights.size(); ++j) lambdas.insert(root_weights[i] + root_weights[j]);
  }

  bool first = true;
  std::set<Rational> positive;
  for (const Weight& l : lambdas) {
    const Rational value = form(*rs, l, l) + 2 * form(*rs, l, rho);
    const Rational k = value / 4 - (m - 2);
    if (first || k > rep.max_level) rep.max_level = k;
    first = false;
    if (is_positive_integer(k)) positive.insert(k);
    const Rational n = form(*rs, l, l);
    if (n > rep.max_norm) rep.max_norm = n;
  }
  rep.weights_checked = lambdas.size();
  rep.positive_integer_levels.assign(positive.begin(), positive.end());
  rep.ok = rep.max_level <= 1 && rep.positive_integer_levels == std::vector<Rational>{Rational(1)} &&
           rep.max_rho_pairing == m - 3 && rep.max_norm == 8;
  return rep;
}

}  // namespace confemb
