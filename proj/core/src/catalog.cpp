#include "confemb/catalog.hpp"

#include <stdexcept>

#include "confemb/conformal.hpp"

namespace confemb {

Weight epsilon_weight(Family family, int rank, const std::vector<Rational>& eps) {
  const auto r = static_cast<std::size_t>(rank);
  const std::size_t expected = family == Family::A ? r + 1 : r;
  if (rank < 1 || eps.size() != expected) throw std::invalid_argument("epsilon_weight: wrong number of coordinates");
  RationalVector c(r);
  switch (family) {
    case Family::A:
      for (std::size_t i = 0; i < r; ++i) c[i] = eps[i] - eps[i + 1];
      break;
    case Family::B:
    case Family::C:
      for (std::size_t i = 0; i + 1 < r; ++i) c[i] = eps[i] - eps[i + 1];
      c[r - 1] = family == Family::B ? Rational(2 * eps[r - 1]) : eps[r - 1];
      break;
    case Family::D:
      if (rank < 3) throw std::invalid_argument("epsilon_weight: so(4) is not simple");
      for (std::size_t i = 0; i + 1 < r; ++i) c[i] = eps[i] - eps[i + 1];
      c[r - 1] = eps[r - 2] + eps[r - 1];
      break;
    default:
      throw std::invalid_argument("epsilon_weight: classical families only");
  }
  // Relabel to the canonical type.
  if (family == Family::C && rank == 2) return Weight(RationalVector{c[1], c[0]});
  if (family == Family::D && rank == 3) return Weight(RationalVector{c[1], c[0], c[2]});
  return Weight(std::move(c));
}

namespace {

// One irreducible summand: a weight per simple factor and a center weight.
struct Piece {
  std::vector<Weight> w;
  RationalVector c;
};
using Module = std::vector<Piece>;

// A classical algebra as simple summands plus a center.
struct Factor {
  std::vector<SimpleLieType> types;
  int abelian = 0;
};

Weight eps_unit(Family f, int rank, std::initializer_list<int> head) {
  std::vector<Rational> e(static_cast<std::size_t>(f == Family::A ? rank + 1 : rank), Rational(0));
  std::size_t i = 0;
  for (int v : head) e.at(i++) = v;
  return epsilon_weight(f, rank, e);
}

Module single(std::vector<Weight> w, RationalVector c = {}) { return {Piece{std::move(w), std::move(c)}}; }

Module tensor(const Module& a, const Module& b) {
  Module out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Piece p = x;
      p.w.insert(p.w.end(), y.w.begin(), y.w.end());
      p.c.insert(p.c.end(), y.c.begin(), y.c.end());
      out.push_back(std::move(p));
    }
  }
  return out;
}

Module sum(Module a, const Module& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Module with_center(Module m, const RationalVector& c) {
  for (auto& p : m) p.c.insert(p.c.end(), c.begin(), c.end());
  return m;
}

Factor join(const Factor& a, const Factor& b) {
  Factor f = a;
  f.types.insert(f.types.end(), b.types.begin(), b.types.end());
  f.abelian += b.abelian;
  return f;
}

Weight theta(SimpleLieType t) { return shared_root_system(t)->theta_weight(); }

Module trivial(const Factor& f) {
  Piece p;
  for (const auto& t : f.types) p.w.push_back(Weight::zero(static_cast<std::size_t>(t.rank)));
  p.c.assign(static_cast<std::size_t>(f.abelian), Rational(0));
  return {p};
}

// so(m).
Factor so_factor(int m) {
  if (m == 1) return {};
  if (m == 2) return {{}, 1};
  if (m == 3) return {{SimpleLieType::make(Family::A, 1)}, 0};
  if (m == 4) return {{SimpleLieType::make(Family::A, 1), SimpleLieType::make(Family::A, 1)}, 0};
  return {{SimpleLieType::parse("so" + std::to_string(m))}, 0};
}

Family so_family(int m) { return m % 2 ? Family::B : Family::D; }

Module so_vector(int m) {
  if (m == 1) return single({});
  if (m == 2) return sum(single({}, {1}), single({}, {-1}));
  if (m == 3) return single({Weight::from_ints({2})});
  if (m == 4) return single({Weight::from_ints({1}), Weight::from_ints({1})});
  return single({eps_unit(so_family(m), m / 2, {1})});
}

Module so_adjoint(int m) {
  if (m == 3) return single({Weight::from_ints({2})});
  if (m == 4)
    return sum(single({Weight::from_ints({2}), Weight::from_ints({0})}),
               single({Weight::from_ints({0}), Weight::from_ints({2})}));
  if (m < 3) throw std::logic_error("so_adjoint: abelian");
  return single({theta(so_factor(m).types.front())});
}

// Traceless symmetric square of the vector representation.
Module so_sym2(int m) {
  if (m == 3) return single({Weight::from_ints({4})});
  if (m == 4) return single({Weight::from_ints({2}), Weight::from_ints({2})});
  if (m < 3) throw std::logic_error("so_sym2: small rank");
  return single({eps_unit(so_family(m), m / 2, {2})});
}

// sp(2m).
Factor sp_factor(int m) { return {{SimpleLieType::parse("sp" + std::to_string(2 * m))}, 0}; }

Module sp_vector(int m) {
  if (m == 1) return single({Weight::from_ints({1})});
  return single({eps_unit(Family::C, m, {1})});
}

Module sp_adjoint(int m) { return single({theta(sp_factor(m).types.front())}); }

// Traceless part of the exterior square of the vector representation.
Module sp_wedge2(int m) {
  if (m == 1) return {};
  return single({eps_unit(Family::C, m, {1, 1})});
}

// sl(m).
Factor sl_factor(int m) {
  if (m == 1) return {};
  return {{SimpleLieType::make(Family::A, m - 1)}, 0};
}

Module sl_vector(int m, bool dual = false) {
  if (m == 1) return single({});
  const auto r = static_cast<std::size_t>(m - 1);
  return single({Weight::fundamental(r, dual ? r - 1 : 0)});
}

Module sl_adjoint(int m) { return single({theta(sl_factor(m).types.front())}); }

// Collapses equal summands into multiplicities, keeping first-seen order.
std::vector<BranchingComponent> components(const Module& m) {
  std::vector<BranchingComponent> out;
  for (const auto& p : m) {
    bool merged = false;
    for (auto& c : out) {
      if (c.ideal_weights == p.w && c.center_weight == p.c) {
        ++c.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(BranchingComponent{p.w, p.c, 1});
  }
  return out;
}

// Dynkin index of the defining module of the ambient algebra restricted to
// summand j; for sl and sp ambients the level scales by 2I, for so by I.
Rational ambient_index(char ambient, const Factor& f, const Module& v, std::size_t j) {
  Representation rep;
  for (const auto& p : v) {
    std::int64_t other = 1;
    for (std::size_t i = 0; i < f.types.size(); ++i)
      if (i != j) other *= weyl_dim(*shared_root_system(f.types[i]), p.w[i]);
    rep.emplace_back(p.w[j], other);
  }
  const Rational index = dynkin_index_of_rep(f.types[j], rep);
  return ambient == 'o' ? index : Rational(2 * index);
}

ReductiveSubalgebra declared_subalgebra(const std::string& ambient, char kind, const Factor& f, const Module& v,
                                        const std::string& name) {
  ReductiveSubalgebra k;
  k.ambient = shared_root_system(SimpleLieType::parse(ambient));
  for (std::size_t j = 0; j < f.types.size(); ++j)
    k.ideals.push_back(make_declared_ideal(f.types[j], ambient_index(kind, f, v, j)));
  k.name = name;
  return k;
}

ReductiveSubalgebra maximal_with_key(const std::string& ambient, const std::string& key) {
  for (auto& m : borel_de_siebenthal(SimpleLieType::parse(ambient)))
    if (m.subalgebra.type_key() == key) return m.subalgebra;
  throw std::logic_error("no maximal subalgebra " + key + " in " + ambient);
}

RationalMatrix matrix(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::string str(int n) { return std::to_string(n); }

CriticalEntry declared_entry(std::string id, std::string description, ReductiveSubalgebra k, const Module& p,
                             std::optional<Rational> level) {
  CriticalEntry e;
  e.id = std::move(id);
  e.description = std::move(description);
  e.branching = declare_branching(k, components(p));
  e.subalgebra = std::move(k);
  e.stated_level = std::move(level);
  return e;
}

CriticalEntry computed_entry(std::string id, std::string description, ReductiveSubalgebra k,
                             std::optional<Rational> level) {
  CriticalEntry e;
  e.id = std::move(id);
  e.description = std::move(description);
  e.branching = orthocomplement_branching(k);
  e.subalgebra = std::move(k);
  e.subalgebra.name = e.description;
  e.stated_level = std::move(level);
  return e;
}

}  // namespace

DeclaredEmbedding d4_example() {
  DeclaredEmbedding e;
  e.id = "d4-sl3-z1-z";
  e.description = "sl(3) x Z1 x Z in so(8), center basis (eta_1, eta)";
  auto& k = e.subalgebra;
  k.ambient = shared_root_system(SimpleLieType::parse("D4"));
  k.ideals.push_back(make_declared_ideal(SimpleLieType::make(Family::A, 2), 1));
  k.center_dim = 2;
  k.center_form = {ratio(1, 12), ratio(1, 4)};
  k.name = "sl3+u1+u1 in D4";
  const Weight w1 = Weight::from_ints({1, 0});
  const Weight w2 = Weight::from_ints({0, 1});
  e.branching = declare_branching(k, {
                                         {{w2}, {2, 2}, 1},
                                         {{w1}, {-2, 2}, 1},
                                         {{w1}, {-2, -2}, 1},
                                         {{w2}, {2, -2}, 1},
                                         {{w1}, {4, 0}, 1},
                                         {{w2}, {-4, 0}, 1},
                                     });
  e.notes.push_back("(eta_1, eta_1) = 1/12, (eta, eta) = 1/4, (eta, eta_1) = 0");
  return e;
}

std::vector<DeclaredEmbedding> builtin_embeddings() { return {d4_example()}; }

std::vector<CriticalEntry> builtin_critical_catalog() {
  std::vector<CriticalEntry> out;

  // sp(2n) x sp(2n) in so(4n^2) at -1 - 1/n.
  for (int n = 2; n <= 4; ++n) {
    const Factor f = join(sp_factor(n), sp_factor(n));
    const Module v = tensor(sp_vector(n), sp_vector(n));
    const Module p = sum(tensor(sp_adjoint(n), sp_wedge2(n)), tensor(sp_wedge2(n), sp_adjoint(n)));
    const std::string g = "so" + str(4 * n * n);
    auto e = declared_entry("sp-sp-so:n=" + str(n), "sp(" + str(2 * n) + ")^2 in " + g,
                            declared_subalgebra(g, 'o', f, v, "sp" + str(2 * n) + "^2 in " + g), p,
                            Rational(-1) - ratio(1, n));
    e.printed_lambda = matrix({{2 * (n + 1), 2 * n}, {2 * n, 2 * (n + 1)}});
    out.push_back(std::move(e));
  }

  // so(n) x so(n) in so(n^2) at -1 + 2/n.
  for (int n = 3; n <= 6; ++n) {
    const Factor f = join(so_factor(n), so_factor(n));
    const Module v = tensor(so_vector(n), so_vector(n));
    Module p;
    if (n == 4) {
      const Weight t = Weight::from_ints({2}), o = Weight::from_ints({0});
      p = {Piece{{t, t, t, o}, {}}, Piece{{t, t, o, t}, {}}, Piece{{t, o, t, t}, {}}, Piece{{o, t, t, t}, {}}};
    } else {
      p = sum(tensor(so_adjoint(n), so_sym2(n)), tensor(so_sym2(n), so_adjoint(n)));
    }
    const std::string g = "so" + str(n * n);
    auto e = declared_entry("so-so-so:n=" + str(n), "so(" + str(n) + ")^2 in " + g,
                            declared_subalgebra(g, 'o', f, v, "so" + str(n) + "^2 in " + g), p,
                            Rational(-1) + ratio(2, n));
    if (n == 3) e.printed_lambda = matrix({{4, 12}, {12, 4}});
    if (n == 4) e.printed_lambda = matrix({{4, 4, 4, 0}, {4, 4, 0, 4}, {4, 0, 4, 4}, {0, 4, 4, 4}});
    if (n > 4) {
      e.printed_lambda = matrix({{2 * (n - 1), 2 * n}, {2 * n, 2 * (n - 1)}});
      e.notes.push_back("printed entry 2(n-1) for L(theta); the Casimir value is 2(n-2)");
    }
    out.push_back(std::move(e));
  }

  // sp(2n) x so(2n+2) in sp(4n(n+1)) at -1/2.
  for (int n = 1; n <= 4; ++n) {
    const Factor f = join(sp_factor(n), so_factor(2 * n + 2));
    const Module v = tensor(sp_vector(n), so_vector(2 * n + 2));
    const Module p = sum(tensor(sp_adjoint(n), so_sym2(2 * n + 2)), tensor(sp_wedge2(n), so_adjoint(2 * n + 2)));
    const std::string g = "sp" + str(4 * n * (n + 1));
    auto e = declared_entry("sp-so-sp:n=" + str(n), "sp(" + str(2 * n) + ") x so(" + str(2 * n + 2) + ") in " + g,
                            declared_subalgebra(g, 'p', f, v, "sp" + str(2 * n) + "+so" + str(2 * n + 2) + " in " + g),
                            p, ratio(-1, 2));
    if (n >= 2) e.printed_lambda = matrix({{2 * (n + 1), 4 * (n + 1)}, {2 * n, 4 * n}});
    out.push_back(std::move(e));
  }

  // so(n) x so(n) in so(2n) at 2 - n.
  for (int n = 3; n <= 6; ++n) {
    const std::string g = "so" + str(2 * n);
    const std::string id = "so-so-so2n:n=" + str(n);
    const std::string desc = "so(" + str(n) + ")^2 in " + g;
    if (n % 2 == 0) {
      const std::string key = n == 4 ? "A1+A1+A1+A1" : "A3+A3";
      out.push_back(computed_entry(id, desc, maximal_with_key(g, key), Rational(2 - n)));
    } else {
      const Factor f = join(so_factor(n), so_factor(n));
      const Module v = sum(tensor(so_vector(n), trivial(so_factor(n))), tensor(trivial(so_factor(n)), so_vector(n)));
      const Module p = tensor(so_vector(n), so_vector(n));
      out.push_back(declared_entry(id, desc, declared_subalgebra(g, 'o', f, v, desc), p, Rational(2 - n)));
    }
  }

  // sp(2n) x sp(2n) in sp(4n) at -1 - n.
  for (int n = 1; n <= 4; ++n) {
    const std::string g = "sp" + str(4 * n);
    const std::string label = sp_factor(n).types.front().name();
    out.push_back(computed_entry("sp-sp-sp4n:n=" + str(n), "sp(" + str(2 * n) + ")^2 in " + g,
                                 maximal_with_key(g, label + "+" + label), Rational(-1 - n)));
  }

  {
    // sl(5) x sl(5) in E8 at -5, components in the order of the printed matrix.
    const SimpleLieType a4 = SimpleLieType::make(Family::A, 4);
    ReductiveSubalgebra k;
    k.ambient = shared_root_system(SimpleLieType::parse("E8"));
    k.ideals = {make_declared_ideal(a4, 1), make_declared_ideal(a4, 1)};
    k.name = "sl5^2 in E8";
    auto w = [](std::size_t i) { return Weight::fundamental(4, i - 1); };
    const Module p = {Piece{{w(1), w(3)}, {}}, Piece{{w(2), w(4)}, {}}, Piece{{w(3), w(1)}, {}},
                      Piece{{w(4), w(2)}, {}}};
    auto e = declared_entry("sl5-sl5-e8", "sl(5)^2 in E8", std::move(k), p, Rational(-5));
    e.printed_lambda = matrix({{4, ratio(36, 5)}, {ratio(36, 5), 4}, {ratio(36, 5), 4}, {4, ratio(36, 5)}});
    e.notes.push_back("printed entry 4 for L(omega_1) and L(omega_4); the Casimir value is 24/5");
    out.push_back(std::move(e));
  }

  out.push_back(computed_entry("sl3-cubed-e6", "sl(3)^3 in E6", maximal_with_key("E6", "A2+A2+A2"), Rational(-3)));

  out.push_back(
      computed_entry("sl2-fourth-so8", "sl(2)^4 in so(8)", maximal_with_key("D4", "A1+A1+A1+A1"), Rational(-2)));

  {
    const SimpleLieType a1 = SimpleLieType::make(Family::A, 1);
    const Factor f{{a1, a1, a1}, 0};
    const Weight one = Weight::from_ints({1}), t = Weight::from_ints({2});
    const Module v = single({one, one, one});
    out.push_back(declared_entry("sl2-cubed-sp8", "sl(2)^3 in sp(8)",
                                 declared_subalgebra("sp8", 'p', f, v, "sl2^3 in sp8"), single({t, t, t}),
                                 ratio(-1, 2)));
  }

  // sl(n) x sl(n) in sl(n^2) at -1; p = adjoint x adjoint.
  for (int n = 2; n <= 3; ++n) {
    const Factor f = join(sl_factor(n), sl_factor(n));
    const Module v = tensor(sl_vector(n), sl_vector(n));
    const std::string g = "sl" + str(n * n);
    out.push_back(declared_entry("sl-sl-sl:n=" + str(n), "sl(" + str(n) + ")^2 in " + g,
                                 declared_subalgebra(g, 'l', f, v, "sl" + str(n) + "^2 in " + g),
                                 tensor(sl_adjoint(n), sl_adjoint(n)), Rational(-1)));
  }

  {
    // Critical for the A3 pair only: no common level.
    const Chain c = parse_chain("A1+A3+A3 < A1+D6 < E7");
    auto e = computed_entry("a1-a3-a3-e7", "sl(2) x sl(4)^2 in E7", c.bottom(), std::nullopt);
    e.notes.push_back("A3 x A3 is critical at -4 while A1 is not");
    out.push_back(std::move(e));
  }

  return out;
}

std::vector<SymmetricPair> builtin_symmetric_catalog() {
  std::vector<SymmetricPair> out;
  auto make = [&](std::string name, std::string family, const Factor& f, const Module& v, const std::string& ambient,
                  std::optional<Module> complement) {
    SymmetricPair s;
    s.name = std::move(name);
    s.family = std::move(family);
    s.simple = f.types;
    s.abelian_dim = f.abelian;
    s.isotropy = components(v);
    s.dim_r = SimpleLieType::parse(ambient).dimension();
    if (complement) s.so_complement = components(*complement);
    out.push_back(std::move(s));
  };

  for (auto [p, q] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {3, 3}, {4, 4}, {3, 5}, {5, 5}, {2, 5}, {6, 6}, {7, 8}}) {
    const Factor f = join(so_factor(p), so_factor(q));
    const Module v = tensor(so_vector(p), so_vector(q));
    std::optional<Module> comp;
    if (p >= 3 && q >= 3 && p != 4 && q != 4)
      comp = sum(tensor(so_adjoint(p), so_sym2(q)), tensor(so_sym2(p), so_adjoint(q)));
    const std::string g = "so" + str(p + q);
    make(g + "|so" + str(p) + "+so" + str(q), "so(p+q)|so(p)+so(q)", f, v, g, comp);
  }

  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 3}, {4, 5}}) {
    Factor f = join(sl_factor(p), sl_factor(q));
    f.abelian = 1;
    const Module v = sum(with_center(tensor(sl_vector(p), sl_vector(q, true)), {1}),
                         with_center(tensor(sl_vector(p, true), sl_vector(q)), {-1}));
    const std::string g = "sl" + str(p + q);
    make(g + "|sl" + str(p) + "+sl" + str(q) + "+u1", "sl(p+q)|sl(p)+sl(q)+u1", f, v, g, std::nullopt);
  }

  for (int n = 3; n <= 9; ++n) {
    std::optional<Module> comp;
    if (n == 3) comp = single({Weight::from_ints({6})});
    if (n >= 5) comp = single({eps_unit(so_family(n), n / 2, {3, 1})});
    const std::string g = "sl" + str(n);
    make(g + "|so" + str(n), "sl(n)|so(n)", so_factor(n), so_sym2(n), g, comp);
  }

  for (int n = 2; n <= 4; ++n) {
    std::optional<Module> comp;
    if (n >= 3) comp = single({eps_unit(Family::C, n, {2, 1, 1})});
    const std::string g = "sl" + str(2 * n);
    make(g + "|sp" + str(2 * n), "sl(2n)|sp(2n)", sp_factor(n), sp_wedge2(n), g, comp);
  }

  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 4}}) {
    const Factor f = join(sp_factor(p), sp_factor(q));
    const Module v = tensor(sp_vector(p), sp_vector(q));
    std::optional<Module> comp;
    if (p > 1 || q > 1) comp = sum(tensor(sp_wedge2(p), sp_adjoint(q)), tensor(sp_adjoint(p), sp_wedge2(q)));
    const std::string g = "sp" + str(2 * (p + q));
    make(g + "|sp" + str(2 * p) + "+sp" + str(2 * q), "sp(2p+2q)|sp(2p)+sp(2q)", f, v, g, comp);
  }

  for (int n = 2; n <= 4; ++n) {
    Factor f = sl_factor(n);
    f.abelian = 1;
    const auto r = static_cast<std::size_t>(n - 1);
    const Module v = sum(single({2 * Weight::fundamental(r, 0)}, {2}), single({2 * Weight::fundamental(r, r - 1)}, {-2}));
    const std::string g = "sp" + str(2 * n);
    make(g + "|gl" + str(n), "sp(2n)|gl(n)", f, v, g, std::nullopt);
  }

  return out;
}

}  // namespace confemb
