#include "confemb/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

namespace confemb {

namespace {

int family_min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 3;
    case Family::E: return 6;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 1;
}

bool rank_ok(Family f, int rank) {
  switch (f) {
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
    default: return rank >= family_min_rank(f);
  }
}

std::optional<Family> family_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: return std::nullopt;
  }
}

int parse_positive_int(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 6) throw std::invalid_argument("bad Lie type '" + std::string(whole) + "'");
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad Lie type '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

// Bourbaki diagrams: simple root norms and bonds.
struct DiagramData {
  RationalVector norms;
  std::vector<std::pair<int, int>> edges;
};

DiagramData diagram_data(SimpleLieType t) {
  const int n = t.rank;
  DiagramData d;
  d.norms.assign(static_cast<std::size_t>(n), Rational(2));
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      if (t.family == Family::B) d.norms[static_cast<std::size_t>(n - 1)] = 1;
      if (t.family == Family::C)
        for (int i = 0; i + 1 < n; ++i) d.norms[static_cast<std::size_t>(i)] = 1;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) d.edges.emplace_back(i, i + 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      d.edges = {{0, 2}, {1, 3}, {2, 3}, {3, 4}};
      for (int i = 4; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case Family::F:
      d.edges = {{0, 1}, {1, 2}, {2, 3}};
      d.norms[2] = 1;
      d.norms[3] = 1;
      break;
    case Family::G:
      d.edges = {{0, 1}};
      d.norms[0] = ratio(2, 3);
      break;
  }
  return d;
}

}  // namespace

SimpleLieType SimpleLieType::make(Family family, int rank) {
  if (!rank_ok(family, rank)) {
    throw std::invalid_argument(std::string("invalid rank ") + std::to_string(rank) + " for family " +
                                static_cast<char>(family));
  }
  return SimpleLieType{family, rank};
}

SimpleLieType SimpleLieType::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '_' || std::isspace(static_cast<unsigned char>(c))) continue;
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  auto classical = [&](std::string_view prefix) { return s.rfind(prefix, 0) == 0; };
  if (classical("sl")) {
    const int n = parse_positive_int(std::string_view(s).substr(2), text);
    return make(Family::A, n - 1);
  }
  if (classical("sp")) {
    const int n = parse_positive_int(std::string_view(s).substr(2), text);
    if (n % 2 != 0) throw std::invalid_argument("sp(n) needs even n: '" + std::string(text) + "'");
    if (n == 2) return make(Family::A, 1);
    return make(Family::C, n / 2).canonical();
  }
  if (classical("so")) {
    const int n = parse_positive_int(std::string_view(s).substr(2), text);
    if (n == 3) return make(Family::A, 1);
    if (n == 4 || n < 3) throw std::invalid_argument("so(" + std::to_string(n) + ") is not simple");
    if (n % 2 == 1) return make(Family::B, (n - 1) / 2);
    return make(Family::D, n / 2).canonical();
  }
  if (s.size() < 2) throw std::invalid_argument("bad Lie type '" + std::string(text) + "'");
  const auto fam = family_from_char(s[0]);
  if (!fam) throw std::invalid_argument("bad Lie type '" + std::string(text) + "'");
  return make(*fam, parse_positive_int(std::string_view(s).substr(1), text)).canonical();
}

SimpleLieType SimpleLieType::canonical() const {
  if (family == Family::D && rank == 3) return SimpleLieType{Family::A, 3};
  if (family == Family::C && rank == 2) return SimpleLieType{Family::B, 2};
  return *this;
}

std::string SimpleLieType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

int SimpleLieType::dimension() const {
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

Weight Weight::zero(std::size_t rank) { return Weight(RationalVector(rank, Rational(0))); }

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
  Weight w = zero(rank);
  w.coords.at(i) = 1;
  return w;
}

Weight Weight::from_ints(const std::vector<int>& values) {
  RationalVector c;
  for (int v : values) c.emplace_back(v);
  return Weight(std::move(c));
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Weight::dominant_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return is_integer(x) && sgn(x) >= 0; });
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
  Weight out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

Weight operator-(const Weight& a, const Weight& b) { return a + Rational(-1) * b; }

Weight operator*(const Rational& s, const Weight& w) {
  Weight out = w;
  for (auto& x : out.coords) x *= s;
  return out;
}

RationalMatrix simple_root_gram(SimpleLieType type) {
  const DiagramData d = diagram_data(type);
  const auto n = static_cast<std::size_t>(type.rank);
  RationalMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = d.norms[i];
  for (auto [a, b] : d.edges) {
    const auto i = static_cast<std::size_t>(a);
    const auto j = static_cast<std::size_t>(b);
    // Any bond pairs to minus half the longer norm (simple, double and triple alike).
    const Rational v = -std::max(d.norms[i], d.norms[j]) / 2;
    g(i, j) = v;
    g(j, i) = v;
  }
  return g;
}

RootSystem::RootSystem(SimpleLieType type) : type_(type.canonical()) {
  if (!rank_ok(type_.family, type_.rank)) {
    throw std::invalid_argument("invalid rank " + std::to_string(type_.rank) + " for family " +
                                static_cast<char>(type_.family));
  }
  const auto n = static_cast<std::size_t>(type_.rank);
  gram_ = simple_root_gram(type_);

  cartan_.assign(n, std::vector<int>(n, 0));
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = 2 * gram_(i, j) / gram_(i, i);
      cartan_[i][j] = static_cast<int>(v.get_num().get_si());
      a(i, j) = v;
    }
  const RationalMatrix a_inv = inverse(a);
  weight_gram_ = a_inv.transposed() * gram_ * a_inv;

  // Positive roots, layer by layer in height, via root strings.
  std::set<Root> positive;
  std::vector<Root> layer;
  for (std::size_t i = 0; i < n; ++i) {
    Root e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    positive.insert(e);
  }
  while (!layer.empty()) {
    std::set<Root> next;
    for (const Root& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        Root up = beta;
        ++up[i];
        if (positive.contains(up) || next.contains(up)) continue;
        int p = 0;
        Root down = beta;
        while (true) {
          --down[i];
          if (!positive.contains(down)) break;
          ++p;
        }
        int pair = 0;
        for (std::size_t j = 0; j < n; ++j) pair += cartan_[i][j] * beta[j];
        if (p - pair > 0) next.insert(up);
      }
    }
    layer.assign(next.begin(), next.end());
    positive.insert(next.begin(), next.end());
  }

  auto by_height = [](const Root& x, const Root& y) {
    int hx = 0;
    int hy = 0;
    for (int v : x) hx += v;
    for (int v : y) hy += v;
    if (hx != hy) return hx < hy;
    return x < y;
  };
  positive_.assign(positive.begin(), positive.end());
  std::sort(positive_.begin(), positive_.end(), by_height);
  for (const Root& r : positive_) {
    Root neg = r;
    for (int& v : neg) v = -v;
    roots_.push_back(std::move(neg));
  }
  roots_.insert(roots_.end(), positive_.begin(), positive_.end());
  std::sort(roots_.begin(), roots_.end(), by_height);
  root_set_.insert(roots_.begin(), roots_.end());
  theta_ = positive_.back();
}

std::vector<Root> RootSystem::simple_roots() const {
  std::vector<Root> out;
  for (int i = 0; i < rank(); ++i) {
    Root e(static_cast<std::size_t>(rank()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<int> RootSystem::marks() const {
  std::vector<int> m{1};
  m.insert(m.end(), theta_.begin(), theta_.end());
  return m;
}

Weight RootSystem::to_weight(const Root& r) const {
  const auto n = static_cast<std::size_t>(rank());
  if (r.size() != n) throw std::invalid_argument("root rank mismatch");
  RationalVector c(n);
  for (std::size_t k = 0; k < n; ++k) {
    int v = 0;
    for (std::size_t j = 0; j < n; ++j) v += cartan_[k][j] * r[j];
    c[k] = v;
  }
  return Weight(std::move(c));
}

Rational RootSystem::root_form(const Root& a, const Root& b) const {
  const auto n = static_cast<std::size_t>(rank());
  if (a.size() != n || b.size() != n) throw std::invalid_argument("root rank mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      acc += gram_(i, j) * a[i] * b[j];
    }
  }
  return acc;
}

Rational RootSystem::pairing(const Weight& w, const Root& r) const {
  const auto n = static_cast<std::size_t>(rank());
  if (w.rank() != n || r.size() != n) throw std::invalid_argument("weight/root rank mismatch");
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (r[j] == 0) continue;
    acc += w.coords[j] * r[j] * gram_(j, j) / 2;
  }
  return acc;
}

int RootSystem::height(const Root& r) const {
  int h = 0;
  for (int v : r) h += v;
  return h;
}

RationalMatrix RootSystem::extended_gram() const {
  const auto n = static_cast<std::size_t>(rank());
  RationalMatrix g(n + 1, n + 1);
  g(0, 0) = norm(theta_);
  const auto simple = simple_roots();
  for (std::size_t i = 0; i < n; ++i) {
    const Rational v = -root_form(theta_, simple[i]);
    g(0, i + 1) = v;
    g(i + 1, 0) = v;
    for (std::size_t j = 0; j < n; ++j) g(i + 1, j + 1) = gram_(i, j);
  }
  return g;
}

std::vector<std::vector<int>> RootSystem::extended_cartan() const {
  const RationalMatrix g = extended_gram();
  std::vector<std::vector<int>> c(g.rows(), std::vector<int>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Rational v = 2 * g(i, j) / g(i, i);
      c[i][j] = static_cast<int>(v.get_num().get_si());
    }
  return c;
}

RootSystem build_root_system(SimpleLieType type) {
  RootSystem rs(type);
  if (rs.norm(rs.theta()) != 2) throw std::logic_error("highest root of " + rs.type().name() + " is not long");
  if (static_cast<int>(rs.roots().size()) + rs.rank() != rs.type().dimension())
    throw std::logic_error("root count mismatch for " + rs.type().name());
  return rs;
}

std::shared_ptr<const RootSystem> shared_root_system(SimpleLieType type) {
  static std::mutex mutex;
  static std::map<SimpleLieType, std::shared_ptr<const RootSystem>> cache;
  const SimpleLieType key = type.canonical();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const RootSystem>(build_root_system(key));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(built)).first->second;
}

Rational form(const RootSystem& rs, const Weight& a, const Weight& b) {
  const auto n = static_cast<std::size_t>(rs.rank());
  if (a.rank() != n || b.rank() != n) {
    throw std::invalid_argument("weight rank mismatch for " + rs.type().name());
  }
  const RationalMatrix& f = rs.weight_gram();
  Rational acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coords[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) acc += a.coords[i] * f(i, j) * b.coords[j];
  }
  return acc;
}

int dual_coxeter(const RootSystem& rs) {
  const Rational h = rs.pairing(rs.rho(), rs.theta()) + 1;
  return static_cast<int>(h.get_num().get_si());
}

namespace {

void require_dominant(const RootSystem& rs, const Weight& w, const char* what) {
  if (w.rank() != static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument(std::string(what) + ": weight rank mismatch for " + rs.type().name());
  if (!w.dominant_integral())
    throw std::invalid_argument(std::string(what) + ": weight is not dominant integral");
}

}  // namespace

Rational casimir_eigenvalue(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda, "casimir_eigenvalue");
  return form(rs, lambda, lambda) + 2 * form(rs, lambda, rs.rho());
}

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda, "weyl_dim");
  const Weight shifted = lambda + rs.rho();
  Rational dim = 1;
  for (const Root& a : rs.positive_roots()) dim *= rs.pairing(shifted, a) / rs.pairing(rs.rho(), a);
  if (!is_integer(dim) || !dim.get_num().fits_slong_p())
    throw std::overflow_error("Weyl dimension not representable");
  return dim.get_num().get_si();
}

Rational central_charge(const RootSystem& rs, const Rational& k) {
  const Rational shifted = k + dual_coxeter(rs);
  if (sgn(shifted) == 0) {
    throw CriticalLevelError("critical level k = " + to_string(k) + " for " + rs.type().name(), rs.type().name());
  }
  return k * rs.dimension() / shifted;
}

Rational central_charge_abelian(int dim, const Rational& k) {
  if (sgn(k) == 0) throw std::domain_error("abelian central charge undefined at level 0");
  return Rational(dim);
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  const auto n = static_cast<std::size_t>(rs.rank());
  if (w.rank() != n) throw std::invalid_argument("weight rank mismatch");
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    const Weight cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(cur.coords[i]) == 0) continue;
      Weight next = cur;
      for (std::size_t k = 0; k < n; ++k) next.coords[k] -= cur.coords[i] * rs.cartan()[k][i];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace confemb
