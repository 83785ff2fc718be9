#include "ramseycert/colouring.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>

namespace ramsey {

PeriodicColouring::PeriodicColouring(long m, std::vector<int> signs_)
    : modulus(m), signs(std::move(signs_)) {
  if (modulus < 1)
    throw PreconditionError("PeriodicColouring: modulus must be positive");
  if (signs.size() != static_cast<std::size_t>(modulus))
    throw PreconditionError("PeriodicColouring: need exactly one sign per residue");
  for (int s : signs)
    if (s != 1 && s != -1)
      throw PreconditionError("PeriodicColouring: signs must be +1 or -1");
}

int PeriodicColouring::sign_of(const Int& n) const {
  return signs[to_ulong(mod_floor(n, modulus))];
}

std::string PeriodicColouring::sign_string() const {
  std::string out;
  out.reserve(signs.size());
  for (int s : signs) out += s == 1 ? '+' : '-';
  return out;
}

PeriodicColouring PeriodicColouring::from_string(long m, const std::string& str) {
  std::vector<int> signs;
  signs.reserve(str.size());
  for (char c : str) {
    if (c == '+') signs.push_back(1);
    else if (c == '-') signs.push_back(-1);
    else throw ParseError(std::string("bad sign character '") + c + "'");
  }
  return PeriodicColouring(m, std::move(signs));
}

SignFunction PeriodicColouring::fn() const {
  return [copy = *this](const Int& n) { return copy.sign_of(n); };
}

int TableColouring::sign_of(const Int& n) const {
  if (n < 1 || n > Int(signs.size()))
    throw PreconditionError("TableColouring: " + to_string(n) +
                            " is outside the table range [1, " +
                            std::to_string(signs.size()) + "]");
  return signs[to_ulong(n - 1)];
}

SignFunction TableColouring::fn() const {
  return [copy = *this](const Int& n) { return copy.sign_of(n); };
}

PeriodicColouring builtin_parity() {
  return PeriodicColouring(2, {1, -1});  // evens +, odds -
}

PeriodicColouring builtin_example2(const Int& q, unsigned long n) {
  if (!is_prime(q))
    throw PreconditionError("builtin_example2: q must be prime");
  if (n < 1) throw PreconditionError("builtin_example2: n must be >= 1");
  const long m = to_long(pow_ui(q, n));
  std::vector<int> signs(static_cast<std::size_t>(m), -1);
  signs[0] = 1;  // + exactly on the multiples of q^n
  return PeriodicColouring(m, std::move(signs));
}

PeriodicColouring builtin_example3() {
  return PeriodicColouring(4, {1, 1, -1, -1});  // + iff t = 0, 1 (mod 4)
}

PeriodicColouring builtin_const() {
  return PeriodicColouring(1, {1});
}

PeriodicColouring builtin_colouring(const std::string& name_and_params) {
  const std::string& s = name_and_params;
  if (s == "parity") return builtin_parity();
  if (s == "example3") return builtin_example3();
  if (s == "const") return builtin_const();
  if (s.rfind("example2:", 0) == 0) {
    const std::string params = s.substr(9);
    const std::size_t comma = params.find(',');
    if (comma == std::string::npos)
      throw ParseError("builtin example2 needs parameters q,n");
    try {
      Int q(params.substr(0, comma));
      unsigned long n = std::stoul(params.substr(comma + 1));
      return builtin_example2(q, n);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad example2 parameters: \"" + params + "\"");
    }
  }
  throw ParseError("unknown builtin colouring \"" + s + "\"");
}

namespace {

// Shared reader for the "<count> <count many +/- chars>" format.
std::pair<long, std::vector<int>> load_sign_file(const std::string& path,
                                                 const char* what) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(std::string(what) + ": cannot open \"" + path + "\"");
  long count = 0;
  if (!(in >> count) || count < 1)
    throw ParseError(std::string(what) + ": \"" + path +
                     "\" must start with a positive count");
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(count));
  char c;
  while (signs.size() < static_cast<std::size_t>(count) && in >> c) {
    if (c == '+') signs.push_back(1);
    else if (c == '-') signs.push_back(-1);
    else
      throw ParseError(std::string(what) + ": bad sign character '" +
                       std::string(1, c) + "' in \"" + path + "\"");
  }
  if (signs.size() != static_cast<std::size_t>(count))
    throw ParseError(std::string(what) + ": \"" + path + "\" declares " +
                     std::to_string(count) + " signs but contains " +
                     std::to_string(signs.size()));
  std::string leftover;
  if (in >> leftover)
    throw ParseError(std::string(what) + ": trailing content \"" + leftover +
                     "\" in \"" + path + "\"");
  return {count, std::move(signs)};
}

}  // namespace

PeriodicColouring load_periodic_colouring(const std::string& path) {
  auto [m, signs] = load_sign_file(path, "periodic colouring");
  return PeriodicColouring(m, std::move(signs));
}

TableColouring load_table_colouring(const std::string& path) {
  auto [n, signs] = load_sign_file(path, "colouring table");
  (void)n;
  return TableColouring{std::move(signs)};
}

std::vector<MonoSolution> enumerate_mono_solutions(const EquationSpec& eq,
                                                   const SignFunction& colour,
                                                   const Int& N) {
  if (N < 1)
    throw PreconditionError("enumerate_mono_solutions: N must be >= 1");
  const Int& a = eq.a;
  const Int& b = eq.b;
  const Int g = gcd(a, b);
  const Int bg = b / g;
  const Int ag_inv = mod_inverse(mod_floor(a / g, bg), bg);
  std::vector<MonoSolution> out;
  for (Int z = 1; z <= N; ++z) {
    const Int pz = eq.p(z);
    // x must keep y = (pz - a*x)/b inside [1, N]:
    Int xlo = div_ceil(pz - b * N, a);
    if (xlo < 1) xlo = 1;
    Int xhi = div_floor(pz - b, a);
    if (xhi > N) xhi = N;
    if (xlo > xhi) continue;
    // a*x = pz (mod b) needs g | pz and then x = x0 (mod b/g).
    if (!divisible(pz, g)) continue;
    const Int x0 = mod_floor(ag_inv * mod_floor(pz / g, bg), bg);
    Int x = xlo + mod_floor(x0 - xlo, bg);
    if (x > xhi) continue;
    const int cz = colour(z);
    for (; x <= xhi; x += bg) {
      if (colour(x) != cz) continue;
      const Int y = (pz - a * x) / b;
      if (colour(y) != cz) continue;
      out.push_back({x, y, z, cz});
    }
  }
  return out;
}

std::optional<Triple> lift_residue_triple(const EquationSpec& eq, const Int& m,
                                          const ResidueTriple& triple,
                                          const Int& K, std::uint64_t budget) {
  if (m < 1) throw PreconditionError("lift_residue_triple: m must be positive");
  if (K < 1) throw PreconditionError("lift_residue_triple: K must be >= 1");
  const Int& a = eq.a;
  const Int& b = eq.b;
  const Int xb = mod_floor(triple.x, m);
  const Int yb = mod_floor(triple.y, m);
  const Int zb = mod_floor(triple.z, m);
  if (mod_floor(a * xb + b * yb - eq.p.eval_mod(zb, m), m) != 0)
    throw PreconditionError(
        "lift_residue_triple: the triple does not solve the equation mod m");

  const Int g = gcd(a, b);
  const ExtGcdResult eg = ext_gcd(a, b);
  const Int ag = a / g;
  const Int bg = b / g;
  Int alpha_min = div_ceil(K - xb, m);
  if (alpha_min < 0) alpha_min = 0;
  Int beta_min = div_ceil(K - yb, m);
  if (beta_min < 0) beta_min = 0;

  // Walk up the z class; for each candidate solve
  //   a*alpha + b*beta = (p(z) - a*xb - b*yb)/m =: S
  // over integers with alpha >= alpha_min, beta >= beta_min, which keeps
  // x = xb + alpha*m and y = yb + beta*m at least K.  The general solution
  // alpha = r*S/g + (b/g)w, beta = s*S/g - (a/g)w admits such a w exactly
  // when ceil((alpha_min - r*S/g)/(b/g)) <= floor((s*S/g - beta_min)/(a/g));
  // taking the smallest such w makes the result deterministic.
  Int z = zb == 0 ? m : zb;
  for (std::uint64_t i = 0; i < budget; ++i, z += m) {
    if (z < K) continue;
    const Int num = eq.p(z) - a * xb - b * yb;
    if (num < 0 || !divisible(num, m)) continue;
    const Int S = num / m;
    if (!divisible(S, g)) continue;
    const Int Sg = S / g;
    const Int wlo = div_ceil(alpha_min - eg.r * Sg, bg);
    const Int whi = div_floor(eg.s * Sg - beta_min, ag);
    if (wlo > whi) continue;
    const Int alpha = eg.r * Sg + bg * wlo;
    const Int beta = eg.s * Sg - ag * wlo;
    Triple sol{xb + alpha * m, yb + beta * m, z};
    if (a * sol.x + b * sol.y != eq.p(z) || sol.x < K || sol.y < K || sol.z < K ||
        mod_floor(sol.x - xb, m) != 0 || mod_floor(sol.y - yb, m) != 0)
      throw Error("lift_residue_triple: internal invariant violated");
    return sol;
  }
  return std::nullopt;
}

AvoidanceVerdict check_periodic_avoidance(const EquationSpec& eq,
                                          const PeriodicColouring& colouring,
                                          std::uint64_t lift_budget) {
  const long m = colouring.modulus;
  const Int M(m);
  // Residue tables make the triple scan pure machine-word work.
  std::vector<long> pmod(static_cast<std::size_t>(m));
  for (long z = 0; z < m; ++z)
    pmod[static_cast<std::size_t>(z)] = to_long(eq.p.eval_mod(z, M));
  const long am = to_long(mod_floor(eq.a, M));
  const long bm = to_long(mod_floor(eq.b, M));

  AvoidanceVerdict verdict;
  for (long x = 0; x < m; ++x) {
    const int sx = colouring.signs[static_cast<std::size_t>(x)];
    for (long y = 0; y < m; ++y) {
      if (colouring.signs[static_cast<std::size_t>(y)] != sx) continue;
      const long lhs = static_cast<long>(
          (static_cast<long long>(am) * x + static_cast<long long>(bm) * y) % m);
      for (long z = 0; z < m; ++z) {
        if (colouring.signs[static_cast<std::size_t>(z)] != sx) continue;
        if (pmod[static_cast<std::size_t>(z)] != lhs) continue;
        ResidueTriple triple{x, y, z};
        verdict.violations.push_back(
            {triple, sx, lift_residue_triple(eq, M, triple, 1, lift_budget)});
      }
    }
  }
  verdict.avoids = verdict.violations.empty();
  return verdict;
}

namespace {

// Not-all-equal constraint system over residues with signs +1/-1.
// Binary constraints force two residues to differ; ternary constraints
// forbid all three being equal.
class NaeSolver {
 public:
  NaeSolver(long m, std::set<std::pair<long, long>> pairs,
            std::set<std::array<long, 3>> triples)
      : m_(m), pairs_(pairs.begin(), pairs.end()),
        triples_(triples.begin(), triples.end()),
        sign_(static_cast<std::size_t>(m), 0),
        pair_index_(static_cast<std::size_t>(m)),
        triple_index_(static_cast<std::size_t>(m)) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      pair_index_[static_cast<std::size_t>(pairs_[i].first)].push_back(i);
      pair_index_[static_cast<std::size_t>(pairs_[i].second)].push_back(i);
    }
    for (std::size_t i = 0; i < triples_.size(); ++i)
      for (long var : triples_[i])
        triple_index_[static_cast<std::size_t>(var)].push_back(i);
    for (long v = 0; v < m_; ++v)
      if (!pair_index_[static_cast<std::size_t>(v)].empty() ||
          !triple_index_[static_cast<std::size_t>(v)].empty())
        constrained_.push_back(v);
  }

  // First satisfying assignment in branch order (+1 before -1, residues
  // ascending, lowest constrained residue pinned to +1), or nothing.
  std::optional<std::vector<int>> solve() {
    if (constrained_.empty()) return finish();
    const std::size_t mark = trail_.size();
    if (assign(constrained_[0], 1) && dfs(1)) return finish();
    undo(mark);
    return std::nullopt;
  }

 private:
  std::optional<std::vector<int>> finish() {
    std::vector<int> out(sign_);
    for (int& s : out)
      if (s == 0) s = 1;  // unconstrained residues default to +1
    return out;
  }

  bool dfs(std::size_t next) {
    while (next < constrained_.size() &&
           sign_[static_cast<std::size_t>(constrained_[next])] != 0)
      ++next;
    if (next == constrained_.size()) return true;
    const long var = constrained_[next];
    for (int choice : {1, -1}) {
      const std::size_t mark = trail_.size();
      if (assign(var, choice) && dfs(next + 1)) return true;
      undo(mark);
    }
    return false;
  }

  // Unit propagation: a forced pair partner, or the third member of a
  // triple whose other two just became equal, is assigned immediately.
  bool assign(long var, int s) {
    const auto idx = static_cast<std::size_t>(var);
    if (sign_[idx] != 0) return sign_[idx] == s;
    sign_[idx] = s;
    trail_.push_back(var);
    for (std::size_t pi : pair_index_[idx]) {
      const auto& [p, q] = pairs_[pi];
      if (!assign(p == var ? q : p, -s)) return false;
    }
    for (std::size_t ti : triple_index_[idx]) {
      const auto& t = triples_[ti];
      const int s0 = sign_[static_cast<std::size_t>(t[0])];
      const int s1 = sign_[static_cast<std::size_t>(t[1])];
      const int s2 = sign_[static_cast<std::size_t>(t[2])];
      if (s0 != 0 && s1 != 0 && s2 != 0) {
        if (s0 == s1 && s1 == s2) return false;
      } else if (s0 != 0 && s0 == s1) {
        if (!assign(t[2], -s0)) return false;
      } else if (s0 != 0 && s0 == s2) {
        if (!assign(t[1], -s0)) return false;
      } else if (s1 != 0 && s1 == s2) {
        if (!assign(t[0], -s1)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      sign_[static_cast<std::size_t>(trail_.back())] = 0;
      trail_.pop_back();
    }
  }

  long m_;
  std::vector<std::pair<long, long>> pairs_;
  std::vector<std::array<long, 3>> triples_;
  std::vector<int> sign_;
  std::vector<std::vector<std::size_t>> pair_index_;
  std::vector<std::vector<std::size_t>> triple_index_;
  std::vector<long> constrained_;
  std::vector<long> trail_;
};

}  // namespace

std::optional<PeriodicColouring> search_avoiding_colouring(const EquationSpec& eq,
                                                           long m, long ceiling) {
  if (m < 1)
    throw PreconditionError("search_avoiding_colouring: m must be >= 1");
  if (m > ceiling)
    throw PreconditionError("search_avoiding_colouring: m = " + std::to_string(m) +
                            " exceeds the search ceiling " + std::to_string(ceiling));

  const Int M(m);
  std::vector<long> pmod(static_cast<std::size_t>(m));
  for (long z = 0; z < m; ++z)
    pmod[static_cast<std::size_t>(z)] = to_long(eq.p.eval_mod(z, M));
  const long am = to_long(mod_floor(eq.a, M));
  const long bm = to_long(mod_floor(eq.b, M));

  // Each residue solution of the congruence becomes a constraint on the
  // signs.  With all three residues equal no 2-colouring can help; with two
  // distinct residues "not all equal" collapses to "the two must differ".
  std::set<std::pair<long, long>> pairs;
  std::set<std::array<long, 3>> triples;
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y) {
      const long lhs = static_cast<long>(
          (static_cast<long long>(am) * x + static_cast<long long>(bm) * y) % m);
      for (long z = 0; z < m; ++z) {
        if (pmod[static_cast<std::size_t>(z)] != lhs) continue;
        std::array<long, 3> key{x, y, z};
        std::sort(key.begin(), key.end());
        if (key[0] == key[2]) return std::nullopt;  // x=y=z: always monochromatic
        if (key[0] == key[1]) pairs.insert({key[0], key[2]});
        else if (key[1] == key[2]) pairs.insert({key[0], key[1]});
        else triples.insert(key);
      }
    }

  auto solution = NaeSolver(m, std::move(pairs), std::move(triples)).solve();
  if (!solution) return std::nullopt;
  return PeriodicColouring(m, std::move(*solution));
}

}  // namespace ramsey
