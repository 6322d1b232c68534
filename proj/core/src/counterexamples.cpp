#include "nfl/counterexamples.hpp"

#include "nfl/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace nfl {

namespace {

// ---------------------------------------------------------------------------
// Exact linear algebra shared by the TSP and sphere deciders.
// ---------------------------------------------------------------------------

struct LinearSolution {
  bool consistent = true;
  std::vector<Rat> particular;             // free variables set to zero
  std::vector<std::vector<Rat>> nullspace; // basis of the homogeneous space
  std::vector<Rat> multipliers;            // inconsistent: y with yA=0, yb!=0
  Rat inconsistent_rhs = 0;                // y*b for that y
};

// Gauss-Jordan over the rationals with multiplier tracking: every row
// operation is mirrored on an identity block, so each reduced row remains an
// explicit linear combination of the original rows. An all-zero reduced row
// with nonzero rhs therefore hands us the inconsistency certificate directly.
LinearSolution solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                            std::size_t cols) {
  const std::size_t m = a.size();
  std::vector<std::vector<Rat>> y(m, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) y[i][i] = 1;

  std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m; ++col) {
    std::size_t pr = rank;
    while (pr < m && a[pr][col] == 0) ++pr;
    if (pr == m) continue;
    std::swap(a[pr], a[rank]);
    std::swap(b[pr], b[rank]);
    std::swap(y[pr], y[rank]);
    const Rat inv = Rat(1) / a[rank][col];
    for (std::size_t j = 0; j < cols; ++j) a[rank][j] *= inv;
    b[rank] *= inv;
    for (std::size_t j = 0; j < m; ++j) y[rank][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rat factor = a[i][col];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= factor * a[rank][j];
      b[i] -= factor * b[rank];
      for (std::size_t j = 0; j < m; ++j) y[i][j] -= factor * y[rank][j];
    }
    pivots.emplace_back(rank, col);
    ++rank;
  }

  LinearSolution out;
  for (std::size_t i = rank; i < m; ++i) {
    if (b[i] != 0) {
      out.consistent = false;
      out.multipliers = y[i];
      out.inconsistent_rhs = b[i];
      return out;
    }
  }
  out.particular.assign(cols, Rat(0));
  for (const auto& [row, col] : pivots) out.particular[col] = b[row];
  std::vector<char> is_pivot(cols, 0);
  for (const auto& [row, col] : pivots) is_pivot[col] = 1;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[fc] = 1;
    for (const auto& [row, col] : pivots) v[col] = -a[row][fc];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// MAX-2-SAT
// ---------------------------------------------------------------------------

void check_literal(const Literal& lit, int n) {
  if (lit.var < 0 || lit.var >= n)
    throw Error(ErrorKind::precondition, "literal variable out of range");
}

} // namespace

Max2SatInstance::Max2SatInstance(int vars, std::vector<Clause> cs)
    : n(vars), clauses(std::move(cs)) {
  if (n < 1)
    throw Error(ErrorKind::precondition, "formula needs at least one variable");
  if (n > 20)
    throw Error(ErrorKind::cap_exceeded, "more than 20 variables");
  for (const auto& c : clauses) {
    check_literal(c.a, n);
    check_literal(c.b, n);
    if (c.a.var == c.b.var)
      throw Error(ErrorKind::precondition,
                  "clause literals must use distinct variables");
  }
}

bool Max2SatInstance::clause_satisfied(int clause_index, int assignment) const {
  if (clause_index < 0 || clause_index >= static_cast<int>(clauses.size()))
    throw Error(ErrorKind::precondition, "clause index out of range");
  if (assignment < 0 || assignment >= (1 << n))
    throw Error(ErrorKind::precondition, "assignment out of range");
  const auto& c = clauses[static_cast<std::size_t>(clause_index)];
  // Variable 0 is the most significant bit of the assignment index.
  const auto lit_true = [&](const Literal& lit) {
    const bool bit = ((assignment >> (n - 1 - lit.var)) & 1) != 0;
    return bit == lit.positive;
  };
  return lit_true(c.a) || lit_true(c.b);
}

ValueTable max2sat_table(const Max2SatInstance& inst, std::uint64_t cap) {
  const std::uint64_t points = std::uint64_t{1} << inst.n;
  if (points > cap)
    throw Error(ErrorKind::cap_exceeded,
                std::to_string(points) + " assignments exceed the cap");
  ValueTable table;
  table.orientation = Orientation::maximize;
  table.values.reserve(points);
  for (int x = 0; x < static_cast<int>(points); ++x) {
    int satisfied = 0;
    for (int c = 0; c < static_cast<int>(inst.clauses.size()); ++c)
      if (inst.clause_satisfied(c, x)) ++satisfied;
    table.values.push_back(Rat(satisfied));
  }
  return table;
}

Max2SatSearch max2sat_realizable(const ValueTable& table, int n) {
  if (n < 1)
    throw Error(ErrorKind::precondition, "formula needs at least one variable");
  if (n > 20) throw Error(ErrorKind::cap_exceeded, "more than 20 variables");
  const int points = 1 << n;
  if (table.size() != points)
    throw Error(ErrorKind::precondition,
                "table length " + std::to_string(table.size()) + " is not 2^" +
                    std::to_string(n));
  if (table.orientation != Orientation::maximize)
    throw Error(ErrorKind::precondition, "satisfied-clause counts are maximized");

  long long max_value = 0;
  std::vector<long long> target(static_cast<std::size_t>(points));
  for (int x = 0; x < points; ++x) {
    const Rat& v = table.at(x);
    const BigInt num = numerator(v);
    const BigInt den = denominator(v);
    if (den != 1 || num < 0)
      throw Error(ErrorKind::precondition, "non-integer or negative table values");
    target[static_cast<std::size_t>(x)] = num.convert_to<long long>();
    max_value = std::max(max_value, target[static_cast<std::size_t>(x)]);
  }

  // The 4*C(n,2) distinct clause types, each with its satisfaction column.
  // Every 2-clause is satisfied at three of the four settings of its variable
  // pair, so a type's multiplicity in any realizing formula is at most the
  // table maximum; multiplicity vectors are searched depth-first with
  // per-point running-sum pruning on both sides (no overshoot below zero, no
  // residual beyond what the remaining types can still cover).
  struct ClauseType {
    Clause clause;
    std::vector<char> satisfied;
  };
  std::vector<ClauseType> types;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (const auto& [pa, pb] : {std::pair{true, true}, std::pair{true, false},
                                   std::pair{false, true}, std::pair{false, false}}) {
        Clause c{Literal{i, pa}, Literal{j, pb}};
        Max2SatInstance probe(n, {c});
        ClauseType type;
        type.clause = c;
        type.satisfied.resize(static_cast<std::size_t>(points));
        for (int x = 0; x < points; ++x)
          type.satisfied[static_cast<std::size_t>(x)] =
              probe.clause_satisfied(0, x) ? 1 : 0;
        types.push_back(std::move(type));
      }
    }
  }

  Max2SatSearch out;
  out.clause_types = static_cast<int>(types.size());
  out.max_multiplicity = BigInt(max_value);
  out.candidates_total = 1;
  for (std::size_t t = 0; t < types.size(); ++t)
    out.candidates_total *= BigInt(max_value + 1);

  // suffix_cover[t][x]: how many of types t.. satisfy x — the most one more
  // unit of every remaining multiplicity could contribute is max_value times
  // this count.
  std::vector<std::vector<long long>> suffix_cover(
      types.size() + 1, std::vector<long long>(static_cast<std::size_t>(points), 0));
  for (std::size_t t = types.size(); t-- > 0;) {
    for (int x = 0; x < points; ++x)
      suffix_cover[t][static_cast<std::size_t>(x)] =
          suffix_cover[t + 1][static_cast<std::size_t>(x)] +
          types[t].satisfied[static_cast<std::size_t>(x)];
  }

  std::vector<long long> residual = target;
  std::vector<long long> chosen(types.size(), 0);
  std::vector<Clause> found;
  bool done = false;

  const std::function<void(std::size_t)> dfs = [&](std::size_t t) {
    if (done) return;
    ++out.nodes_explored;
    if (t == types.size()) {
      for (int x = 0; x < points; ++x)
        if (residual[static_cast<std::size_t>(x)] != 0) return;
      for (std::size_t i = 0; i < types.size(); ++i)
        for (long long k = 0; k < chosen[i]; ++k) found.push_back(types[i].clause);
      done = true;
      return;
    }
    for (int x = 0; x < points; ++x) {
      if (residual[static_cast<std::size_t>(x)] >
          max_value * suffix_cover[t][static_cast<std::size_t>(x)])
        return; // the remaining types cannot close this point's residual
    }
    long long bound = max_value;
    for (int x = 0; x < points; ++x)
      if (types[t].satisfied[static_cast<std::size_t>(x)])
        bound = std::min(bound, residual[static_cast<std::size_t>(x)]);
    for (long long mult = 0; mult <= bound && !done; ++mult) {
      chosen[t] = mult;
      if (mult > 0) {
        for (int x = 0; x < points; ++x)
          residual[static_cast<std::size_t>(x)] -=
              types[t].satisfied[static_cast<std::size_t>(x)];
      }
      dfs(t + 1);
    }
    if (!done) {
      for (int x = 0; x < points; ++x)
        residual[static_cast<std::size_t>(x)] +=
            chosen[t] * types[t].satisfied[static_cast<std::size_t>(x)];
      chosen[t] = 0;
    }
  };
  dfs(0);

  if (done) out.instance = Max2SatInstance(n, std::move(found));
  return out;
}

// ---------------------------------------------------------------------------
// TSP
// ---------------------------------------------------------------------------

TspInstance::TspInstance(int n, std::vector<std::vector<Rat>> matrix)
    : cities(n), cost(std::move(matrix)) {
  if (cities < 3)
    throw Error(ErrorKind::precondition, "instance needs at least three cities");
  if (static_cast<int>(cost.size()) != cities)
    throw Error(ErrorKind::precondition, "cost matrix is not cities x cities");
  for (int i = 0; i < cities; ++i) {
    if (static_cast<int>(cost[static_cast<std::size_t>(i)].size()) != cities)
      throw Error(ErrorKind::precondition, "cost matrix is not cities x cities");
    if (cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
      throw Error(ErrorKind::precondition, "cost matrix diagonal must be zero");
    for (int j = 0; j < i; ++j) {
      if (cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          cost[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw Error(ErrorKind::precondition, "cost matrix must be symmetric");
    }
  }
}

void validate_tour(const Tour& tour, int cities) {
  if (cities < 3)
    throw Error(ErrorKind::precondition, "tours need at least three cities");
  if (static_cast<int>(tour.size()) != cities)
    throw Error(ErrorKind::precondition, "tour length does not match city count");
  std::vector<char> seen(static_cast<std::size_t>(cities), 0);
  for (int city : tour) {
    if (city < 1 || city > cities || seen[static_cast<std::size_t>(city - 1)])
      throw Error(ErrorKind::precondition, "tour is not a permutation of 1..n");
    seen[static_cast<std::size_t>(city - 1)] = 1;
  }
}

Tour canonical_tour(const Tour& tour) {
  validate_tour(tour, static_cast<int>(tour.size()));
  const std::size_t n = tour.size();
  std::size_t at_one = 0;
  while (tour[at_one] != 1) ++at_one;
  Tour forward(n);
  for (std::size_t i = 0; i < n; ++i) forward[i] = tour[(at_one + i) % n];
  Tour backward(n);
  backward[0] = 1;
  for (std::size_t i = 1; i < n; ++i) backward[i] = forward[n - i];
  return std::min(forward, backward);
}

Rat tour_length(const TspInstance& inst, const Tour& tour) {
  validate_tour(tour, inst.cities);
  Rat total = 0;
  const std::size_t n = tour.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int a = tour[i] - 1;
    const int b = tour[(i + 1) % n] - 1;
    total += inst.cost[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  return total;
}

std::vector<Tour> all_canonical_tours(int cities, std::uint64_t cap) {
  if (cities < 3)
    throw Error(ErrorKind::precondition, "tours need at least three cities");
  BigInt count = 1;
  for (int i = 2; i < cities; ++i) count *= i;
  count /= 2;
  if (count > BigInt(cap))
    throw Error(ErrorKind::cap_exceeded,
                count.str() + " canonical tours exceed the cap");
  std::vector<int> rest;
  for (int c = 2; c <= cities; ++c) rest.push_back(c);
  std::vector<Tour> tours;
  do {
    Tour tour;
    tour.push_back(1);
    tour.insert(tour.end(), rest.begin(), rest.end());
    if (tour == canonical_tour(tour)) tours.push_back(std::move(tour));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return tours;
}

std::vector<Tour> two_opt_neighbors(const Tour& tour, bool full) {
  const int n = static_cast<int>(tour.size());
  const Tour base = canonical_tour(tour);
  std::set<Tour> found;
  const int max_len = full ? n - 2 : 2;
  for (int len = 2; len <= max_len; ++len) {
    for (int start = 0; start < n; ++start) {
      Tour next = base;
      for (int a = 0, b = len - 1; a < b; ++a, --b)
        std::swap(next[static_cast<std::size_t>((start + a) % n)],
                  next[static_cast<std::size_t>((start + b) % n)]);
      found.insert(canonical_tour(next));
    }
  }
  found.erase(base);
  return std::vector<Tour>(found.begin(), found.end());
}

namespace {

std::vector<std::pair<int, int>> tsp_edge_order(int cities) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= cities; ++i)
    for (int j = i + 1; j <= cities; ++j) edges.emplace_back(i, j);
  return edges;
}

std::vector<Rat> tour_edge_row(const Tour& tour, int cities) {
  std::vector<Rat> row(static_cast<std::size_t>(cities * (cities - 1) / 2), Rat(0));
  // Unknowns are the edges (i,j), i < j, 1-based, in lexicographic order.
  std::map<std::pair<int, int>, std::size_t> pos;
  std::size_t k = 0;
  for (int i = 1; i <= cities; ++i)
    for (int j = i + 1; j <= cities; ++j) pos[{i, j}] = k++;
  const std::size_t n = tour.size();
  for (std::size_t s = 0; s < n; ++s) {
    int a = tour[s];
    int b = tour[(s + 1) % n];
    if (a > b) std::swap(a, b);
    row[pos[{a, b}]] += 1;
  }
  return row;
}

// Phase-1 simplex with Bland's rule, exact rationals: find x >= 0 with Ax = b
// or a Farkas vector y with yA >= 0 componentwise and yb < 0.
struct Phase1Outcome {
  bool feasible = false;
  std::vector<Rat> x;
  std::vector<Rat> farkas;
};

Phase1Outcome simplex_phase1(const std::vector<std::vector<Rat>>& a0,
                             const std::vector<Rat>& b0) {
  const std::size_t m = a0.size();
  const std::size_t e = m == 0 ? 0 : a0[0].size();

  std::vector<int> sign(m, 1);
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(e + m, Rat(0)));
  std::vector<Rat> rhs(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    sign[i] = b0[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < e; ++j) t[i][j] = sign[i] * a0[i][j];
    t[i][e + i] = 1;
    rhs[i] = sign[i] * b0[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = e + i;

  // Reduced costs of minimizing the artificial sum; artificial columns start
  // basic, so their reduced costs start at zero.
  std::vector<Rat> obj(e + m, Rat(0));
  for (std::size_t j = 0; j < e + m; ++j) {
    Rat column_sum = 0;
    for (std::size_t i = 0; i < m; ++i) column_sum += t[i][j];
    obj[j] = (j >= e ? Rat(1) : Rat(0)) - column_sum;
  }

  while (true) {
    std::size_t enter = e + m;
    for (std::size_t j = 0; j < e + m; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == e + m) break;
    std::size_t leave = m;
    Rat best_ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rat ratio = rhs[i] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m)
      throw Error(ErrorKind::invariant, "phase-1 objective unbounded");
    const Rat piv = t[leave][enter];
    for (std::size_t j = 0; j < e + m; ++j) t[leave][j] /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rat factor = t[i][enter];
      for (std::size_t j = 0; j < e + m; ++j) t[i][j] -= factor * t[leave][j];
      rhs[i] -= factor * rhs[leave];
    }
    const Rat obj_factor = obj[enter];
    for (std::size_t j = 0; j < e + m; ++j) obj[j] -= obj_factor * t[leave][j];
    basis[leave] = enter;
  }

  Rat artificial_sum = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= e) artificial_sum += rhs[i];

  Phase1Outcome out;
  if (artificial_sum == 0) {
    out.feasible = true;
    out.x.assign(e, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < e) out.x[basis[i]] = rhs[i];
    return out;
  }
  // Simplex multipliers read off the artificial columns: reduced cost there is
  // 1 - y_i. Undo the row sign flips to get the certificate for the original
  // system.
  out.farkas.assign(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    const Rat y = Rat(1) - obj[e + i];
    out.farkas[i] = -Rat(sign[i]) * y;
  }
  return out;
}

} // namespace

TspRealizability tsp_realizable(const std::vector<TspConstraint>& constraints,
                                int cities, bool require_nonnegative) {
  if (cities < 3)
    throw Error(ErrorKind::precondition, "tours need at least three cities");
  if (constraints.empty())
    throw Error(ErrorKind::precondition, "no constraints given");
  const std::size_t e = static_cast<std::size_t>(cities * (cities - 1) / 2);

  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (const auto& c : constraints) {
    validate_tour(c.tour, cities);
    a.push_back(tour_edge_row(c.tour, cities));
    b.push_back(c.length);
  }

  TspRealizability out;
  out.edge_order = tsp_edge_order(cities);

  const LinearSolution sol = solve_linear(a, b, e);
  if (!sol.consistent) {
    // Check the certificate against the original rows before trusting it.
    for (std::size_t j = 0; j < e; ++j) {
      Rat combo = 0;
      for (std::size_t i = 0; i < a.size(); ++i) combo += sol.multipliers[i] * a[i][j];
      if (combo != 0)
        throw Error(ErrorKind::invariant, "inconsistency certificate failed");
    }
    Rat rhs_combo = 0;
    for (std::size_t i = 0; i < a.size(); ++i) rhs_combo += sol.multipliers[i] * b[i];
    if (rhs_combo == 0)
      throw Error(ErrorKind::invariant, "inconsistency certificate failed");
    out.status = TspFeasibility::inconsistent;
    out.linear_certificate = TspLinearCertificate{sol.multipliers, rhs_combo};
    return out;
  }

  std::vector<Rat> x = sol.particular;
  if (require_nonnegative) {
    const Phase1Outcome phase1 = simplex_phase1(a, b);
    if (!phase1.feasible) {
      TspFarkasCertificate cert;
      cert.multipliers = phase1.farkas;
      cert.combined_row.assign(e, Rat(0));
      for (std::size_t j = 0; j < e; ++j)
        for (std::size_t i = 0; i < a.size(); ++i)
          cert.combined_row[j] += cert.multipliers[i] * a[i][j];
      cert.combined_rhs = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        cert.combined_rhs += cert.multipliers[i] * b[i];
      for (const Rat& v : cert.combined_row)
        if (v < 0) throw Error(ErrorKind::invariant, "Farkas certificate failed");
      if (cert.combined_rhs >= 0)
        throw Error(ErrorKind::invariant, "Farkas certificate failed");
      out.status = TspFeasibility::infeasible_nonnegative;
      out.farkas_certificate = std::move(cert);
      return out;
    }
    x = phase1.x;
  }

  std::vector<std::vector<Rat>> cost(
      static_cast<std::size_t>(cities),
      std::vector<Rat>(static_cast<std::size_t>(cities), Rat(0)));
  for (std::size_t k = 0; k < e; ++k) {
    const auto [i, j] = out.edge_order[k];
    cost[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = x[k];
    cost[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = x[k];
  }
  TspInstance witness(cities, std::move(cost));
  for (const auto& c : constraints) {
    if (tour_length(witness, c.tour) != c.length)
      throw Error(ErrorKind::invariant, "witness fails a tour constraint");
  }
  out.status = TspFeasibility::consistent;
  out.witness = std::move(witness);
  return out;
}

TspLandscape tsp_landscape(const TspInstance& inst, bool full_two_opt,
                           std::uint64_t cap) {
  std::vector<Tour> tours = all_canonical_tours(inst.cities, cap);
  std::map<Tour, int> index;
  for (int i = 0; i < static_cast<int>(tours.size()); ++i)
    index[tours[static_cast<std::size_t>(i)]] = i;

  std::set<std::pair<int, int>> edge_set;
  for (int i = 0; i < static_cast<int>(tours.size()); ++i) {
    for (const Tour& nb :
         two_opt_neighbors(tours[static_cast<std::size_t>(i)], full_two_opt)) {
      const int j = index.at(nb);
      edge_set.insert({std::min(i, j), std::max(i, j)});
    }
  }
  const std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());

  ValueTable table;
  table.orientation = Orientation::minimize;
  for (const Tour& tour : tours) table.values.push_back(tour_length(inst, tour));

  return TspLandscape{SearchSpace::with_edges(static_cast<int>(tours.size()), edges),
                      std::move(table), std::move(tours)};
}

// ---------------------------------------------------------------------------
// Boolean GP / symbolic regression semantics
// ---------------------------------------------------------------------------

namespace {

std::size_t check_semantics(const std::vector<BitSemantics>& programs) {
  if (programs.empty())
    throw Error(ErrorKind::precondition, "no programs given");
  const std::size_t cases = programs[0].size();
  if (cases == 0)
    throw Error(ErrorKind::precondition, "programs need at least one case");
  for (const auto& p : programs) {
    if (p.size() != cases)
      throw Error(ErrorKind::precondition, "programs disagree on case count");
    for (std::uint8_t bit : p)
      if (bit > 1)
        throw Error(ErrorKind::precondition, "semantics entries must be 0 or 1");
  }
  return cases;
}

} // namespace

std::vector<int> boolgp_objective(const std::vector<BitSemantics>& programs,
                                  const BitSemantics& t) {
  const std::size_t cases = check_semantics(programs);
  if (t.size() != cases)
    throw Error(ErrorKind::precondition, "target disagrees on case count");
  std::vector<int> out;
  out.reserve(programs.size());
  for (const auto& p : programs) {
    int agree = 0;
    for (std::size_t i = 0; i < cases; ++i)
      if (p[i] == t[i]) ++agree;
    out.push_back(agree);
  }
  return out;
}

BoolGpSearch boolgp_realizable(const std::vector<BitSemantics>& programs,
                               const std::vector<int>& targets,
                               std::uint64_t cap) {
  const std::size_t cases = check_semantics(programs);
  if (targets.size() != programs.size())
    throw Error(ErrorKind::precondition, "one target value per program required");
  for (int v : targets)
    if (v < 0 || v > static_cast<int>(cases))
      throw Error(ErrorKind::precondition, "target agreement counts out of range");
  if (cases > 62 || (std::uint64_t{1} << cases) > cap)
    throw Error(ErrorKind::cap_exceeded, "2^cases candidates exceed the cap");

  BoolGpSearch out;
  out.candidates_total = BigInt(1) << cases;
  const std::uint64_t total = std::uint64_t{1} << cases;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    BitSemantics t(cases);
    for (std::size_t i = 0; i < cases; ++i)
      t[i] = static_cast<std::uint8_t>((bits >> (cases - 1 - i)) & 1);
    if (boolgp_objective(programs, t) == targets) {
      out.target = std::move(t);
      return out;
    }
  }
  return out;
}

SpheresResult spheres_intersect(const std::vector<RatSemantics>& centers,
                                const std::vector<Rat>& radii_squared) {
  if (centers.empty())
    throw Error(ErrorKind::precondition, "no spheres given");
  const std::size_t dim = centers[0].size();
  if (dim == 0)
    throw Error(ErrorKind::precondition, "centers need at least one coordinate");
  for (const auto& c : centers)
    if (c.size() != dim)
      throw Error(ErrorKind::precondition, "centers disagree on dimension");
  if (radii_squared.size() != centers.size())
    throw Error(ErrorKind::precondition, "one squared radius per center required");
  for (const Rat& r2 : radii_squared)
    if (r2 < 0)
      throw Error(ErrorKind::precondition, "squared radii must be nonnegative");

  const auto norm2 = [dim](const RatSemantics& v) {
    Rat out = 0;
    for (std::size_t d = 0; d < dim; ++d) out += v[d] * v[d];
    return out;
  };

  // Subtracting sphere 1's equation from sphere i's removes the quadratic
  // term: 2(p_i - p_1).t = |p_i|^2 - |p_1|^2 - (r_i^2 - r_1^2).
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (std::size_t i = 1; i < centers.size(); ++i) {
    std::vector<Rat> row(dim);
    for (std::size_t d = 0; d < dim; ++d)
      row[d] = 2 * (centers[i][d] - centers[0][d]);
    a.push_back(std::move(row));
    b.push_back(norm2(centers[i]) - norm2(centers[0]) -
                (radii_squared[i] - radii_squared[0]));
  }

  SpheresResult out;
  const LinearSolution sol = solve_linear(a, b, dim);
  if (!sol.consistent) {
    out.intersects = false;
    out.linear_inconsistency = sol.inconsistent_rhs;
    return out;
  }

  const std::vector<Rat>& t0 = sol.particular;
  const auto& v = sol.nullspace;
  const std::size_t free_dim = v.size();

  std::vector<Rat> w(dim);
  for (std::size_t d = 0; d < dim; ++d) w[d] = t0[d] - centers[0][d];

  std::vector<Rat> alpha(free_dim, Rat(0));
  std::vector<std::vector<Rat>> gram(free_dim, std::vector<Rat>(free_dim, Rat(0)));
  if (free_dim > 0) {
    // Minimize |w + V.alpha|^2: solve the normal equations (V^T V) alpha = -V^T w.
    std::vector<Rat> rhs(free_dim, Rat(0));
    for (std::size_t i = 0; i < free_dim; ++i) {
      for (std::size_t j = 0; j < free_dim; ++j) {
        Rat dot = 0;
        for (std::size_t d = 0; d < dim; ++d) dot += v[i][d] * v[j][d];
        gram[i][j] = dot;
      }
      Rat dot = 0;
      for (std::size_t d = 0; d < dim; ++d) dot += v[i][d] * w[d];
      rhs[i] = -dot;
    }
    const LinearSolution normal = solve_linear(gram, rhs, free_dim);
    if (!normal.consistent)
      throw Error(ErrorKind::invariant, "normal equations inconsistent");
    alpha = normal.particular;
  }

  std::vector<Rat> best(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    best[d] = t0[d];
    for (std::size_t i = 0; i < free_dim; ++i) best[d] += alpha[i] * v[i][d];
  }
  Rat q_min = -radii_squared[0];
  for (std::size_t d = 0; d < dim; ++d) {
    const Rat diff = best[d] - centers[0][d];
    q_min += diff * diff;
  }
  out.min_residual = q_min;
  out.intersects = free_dim > 0 ? q_min <= 0 : q_min == 0;
  if (!out.intersects) return out;

  const auto on_all_spheres = [&](const RatSemantics& t) {
    for (std::size_t i = 0; i < centers.size(); ++i) {
      Rat sum = 0;
      for (std::size_t d = 0; d < dim; ++d) {
        const Rat diff = t[d] - centers[i][d];
        sum += diff * diff;
      }
      if (sum != radii_squared[i]) return false;
    }
    return true;
  };

  if (q_min == 0) {
    if (!on_all_spheres(best))
      throw Error(ErrorKind::invariant, "zero-residual point misses a sphere");
    out.witness = best;
    return out;
  }

  // q_min < 0 strictly: along nullspace direction i the residual is
  // q_min + s^2 * gram[i][i], so a rational witness exists whenever
  // -q_min / gram[i][i] is a rational square.
  const auto rational_sqrt = [](const Rat& q) -> std::optional<Rat> {
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    const BigInt sn = boost::multiprecision::sqrt(num);
    const BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rat(sn, sd);
  };
  for (std::size_t i = 0; i < free_dim; ++i) {
    if (gram[i][i] == 0) continue;
    const Rat s2 = -q_min / gram[i][i];
    const std::optional<Rat> s = rational_sqrt(s2);
    if (!s) continue;
    RatSemantics t = best;
    for (std::size_t d = 0; d < dim; ++d) t[d] += *s * v[i][d];
    if (!on_all_spheres(t))
      throw Error(ErrorKind::invariant, "probed witness misses a sphere");
    out.witness = std::move(t);
    return out;
  }
  return out; // intersects, but no rational witness found along the probes
}

DuplicatedSemanticsResult duplicated_semantics_check(
    const std::vector<std::vector<int>>& equivalence_groups,
    const ValueTable& table) {
  DuplicatedSemanticsResult out;
  for (int g = 0; g < static_cast<int>(equivalence_groups.size()); ++g) {
    const auto& group = equivalence_groups[static_cast<std::size_t>(g)];
    for (int p : group)
      if (p < 0 || p >= table.size())
        throw Error(ErrorKind::precondition, "group point out of range");
    for (std::size_t i = 1; i < group.size(); ++i) {
      if (table.at(group[i]) != table.at(group[0])) {
        out.consistent = false;
        out.offender = std::array<int, 3>{g, group[0], group[i]};
        return out;
      }
    }
  }
  return out;
}

} // namespace nfl
