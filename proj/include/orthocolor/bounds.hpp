#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "orthocolor/graph.hpp"

namespace orthocolor {

enum class BoundName {
  Degree,
  Clique,
  AverageDegree,
  EdgeCount,
  SupergraphRemark,
  Mnp,
  CyLower,
  CyUpperOchi,
  OchiLowerAvg,
  OchiLowerClique,
  Best,
};

enum class Direction { Upper, Lower };

// Reason codes for "the formula says nothing here".
enum class Inapplicable {
  OrderOutOfRange,
  CliquePreconditions,
  NoCliquePair,
  RemarkRange,
  TooFewCells,
  DegenerateDenominator,
  KTooSmall,
};

const char* to_string(BoundName name);
const char* to_string(Inapplicable reason);

/// One bound evaluation. Inapplicability is a value, not an error, so
/// aggregators can tell "formula says nothing" from "invalid input".
/// Unbounded appears only when n >= v (rainbow colorings are
/// self-orthogonal, so no finite cap exists).
struct BoundReport {
  enum class Kind { Value, Unbounded, NotApplicable };

  BoundName bound = BoundName::Degree;
  Direction direction = Direction::Upper;
  Kind kind = Kind::Value;
  long long value = 0;  // meaningful iff kind == Kind::Value
  Inapplicable reason = Inapplicable::OrderOutOfRange;  // iff NotApplicable
  bool conditional = false;  // holds only under a stated premise
  bool heuristic = false;    // clique search fell back to the greedy path
  nlohmann::json params = nlohmann::json::object();

  bool applicable() const { return kind != Kind::NotApplicable; }
  bool has_value() const { return kind == Kind::Value; }

  nlohmann::json to_json() const;
};

// The four theorem bounds plus the supergraph remark, all in exact integer
// arithmetic (the average degree is carried as 2e/v, never floated).

BoundReport degree_bound(long long v, long long max_degree, long long n);

BoundReport clique_bound(long long r, long long s, long long j, long long n);

struct CliqueSearchBudget {
  int exhaustive_threshold = 40;  // v <= this: enumerate all clique pairs
  double time_cap_seconds = 5.0;
  long long max_cliques = 100000;  // enumeration safety cap
};

/// Minimizes clique_bound over pairs of disjoint cliques (A,B) with
/// j = min over b in B of |N(b) & A|. Exhaustive for small graphs;
/// otherwise a deterministic greedy pass over maximal cliques, with the
/// report marked heuristic. The witnessing (A,B,j) lands in params.
BoundReport clique_bound_search(const Graph& g, int n,
                                const CliqueSearchBudget& budget = {});

BoundReport average_degree_bound(long long v, long long e, long long n);

BoundReport edge_bound(long long v, long long e, long long n);

BoundReport supergraph_remark_bound(long long v, long long n);

/// All five upper bounds in evaluation order.
std::vector<BoundReport> all_upper_bounds(const Graph& g, int n,
                                          const CliqueSearchBudget& = {});

/// Minimum applicable upper bound; params name the winner.
BoundReport best_upper_bound(const Graph& g, int n,
                             const CliqueSearchBudget& = {});

/// Abdel-Ghaffar bound on partial latin squares of order n sharing p cells.
BoundReport mnp_bound(long long n, long long p);

/// Lower bound on N(G,n), valid only under the premise N(G,n) >= 2; always
/// flagged conditional. Computed in binary floating point (+-1 ulp caveat);
/// both raw branch values are recorded in params.
BoundReport cy_lower_bound(long long v, long long max_degree, long long n);

/// Upper bound on the k-orthogonal chromatic number; the ceiling is applied
/// to the irrational branch only when it wins.
BoundReport cy_upper_ochi(long long v, long long max_degree, long long k);

/// Lower bound on Ochi_k from the average degree, exact rational arithmetic.
BoundReport ochi_lower_avg(long long v, long long e, long long k);

/// Lower bound on Ochi_k from a clique pair, conditional on Ochi_k < r+s.
BoundReport ochi_lower_clique(long long r, long long s, long long j,
                              long long k);

}  // namespace orthocolor
