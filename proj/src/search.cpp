#include "seg/search.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace seg {

std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::exists: return "exists";
    case SearchOutcome::impossible: return "impossible";
    case SearchOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Assignment order: canonical for paths and cycles; for general graphs a
// greedy order that completes vertices as early as possible, since completed
// vertices drive the only strong prune.
std::vector<int> plan_edge_order(const GraphSpec& g) {
  int q = g.size();
  std::vector<int> order(static_cast<size_t>(q));
  std::iota(order.begin(), order.end(), 0);
  if (g.kind != GraphKind::general) return order;

  std::vector<int> remaining(static_cast<size_t>(g.n), 0);
  for (const auto& [u, v] : g.edges) {
    ++remaining[static_cast<size_t>(u) - 1];
    ++remaining[static_cast<size_t>(v) - 1];
  }
  std::vector<char> taken(static_cast<size_t>(q), 0);
  for (int step = 0; step < q; ++step) {
    int best = -1;
    std::tuple<int, int, int> best_key{0, 0, 0};
    for (int e = 0; e < q; ++e) {
      if (taken[static_cast<size_t>(e)]) continue;
      int u = g.edges[static_cast<size_t>(e)].first - 1;
      int v = g.edges[static_cast<size_t>(e)].second - 1;
      int completes = (remaining[static_cast<size_t>(u)] == 1) +
                      (remaining[static_cast<size_t>(v)] == 1);
      std::tuple<int, int, int> key{
          -completes, remaining[static_cast<size_t>(u)] + remaining[static_cast<size_t>(v)], e};
      if (best < 0 || key < best_key) {
        best = e;
        best_key = key;
      }
    }
    taken[static_cast<size_t>(best)] = 1;
    order[static_cast<size_t>(step)] = best;
    --remaining[static_cast<size_t>(g.edges[static_cast<size_t>(best)].first) - 1];
    --remaining[static_cast<size_t>(g.edges[static_cast<size_t>(best)].second) - 1];
  }
  return order;
}

struct Problem {
  const GraphSpec* g = nullptr;
  int q = 0;
  LabelAlphabet ealpha;
  LabelAlphabet valpha;
  std::vector<Label> candidates;              // canonical label order
  std::vector<int> order;                     // position -> original edge index
  std::vector<std::pair<int, int>> slots;     // 0-based endpoints per position
  std::vector<std::pair<int, int>> completes; // vertices completing per position, -1 = none
  std::vector<int> isolated;                  // degree-0 vertices, complete up front
  bool neg_on = false;
  bool rev_on = false;
  SearchMode mode = SearchMode::first;
  std::optional<std::uint64_t> node_limit;
  std::optional<Clock::time_point> deadline;

  bool identity_order() const { return g->kind != GraphKind::general; }
};

Problem build_problem(const GraphSpec& g, const SearchOptions& opts,
                      std::optional<std::uint64_t> node_limit,
                      std::optional<Clock::time_point> deadline) {
  Problem pb;
  pb.g = &g;
  pb.q = g.size();
  pb.ealpha = edge_alphabet(pb.q);
  pb.valpha = vertex_alphabet(g.n);
  pb.candidates = pb.ealpha.members();
  pb.order = plan_edge_order(g);
  pb.slots.reserve(static_cast<size_t>(pb.q));
  std::vector<int> left(static_cast<size_t>(g.n), 0);
  for (const auto& [u, v] : g.edges) {
    ++left[static_cast<size_t>(u) - 1];
    ++left[static_cast<size_t>(v) - 1];
  }
  for (int v = 0; v < g.n; ++v)
    if (left[static_cast<size_t>(v)] == 0) pb.isolated.push_back(v);
  for (int pos = 0; pos < pb.q; ++pos) {
    const auto& e = g.edges[static_cast<size_t>(pb.order[static_cast<size_t>(pos)])];
    int u = e.first - 1, v = e.second - 1;
    pb.slots.emplace_back(u, v);
    std::pair<int, int> done{-1, -1};
    if (--left[static_cast<size_t>(u)] == 0) done.first = u;
    if (--left[static_cast<size_t>(v)] == 0) (done.first < 0 ? done.first : done.second) = v;
    pb.completes.push_back(done);
  }
  pb.neg_on = opts.use_negation_reduction;
  pb.rev_on = opts.use_reversal_reduction && g.kind == GraphKind::path;
  pb.mode = opts.mode;
  pb.node_limit = node_limit;
  pb.deadline = deadline;
  return pb;
}

EdgeLabeling negation_canonical(EdgeLabeling v) {
  for (Label x : v) {
    if (x > 0) return v;
    if (x < 0) {
      for (Label& y : v) y = -y;
      return v;
    }
  }
  return v;
}

struct Worker {
  const Problem& pb;
  std::vector<Sum> sums;
  std::vector<char> label_used;
  std::vector<char> sum_used;
  std::vector<Label> assigned;
  int nonzero_seen = 0;

  std::uint64_t nodes = 0;
  bool aborted = false;
  bool stop = false;

  std::optional<EdgeLabeling> witness;
  std::vector<EdgeLabeling> solutions;
  std::uint64_t reps = 0;
  std::uint64_t raw = 0;
  std::uint64_t orbits_of_size[5] = {0, 0, 0, 0, 0};

  explicit Worker(const Problem& problem)
      : pb(problem),
        sums(static_cast<size_t>(problem.g->n), 0),
        label_used(2 * static_cast<size_t>(problem.ealpha.half_range) + 1, 0),
        sum_used(2 * static_cast<size_t>(problem.valpha.half_range) + 1, 0),
        assigned(static_cast<size_t>(problem.q), 0) {}

  bool complete_vertex(int v) {
    Sum s = sums[static_cast<size_t>(v)];
    if (!pb.valpha.contains(s)) return false;
    size_t slot = static_cast<size_t>(s + pb.valpha.half_range);
    if (sum_used[slot]) return false;
    sum_used[slot] = 1;
    return true;
  }

  void uncomplete_vertex(int v) {
    sum_used[static_cast<size_t>(sums[static_cast<size_t>(v)] + pb.valpha.half_range)] = 0;
  }

  // Degree-0 vertices all complete with sum 0 before any assignment.
  bool settle_isolated() {
    for (size_t i = 0; i < pb.isolated.size(); ++i) {
      if (!complete_vertex(pb.isolated[i])) {
        while (i-- > 0) uncomplete_vertex(pb.isolated[i]);
        return false;
      }
    }
    return true;
  }

  void emit() {
    EdgeLabeling sol = assigned;
    if (pb.rev_on) {
      EdgeLabeling mirror(sol.rbegin(), sol.rend());
      if (pb.neg_on) mirror = negation_canonical(std::move(mirror));
      if (labeling_lex_less(mirror, sol)) return;  // not the orbit representative
    }
    ++reps;

    // Orbit size under the enabled maps recovers the raw solution count.
    std::vector<EdgeLabeling> images{sol};
    auto add_image = [&](EdgeLabeling img) {
      if (std::find(images.begin(), images.end(), img) == images.end())
        images.push_back(std::move(img));
    };
    if (pb.neg_on) add_image(negated(sol));
    if (pb.rev_on) {
      EdgeLabeling mirror(sol.rbegin(), sol.rend());
      if (pb.neg_on) add_image(negated(mirror));
      add_image(std::move(mirror));
    }
    raw += images.size();
    ++orbits_of_size[images.size()];

    EdgeLabeling in_graph_order(sol.size());
    for (size_t pos = 0; pos < sol.size(); ++pos)
      in_graph_order[static_cast<size_t>(pb.order[pos])] = sol[pos];
    switch (pb.mode) {
      case SearchMode::first:
        witness = std::move(in_graph_order);
        stop = true;
        break;
      case SearchMode::all:
        if (!witness) witness = in_graph_order;
        solutions.push_back(std::move(in_graph_order));
        break;
      case SearchMode::count:
        if (!witness) witness = std::move(in_graph_order);
        break;
    }
  }

  void dfs(int depth, std::optional<Label> root_pin) {
    if (stop || aborted) return;
    if (depth == pb.q) {
      emit();
      return;
    }
    const auto [u, v] = pb.slots[static_cast<size_t>(depth)];
    for (Label cand : pb.candidates) {
      if (stop || aborted) return;
      if (depth == 0 && root_pin && cand != *root_pin) continue;
      if (pb.neg_on && nonzero_seen == 0 && cand < 0) continue;
      size_t lslot = static_cast<size_t>(cand + pb.ealpha.half_range);
      if (label_used[lslot]) continue;

      if (pb.node_limit && nodes >= *pb.node_limit) {
        aborted = true;
        return;
      }
      ++nodes;
      if (pb.deadline && (nodes & 1023) == 0 && Clock::now() > *pb.deadline) {
        aborted = true;
        return;
      }

      label_used[lslot] = 1;
      assigned[static_cast<size_t>(depth)] = cand;
      if (cand != 0) ++nonzero_seen;
      sums[static_cast<size_t>(u)] += cand;
      sums[static_cast<size_t>(v)] += cand;

      const auto [c1, c2] = pb.completes[static_cast<size_t>(depth)];
      int marked = 0;
      bool ok = true;
      if (c1 >= 0) {
        if (complete_vertex(c1)) marked = 1;
        else ok = false;
      }
      if (ok && c2 >= 0) {
        if (complete_vertex(c2)) marked = 2;
        else ok = false;
      }
      if (ok) dfs(depth + 1, root_pin);
      if (marked >= 2) uncomplete_vertex(c2);
      if (marked >= 1) uncomplete_vertex(c1);

      sums[static_cast<size_t>(u)] -= cand;
      sums[static_cast<size_t>(v)] -= cand;
      if (cand != 0) --nonzero_seen;
      label_used[lslot] = 0;
    }
  }

  void run(std::optional<Label> root_pin) {
    if (!settle_isolated()) return;
    dfs(0, root_pin);
  }
};

std::string make_orbit_note(const Problem& pb, const SearchCertificate& cert) {
  if (pb.mode == SearchMode::first)
    return "first-witness mode; counts refer to the witness only";
  if (!pb.neg_on && !pb.rev_on)
    return "raw enumeration; no symmetry quotient applied";
  std::string group = pb.neg_on && pb.rev_on ? "negation+reversal"
                      : pb.neg_on            ? "negation"
                                             : "reversal";
  std::string note = "quotient by " + group + ": " + std::to_string(cert.orbit_count) +
                     " orbit(s); raw_count = sum of orbit sizes = " +
                     std::to_string(cert.raw_count);
  return note;
}

SearchCertificate merge_and_finish(const Problem& pb, std::vector<Worker>& workers) {
  SearchCertificate cert;
  bool found = false;
  bool aborted = false;
  for (Worker& w : workers) {
    cert.nodes_explored += w.nodes;
    aborted = aborted || w.aborted;
    if (pb.mode == SearchMode::first) {
      if (w.witness) {
        cert.witness = std::move(w.witness);
        found = true;
        break;  // later branches cannot hold the lexicographically least witness
      }
    } else {
      if (!cert.witness && w.witness) cert.witness = std::move(w.witness);
      found = found || w.reps > 0;
      cert.solutions_found += w.reps;
      cert.orbit_count += w.reps;
      cert.raw_count += w.raw;
      for (auto& s : w.solutions) cert.solutions.push_back(std::move(s));
    }
  }
  if (pb.mode == SearchMode::first && cert.witness) cert.solutions_found = 1;

  if (cert.witness || found) cert.outcome = SearchOutcome::exists;
  else if (aborted) cert.outcome = SearchOutcome::inconclusive;
  else cert.outcome = SearchOutcome::impossible;
  cert.orbit_note = make_orbit_note(pb, cert);
  return cert;
}

}  // namespace

SearchCertificate search(const GraphSpec& g, const SearchOptions& opts) {
  int cap = opts.hard_cap.value_or(kDefaultHardCap);
  if (g.size() > cap)
    throw InstanceTooLarge("search: " + std::to_string(g.size()) + " edges exceeds the exhaustive cap of " +
                           std::to_string(cap) + " (raise hard_cap to override)");

  std::optional<Clock::time_point> deadline;
  if (opts.time_limit) deadline = Clock::now() + *opts.time_limit;
  Problem pb = build_problem(g, opts, opts.node_limit, deadline);

  bool limits = opts.node_limit.has_value() || opts.time_limit.has_value();
  int fanout = 0;
  if (opts.threads > 1 && !limits && pb.q >= 1) {
    for (Label cand : pb.candidates)
      if (!(pb.neg_on && cand < 0)) ++fanout;
  }

  if (fanout < 2) {
    std::vector<Worker> workers;
    workers.emplace_back(pb);
    workers[0].run(std::nullopt);
    return merge_and_finish(pb, workers);
  }

  // Fan out over first-edge label choices; tasks share no mutable state and
  // results merge in canonical order, so certificates match the sequential
  // run byte for byte.
  std::vector<Label> roots;
  for (Label cand : pb.candidates)
    if (!(pb.neg_on && cand < 0)) roots.push_back(cand);
  std::vector<Worker> workers;
  workers.reserve(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) workers.emplace_back(pb);

  int nthreads = std::min<int>(opts.threads, static_cast<int>(roots.size()));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      for (size_t i = static_cast<size_t>(t); i < roots.size(); i += static_cast<size_t>(nthreads))
        workers[i].run(roots[i]);
    });
  }
  for (auto& th : pool) th.join();
  return merge_and_finish(pb, workers);
}

SearchCertificate count_all(const GraphSpec& g, SearchOptions opts) {
  opts.mode = SearchMode::count;
  return search(g, opts);
}

SearchCertificate certify(const GraphSpec& g) {
  SearchOptions opts;
  opts.mode = SearchMode::first;
  return search(g, opts);
}

}  // namespace seg
