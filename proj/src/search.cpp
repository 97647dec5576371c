#include "solidtorus/search.hpp"
#include "solidtorus/layered.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace solidtorus {

namespace {

using Clock = std::chrono::steady_clock;

struct Term {
  int var;
  int coef;
};

// One quad-type choice per tetrahedron: -1 for none, else 0..2.
class BranchSolver {
 public:
  BranchSolver(const Triangulation& tri, const std::vector<int>& quads, long budget, Clock::time_point deadline,
               std::atomic<bool>& stop)
      : tri_(tri), quads_(quads), budget_(budget), deadline_(deadline), stop_(stop) {
    const int n = tri.tet_count();
    value_.assign(static_cast<std::size_t>(5 * n), -1);
    lower_.assign(static_cast<std::size_t>(5 * n), 0);
    for (int t = 0; t < n; ++t) {
      if (quads[t] < 0)
        value_[5 * t + 4] = 0;
      else
        lower_[5 * t + 4] = 1;
    }
    for (int t = 0; t < n; ++t)
      for (int f = 0; f < 4; ++f) {
        const auto& g = tri.gluing(t, f);
        if (!g || std::make_pair(g->tet, g->perm[f]) < std::make_pair(t, f)) continue;
        for (int c = 0; c < 4; ++c) {
          if (c == f) continue;
          std::vector<int> coef(value_.size(), 0);
          add_arc(coef, t, f, c, 1);
          add_arc(coef, g->tet, g->perm[f], g->perm[c], -1);
          std::vector<Term> eq;
          for (std::size_t k = 0; k < coef.size(); ++k)
            if (coef[k] != 0) eq.push_back({static_cast<int>(k), coef[k]});
          if (!eq.empty()) equations_.push_back(std::move(eq));
        }
      }
    used_ = 0;
    for (std::size_t k = 0; k < value_.size(); ++k)
      if (value_[k] > 0) used_ += value_[k];
  }

  void run(std::vector<NormalVector>& out) {
    out_ = &out;
    dfs();
  }

 private:
  void add_arc(std::vector<int>& coef, int t, int f, int c, int sign) const {
    coef[5 * t + c] += sign;
    if (quads_[t] >= 0 && quad_of_pair(c, f) == quads_[t]) coef[5 * t + 4] += sign;
  }

  bool timed_out() {
    if ((++nodes_ & 0xfff) == 0 && Clock::now() > deadline_) stop_ = true;
    return stop_;
  }

  // Returns false on a contradiction; fills `forced` with assignments made.
  bool propagate(std::vector<int>& forced) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& eq : equations_) {
        long sum = 0;
        int open = -1, open_count = 0, open_coef = 0;
        for (const auto& term : eq) {
          if (value_[term.var] < 0) {
            ++open_count;
            open = term.var;
            open_coef = term.coef;
          } else {
            sum += term.coef * value_[term.var];
          }
        }
        if (open_count == 0) {
          if (sum != 0) return false;
        } else if (open_count == 1) {
          long val = -sum * open_coef;  // coef is +-1
          if (val < lower_[open] || used_ + val > budget_) return false;
          value_[open] = val;
          used_ += val;
          forced.push_back(open);
          changed = true;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<int>& forced) {
    for (int var : forced) {
      used_ -= value_[var];
      value_[var] = -1;
    }
  }

  void dfs() {
    if (timed_out()) return;
    std::vector<int> forced;
    if (!propagate(forced)) {
      undo(forced);
      return;
    }
    int next = -1;
    for (std::size_t k = 0; k < value_.size(); ++k)
      if (value_[k] < 0) {
        next = static_cast<int>(k);
        break;
      }
    if (next < 0) {
      emit();
    } else {
      for (long val = lower_[next]; used_ + val <= budget_ && !stop_; ++val) {
        value_[next] = val;
        used_ += val;
        dfs();
        used_ -= val;
        value_[next] = -1;
      }
    }
    undo(forced);
  }

  void emit() {
    NormalVector v(tri_.tet_count());
    for (int t = 0; t < tri_.tet_count(); ++t) {
      for (int k = 0; k < 4; ++k) v.at(t, k) = value_[5 * t + k];
      if (quads_[t] >= 0) v.at(t, kQuadOffset + quads_[t]) = value_[5 * t + 4];
    }
    out_->push_back(std::move(v));
  }

  const Triangulation& tri_;
  std::vector<int> quads_;
  long budget_;
  Clock::time_point deadline_;
  std::atomic<bool>& stop_;
  std::vector<std::vector<Term>> equations_;
  std::vector<long> value_;
  std::vector<long> lower_;
  long used_ = 0;
  long nodes_ = 0;
  std::vector<NormalVector>* out_ = nullptr;
};

long surface_weight(const Skeleton& sk, const NormalVector& v) {
  long w = 0;
  for (const auto& e : sk.edges) w += v.edge_weight(e.representative.tet, e.representative.a, e.representative.b);
  return w;
}

bool by_size_then_coords(const NormalVector& a, const NormalVector& b) {
  long ta = a.total(), tb = b.total();
  return ta != tb ? ta < tb : a < b;
}

}  // namespace

EnumerationResult enumerate_admissible(const Triangulation& tri, const SearchBudget& b) {
  tri.validate();
  const int n = tri.tet_count();
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(b.time_limit));
  std::atomic<bool> stop{false};
  long branches = 1;
  for (int t = 0; t < n; ++t) branches *= 4;

  std::atomic<long> next{0};
  std::mutex merge;
  EnumerationResult result;
  auto worker = [&] {
    std::vector<NormalVector> local;
    for (long id = next++; id < branches && !stop; id = next++) {
      std::vector<int> quads(static_cast<std::size_t>(n));
      long code = id;
      for (int t = 0; t < n; ++t) {
        quads[t] = static_cast<int>(code % 4) - 1;
        code /= 4;
      }
      BranchSolver(tri, quads, b.max_piece_count, deadline, stop).run(local);
    }
    std::lock_guard<std::mutex> lock(merge);
    for (auto& v : local) result.vectors.push_back(std::move(v));
  };
  const int jobs = std::max(1, b.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  result.complete = !stop;
  if (b.max_weight > 0) {
    const Skeleton sk = skeleton(tri);
    std::erase_if(result.vectors, [&](const NormalVector& v) { return surface_weight(sk, v) > b.max_weight; });
  }
  std::sort(result.vectors.begin(), result.vectors.end(), by_size_then_coords);
  return result;
}

bool MeridianDisc::operator<(const MeridianDisc& o) const {
  if (boundary_length != o.boundary_length) return boundary_length < o.boundary_length;
  if (weight != o.weight) return weight < o.weight;
  return vector < o.vector;
}

std::optional<MeridianDisc> as_meridian_disc(const Triangulation& tri, const EdgeLabels& labels,
                                             const Slope& meridian, const NormalVector& v) {
  if (v.is_zero()) return std::nullopt;
  ReconstructedSurface s = reconstruct(tri, v);
  if (s.components.size() != 1) return std::nullopt;
  const SurfaceComponent& c = s.components[0];
  if (c.euler_characteristic != 1 || !c.orientable || c.boundary_curves.size() != 1) return std::nullopt;
  auto slope = boundary_slope(tri, labels, c.boundary_curves[0]);
  if (!slope || !(*slope == meridian)) return std::nullopt;
  MeridianDisc d;
  d.vector = v;
  d.boundary_length = c.boundary_curves[0].length();
  d.weight = s.weight;
  d.surface = std::move(s);
  return d;
}

MeridianSearchResult find_meridian_discs(const Triangulation& tri, const SearchBudget& b, const EdgeLabels* labels) {
  const EdgeLabels own = labels ? *labels : default_labels(tri);
  auto h = first_homology(tri, &own);
  if (!h.boundary_map_kernel_slope) throw NormalError("no boundary kernel: not a solid torus candidate");
  MeridianSearchResult r;
  r.meridian = *h.boundary_map_kernel_slope;
  auto en = enumerate_admissible(tri, b);
  r.complete = en.complete;
  for (const auto& v : en.vectors)
    if (auto d = as_meridian_disc(tri, own, r.meridian, v)) r.discs.push_back(std::move(*d));
  std::sort(r.discs.begin(), r.discs.end());
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

MinimalDiscResult minimal_complexity_disc(const Triangulation& tri, const SearchBudget& b, const EdgeLabels* labels) {
  const EdgeLabels own = labels ? *labels : default_labels(tri);
  MinimalDiscResult r;
  SearchBudget unfiltered = b;
  unfiltered.max_weight = 0;
  auto found = find_meridian_discs(tri, unfiltered, &own);
  if (found.discs.empty()) return r;
  r.disc = found.discs.front();

  std::vector<Slope> edge_slopes;
  for (const auto& [cls, s] : own) edge_slopes.push_back(s);
  Integer bound = 0;
  for (const auto& s : edge_slopes) bound += intersection(found.meridian, s);
  r.length_certified = Integer(r.disc->boundary_length) == bound;

  const Skeleton sk = skeleton(tri);
  long maxdeg = 0;
  for (const auto& e : sk.edges) maxdeg = std::max<long>(maxdeg, e.degree);
  // every disc has at least three corners and each edge point is a corner of at most
  // maxdeg discs, so weight W forces at most W * maxdeg / 3 pieces
  const long pieces_needed = (r.disc->weight * maxdeg + 2) / 3;
  r.weight_certified = found.complete && b.max_piece_count >= pieces_needed;
  r.status = r.length_certified && r.weight_certified ? Verdict::pass : Verdict::inconclusive;
  return r;
}

Report611 verify_61_1(long i, const SearchBudget& b) {
  Report611 r;
  r.i = i;
  const LayeredTriangulation lt = family(i);
  const Slope top = slope_seq(i + 2);
  r.x_next = top.x();
  auto found = find_meridian_discs(lt.tri, b, &lt.boundary_slopes);
  r.search_complete = found.complete;
  r.discs_found = static_cast<long>(found.discs.size());
  r.lower_bound_certified = found.complete && Integer(b.max_piece_count) >= r.x_next - 1;

  const int top_edge = lt.edge_with_slope(top);
  const Skeleton sk = skeleton(lt.tri);
  const EdgeSlot& rep = sk.edges[top_edge].representative;
  r.edge_bound = true;
  for (const auto& d : found.discs) {
    long pc = d.piece_count();
    if (r.min_piece_count < 0 || pc < r.min_piece_count) r.min_piece_count = pc;
    if (Integer(d.vector.edge_weight(rep.tet, rep.a, rep.b)) < r.x_next) r.edge_bound = false;
  }
  if (r.discs_found > 0) {
    r.meets_bound = Integer(r.min_piece_count) >= r.x_next;
    r.meets_phi = at_least_phi_power(Rational(r.min_piece_count), i + 1);
  }
  if (r.discs_found > 0 && (!r.meets_bound || !r.meets_phi || !r.edge_bound))
    r.status = Verdict::fail;
  else if (r.discs_found > 0 && r.lower_bound_certified)
    r.status = Verdict::pass;
  else
    r.status = Verdict::inconclusive;
  return r;
}

Report612 verify_61_2(long i, long window) {
  Report612 r;
  r.i = i;
  const Slope s = slope_seq(i + 2);
  r.x_next = s.x();
  r.y_next = s.y();
  bool first = true;
  for (long n = -window; n <= window; ++n) {
    Integer v = abs(Integer(n) * r.x_next - r.y_next);
    if (first || v <= r.min_value) {
      r.min_value = v;
      r.argmin_n = n;
      first = false;
    }
  }
  r.third_bound = 3 * r.min_value >= r.x_next;
  r.phi_bound = at_least_phi_power(Rational(r.x_next, 3), i - 1) && at_least_phi_power(Rational(r.min_value), i - 1);
  r.status = r.third_bound && r.phi_bound ? Verdict::pass : Verdict::fail;

  const LayeredTriangulation lt = family(i);
  auto h = first_homology(lt.tri, &lt.boundary_slopes);
  if (h.boundary_map_kernel_slope) {
    const Slope& m = *h.boundary_map_kernel_slope;
    auto c0 = dual_vector(m.x(), m.y());
    bool init = false;
    for (long n = -window; n <= window; ++n) {
      Integer cx = c0[0] + n * m.x(), cy = c0[1] + n * m.y();
      Integer v = abs(cx * s.y() - cy * s.x());
      if (!init || v < r.precore_min) {
        r.precore_min = v;
        init = true;
      }
    }
  }
  return r;
}

}  // namespace solidtorus
