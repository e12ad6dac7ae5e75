#include "tiling/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "tiling/errors.hpp"

namespace tiling {

namespace {

using Clock = std::chrono::steady_clock;

Coord lcm_upto(Coord max_n) {
  Coord l = 1;
  for (Coord n = 2; n <= max_n; ++n) l = std::lcm(l, n);
  return l;
}

void check_spec(const SearchSpec& spec) {
  if (spec.d < 1) throw std::invalid_argument("search: dimension must be at least 1");
  if (spec.max_n < 1) throw std::invalid_argument("search: max_n must be at least 1");
  if (spec.threads < 1) throw std::invalid_argument("search: threads must be at least 1");
  if (spec.max_cosets && *spec.max_cosets < 1)
    throw std::invalid_argument("search: max_cosets must be at least 1");
  Int volume = 1;
  Coord L = lcm_upto(spec.max_n);
  for (int i = 0; i < spec.d; ++i) volume *= L;
  if (volume > spec.cell_budget)
    throw BudgetExceeded("search: box volume " + volume.get_str() + " exceeds budget " +
                         spec.cell_budget.get_str());
}

// Box cells covered by a coset, as flat row-major indices (axis 0 most
// significant), ascending.
std::vector<int> coset_cells(const Coset& c, const std::vector<Coord>& L) {
  const int d = static_cast<int>(L.size());
  std::vector<std::int64_t> stride(d, 1);
  for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * L[i + 1];
  std::vector<Coord> reps(d), r(d, 0);
  std::int64_t idx = 0;
  for (int i = 0; i < d; ++i) {
    reps[i] = L[i] / c.shape.n[i];
    idx += c.offset[i] * stride[i];
  }
  std::vector<int> cells;
  for (;;) {
    cells.push_back(static_cast<int>(idx));
    int a = d - 1;
    while (a >= 0) {
      if (++r[a] < reps[a]) {
        idx += c.shape.n[a] * stride[a];
        break;
      }
      r[a] = 0;
      idx -= c.shape.n[a] * stride[a] * (reps[a] - 1);
      --a;
    }
    if (a < 0) break;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

// Knuth-style dancing links over node indices. Node 0 is the root, nodes
// 1..ncols are column headers.
struct Dlx {
  std::vector<int> L, R, U, D, C, row_id;
  std::vector<int> col_size;
  std::vector<std::int64_t> row_cells;  // static size per row
  std::vector<int> row_start;           // one node handle per row
  std::vector<int> shape_id;            // per row
  int root = 0;
  int active_cols = 0;
  std::int64_t active_cells = 0;

  Dlx(int ncols, const std::vector<std::vector<int>>& rows, const std::vector<int>& shapes) {
    const int headers = ncols + 1;
    L.resize(headers);
    R.resize(headers);
    U.resize(headers);
    D.resize(headers);
    C.resize(headers);
    row_id.assign(headers, -1);
    col_size.assign(headers, 0);
    for (int h = 0; h < headers; ++h) {
      L[h] = (h + headers - 1) % headers;
      R[h] = (h + 1) % headers;
      U[h] = D[h] = C[h] = h;
    }
    active_cols = ncols;
    shape_id = shapes;
    row_cells.reserve(rows.size());
    row_start.assign(rows.size(), -1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int prev = -1;
      for (int cell : rows[r]) {
        const int col = cell + 1;
        const int node = static_cast<int>(L.size());
        L.push_back(node);
        R.push_back(node);
        U.push_back(U[col]);
        D.push_back(col);
        C.push_back(col);
        row_id.push_back(static_cast<int>(r));
        D[U[col]] = node;
        U[col] = node;
        ++col_size[col];
        if (prev >= 0) {
          L[node] = prev;
          R[node] = R[prev];
          L[R[prev]] = node;
          R[prev] = node;
        } else {
          row_start[r] = node;
        }
        prev = node;
      }
      row_cells.push_back(static_cast<std::int64_t>(rows[r].size()));
      active_cells += static_cast<std::int64_t>(rows[r].size());
    }
  }

  void cover(int col) {
    R[L[col]] = R[col];
    L[R[col]] = L[col];
    --active_cols;
    for (int i = D[col]; i != col; i = D[i]) {
      active_cells -= row_cells[row_id[i]];  // each row leaves availability once
      for (int j = R[i]; j != i; j = R[j]) {
        U[D[j]] = U[j];
        D[U[j]] = D[j];
        --col_size[C[j]];
      }
    }
  }

  void uncover(int col) {
    for (int i = U[col]; i != col; i = U[i]) {
      for (int j = L[i]; j != i; j = L[j]) {
        ++col_size[C[j]];
        U[D[j]] = j;
        D[U[j]] = j;
      }
      active_cells += row_cells[row_id[i]];
    }
    R[L[col]] = col;
    L[R[col]] = col;
    ++active_cols;
  }

  int choose_column(bool mrv) const {
    if (!mrv) return R[root];
    int best = R[root];
    for (int c = R[root]; c != root; c = R[c])
      if (col_size[c] < col_size[best]) best = c;
    return best;
  }
};

struct TaskResult {
  std::vector<std::vector<int>> solutions;  // rows per solution
  std::uint64_t nodes = 0;
  bool complete = true;
};

class Solver {
 public:
  Solver(const SearchSpec& spec, int ncols, const std::vector<std::vector<int>>& rows,
         const std::vector<int>& shapes, int nshapes,
         std::optional<Clock::time_point> deadline)
      : spec_(spec),
        dlx_(ncols, rows, shapes),
        shape_used_(nshapes, 0),
        deadline_(deadline) {}

  // Forces `row` as the first choice, then enumerates completions.
  TaskResult run(int row) {
    result_ = TaskResult{};
    stack_.clear();
    push_row(row);
    solve(1);
    pop_row(row);
    return std::move(result_);
  }

 private:
  void push_row(int row) {
    ++result_.nodes;
    stack_.push_back(row);
    ++shape_used_[dlx_.shape_id[row]];
    const int first = dlx_.row_start[row];
    dlx_.cover(dlx_.C[first]);
    for (int j = dlx_.R[first]; j != first; j = dlx_.R[j]) dlx_.cover(dlx_.C[j]);
  }

  void pop_row(int row) {
    const int first = dlx_.row_start[row];
    for (int j = dlx_.L[first]; j != first; j = dlx_.L[j]) dlx_.uncover(dlx_.C[j]);
    dlx_.uncover(dlx_.C[first]);
    --shape_used_[dlx_.shape_id[row]];
    stack_.pop_back();
  }

  bool timed_out() {
    if (!deadline_ || aborted_) return aborted_;
    if (Clock::now() > *deadline_) aborted_ = true;
    return aborted_;
  }

  void solve(int depth) {
    if (aborted_) return;
    if (dlx_.R[dlx_.root] == dlx_.root) {
      result_.solutions.push_back(stack_);
      return;
    }
    if (dlx_.active_cells < dlx_.active_cols) return;  // density prune
    if (spec_.max_cosets && depth >= *spec_.max_cosets) return;
    const int col = dlx_.choose_column(spec_.mrv_heuristic);
    if (dlx_.col_size[col] == 0) return;
    dlx_.cover(col);
    for (int i = dlx_.D[col]; i != col; i = dlx_.D[i]) {
      const int row = dlx_.row_id[i];
      if (spec_.distinct_shapes_only && shape_used_[dlx_.shape_id[row]] > 0) continue;
      if (timed_out()) break;
      ++result_.nodes;
      stack_.push_back(row);
      ++shape_used_[dlx_.shape_id[row]];
      for (int j = dlx_.R[i]; j != i; j = dlx_.R[j]) dlx_.cover(dlx_.C[j]);
      solve(depth + 1);
      for (int j = dlx_.L[i]; j != i; j = dlx_.L[j]) dlx_.uncover(dlx_.C[j]);
      --shape_used_[dlx_.shape_id[row]];
      stack_.pop_back();
      if (aborted_) break;
    }
    dlx_.uncover(col);
    if (aborted_) result_.complete = false;
  }

  const SearchSpec& spec_;
  Dlx dlx_;
  std::vector<int> shape_used_;
  std::vector<int> stack_;
  TaskResult result_;
  std::optional<Clock::time_point> deadline_;
  bool aborted_ = false;
};

bool is_trivial_shape(const Coset& c) {
  for (Coord ni : c.shape.n)
    if (ni != 1) return false;
  return true;
}

}  // namespace

std::vector<Coset> enumerate_candidates(const SearchSpec& spec) {
  check_spec(spec);
  std::vector<Coset> out;
  std::vector<Coord> n(spec.d, 1);
  for (;;) {
    // all canonical offsets for this shape, in lex order
    std::vector<Coord> m(spec.d, 0);
    for (;;) {
      out.push_back(Coset{SubgroupShape{n}, m});
      int a = spec.d - 1;
      while (a >= 0 && ++m[a] == n[a]) m[a--] = 0;
      if (a < 0) break;
    }
    int a = spec.d - 1;
    while (a >= 0 && ++n[a] > spec.max_n) n[a--] = 1;
    if (a < 0) break;
  }
  return out;
}

SearchResult search_exact_covers(const SearchSpec& spec) {
  check_spec(spec);
  const auto t0 = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (spec.timeout_seconds)
    deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(*spec.timeout_seconds));

  std::vector<Coset> candidates = enumerate_candidates(spec);
  if (spec.exclude_trivial)
    std::erase_if(candidates, is_trivial_shape);

  const Coord Lval = lcm_upto(spec.max_n);
  const std::vector<Coord> L(spec.d, Lval);
  std::int64_t volume = 1;
  for (int i = 0; i < spec.d; ++i) volume *= Lval;

  std::vector<std::vector<int>> rows;
  rows.reserve(candidates.size());
  for (const Coset& c : candidates) rows.push_back(coset_cells(c, L));

  // Distinct shape ids in candidate order.
  std::vector<int> shape_ids(candidates.size());
  {
    std::map<SubgroupShape, int> ids;
    for (std::size_t r = 0; r < candidates.size(); ++r)
      shape_ids[r] = ids.emplace(candidates[r].shape, static_cast<int>(ids.size()))
                         .first->second;
  }
  const int nshapes =
      candidates.empty() ? 0 : 1 + *std::max_element(shape_ids.begin(), shape_ids.end());

  // Split the search at one root column; every solution uses exactly one of
  // its rows, so tasks partition the solution space and merge deterministically.
  std::vector<int> task_rows;
  {
    Dlx master(static_cast<int>(volume), rows, shape_ids);
    const int col = master.choose_column(spec.mrv_heuristic);
    for (int i = master.D[col]; i != col; i = master.D[i])
      task_rows.push_back(master.row_id[i]);
  }

  std::vector<TaskResult> results(task_rows.size());
  const int nthreads = std::max(1, std::min<int>(spec.threads, static_cast<int>(task_rows.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= task_rows.size()) return;
      Solver solver(spec, static_cast<int>(volume), rows, shape_ids, nshapes, deadline);
      results[t] = solver.run(task_rows[t]);
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchResult out;
  std::set<std::vector<Coset>> dedup;
  for (const TaskResult& tr : results) {
    out.stats.nodes += tr.nodes;
    out.stats.complete = out.stats.complete && tr.complete;
    for (const std::vector<int>& sol : tr.solutions) {
      std::vector<Coset> cosets;
      cosets.reserve(sol.size());
      for (int r : sol) cosets.push_back(candidates[r]);
      std::sort(cosets.begin(), cosets.end());
      dedup.insert(std::move(cosets));
    }
  }
  for (const auto& cosets : dedup) out.solutions.push_back(CosetSystem{spec.d, cosets});
  out.stats.solutions = out.solutions.size();
  out.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return out;
}

CosetSystem random_split_cover(int d, int steps, int max_factor, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("random_split_cover: dimension must be at least 1");
  if (steps < 0) throw std::invalid_argument("random_split_cover: steps must be nonnegative");
  if (steps > 0 && max_factor < 2)
    throw std::invalid_argument("random_split_cover: max_factor must be at least 2");

  CosetSystem sys{d, {Coset{SubgroupShape{std::vector<Coord>(d, 1)}, std::vector<Coord>(d, 0)}}};
  std::mt19937_64 rng(seed);
  for (int step = 0; step < steps; ++step) {
    const std::size_t idx = rng() % sys.cosets.size();
    const int axis = static_cast<int>(rng() % static_cast<std::uint64_t>(d));
    const Coord q = 2 + static_cast<Coord>(rng() % static_cast<std::uint64_t>(max_factor - 1));
    const Coset picked = sys.cosets[idx];
    if (picked.shape.n[axis] > (INT64_MAX / q) / 2)
      throw std::overflow_error("random_split_cover: modulus overflow");
    std::vector<Coset> replacements;
    replacements.reserve(q);
    for (Coord r = 0; r < q; ++r) {
      Coset c = picked;
      c.offset[axis] = picked.offset[axis] + r * picked.shape.n[axis];
      c.shape.n[axis] = picked.shape.n[axis] * q;
      replacements.push_back(std::move(c));
    }
    sys.cosets.erase(sys.cosets.begin() + static_cast<std::ptrdiff_t>(idx));
    sys.cosets.insert(sys.cosets.begin() + static_cast<std::ptrdiff_t>(idx),
                      replacements.begin(), replacements.end());
  }
  return sys;
}

}  // namespace tiling
