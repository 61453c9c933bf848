#include "ramsey/builder_pk.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ramsey/plan.hpp"

namespace ramsey {

namespace {

// Blue path of length 2 harvested in stage 1; b is the center.
struct P3 {
  VertexId a, b, c;
};

std::vector<VertexId> oriented_from(std::vector<VertexId> path, VertexId end) {
  if (path.front() == end) return path;
  std::reverse(path.begin(), path.end());
  if (path.front() != end) {
    throw InvariantViolationError("vertex is not an end of the path");
  }
  return path;
}

class PkBuilder final : public PlanBuilderOracle {
 public:
  PkBuilder(int k, int n, PkBuilderOptions options)
      : k_(k), n_(n), T_((n + 2) / 3 + k), options_(options) {
    if (k < 5) {
      throw Error("the P_k builder requires k >= 5");
    }
    if (n < 2) {
      throw Error("the P_k builder requires n >= 2");
    }
  }

  std::string_view name() const override { return "pk"; }

 protected:
  Plan make_plan() override { return run(); }

 private:
  Plan run() {
    co_await stage1();
    co_await stage2();
    co_await stage3();
    if (!board().has_blue_path(n_)) {
      throw InvariantViolationError("pk strategy finished without a blue P_n");
    }
  }

  // --- stage 1: T disjoint blue paths of length 2 ---------------------------

  std::size_t active_edge_count() const {
    const std::size_t red = active_path_.size() >= 2 ? active_path_.size() - 1 : 0;
    return red + matching_.size();
  }

  std::optional<VertexId> matching_partner(VertexId x) const {
    for (const auto& [on, off] : matching_) {
      if (on == x) return off;
    }
    return std::nullopt;
  }

  Plan stage1() {
    int rounds = 0;
    while (static_cast<int>(p3s_.size()) < T_) {
      VertexId x;
      if (active_edge_count() == 0) {
        active_path_.clear();
        matching_.clear();
        x = fresh_vertex();
        active_path_ = {x};
      } else {
        x = active_path_.back();
      }
      const VertexId y = fresh_vertex();
      const Color reply = co_await Plan::Propose{x, y, "pk/stage1/extend"};
      ++rounds;
      if (rounds > 3 * T_ + 2 * (k_ - 1)) {
        throw BoundViolationError("stage 1 exceeded 3T+2(k-1) rounds");
      }

      if (reply == Color::kRed) {
        active_path_.push_back(y);
      } else if (auto partner = matching_partner(x)) {
        // Deactivate: the new blue edge, the old blue edge at x, and the red
        // path edge at x when the path has positive length.
        p3s_.push_back({y, x, *partner});
        if (active_path_.size() >= 2) {
          inactive_red_.push_back({active_path_[active_path_.size() - 2], x});
        }
        active_path_.pop_back();
        std::erase_if(matching_, [&](const auto& e) { return e.first == x; });
        if (active_edge_count() == 0) {
          active_path_.clear();
        }
      } else {
        matching_.push_back({x, y});
      }
      if (options_.strict) check_stage1();
    }

    // Seed the (T,1,3T) essential graph: the trivial red path is an end of
    // the first blue path.
    blue_paths_.clear();
    for (const auto& p : p3s_) {
      blue_paths_.push_back({p.a, p.b, p.c});
    }
    red_path_ = {blue_paths_.front().front()};
  }

  void check_stage1() const {
    const auto& g = board();
    std::unordered_set<std::uint64_t> seen_edges;
    auto key = [](VertexId u, VertexId v) {
      if (u > v) std::swap(u, v);
      return (static_cast<std::uint64_t>(u) << 32) | v;
    };
    auto expect = [&](VertexId u, VertexId v, Color c, const char* what) {
      if (g.edge_color(u, v) != c) {
        throw InvariantViolationError(std::string("stage 1 ledger: ") + what +
                                      " has wrong color on the board");
      }
      if (!seen_edges.insert(key(u, v)).second) {
        throw InvariantViolationError(
            "stage 1 ledger: active and inactive edge sets overlap");
      }
    };

    // Clause (iii): the active graph is a red path on < k vertices plus a
    // blue matching, every matching edge with exactly one end on the path.
    if (static_cast<int>(active_path_.size()) >= k_) {
      throw InvariantViolationError("active red path reached k vertices");
    }
    std::unordered_set<VertexId> path_set(active_path_.begin(), active_path_.end());
    if (path_set.size() != active_path_.size()) {
      throw InvariantViolationError("active red path repeats a vertex");
    }
    for (std::size_t i = 0; i + 1 < active_path_.size(); ++i) {
      expect(active_path_[i], active_path_[i + 1], Color::kRed,
             "active path edge");
    }
    std::unordered_set<VertexId> active_vertices = path_set;
    std::unordered_set<VertexId> matched;
    for (const auto& [on, off] : matching_) {
      expect(on, off, Color::kBlue, "matching edge");
      if (!path_set.count(on) || path_set.count(off)) {
        throw InvariantViolationError(
            "matching edge must have exactly one end on the active path");
      }
      if (!matched.insert(on).second || !matched.insert(off).second) {
        throw InvariantViolationError("active blue edges are not a matching");
      }
      active_vertices.insert(off);
    }

    // Clause (iv): inactive = vertex-disjoint blue P_3s + at most one red
    // edge per path.
    std::unordered_set<VertexId> p3_vertices;
    for (const auto& p : p3s_) {
      expect(p.a, p.b, Color::kBlue, "inactive P3 edge");
      expect(p.b, p.c, Color::kBlue, "inactive P3 edge");
      for (VertexId v : {p.a, p.b, p.c}) {
        if (!p3_vertices.insert(v).second) {
          throw InvariantViolationError("inactive blue paths share a vertex");
        }
      }
      // Clause (ii): no inactive blue edge touches the active graph.
      for (VertexId v : {p.a, p.b, p.c}) {
        if (active_vertices.count(v)) {
          throw InvariantViolationError(
              "inactive blue edge touches an active vertex");
        }
      }
    }
    if (inactive_red_.size() > p3s_.size()) {
      throw InvariantViolationError("more inactive red edges than blue paths");
    }
    for (const auto& [u, v] : inactive_red_) {
      expect(u, v, Color::kRed, "inactive red edge");
    }
    // Every board edge is accounted for exactly once.
    if (seen_edges.size() != g.edge_count()) {
      throw InvariantViolationError(
          "stage 1 ledger does not account for every board edge");
    }
  }

  // --- stage 2: fewer than k blue paths on 3T vertices ----------------------

  Plan stage2() {
    int rounds = 0;
    const int m = 3 * T_;
    while (static_cast<int>(blue_paths_.size()) >= k_) {
      const std::size_t d = red_path_.size();
      if (static_cast<int>(d) >= k_) {
        throw InvariantViolationError("essential red path reached k vertices");
      }
      const VertexId ud = red_path_.back();
      const VertexId ud1 = blue_paths_[d].front();
      const Color reply =
          co_await Plan::Propose{ud, ud1, "pk/stage2/gluepk1/select"};
      ++rounds;
      if (rounds > 2 * T_ - k_) {
        throw BoundViolationError("stage 2 exceeded 2T-k rounds");
      }
      if (reply == Color::kRed) {
        red_path_.push_back(ud1);
      } else {
        auto merged = blue_paths_[d - 1];
        std::reverse(merged.begin(), merged.end());  // ...u_d
        merged.insert(merged.end(), blue_paths_[d].begin(), blue_paths_[d].end());
        blue_paths_[d - 1] = std::move(merged);
        blue_paths_.erase(blue_paths_.begin() + static_cast<long>(d));
        if (d >= 2) {
          red_path_.pop_back();
        } else {
          red_path_ = {blue_paths_.front().front()};
        }
      }
      if (options_.strict) check_stage2(m);
    }

    // Handoff: re-certify the blue paths from the board, then shape the
    // (t,1,3T)-fence.
    check_stage2(m);
    picket_red_ = {blue_paths_.front().front()};
    g0_ = blue_paths_.front();
    pickets_.assign(blue_paths_.begin() + 1, blue_paths_.end());
  }

  void check_stage2(int m) const {
    const auto& g = board();
    std::unordered_set<VertexId> seen;
    int total = 0;
    for (const auto& path : blue_paths_) {
      if (path.empty()) {
        throw InvariantViolationError("essential blue path is empty");
      }
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (g.edge_color(path[i], path[i + 1]) != Color::kBlue) {
          throw InvariantViolationError("essential blue path edge not blue");
        }
      }
      for (VertexId v : path) {
        if (!seen.insert(v).second) {
          throw InvariantViolationError("essential blue paths share a vertex");
        }
      }
      total += static_cast<int>(path.size());
    }
    if (total != m) {
      throw InvariantViolationError("essential graph lost vertices (m changed)");
    }
    for (std::size_t i = 0; i + 1 < red_path_.size(); ++i) {
      if (g.edge_color(red_path_[i], red_path_[i + 1]) != Color::kRed) {
        throw InvariantViolationError("essential red path edge not red");
      }
    }
    if (red_path_.size() > blue_paths_.size()) {
      throw InvariantViolationError("essential graph has d > s");
    }
    for (std::size_t i = 0; i < red_path_.size(); ++i) {
      const auto& path = blue_paths_[i];
      if (path.front() != red_path_[i] && path.back() != red_path_[i]) {
        throw InvariantViolationError(
            "essential red path vertex is not an end of its blue path");
      }
    }
  }

  // --- stage 3: a single blue path on at least n vertices -------------------

  int fence_m() const {
    int m = static_cast<int>(g0_.size());
    for (const auto& p : pickets_) m += static_cast<int>(p.size());
    return m;
  }

  Plan stage3() {
    int rounds = 0;
    const int t = 1 + static_cast<int>(pickets_.size());
    while (!pickets_.empty()) {
      const int m_before = fence_m();
      const VertexId wd = picket_red_.back();
      const auto g2 = pickets_.front();
      const VertexId u2 = g2.front();
      const VertexId u2p = g2.back();

      const Color c1 =
          co_await Plan::Propose{wd, u2, "pk/stage3/gluepk2/first"};
      ++rounds;
      if (c1 == Color::kRed) {
        // Literal second round of the pair: re-select the same edge.
        co_await Plan::Propose{wd, u2, "pk/stage3/gluepk2/red-branch/reselect"};
        ++rounds;
        std::vector<VertexId> tail(g0_.begin() + 1, g0_.end());
        picket_red_.push_back(u2);
        g0_ = oriented_from(g2, u2);
        pickets_.pop_front();
        if (!tail.empty()) pickets_.push_back(std::move(tail));
      } else if (picket_red_.size() == 1) {
        co_await Plan::Propose{wd, u2, "pk/stage3/gluepk2/blue-branch/reselect"};
        ++rounds;
        auto merged = oriented_from(g2, u2);
        std::reverse(merged.begin(), merged.end());  // u2' ... u2
        merged.insert(merged.end(), g0_.begin(), g0_.end());
        picket_red_ = {merged.front()};
        g0_ = std::move(merged);
        pickets_.pop_front();
      } else {
        const VertexId wd1 = picket_red_[picket_red_.size() - 2];
        const Color c2 =
            co_await Plan::Propose{wd1, u2p, "pk/stage3/gluepk2/second"};
        ++rounds;
        auto middle = oriented_from(g2, u2p);  // u2' ... u2
        if (c2 == Color::kRed) {
          picket_red_.pop_back();
          picket_red_.push_back(u2p);
          middle.insert(middle.end(), g0_.begin(), g0_.end());
          g0_ = std::move(middle);
        } else {
          picket_red_.pop_back();
          std::vector<VertexId> merged{wd1};
          merged.insert(merged.end(), middle.begin(), middle.end());
          merged.insert(merged.end(), g0_.begin(), g0_.end());
          g0_ = std::move(merged);
        }
        pickets_.pop_front();
      }
      if (rounds > 4 * t + 2 * k_) {
        throw BoundViolationError("stage 3 exceeded 4t+2k rounds");
      }
      if (options_.strict) check_stage3(m_before);
    }
  }

  void check_stage3(int m_before) const {
    const auto& g = board();
    if (fence_m() < m_before - 1) {
      throw InvariantViolationError("fence lost more than one vertex in a pair");
    }
    if (static_cast<int>(picket_red_.size()) >= k_) {
      throw InvariantViolationError("red picket reached k vertices");
    }
    if (picket_red_.back() != g0_.front()) {
      throw InvariantViolationError("red picket does not end at the blue picket");
    }
    for (std::size_t i = 0; i + 1 < picket_red_.size(); ++i) {
      if (g.edge_color(picket_red_[i], picket_red_[i + 1]) != Color::kRed) {
        throw InvariantViolationError("red picket edge not red");
      }
    }
    std::unordered_set<VertexId> seen(picket_red_.begin(), picket_red_.end());
    if (seen.size() != picket_red_.size()) {
      throw InvariantViolationError("red picket repeats a vertex");
    }
    seen.erase(g0_.front());  // shared vertex w_d
    auto check_picket = [&](const std::vector<VertexId>& p) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (g.edge_color(p[i], p[i + 1]) != Color::kBlue) {
          throw InvariantViolationError("blue picket edge not blue");
        }
      }
      for (VertexId v : p) {
        if (!seen.insert(v).second) {
          throw InvariantViolationError("fence pickets share a vertex");
        }
      }
    };
    check_picket(g0_);
    for (const auto& p : pickets_) {
      if (p.empty()) throw InvariantViolationError("empty blue picket");
      check_picket(p);
    }
  }

  const int k_;
  const int n_;
  const int T_;
  const PkBuilderOptions options_;

  // Stage 1 ledger (Proposition stage1).
  std::vector<VertexId> active_path_;
  std::vector<std::pair<VertexId, VertexId>> matching_;  // (on-path, off-path)
  std::vector<P3> p3s_;
  std::vector<std::pair<VertexId, VertexId>> inactive_red_;

  // Stage 2 essential (s,d,m)-graph: red_path_[i] is an end of blue_paths_[i].
  std::vector<std::vector<VertexId>> blue_paths_;
  std::vector<VertexId> red_path_;

  // Stage 3 fence: picket_red_.back() == g0_.front().
  std::vector<VertexId> picket_red_;
  std::vector<VertexId> g0_;
  std::deque<std::vector<VertexId>> pickets_;
};

}  // namespace

std::unique_ptr<BuilderOracle> make_builder_pk(int k, int n,
                                               PkBuilderOptions options) {
  return std::make_unique<PkBuilder>(k, n, options);
}

PkStageBounds pk_stage_bounds(int k, int n) {
  PkStageBounds b;
  b.T = (n + 2) / 3 + k;
  b.stage1 = 3 * b.T + 2 * (k - 1);
  b.stage2 = 2 * b.T - k;
  b.stage3 = 4 * (k - 1) + 2 * k;  // t < k blue paths enter stage 3
  return b;
}

int pk_round_bound(int k, int n) { return (5 * n) / 3 + 12 * k; }

GameConfig pk_game_config(int k, int n) {
  GameConfig cfg;
  cfg.k = k;
  cfg.n = n;
  cfg.variant = GameVariant::kRestrictedRed;
  cfg.allow_reselect = true;
  cfg.round_budget = pk_round_bound(k, n);
  return cfg;
}

PkStageRounds pk_stage_rounds(const GameState& state) {
  PkStageRounds r;
  for (const auto& m : state.moves()) {
    if (m.note.rfind("pk/stage1", 0) == 0) ++r.stage1;
    if (m.note.rfind("pk/stage2", 0) == 0) ++r.stage2;
    if (m.note.rfind("pk/stage3", 0) == 0) ++r.stage3;
  }
  return r;
}

}  // namespace ramsey
