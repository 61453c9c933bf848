#pragma once

#include <coroutine>
#include <exception>
#include <string>
#include <utility>

#include "ramsey/game.hpp"

namespace ramsey {

// Shared channel between a strategy coroutine stack and the oracle adapter
// that feeds it into the engine's next_move/on_painter_reply protocol.
struct PlanContext {
  GameState* state = nullptr;
  EdgeProposal pending;
  bool has_pending = false;
  Color reply = Color::kBlue;
  std::coroutine_handle<> resume_point;  // innermost coroutine awaiting a reply
};

// A suspendable builder script. Strategies are coroutines that co_await
// Propose{...} to select an edge and receive Painter's color, and co_await
// sub-Plans to compose protocols.
class Plan {
 public:
  struct promise_type;
  using Handle = std::coroutine_handle<promise_type>;

  struct Propose {
    VertexId u;
    VertexId v;
    std::string note;
  };

  struct promise_type {
    PlanContext* ctx = nullptr;
    std::coroutine_handle<> continuation;
    std::exception_ptr error;

    Plan get_return_object() { return Plan(Handle::from_promise(*this)); }
    std::suspend_always initial_suspend() noexcept { return {}; }

    struct FinalAwaiter {
      bool await_ready() noexcept { return false; }
      std::coroutine_handle<> await_suspend(Handle h) noexcept {
        auto cont = h.promise().continuation;
        return cont ? cont : std::noop_coroutine();
      }
      void await_resume() noexcept {}
    };
    FinalAwaiter final_suspend() noexcept { return {}; }
    void return_void() {}
    void unhandled_exception() { error = std::current_exception(); }

    struct ProposeAwaiter {
      promise_type* promise = nullptr;
      Propose proposal;

      bool await_ready() const noexcept { return false; }
      void await_suspend(Handle h) {
        promise = &h.promise();
        PlanContext* ctx = promise->ctx;
        VertexId u = proposal.u;
        VertexId v = proposal.v;
        if (u > v) std::swap(u, v);
        ctx->pending = EdgeProposal{u, v, std::move(proposal.note)};
        ctx->has_pending = true;
        ctx->resume_point = h;
      }
      Color await_resume() { return promise->ctx->reply; }
    };

    struct SubPlanAwaiter {
      Handle sub;

      bool await_ready() const noexcept { return false; }
      std::coroutine_handle<> await_suspend(Handle parent) {
        sub.promise().ctx = parent.promise().ctx;
        sub.promise().continuation = parent;
        return sub;
      }
      void await_resume() {
        if (sub.promise().error) std::rethrow_exception(sub.promise().error);
      }
    };

    ProposeAwaiter await_transform(Propose p) { return {nullptr, std::move(p)}; }
    SubPlanAwaiter await_transform(Plan&& sub) { return {sub.handle_}; }
  };

  Plan() = default;
  Plan(Plan&& o) noexcept : handle_(std::exchange(o.handle_, nullptr)) {}
  Plan& operator=(Plan&& o) noexcept {
    if (this != &o) {
      destroy();
      handle_ = std::exchange(o.handle_, nullptr);
    }
    return *this;
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() { destroy(); }

  Handle handle() const { return handle_; }
  bool done() const { return !handle_ || handle_.done(); }

 private:
  explicit Plan(Handle h) : handle_(h) {}
  void destroy() {
    if (handle_) {
      handle_.destroy();
      handle_ = nullptr;
    }
  }

  Handle handle_;
};

// Adapts a strategy coroutine to the BuilderOracle interface. The derived
// class builds the root Plan; the adapter owns the resume/reply handshake.
class PlanBuilderOracle : public BuilderOracle {
 public:
  EdgeProposal next_move(GameState& state) override {
    ctx_.state = &state;
    if (!started_) {
      root_ = make_plan();
      root_.handle().promise().ctx = &ctx_;
      ctx_.resume_point = root_.handle();
      started_ = true;
    }
    if (!ctx_.has_pending) {
      auto h = ctx_.resume_point;
      if (!h || (root_.done())) {
        throw InvariantViolationError(
            "strategy script finished but the game is still in progress");
      }
      h.resume();
      if (root_.done() && root_.handle().promise().error) {
        std::rethrow_exception(root_.handle().promise().error);
      }
      if (!ctx_.has_pending) {
        throw InvariantViolationError(
            "strategy script finished but the game is still in progress");
      }
    }
    return ctx_.pending;
  }

  void on_painter_reply(const GameState& state, VertexId, VertexId,
                        Color c) override {
    (void)state;
    ctx_.reply = c;
    ctx_.has_pending = false;
  }

 protected:
  virtual Plan make_plan() = 0;

  GameState& state() {
    if (!ctx_.state) throw InvariantViolationError("no game state attached");
    return *ctx_.state;
  }
  const ColoredGraph& board() { return state().board(); }
  VertexId fresh_vertex() { return state().board().allocate_free_vertex(); }

 private:
  PlanContext ctx_;
  Plan root_;
  bool started_ = false;
};

}  // namespace ramsey
