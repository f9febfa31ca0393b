#pragma once

// The sliding-counter game on a supersimple design, and a transport-free
// dispatcher for its JSON API. The HTTP server and the terminal REPL are thin
// layers over these types.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cg/design.hpp"
#include "cg/groupoid.hpp"

namespace cg {

/// Read-only data shared by every session: the design, its pair index and
/// the stabilizer chain of the starting hole.
struct GameBoard {
  GameBoard(Design d, Point start);

  Design design;
  GroupoidIndex groupoid;
  Point start() const { return groupoid.hole(); }
};

/// perm = move_sequence(start :: history) and hole = last point of
/// (start :: history), after every public call.
class GameSession {
 public:
  GameSession(std::string id, std::shared_ptr<const GameBoard> board, std::uint64_t seed);

  const std::string& id() const { return id_; }
  Point start() const { return board_->start(); }
  Point hole() const { return history_.empty() ? start() : history_.back(); }
  const Permutation& perm() const { return perm_; }
  const std::vector<Point>& history() const { return history_; }
  bool closed() const { return hole() == start(); }
  /// Closed and perm lies in the hole stabilizer (checked by sifting).
  bool in_hole_stabilizer() const;

  /// Applies [hole, to]; the hole travels to `to`. InvalidInput if `to` is
  /// out of range, IllDefinedMove if `to` is the hole.
  void move(Point to);
  /// False when there is nothing to undo.
  bool undo();
  /// `steps` uniformly random moves from the session generator.
  void scramble(unsigned steps);
  void reset();

  /// Recomputes the permutation from the history.
  bool invariant_holds() const;

  /// {id, hole, start, closed, is_identity, permutation, history, displaced,
  ///  in_hole_stabilizer, cycles}
  nlohmann::json state() const;

 private:
  void check() const;

  std::string id_;
  std::shared_ptr<const GameBoard> board_;
  Permutation perm_;
  std::vector<Point> history_;
  std::mt19937_64 rng_;
};

/// CG_SEED as an unsigned 64-bit decimal, or a random seed when unset.
/// InvalidInput when set but malformed.
std::uint64_t seed_from_environment();

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// Routes the game API. Sessions are independent; requests on one session
/// are serialized by its own mutex.
class GameService {
 public:
  GameService(Design d, Point start, std::uint64_t seed);

  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body);

  const GameBoard& board() const { return *board_; }
  std::size_t session_count() const;

  static constexpr unsigned kMaxScramble = 100000;

 private:
  struct Entry {
    std::mutex mutex;
    GameSession session;
    Entry(std::string id, std::shared_ptr<const GameBoard> board, std::uint64_t seed)
        : session(std::move(id), std::move(board), seed) {}
  };

  ApiResponse create_session();
  std::shared_ptr<Entry> find(const std::string& id) const;

  std::shared_ptr<const GameBoard> board_;
  std::uint64_t seed_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t created_ = 0;
};

}  // namespace cg
