#include "cg/game.hpp"

#include <cassert>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "cg/errors.hpp"
#include "cg/json_io.hpp"

namespace cg {

using nlohmann::json;

namespace {

Design checked(Design d) {
  if (!validate(d).is_supersimple) throw InvalidInput("game: the design is not supersimple");
  return d;
}

}  // namespace

GameBoard::GameBoard(Design d, Point start) : design(checked(std::move(d))), groupoid(design, start) {}

GameSession::GameSession(std::string id, std::shared_ptr<const GameBoard> board, std::uint64_t seed)
    : id_(std::move(id)), board_(std::move(board)), perm_(board_->design.n()), rng_(seed) {}

bool GameSession::in_hole_stabilizer() const {
  return closed() && board_->groupoid.hole_stabilizer().contains(perm_);
}

void GameSession::move(Point to) {
  if (to >= board_->design.n()) throw InvalidInput("move: point " + std::to_string(to) + " is out of range");
  if (to == hole())
    throw IllDefinedMove("move: " + std::to_string(to) + " is the hole; choose a point holding a counter");
  perm_ = perm_ * elementary_move(board_->groupoid.pairs(), hole(), to);
  history_.push_back(to);
  check();
}

bool GameSession::undo() {
  if (history_.empty()) return false;
  const Point to = history_.back();
  history_.pop_back();
  // Moves are involutions, so appending [hole, to] again cancels the last one.
  perm_ = perm_ * elementary_move(board_->groupoid.pairs(), hole(), to);
  check();
  return true;
}

void GameSession::scramble(unsigned steps) {
  const std::uint32_t n = board_->design.n();
  std::uniform_int_distribution<Point> pick(0, n - 2);
  for (unsigned i = 0; i < steps; ++i) {
    Point to = pick(rng_);
    if (to >= hole()) ++to;
    move(to);
  }
}

void GameSession::reset() {
  history_.clear();
  perm_ = Permutation(board_->design.n());
}

bool GameSession::invariant_holds() const {
  std::vector<Point> path{start()};
  path.insert(path.end(), history_.begin(), history_.end());
  return move_sequence(board_->groupoid.pairs(), path) == perm_;
}

void GameSession::check() const {
#ifndef NDEBUG
  assert(invariant_holds());
#endif
}

json GameSession::state() const {
  json j;
  j["id"] = id_;
  j["hole"] = hole();
  j["start"] = start();
  j["closed"] = closed();
  j["is_identity"] = perm_.is_identity();
  j["permutation"] = permutation_to_json(perm_);
  j["history"] = history_;
  j["displaced"] = perm_.support_size();
  j["in_hole_stabilizer"] = in_hole_stabilizer();
  j["cycles"] = perm_.cycle_string();
  return j;
}

std::uint64_t seed_from_environment() {
  const char* s = std::getenv("CG_SEED");
  if (!s) return std::random_device{}() * 0x9e3779b97f4a7c15ULL ^ std::random_device{}();
  std::uint64_t v = 0;
  const char* end = s + std::char_traits<char>::length(s);
  auto [ptr, ec] = std::from_chars(s, end, v);
  if (ec != std::errc{} || ptr != end || ptr == s) throw InvalidInput("CG_SEED must be an unsigned 64-bit decimal");
  return v;
}

GameService::GameService(Design d, Point start, std::uint64_t seed)
    : board_(std::make_shared<const GameBoard>(std::move(d), start)), seed_(seed) {}

std::size_t GameService::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

std::shared_ptr<GameService::Entry> GameService::find(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

ApiResponse GameService::create_session() {
  std::unique_lock lock(sessions_mutex_);
  const std::uint64_t ordinal = created_++;
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(ordinal), static_cast<std::uint32_t>(ordinal >> 32)};
  std::mt19937_64 gen(seq);
  std::ostringstream id;
  id << std::hex << std::setw(16) << std::setfill('0') << gen();
  auto entry = std::make_shared<Entry>(id.str(), board_, gen());
  sessions_.emplace(id.str(), entry);
  return {201, {{"id", id.str()}}};
}

namespace {

ApiResponse error(int status, std::string message) { return {status, {{"error", std::move(message)}}}; }

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    auto slash = path.find('/');
    parts.push_back(path.substr(0, slash));
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash);
  }
  return parts;
}

// Missing or empty bodies read as {}.
std::optional<json> parse_body(std::string_view body) {
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) return json::object();
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

std::optional<std::uint64_t> unsigned_field(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) return std::nullopt;
  return v.get<std::uint64_t>();
}

}  // namespace

ApiResponse GameService::handle(std::string_view method, std::string_view path, std::string_view body) {
  const auto parts = split_path(path);
  if (parts.size() < 2 || parts[0] != "api") return error(404, "no such endpoint");

  if (parts.size() == 2 && parts[1] == "design") {
    if (method != "GET") return error(405, "use GET");
    return {200, design_to_json(board_->design)};
  }
  if (parts[1] != "session") return error(404, "no such endpoint");
  if (parts.size() == 2) {
    if (method != "POST") return error(405, "use POST");
    return create_session();
  }
  if (parts.size() > 4) return error(404, "no such endpoint");

  auto entry = find(std::string(parts[2]));
  if (!entry) return error(404, "unknown session " + std::string(parts[2]));
  std::lock_guard lock(entry->mutex);
  GameSession& s = entry->session;

  if (parts.size() == 3) {
    if (method != "GET") return error(405, "use GET");
    return {200, s.state()};
  }
  const std::string_view action = parts[3];
  if (action != "move" && action != "undo" && action != "scramble" && action != "reset")
    return error(404, "no such endpoint");
  if (method != "POST") return error(405, "use POST");
  const auto j = parse_body(body);
  if (!j) return error(400, "body must be a JSON object");

  if (action == "move") {
    const auto to = unsigned_field(*j, "to");
    if (!to) return error(400, "move needs {\"to\": point}");
    if (*to >= board_->design.n()) return error(400, "point " + std::to_string(*to) + " is out of range");
    if (*to == s.hole())
      return error(409, "point " + std::to_string(*to) + " is the hole; move a counter from another point");
    s.move(static_cast<Point>(*to));
  } else if (action == "undo") {
    if (!s.undo()) return error(409, "nothing to undo");
  } else if (action == "scramble") {
    const auto steps = unsigned_field(*j, "steps");
    if (!steps) return error(400, "scramble needs {\"steps\": count}");
    if (*steps > kMaxScramble) return error(400, "at most " + std::to_string(kMaxScramble) + " steps");
    s.scramble(static_cast<unsigned>(*steps));
  } else {
    s.reset();
  }
  return {200, s.state()};
}

}  // namespace cg
