#pragma once

// HTTP transport for the game API.

#include <memory>
#include <optional>
#include <string>

#include "cg/game.hpp"

namespace cg {

class ApiServer {
 public:
  /// Serves `service` under /api and, when given, the files of `static_dir`
  /// under /.
  explicit ApiServer(GameService& service, std::optional<std::string> static_dir = std::nullopt);
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Returns the bound port; port 0 picks a free one. IoError on failure.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void run();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cg
