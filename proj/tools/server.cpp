#include "server.hpp"

#include <httplib.h>

#include "cg/errors.hpp"

namespace cg {

struct ApiServer::Impl {
  httplib::Server http;
};

ApiServer::ApiServer(GameService& service, std::optional<std::string> static_dir) : impl_(std::make_unique<Impl>()) {
  auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
    ApiResponse r;
    try {
      r = service.handle(req.method, req.path, req.body);
    } catch (const std::exception& e) {
      r = {500, {{"error", e.what()}}};
    }
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  impl_->http.Get(R"(/api/.*)", handler);
  impl_->http.Post(R"(/api/.*)", handler);
  if (static_dir && !impl_->http.set_mount_point("/", *static_dir))
    throw IoError("serve: cannot mount " + *static_dir);
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int p = impl_->http.bind_to_any_port(host);
    if (p < 0) throw IoError("serve: cannot bind " + host);
    return p;
  }
  if (!impl_->http.bind_to_port(host, port)) throw IoError("serve: cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void ApiServer::run() { impl_->http.listen_after_bind(); }

void ApiServer::stop() {
  if (impl_->http.is_running()) impl_->http.stop();
}

void ApiServer::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace cg
