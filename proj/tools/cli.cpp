#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cg/codes.hpp"
#include "cg/design.hpp"
#include "cg/errors.hpp"
#include "cg/game.hpp"
#include "cg/groupoid.hpp"
#include "cg/json_io.hpp"
#include "cg/verify.hpp"
#include "server.hpp"

namespace cg {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Loads a design and insists it is a supersimple 2-design.
Design load_valid(const std::string& path, std::ostream& err, int& status) {
  Design d = load_design(path);
  const auto r = validate(d);
  if (!r.ok()) {
    err << path << ": " << r.summary() << "\n";
    status = kExitValidation;
  }
  return d;
}

struct BuildArgs {
  std::string family;
  unsigned m = 3;
  unsigned eps = 1;
  unsigned k = 3;
  std::string output;
};

int cmd_build(const BuildArgs& a, Streams io) {
  Design d;
  if (a.family == "p3")
    d = build_p3();
  else if (a.family == "boolean")
    d = build_boolean(a.k);
  else if (a.family == "sp")
    d = build_sp_design(a.m, a.eps == 1);
  else
    d = build_affine_design(a.m);
  save_design(a.output, d);
  io.out << d.name() << ": n=" << d.n() << " lambda=" << (d.lambda() ? std::to_string(*d.lambda()) : "?")
         << " blocks=" << d.blocks().size() << "\n";
  return kExitOk;
}

int cmd_groupoid(const std::string& file, Point hole, bool as_json, Streams io) {
  int status = kExitOk;
  Design d = load_valid(file, io.err, status);
  if (status != kExitOk) return status;
  if (hole >= d.n()) throw InvalidInput("--hole " + std::to_string(hole) + " is not a point of the design");
  const auto s = summarize_groupoid(d, hole);
  if (as_json) {
    io.out << summary_to_json(s).dump(2) << "\n";
    return kExitOk;
  }
  auto row = [&](const char* key, const std::string& value) {
    io.out << std::left << std::setw(22) << key << value << "\n";
  };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  row("n", std::to_string(s.n));
  row("hole", std::to_string(s.hole));
  row("pi_order", to_decimal(s.pi_order));
  row("groupoid_size", to_decimal(s.groupoid_size));
  row("move_group_order", to_decimal(s.move_group_order));
  row("is_group", flag(s.is_group));
  row("transitive", flag(s.transitive));
  row("primitive", s.primitive ? flag(*s.primitive) : "n/a");
  row("contains_alternating", flag(s.contains_alternating));
  return kExitOk;
}

struct CodeArgs {
  std::string file;
  bool full = false;
  std::string csv;
  std::string export_path;
};

template <typename T>
std::string tuple(const std::vector<T>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

int cmd_code(const CodeArgs& a, Streams io) {
  int status = kExitOk;
  Design d = load_valid(a.file, io.err, status);
  if (status != kExitOk) return status;
  const LinearCode code = incidence_code(d);
  const auto dist = min_distance(code);
  io.out << "length     " << code.length() << "\n"
         << "dimension  " << code.dimension() << "\n"
         << "distance   " << (dist ? std::to_string(*dist) : ">8") << "\n";
  if (!a.export_path.empty()) {
    std::ofstream f(a.export_path);
    if (!(f << code_to_json(code).dump(1) << "\n")) throw IoError("cannot write " + a.export_path);
  }
  if (!a.full) return kExitOk;
  const CosetTable t = coset_analysis(code);
  io.out << "covering_radius  " << t.covering_radius() << "\n"
         << "coset_weights    " << tuple(t.mu()) << "\n";
  const auto arr = t.intersection_array();
  io.out << "completely_regular  " << (arr ? "true" : "false") << "\n";
  if (arr) io.out << "intersection_array  " << arr->to_string() << "\n";
  io.out << "counting_identity   " << (t.counting_identity_holds() ? "holds" : "fails") << "\n";
  if (!a.csv.empty()) {
    std::ofstream f(a.csv);
    if (!f) throw IoError("cannot write " + a.csv);
    t.write_csv(f);
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& design_file, bool as_json, Streams io) {
  if (!design_file.empty()) {
    const Design d = load_design(design_file);
    const auto r = validate(d);
    bool ok = r.ok();
    std::string note = r.summary();
    if (ok && d.lambda() && r.lambda != d.lambda()) {
      ok = false;
      note += "; file advertises lambda=" + std::to_string(*d.lambda());
    }
    io.out << (ok ? "PASS  " : "FAIL  ") << design_file << ": " << note << "\n";
    if (!ok) return kExitValidation;
    if (suite.empty()) return kExitOk;
  }
  const SuiteReport rep = theorem_suite(suite.empty() ? "all" : suite);
  io.out << (as_json ? rep.to_json().dump(2) + "\n" : rep.to_table());
  return rep.passed() ? kExitOk : kExitValidation;
}

void print_state(const GameSession& s, std::ostream& out) {
  out << "hole " << s.hole() << (s.closed() ? " (closed" : " (open") << ", " << s.history().size()
      << " moves)  " << s.perm().cycle_string();
  if (s.closed()) out << (s.in_hole_stabilizer() ? "  in hole stabilizer" : "  NOT in hole stabilizer");
  out << "\n";
}

int cmd_play(const std::string& file, Point hole, Streams io) {
  int status = kExitOk;
  Design d = load_valid(file, io.err, status);
  if (status != kExitOk) return status;
  if (hole >= d.n()) throw InvalidInput("--hole " + std::to_string(hole) + " is not a point of the design");
  auto board = std::make_shared<const GameBoard>(std::move(d), hole);
  GameSession s("repl", board, seed_from_environment());
  io.out << board->design.name() << ": " << board->design.n()
         << " points. Enter a point to move its counter into the hole; u undo, s N scramble, r reset, q quit.\n";
  print_state(s, io.out);
  std::string line;
  while (io.out << "> " << std::flush, std::getline(io.in, line)) {
    std::istringstream words(line);
    std::string cmd;
    if (!(words >> cmd)) continue;
    try {
      if (cmd == "q" || cmd == "quit") break;
      if (cmd == "u" || cmd == "undo") {
        if (!s.undo()) io.out << "nothing to undo\n";
      } else if (cmd == "r" || cmd == "reset") {
        s.reset();
      } else if (cmd == "s" || cmd == "scramble") {
        unsigned steps = 0;
        if (!(words >> steps)) throw InvalidInput("usage: s N");
        s.scramble(steps);
      } else if (cmd == "h" || cmd == "help") {
        io.out << "point: move, u: undo, s N: scramble, r: reset, q: quit\n";
        continue;
      } else {
        std::size_t used = 0;
        unsigned long to = 0;
        try {
          to = std::stoul(cmd, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != cmd.size() || used == 0) throw InvalidInput("unknown command '" + cmd + "'");
        s.move(static_cast<Point>(to));
      }
    } catch (const Error& e) {
      io.out << "rejected: " << e.what() << "\n";
      continue;
    }
    print_state(s, io.out);
  }
  return kExitOk;
}

int cmd_serve(const std::string& file, Point hole, const std::string& host, int port, const std::string& static_dir,
              Streams io) {
  int status = kExitOk;
  Design d = load_valid(file, io.err, status);
  if (status != kExitOk) return status;
  if (hole >= d.n()) throw InvalidInput("--hole " + std::to_string(hole) + " is not a point of the design");
  GameService service(std::move(d), hole, seed_from_environment());
  ApiServer server(service, static_dir.empty() ? std::nullopt : std::optional<std::string>(static_dir));
  const int bound = server.bind(host, port);
  io.out << "serving " << service.board().design.name() << " on http://" << host << ":" << bound << "\n"
         << std::flush;
  server.run();
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Conway groupoids of supersimple designs: build, analyse, verify, play"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "construct a design and write it as JSON");
  b->add_option("--family", build.family, "design family")
      ->required()
      ->check(CLI::IsMember({"p3", "boolean", "sp", "affine"}));
  b->add_option("--m", build.m, "symplectic rank (sp, affine)");
  b->add_option("--eps", build.eps, "quadratic form type for sp")->check(CLI::Range(0, 1));
  b->add_option("--k", build.k, "dimension for boolean");
  b->add_option("-o,--output", build.output, "output file")->required();

  std::string file;
  Point hole = 0;
  bool as_json = false;
  auto* g = app.add_subcommand("groupoid", "hole stabilizer, groupoid size and move group");
  g->add_option("file", file, "design JSON")->required();
  g->add_option("--hole", hole, "the hole");
  g->add_flag("--json", as_json, "print JSON");

  CodeArgs code;
  auto* c = app.add_subcommand("code", "incidence code analysis");
  c->add_option("file", code.file, "design JSON")->required();
  c->add_flag("--full", code.full, "coset table, covering radius and intersection array");
  c->add_option("--csv", code.csv, "write the coset table as CSV (with --full)");
  c->add_option("--export", code.export_path, "write the code as JSON");

  std::string suite;
  std::string design_file;
  auto* v = app.add_subcommand("verify", "run verification suites");
  v->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  v->add_option("--design", design_file, "validate a design file first");
  v->add_flag("--json", as_json, "print JSON");

  auto* p = app.add_subcommand("play", "play the game in the terminal");
  p->add_option("file", file, "design JSON")->required();
  p->add_option("--hole", hole, "starting hole");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  auto* s = app.add_subcommand("serve", "serve the game JSON API");
  s->add_option("file", file, "design JSON")->required();
  s->add_option("--hole", hole, "starting hole for new sessions");
  s->add_option("--host", host, "bind address");
  s->add_option("--port", port, "port (0 picks a free one)")->check(CLI::Range(0, 65535));
  s->add_option("--static", static_dir, "directory of static files served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*b) return cmd_build(build, io);
    if (*g) return cmd_groupoid(file, hole, as_json, io);
    if (*c) return cmd_code(code, io);
    if (*v) return cmd_verify(suite, design_file, as_json, io);
    if (*p) return cmd_play(file, hole, io);
    if (*s) return cmd_serve(file, hole, host, port, static_dir, io);
  } catch (const ScaleError& e) {
    err << "scale error: " << e.what() << "\n";
    return kExitScale;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return *b ? kExitUsage : kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace cg
