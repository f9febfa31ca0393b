#include "cg/json_io.hpp"

#include <fstream>

#include "cg/errors.hpp"

namespace cg {

using nlohmann::json;

namespace {

template <typename F>
auto schema(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

std::vector<F2Vector> bit_rows(const json& j, std::size_t length, const char* what) {
  std::vector<F2Vector> out;
  for (const auto& s : j) {
    auto v = F2Vector::from_string(s.get<std::string>());
    if (v.size() != length) throw InvalidInput(std::string(what) + ": bit-string has the wrong length");
    out.push_back(std::move(v));
  }
  return out;
}

json bit_strings(const F2Matrix& m) {
  json out = json::array();
  for (const auto& s : m.to_strings()) out.push_back(s);
  return out;
}

}  // namespace

json design_to_json(const Design& d) {
  json j;
  j["name"] = d.name();
  j["n"] = d.n();
  if (d.lambda()) j["lambda"] = *d.lambda();
  j["blocks"] = json::array();
  for (const auto& b : d.blocks()) j["blocks"].push_back(b);
  if (d.labels()) {
    j["labels"] = json::array();
    for (const auto& v : *d.labels()) j["labels"].push_back(v.to_string());
  }
  return j;
}

Design design_from_json(const json& j) {
  return schema("design JSON", [&] {
    if (!j.is_object()) throw InvalidInput("design JSON: expected an object");
    const auto n = j.at("n").get<std::uint32_t>();
    std::vector<Block> blocks;
    for (const auto& b : j.at("blocks")) {
      if (!b.is_array() || b.size() != 4) throw InvalidInput("design JSON: blocks need exactly four points");
      blocks.push_back(b.get<Block>());
    }
    std::optional<std::vector<F2Vector>> labels;
    if (j.contains("labels")) {
      labels.emplace();
      for (const auto& s : j.at("labels")) labels->push_back(F2Vector::from_string(s.get<std::string>()));
      if (!labels->empty()) {
        const auto len = labels->front().size();
        for (const auto& v : *labels)
          if (v.size() != len) throw InvalidInput("design JSON: labels have different lengths");
      }
    }
    std::optional<unsigned> lambda;
    if (j.contains("lambda")) lambda = j.at("lambda").get<unsigned>();
    return Design(j.value("name", std::string{}), n, std::move(blocks), std::move(labels), lambda);
  });
}

Design load_design(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
  return design_from_json(j);
}

void save_design(const std::filesystem::path& path, const Design& d) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << design_to_json(d).dump(1) << "\n";
  if (!out) throw IoError("write failed for " + path.string());
}

json code_to_json(const LinearCode& c) {
  json j;
  j["n"] = c.length();
  j["k"] = c.dimension();
  j["basis"] = bit_strings(c.basis());
  if (c.stored_parity_check()) j["parity_check"] = bit_strings(*c.stored_parity_check());
  return j;
}

LinearCode code_from_json(const json& j) {
  return schema("code JSON", [&] {
    const auto n = j.at("n").get<std::size_t>();
    const auto k = j.at("k").get<std::size_t>();
    LinearCode c = LinearCode::from_generators(F2Matrix(bit_rows(j.at("basis"), n, "code JSON"), n));
    if (c.dimension() != k) throw InvalidInput("code JSON: basis rank differs from k");
    if (j.contains("parity_check")) c = c.with_parity_check(F2Matrix(bit_rows(j.at("parity_check"), n, "code JSON"), n));
    return c;
  });
}

json permutation_to_json(const Permutation& p) {
  json out = json::array();
  for (std::size_t i = 0; i < p.degree(); ++i) out.push_back(p[static_cast<Point>(i)]);
  return out;
}

Permutation permutation_from_json(const json& j) {
  return schema("permutation JSON", [&] { return Permutation(j.get<std::vector<Point>>()); });
}

json summary_to_json(const GroupoidSummary& s) {
  json j;
  j["n"] = s.n;
  j["hole"] = s.hole;
  j["pi_order"] = to_decimal(s.pi_order);
  j["groupoid_size"] = to_decimal(s.groupoid_size);
  j["move_group_order"] = to_decimal(s.move_group_order);
  j["is_group"] = s.is_group;
  j["transitive"] = s.transitive;
  j["primitive"] = s.primitive ? json(*s.primitive) : json(nullptr);
  j["contains_alternating"] = s.contains_alternating;
  return j;
}

GroupoidSummary summary_from_json(const json& j) {
  return schema("summary JSON", [&] {
    auto big = [&](const char* key) {
      const auto s = j.at(key).get<std::string>();
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidInput(std::string("summary JSON: ") + key + " is not a decimal string");
      return BigInt(s);
    };
    GroupoidSummary s;
    s.n = j.at("n").get<std::uint32_t>();
    s.hole = j.at("hole").get<Point>();
    s.pi_order = big("pi_order");
    s.groupoid_size = big("groupoid_size");
    s.move_group_order = big("move_group_order");
    s.is_group = j.at("is_group").get<bool>();
    s.transitive = j.at("transitive").get<bool>();
    if (!j.at("primitive").is_null()) s.primitive = j.at("primitive").get<bool>();
    s.contains_alternating = j.at("contains_alternating").get<bool>();
    return s;
  });
}

}  // namespace cg
