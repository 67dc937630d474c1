#include "leaderline/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "leaderline/errors.hpp"

namespace leaderline {
namespace {

using json = nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw MalformedInput((path.empty() ? std::string("/") : path) + ": " + what);
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw MalformedInput("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing \"" + key + "\"");
  return *it;
}

Rational number(const json& value, const std::string& path) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const MalformedInput& e) {
      schema_error(path, e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long>());
  schema_error(path, "expected an exact number string");
}

int integer(const json& value, const std::string& path) {
  if (!value.is_number_integer()) schema_error(path, "expected an integer");
  return value.get<int>();
}

Side side(const json& value, const std::string& path) {
  if (value == "left") return Side::Left;
  if (value == "right") return Side::Right;
  schema_error(path, "expected \"left\" or \"right\"");
}

const json& array(const json& value, const std::string& path) {
  if (!value.is_array()) schema_error(path, "expected an array");
  return value;
}

// Places items by their "id" member, which must run over 0..size-1.
template <typename T, typename Make>
std::vector<T> by_id(const json& items, const std::string& path, Make make) {
  std::vector<std::optional<T>> slots(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string at = path + "/" + std::to_string(i);
    int id = integer(member(items[i], "id", at), at + "/id");
    if (id < 0 || id >= static_cast<int>(items.size())) schema_error(at + "/id", "ids must run over 0..count-1");
    if (slots[id]) schema_error(at + "/id", "duplicate id " + std::to_string(id));
    slots[id] = make(items[i], at, id);
  }
  std::vector<T> out;
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

json num(const Rational& value) { return format_rational(value); }

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc = parse_document(text);
  Instance inst;
  const json& b = member(doc, "boundary", "");
  inst.boundary.x_left = number(member(b, "x_left", "/boundary"), "/boundary/x_left");
  inst.boundary.x_right = number(member(b, "x_right", "/boundary"), "/boundary/x_right");
  inst.boundary.y_bottom = number(member(b, "y_bottom", "/boundary"), "/boundary/y_bottom");
  inst.boundary.y_top = number(member(b, "y_top", "/boundary"), "/boundary/y_top");

  const json& mode = member(doc, "mode", "");
  if (mode == "fixed") {
    inst.mode = CandidateMode::Fixed;
  } else if (mode == "sliding") {
    inst.mode = CandidateMode::Sliding;
  } else {
    schema_error("/mode", "expected \"fixed\" or \"sliding\"");
  }
  if (auto it = doc.find("objective"); it != doc.end()) {
    if (*it == "length") {
      inst.objective = ObjectiveKind::Length;
    } else if (*it == "bends") {
      inst.objective = ObjectiveKind::Bends;
    } else {
      schema_error("/objective", "expected \"length\" or \"bends\"");
    }
  }
  if (auto it = doc.find("v_min"); it != doc.end() && !it->is_null()) inst.v_min = number(*it, "/v_min");

  inst.sites = by_id<Site>(array(member(doc, "sites", ""), "/sites"), "/sites",
                           [](const json& item, const std::string& at, int id) {
                             return Site{id, number(member(item, "x", at), at + "/x"),
                                         number(member(item, "y", at), at + "/y"),
                                         number(member(item, "h", at), at + "/h")};
                           });
  if (auto it = doc.find("candidates"); it != doc.end()) {
    inst.candidates = by_id<Candidate>(array(*it, "/candidates"), "/candidates",
                                       [](const json& item, const std::string& at, int id) {
                                         return Candidate{id, side(member(item, "side", at), at + "/side"),
                                                          number(member(item, "y", at), at + "/y")};
                                       });
  }
  if (auto it = doc.find("groups"); it != doc.end()) {
    const json& groups = array(*it, "/groups");
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const std::string at = "/groups/" + std::to_string(g);
      std::vector<int> ids;
      for (std::size_t i = 0; i < array(groups[g], at).size(); ++i) {
        ids.push_back(integer(groups[g][i], at + "/" + std::to_string(i)));
      }
      if (ids.empty()) schema_error(at, "empty group");
      inst.constraints.groups.push_back(std::move(ids));
    }
  }
  if (auto it = doc.find("order"); it != doc.end()) {
    const json& order = array(*it, "/order");
    for (std::size_t r = 0; r < order.size(); ++r) {
      const std::string at = "/order/" + std::to_string(r);
      if (!order[r].is_array() || order[r].size() != 2) schema_error(at, "expected a pair [from, to]");
      inst.constraints.order.emplace_back(integer(order[r][0], at + "/0"), integer(order[r][1], at + "/1"));
    }
  }
  inst.constraints = normalize_constraints(std::move(inst.constraints));
  validate_instance(inst);
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  json doc = json::object();
  doc["boundary"] = {{"x_left", num(inst.boundary.x_left)},
                     {"x_right", num(inst.boundary.x_right)},
                     {"y_bottom", num(inst.boundary.y_bottom)},
                     {"y_top", num(inst.boundary.y_top)}};
  doc["mode"] = to_string(inst.mode);
  doc["objective"] = to_string(inst.objective);
  if (inst.v_min) doc["v_min"] = num(*inst.v_min);
  json sites = json::array();
  for (const auto& s : inst.sites) {
    sites.push_back({{"id", s.id}, {"x", num(s.x)}, {"y", num(s.y)}, {"h", num(s.label_height)}});
  }
  doc["sites"] = std::move(sites);
  json cands = json::array();
  for (const auto& c : inst.candidates) cands.push_back({{"id", c.id}, {"side", to_string(c.side)}, {"y", num(c.y)}});
  doc["candidates"] = std::move(cands);
  doc["groups"] = inst.constraints.groups;
  json order = json::array();
  for (auto [a, b] : inst.constraints.order) order.push_back({a, b});
  doc["order"] = std::move(order);
  return doc.dump(2) + "\n";
}

Labeling parse_labeling(const std::string& text, int site_count) {
  json doc = parse_document(text);
  const json& items = array(member(doc, "placements", ""), "/placements");
  std::vector<std::optional<Placement>> slots(site_count);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string at = "/placements/" + std::to_string(i);
    int site = integer(member(items[i], "site", at), at + "/site");
    if (site < 0 || site >= site_count) schema_error(at + "/site", "unknown site " + std::to_string(site));
    if (slots[site]) schema_error(at + "/site", "site " + std::to_string(site) + " placed twice");
    Placement p;
    p.side = side(member(items[i], "side", at), at + "/side");
    p.y = number(member(items[i], "y", at), at + "/y");
    if (auto it = items[i].find("candidate"); it != items[i].end() && !it->is_null()) {
      p.candidate = integer(*it, at + "/candidate");
    }
    slots[site] = p;
  }
  Labeling out;
  for (int s = 0; s < site_count; ++s) {
    if (!slots[s]) throw MalformedInput("labeling leaves site " + std::to_string(s) + " unplaced");
    out.placements.push_back(*slots[s]);
  }
  return out;
}

std::string labeling_to_json(const Labeling& labeling, const Rational* objective) {
  json doc = json::object();
  if (objective) doc["objective"] = num(*objective);
  json items = json::array();
  for (std::size_t s = 0; s < labeling.placements.size(); ++s) {
    const Placement& p = labeling.placements[s];
    json item = {{"site", s}, {"side", to_string(p.side)}, {"y", num(p.y)}};
    if (p.candidate >= 0) item["candidate"] = p.candidate;
    items.push_back(std::move(item));
  }
  doc["placements"] = std::move(items);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Instance read_instance(const std::filesystem::path& path) { return parse_instance(read_text_file(path)); }

void write_instance(const std::filesystem::path& path, const Instance& instance) {
  write_text_file(path, instance_to_json(instance));
}

Labeling read_labeling(const std::filesystem::path& path, int site_count) {
  return parse_labeling(read_text_file(path), site_count);
}

void write_labeling(const std::filesystem::path& path, const Labeling& labeling, const Rational* objective) {
  write_text_file(path, labeling_to_json(labeling, objective));
}

}  // namespace leaderline
