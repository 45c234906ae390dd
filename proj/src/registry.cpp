#include "iml/cli/registry.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "iml/core/error.hpp"
#include "iml/core/io.hpp"
#include "iml/core/random.hpp"
#include "problems.hpp"

namespace iml::cli {

namespace detail {

std::mt19937_64 master_rng(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a keeps streams stable across standard libraries
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ULL;
  return std::mt19937_64(splitmix64(seed ^ h));
}

Digraph random_tournament(int n, std::mt19937_64& rng) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng() & 1U) d.add_arc(u, v);
      else d.add_arc(v, u);
    }
  return d;
}

Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) d.add_arc(u, v);
  return d;
}

Graph named_graph(const std::string& name, int n, double p, std::mt19937_64& rng) {
  if (name == "path") return graphs::path(n);
  if (name == "cycle") {
    if (n < 3) fail(ErrorCode::kBadParams, "cycles need n >= 3");
    return graphs::cycle(n);
  }
  if (name == "complete") return graphs::complete(n);
  if (name == "star") return graphs::star(std::max(0, n - 1));
  if (name == "petersen") return graphs::petersen();
  if (name == "prism") {
    if (n < 6 || n % 2) fail(ErrorCode::kBadParams, "prisms need even n >= 6");
    return graphs::prism(n / 2);
  }
  if (name == "random") return random_gnp(n, p, rng);
  if (name.rfind("graph6:", 0) == 0) {
    try {
      return io::from_graph6(name.substr(7));
    } catch (const Error& e) {
      fail(ErrorCode::kBadParams, e.what());
    }
  }
  fail(ErrorCode::kBadParams, "unknown graph " + name);
}

json graph_json(const Graph& g) {
  return json{{"n", g.order()}, {"edges", g.edges()}, {"graph6", io::to_graph6(g)}};
}

json digraph_json(const Digraph& d) { return json{{"n", d.order()}, {"arcs", d.arcs()}, {"digraph6", io::to_digraph6(d)}}; }

}  // namespace detail

const std::vector<ProblemEntry>& registry() {
  static const std::vector<ProblemEntry> entries = [] {
    std::vector<ProblemEntry> out;
    detail::add_digraph_problems(out);
    detail::add_colouring_problems(out);
    detail::add_structure_problems(out);
    std::set<std::string> ids;
    for (const auto& e : out)
      if (!ids.insert(e.id).second) fail(ErrorCode::kInvalidArgument, "duplicate problem id " + e.id);
    return out;
  }();
  return entries;
}

std::vector<const ProblemEntry*> list_problems(const std::string& filter) {
  std::vector<const ProblemEntry*> out;
  for (const auto& e : registry())
    if (filter.empty() || e.id.rfind(filter, 0) == 0 || e.session == filter || e.topic == filter) out.push_back(&e);
  return out;
}

const ProblemEntry& find_problem(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  fail(ErrorCode::kUnknownProblem, "no problem with id " + id);
}

namespace {

const char* type_name(Param::Type t) {
  switch (t) {
    case Param::Type::kInt: return "int";
    case Param::Type::kDouble: return "number";
    case Param::Type::kString: return "string";
    case Param::Type::kBool: return "bool";
    case Param::Type::kJson: return "json";
  }
  return "?";
}

}  // namespace

nlohmann::json describe(const ProblemEntry& e) {
  nlohmann::json params = nlohmann::json::array();
  for (const auto& p : e.params) {
    nlohmann::json d{{"name", p.name}, {"type", type_name(p.type)}, {"default", p.default_value}, {"help", p.help}};
    if (p.type == Param::Type::kInt || p.type == Param::Type::kDouble) {
      d["min"] = p.min;
      d["max"] = p.max;
    }
    params.push_back(d);
  }
  return {{"id", e.id}, {"session", e.session}, {"topic", e.topic}, {"kind", e.kind}, {"summary", e.summary}, {"params", params}};
}

nlohmann::json validate_params(const ProblemEntry& e, const nlohmann::json& params) {
  if (!params.is_null() && !params.is_object()) fail(ErrorCode::kBadParams, "parameters must be a JSON object");
  nlohmann::json out = nlohmann::json::object();
  if (params.is_object())
    for (const auto& [key, value] : params.items()) {
      const Param* spec = nullptr;
      for (const auto& p : e.params)
        if (p.name == key) spec = &p;
      if (!spec) fail(ErrorCode::kBadParams, "unknown parameter " + key + " for " + e.id);
      bool ok = false;
      switch (spec->type) {
        case Param::Type::kInt: ok = value.is_number_integer(); break;
        case Param::Type::kDouble: ok = value.is_number(); break;
        case Param::Type::kString: ok = value.is_string(); break;
        case Param::Type::kBool: ok = value.is_boolean(); break;
        case Param::Type::kJson: ok = true; break;
      }
      if (!ok) fail(ErrorCode::kBadParams, "parameter " + key + " must be of type " + type_name(spec->type));
      if (value.is_number()) {
        double x = value.get<double>();
        if (x < spec->min || x > spec->max)
          fail(ErrorCode::kBadParams, "parameter " + key + " out of range [" + std::to_string(spec->min) + ", " +
                                          std::to_string(spec->max) + "]");
      }
      out[key] = value;
    }
  for (const auto& p : e.params)
    if (!out.contains(p.name)) out[p.name] = p.default_value;
  return out;
}

RunReport run(const std::string& id, const nlohmann::json& params, std::uint64_t seed) {
  const ProblemEntry& e = find_problem(id);
  RunReport r;
  r.id = id;
  r.params = validate_params(e, params);
  r.seed = seed;
  auto start = std::chrono::steady_clock::now();
  try {
    r.payload = e.runner(r.params, seed);
  } catch (const Error& err) {
    // The parameters passed the schema but the problem rejected them.
    if (err.code() == ErrorCode::kBadParams) throw;
    fail(ErrorCode::kBadParams, std::string(to_string(err.code())) + ": " + err.what());
  } catch (const nlohmann::json::exception& err) {
    fail(ErrorCode::kBadParams, err.what());
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json to_json(const RunReport& r) {
  return {{"id", r.id},           {"params", r.params},   {"seed", r.seed},       {"version", r.version},
          {"schema", kSchemaVersion}, {"wall_seconds", r.wall_seconds}, {"payload", r.payload}};
}

namespace {

std::string csv_cell(const nlohmann::json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string join(const std::vector<std::string>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
  return out;
}

}  // namespace

std::string payload_csv(const nlohmann::json& payload) {
  std::string out;
  if (payload.contains("rows") && payload["rows"].is_array() && !payload["rows"].empty() &&
      payload["rows"][0].is_object()) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : payload["rows"][0].items()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + keys[i];
    out += '\n';
    for (const auto& row : payload["rows"]) {
      for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + csv_cell(row.value(keys[i], nlohmann::json()));
      out += '\n';
    }
    return out;
  }
  out = "key,value\n";
  for (const auto& [k, v] : payload.items()) out += k + "," + csv_cell(v) + "\n";
  return out;
}

SuiteReport reproduce_all(Profile profile, const std::string& golden_dir, const std::vector<int>& only, bool write_golden) {
  SuiteReport report;
  std::vector<int> numbers = only;
  if (numbers.empty())
    for (int i = 1; i <= kCriteria; ++i) numbers.push_back(i);
  const std::filesystem::path dir = std::filesystem::path(golden_dir) / kSchemaVersion;
  if (write_golden) std::filesystem::create_directories(dir);
  for (int number : numbers) {
    auto result = run_criterion(number, profile);
    report.all_pass = report.all_pass && result.pass;
    for (const auto& table : result.tables) {
      const auto path = dir / (table.name + ".csv");
      if (write_golden) {
        std::ofstream(path) << to_csv(table);
        continue;
      }
      std::ifstream in(path);
      if (!in) {
        report.diffs.push_back({table.name, "missing golden file " + path.string()});
        continue;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      Table golden = table_from_csv(table.name, buf.str());
      if (golden.header != table.header) {
        report.diffs.push_back({table.name, "header differs"});
        continue;
      }
      const std::size_t common = std::min(golden.rows.size(), table.rows.size());
      for (std::size_t i = 0; i < common; ++i)
        if (golden.rows[i] != table.rows[i])
          report.diffs.push_back({table.name, "row " + std::to_string(i + 1) + ": expected " + join(golden.rows[i]) +
                                                  ", got " + join(table.rows[i])});
      if (golden.rows.size() > table.rows.size())
        report.diffs.push_back({table.name, std::to_string(golden.rows.size() - table.rows.size()) + " golden rows not produced"});
      for (std::size_t i = common; i < table.rows.size(); ++i) {
        std::string line = join(table.rows[i]);
        if (profile == Profile::kFull) report.notes.push_back(table.name + ": stretch row " + line + " (no golden)");
        else report.diffs.push_back({table.name, "extra row " + line});
      }
    }
    report.criteria.push_back(std::move(result));
  }
  return report;
}

}  // namespace iml::cli
