#include "hilcov/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "hilcov/errors.hpp"

namespace hilcov {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& raw, int lineno) {
  std::string line = raw;
  auto hash = line.find('#');
  if (hash != std::string::npos) line.resize(hash);
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), lineno,
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_int(const Token& token, const char* what) {
  try {
    size_t used = 0;
    int value = std::stoi(token.text, &used);
    if (used != token.text.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " \"" + token.text +
                         "\" is not an integer",
                     token.line, token.column);
  }
}

NodeIndex parse_prefix(const Token& token, const std::string& text) {
  try {
    return NodeIndex::from_string(text);
  } catch (const std::exception& e) {
    throw ParseError("bad digit string \"" + text + "\": " + e.what(),
                     token.line, token.column);
  }
}

// "(i,j)" names the order-n cell at column i, row j.
NodeIndex parse_cell_form(const Token& token, int order) {
  const std::string& t = token.text;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad cell coordinates \"" + t + "\": " + why,
                      token.line, token.column);
  };
  if (t.size() < 5 || t.front() != '(' || t.back() != ')') {
    throw fail("expected (i,j)");
  }
  auto comma = t.find(',');
  if (comma == std::string::npos) throw fail("expected (i,j)");
  std::string si = t.substr(1, comma - 1);
  std::string sj = t.substr(comma + 1, t.size() - comma - 2);
  std::int64_t i = 0, j = 0;
  try {
    size_t used = 0;
    i = std::stoll(si, &used);
    if (used != si.size()) throw std::invalid_argument("trailing");
    j = std::stoll(sj, &used);
    if (used != sj.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw fail("coordinates must be integers");
  }
  std::int64_t side = std::int64_t{1} << order;
  if (i < 0 || j < 0 || i >= side || j >= side) {
    throw fail("coordinates outside the order-" + std::to_string(order) +
               " grid");
  }
  return inverse_map_center(GridCell{order, i, j});
}

}  // namespace

World parse_world_file(std::istream& in) {
  int order = -1;
  std::vector<NodeIndex> blocked;
  ResolutionMap rmap;
  bool resolution_used = false;
  bool default_order_seen = false;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> tokens = tokenize_line(raw, lineno);
    if (tokens.empty()) continue;
    const Token& key = tokens[0];
    if (key.text == "order") {
      if (order >= 0) throw ParseError("duplicate key \"order\"", key.line,
                                       key.column);
      if (tokens.size() != 2) {
        throw ParseError("\"order\" takes exactly one value", key.line,
                         key.column);
      }
      order = parse_int(tokens[1], "order");
      if (order < 1 || order > 16) {
        throw ParseError("order must be between 1 and 16", tokens[1].line,
                         tokens[1].column);
      }
    } else if (key.text == "obstacles") {
      if (order < 0) {
        throw ParseError("\"order\" must be declared before obstacles",
                         key.line, key.column);
      }
      if (tokens.size() < 2) {
        throw ParseError("\"obstacles\" needs at least one value", key.line,
                         key.column);
      }
      for (size_t k = 1; k < tokens.size(); ++k) {
        const Token& token = tokens[k];
        NodeIndex node = token.text.front() == '('
                             ? parse_cell_form(token, order)
                             : parse_prefix(token, token.text);
        if (node.order < 1 || node.order > order) {
          throw ParseError("obstacle \"" + token.text +
                               "\" has prefix length outside 1..order",
                           token.line, token.column);
        }
        blocked.push_back(std::move(node));
      }
    } else if (key.text == "default_order") {
      if (order < 0) {
        throw ParseError("\"order\" must be declared before default_order",
                         key.line, key.column);
      }
      if (default_order_seen) {
        throw ParseError("duplicate key \"default_order\"", key.line,
                         key.column);
      }
      if (tokens.size() != 2) {
        throw ParseError("\"default_order\" takes exactly one value",
                         key.line, key.column);
      }
      rmap.default_order = parse_int(tokens[1], "default_order");
      if (rmap.default_order < 0 || rmap.default_order > order) {
        throw ParseError("default_order must be between 0 and " +
                             std::to_string(order),
                         tokens[1].line, tokens[1].column);
      }
      default_order_seen = true;
      resolution_used = true;
    } else if (key.text == "regions") {
      if (order < 0) {
        throw ParseError("\"order\" must be declared before regions",
                         key.line, key.column);
      }
      if (tokens.size() < 2) {
        throw ParseError("\"regions\" needs at least one prefix:order value",
                         key.line, key.column);
      }
      for (size_t k = 1; k < tokens.size(); ++k) {
        const Token& token = tokens[k];
        auto colon = token.text.find(':');
        if (colon == std::string::npos || colon == 0 ||
            colon + 1 == token.text.size()) {
          throw ParseError("region \"" + token.text +
                               "\" must look like prefix:order",
                           token.line, token.column);
        }
        ResolutionMap::Region region;
        region.prefix = parse_prefix(token, token.text.substr(0, colon));
        Token order_token = token;
        order_token.text = token.text.substr(colon + 1);
        order_token.column = token.column + static_cast<int>(colon) + 1;
        region.order = parse_int(order_token, "region order");
        if (region.order < region.prefix.order || region.order > order) {
          throw ParseError("region order must be between the prefix length " +
                               std::to_string(region.prefix.order) + " and " +
                               std::to_string(order),
                           order_token.line, order_token.column);
        }
        rmap.regions.push_back(std::move(region));
      }
      resolution_used = true;
    } else {
      throw ParseError("unknown key \"" + key.text + "\"", key.line,
                       key.column);
    }
  }
  if (order < 0) {
    throw ParseError("missing required key \"order\"", lineno + 1, 1);
  }
  std::optional<ResolutionMap> resolution;
  if (resolution_used) {
    if (!default_order_seen) rmap.default_order = order;
    resolution = std::move(rmap);
  }
  return World(order, std::move(blocked), std::move(resolution));
}

World load_world_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open world file \"" + path + "\"", 0, 0);
  }
  return parse_world_file(in);
}

std::string trace_to_csv(const Trace& trace) {
  std::string out = "slot,t,rank,digits,x,y,event\n";
  for (const auto& step : trace.steps) {
    ExactPoint c = cell_of(step.node).center();
    out += std::to_string(step.slot);
    out += ',';
    out += step.t.to_decimal();
    out += ',';
    out += std::to_string(step.node.rank());
    out += ',';
    out += step.node.to_string();
    out += ',';
    out += c.x().to_decimal();
    out += ',';
    out += c.y().to_decimal();
    out += ',';
    out += to_string(step.event);
    out += '\n';
  }
  return out;
}

namespace {

// Exact value of a non-negative terminating decimal; rejects fractions that
// are not dyadic (every exported value is).
ExactScalar decimal_to_exact(const std::string& text, int line, int column) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad decimal \"" + text + "\": " + why, line, column);
  };
  if (text.empty()) throw fail("empty");
  auto dot = text.find('.');
  std::string int_part = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac_part =
      dot == std::string::npos ? "" : text.substr(dot + 1);
  if (int_part.empty()) int_part = "0";
  for (char ch : int_part + frac_part) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw fail("not a number");
    }
  }
  if (frac_part.size() > 30) throw fail("too many fractional digits");
  unsigned __int128 numerator = 0;
  for (char ch : int_part + frac_part) {
    numerator = numerator * 10 + static_cast<unsigned>(ch - '0');
  }
  int pow2 = static_cast<int>(frac_part.size());
  for (int k = 0; k < pow2; ++k) {
    if (numerator % 5 != 0) throw fail("not a dyadic rational");
    numerator /= 5;
  }
  if (numerator > static_cast<unsigned __int128>(INT64_MAX)) {
    throw fail("out of range");
  }
  return ExactScalar{static_cast<std::int64_t>(numerator), pow2};
}

}  // namespace

std::vector<TraceStep> parse_trace_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  int lineno = 0;
  std::vector<TraceStep> steps;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::vector<int> columns;
    size_t start = 0;
    while (true) {
      auto comma = line.find(',', start);
      fields.push_back(line.substr(
          start, comma == std::string::npos ? line.size() - start
                                            : comma - start));
      columns.push_back(static_cast<int>(start) + 1);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (lineno == 1) {
      if (line != "slot,t,rank,digits,x,y,event") {
        throw ParseError("bad CSV header", 1, 1);
      }
      continue;
    }
    if (fields.size() != 7) {
      throw ParseError("expected 7 fields, got " +
                           std::to_string(fields.size()),
                       lineno, 1);
    }
    TraceStep step;
    try {
      step.slot = std::stoull(fields[0]);
    } catch (const std::exception&) {
      throw ParseError("bad slot \"" + fields[0] + "\"", lineno, columns[0]);
    }
    step.t = decimal_to_exact(fields[1], lineno, columns[1]);
    try {
      step.node = NodeIndex::from_string(fields[3]);
    } catch (const std::exception& e) {
      throw ParseError("bad digits \"" + fields[3] + "\": " + e.what(),
                       lineno, columns[3]);
    }
    std::uint64_t rank = 0;
    try {
      rank = std::stoull(fields[2]);
    } catch (const std::exception&) {
      throw ParseError("bad rank \"" + fields[2] + "\"", lineno, columns[2]);
    }
    if (rank != step.node.rank()) {
      throw ParseError("rank " + fields[2] + " does not match digits " +
                           fields[3],
                       lineno, columns[2]);
    }
    try {
      step.event = step_event_from_string(fields[6]);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lineno, columns[6]);
    }
    steps.push_back(std::move(step));
  }
  if (lineno == 0) throw ParseError("empty CSV", 1, 1);
  return steps;
}

std::string coverage_report_to_json(const CoverageReport& report) {
  nlohmann::json j;
  j["pass"] = report.pass;
  j["total_leaves"] = report.total_leaves;
  j["free_leaves"] = report.free_leaves;
  j["covered_leaves"] = report.covered_leaves;
  j["revisit_count"] = report.revisit_count;
  j["step_count"] = report.step_count;
  j["move_count"] = report.move_count;
  j["query_count"] = report.query_count;
  j["rewrite_count"] = report.rewrite_count;
  j["path_length"] = report.path_length;
  j["missed"] = report.missed;
  j["incursions"] = report.incursions;
  j["adjacency_faults"] = report.adjacency_faults;
  return j.dump(2) + "\n";
}

std::string campaign_report_to_json(const CampaignReport& report) {
  nlohmann::json j;
  j["name"] = report.name;
  j["order"] = report.order;
  j["worlds"] = report.worlds;
  j["passes"] = report.passes;
  j["failures"] = report.failures;
  j["errors"] = report.errors;
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : report.counterexamples) {
    nlohmann::json entry;
    entry["world"] = c.world;
    entry["simulated"] = c.simulated;
    entry["detail"] = c.detail;
    j["counterexamples"].push_back(entry);
  }
  return j.dump(2) + "\n";
}

MapVariant map_variant_from_string(const std::string& text) {
  if (text == "standard") return MapVariant::standard;
  if (text == "center") return MapVariant::center;
  if (text == "simplified") return MapVariant::simplified;
  throw std::invalid_argument("unknown map variant \"" + text +
                              "\" (expected standard, center or simplified)");
}

}  // namespace hilcov
