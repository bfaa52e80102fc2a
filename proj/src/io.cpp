#include "hilbert/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hilbert/errors.hpp"

namespace hilbert {

namespace {

using nlohmann::json;

void check_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw MalformedInput("empty label");
    if (!seen.insert(l).second) throw MalformedInput("duplicate label '" + l + "'");
  }
}

AlgebraFile parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("JSON: ") + e.what());
  }
  AlgebraFile f;
  try {
    f.table = doc.at("table").get<std::vector<std::vector<Element>>>();
    const auto& one = doc.at("one");
    if (doc.contains("labels")) f.labels = doc.at("labels").get<std::vector<std::string>>();
    if (one.is_string()) {
      auto it = std::find(f.labels.begin(), f.labels.end(), one.get<std::string>());
      if (it == f.labels.end()) throw MalformedInput("unknown unit label");
      f.one = static_cast<Element>(it - f.labels.begin());
    } else {
      f.one = one.get<Element>();
    }
    if (doc.contains("size") && doc.at("size").get<int>() != static_cast<int>(f.table.size()))
      throw MalformedInput("size disagrees with the number of rows");
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("JSON: ") + e.what());
  }
  if (!f.labels.empty() && f.labels.size() != f.table.size()) throw MalformedInput("label count disagrees with size");
  check_labels(f.labels);
  return f;
}

AlgebraFile parse_text(std::string_view text) {
  AlgebraFile f;
  std::vector<std::vector<std::string>> rows;
  std::string one_token;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;
    if (tokens[0] == "labels") {
      f.labels.assign(tokens.begin() + 1, tokens.end());
    } else if (tokens[0] == "one") {
      if (tokens.size() != 2) throw MalformedInput("line " + std::to_string(line_no) + ": expected 'one <element>'");
      one_token = tokens[1];
    } else {
      rows.push_back(tokens);
    }
  }
  if (rows.empty()) throw MalformedInput("no table rows");
  if (one_token.empty()) throw MalformedInput("missing 'one' line");
  if (!f.labels.empty() && f.labels.size() != rows.size()) throw MalformedInput("label count disagrees with size");
  check_labels(f.labels);

  auto resolve = [&](const std::string& tok) -> Element {
    for (std::size_t i = 0; i < f.labels.size(); ++i)
      if (f.labels[i] == tok) return static_cast<Element>(i);
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used == tok.size()) return v;
    } catch (const std::exception&) {
    }
    throw MalformedInput("unknown element '" + tok + "'");
  };
  f.one = resolve(one_token);
  for (const auto& r : rows) {
    f.table.emplace_back();
    for (const auto& tok : r) f.table.back().push_back(resolve(tok));
  }
  return f;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') return parse_json(text);
  return parse_text(text);
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str());
}

Algebra to_algebra(const AlgebraFile& file) {
  Algebra a = make_algebra(file.table, file.one);
  return file.labels.empty() ? a : a.with_labels(file.labels);
}

Algebra load_algebra(const std::string& path) { return to_algebra(read_algebra_file(path)); }

std::string to_json_text(const Algebra& a) {
  json doc;
  doc["size"] = a.size();
  doc["one"] = a.one();
  doc["labels"] = a.labels();
  doc["table"] = a.rows();
  return doc.dump() + "\n";
}

std::string to_plain_text(const Algebra& a) {
  std::ostringstream out;
  out << "labels";
  for (const auto& l : a.labels()) out << ' ' << l;
  out << "\none " << a.label(a.one()) << '\n';
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) out << (y ? " " : "") << a.label(a.imp(x, y));
    out << '\n';
  }
  return out.str();
}

std::string to_dot(std::string_view graph_name, const Poset& order, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (int i = 0; i < order.n; ++i) out << "  n" << i << " [label=" << json(labels.at(i)).dump() << "];\n";
  for (auto [lo, hi] : order.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

json check_to_json(const CheckResult& c, bool timing) {
  json j;
  j["name"] = c.name;
  j["status"] = std::string(to_string(c.status));
  j["cases"] = {{"pass", c.cases_passed}, {"fail", c.cases_failed}, {"skipped", c.cases_skipped}};
  j["witnesses"] = c.witnesses;
  if (!c.reason.empty()) j["reason"] = c.reason;
  if (!c.notes.empty()) j["notes"] = c.notes;
  if (timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(c.elapsed).count();
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report, bool timing) {
  json doc;
  doc["checks"] = json::array();
  int counts[3] = {0, 0, 0};
  for (const auto& c : report.checks) {
    doc["checks"].push_back(check_to_json(c, timing));
    ++counts[static_cast<int>(c.status)];
  }
  doc["summary"] = {{"passed", counts[0]}, {"failed", counts[1]}, {"skipped", counts[2]}, {"ok", report.passed()}};
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report, bool timing) {
  std::ostringstream out;
  int counts[3] = {0, 0, 0};
  for (const auto& c : report.checks) {
    ++counts[static_cast<int>(c.status)];
    out << to_string(c.status) << "  " << c.name;
    const int cases = c.cases_passed + c.cases_failed + c.cases_skipped;
    if (cases > 0) {
      out << "  [" << c.cases_passed << " pass";
      if (c.cases_failed) out << ", " << c.cases_failed << " fail";
      if (c.cases_skipped) out << ", " << c.cases_skipped << " skipped";
      out << "]";
    }
    if (timing) out << "  " << std::chrono::duration<double, std::milli>(c.elapsed).count() << " ms";
    out << '\n';
    if (!c.reason.empty()) out << "    reason: " << c.reason << '\n';
    for (const auto& w : c.witnesses) out << "    witness: " << w << '\n';
    for (const auto& n : c.notes) out << "    note: " << n << '\n';
  }
  out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
  return out.str();
}

}  // namespace hilbert
