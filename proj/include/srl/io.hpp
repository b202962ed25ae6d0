#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "srl/group.hpp"

namespace srl {

// Group spec grammar: atoms C<n>, D<n> (n = order), Q8, G16, joined by 'x',
// e.g. "D8xC5".
inline Group parse_group_spec(const std::string& spec) {
  std::vector<Group> parts;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t next = spec.find('x', pos);
    std::string tok = spec.substr(pos, next == std::string::npos
                                           ? std::string::npos
                                           : next - pos);
    if (tok == "Q8") {
      parts.push_back(quaternion8());
    } else if (tok == "G16") {
      parts.push_back(g16());
    } else if (tok.size() >= 2 && (tok[0] == 'C' || tok[0] == 'D') &&
               tok.find_first_not_of("0123456789", 1) == std::string::npos) {
      int n = 0;
      try {
        n = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        throw std::invalid_argument("group spec: bad order in '" + tok + "'");
      }
      parts.push_back(tok[0] == 'C' ? cyclic(n) : dihedral(n));
    } else {
      throw std::invalid_argument("group spec: unknown token '" + tok + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  Group g = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parts[i]);
  g.set_label(spec);
  return g;
}

// Partition file: one class per line, elements as space-separated indices.
// Blank lines are ignored.  Output is normalized: elements ascending, lines
// sorted by first element.
inline std::vector<std::vector<int>> read_partition(std::istream& in) {
  std::vector<std::vector<int>> classes;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<int> cls;
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        cls.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("partition file: bad token '" + tok +
                                    "' on line " + std::to_string(lineno));
      }
    }
    if (!cls.empty()) classes.push_back(std::move(cls));
  }
  if (classes.empty())
    throw std::invalid_argument("partition file: no classes");
  return classes;
}

inline void write_partition(std::ostream& out,
                            std::vector<std::vector<int>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  for (const auto& c : classes) {
    for (size_t i = 0; i < c.size(); ++i)
      out << (i ? " " : "") << c[i];
    out << "\n";
  }
}

inline void write_group_table(std::ostream& out, const Group& g) {
  out << g.order() << "\n";
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y)
      out << (y ? " " : "") << g.mul(x, y);
    out << "\n";
  }
}

inline std::string join_ints(const std::vector<int>& v, char sep = ',') {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// classes joined with '|', elements within a class with ','
inline std::string join_classes(const std::vector<std::vector<int>>& cs) {
  std::string s;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) s += '|';
    s += join_ints(cs[i]);
  }
  return s;
}

// One report record: ordered key=value fields rendered as a single line, or
// mirrored as a JSON object.  String values containing spaces are quoted.
struct Record {
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();

  void put(const std::string& k, const std::string& v) { fields[k] = v; }
  void put(const std::string& k, const char* v) { fields[k] = std::string(v); }
  void put(const std::string& k, bool v) { fields[k] = v; }
  void put(const std::string& k, int v) { fields[k] = v; }
  void put(const std::string& k, long long v) { fields[k] = v; }
  void put(const std::string& k, u64 v) { fields[k] = v; }

  std::string line() const {
    std::string s;
    for (auto it = fields.begin(); it != fields.end(); ++it) {
      if (!s.empty()) s += ' ';
      s += it.key();
      s += '=';
      if (it->is_string()) {
        const std::string v = it->get<std::string>();
        s += v.find(' ') == std::string::npos ? v : it->dump();
      } else {
        s += it->dump();
      }
    }
    return s;
  }
};

inline void print_records(std::ostream& out, const std::vector<Record>& recs,
                          bool as_json) {
  if (as_json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : recs) arr.push_back(r.fields);
    out << arr.dump(2) << "\n";
    return;
  }
  for (const auto& r : recs) out << r.line() << "\n";
}

}  // namespace srl
