#include "frontsheaf/front_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace frontsheaf {

namespace {

[[noreturn]] void die(int line, const std::string& msg) {
  throw FrontParseError("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

SimplexIndex parse_cell(const std::string& s, int line) {
  SimplexIndex I;
  std::istringstream is(s);
  int v;
  while (is >> v) I.push_back(v);
  if (I.empty()) die(line, "expected a cell (space-separated vertices)");
  try {
    simplex_dim(I);
  } catch (const std::exception& e) {
    die(line, e.what());
  }
  return I;
}

}  // namespace

FrontComplex parse_front(std::istream& in) {
  FrontComplex front;
  std::string raw;
  int line = 0;
  // Deferred sheet/iota/cusp records: cells must exist before use, but we
  // allow any statement order, so apply simplex lines first-come and verify
  // cell existence at use time via FrontComplex itself.
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw;
    size_t hash = text.find('#');
    if (hash != std::string::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;

    std::istringstream is(text);
    std::string keyword;
    is >> keyword;
    std::string rest;
    std::getline(is, rest);
    rest = trim(rest);

    if (keyword == "name") {
      if (rest.empty()) die(line, "name requires an identifier");
      front.name = rest;
    } else if (keyword == "simplex") {
      front.add_simplex(parse_cell(rest, line));
    } else if (keyword == "triple") {
      SimplexIndex v = parse_cell(rest, line);
      if (v.size() != 1) die(line, "triple expects a single vertex");
      front.tag_triple_point(v[0]);
    } else if (keyword == "sheets" || keyword == "iota" || keyword == "cusp" ||
               keyword == "fcu") {
      size_t colon = rest.find(':');
      if (colon == std::string::npos) die(line, keyword + " requires ':'");
      std::string head = trim(rest.substr(0, colon));
      std::string body = trim(rest.substr(colon + 1));

      if (keyword == "sheets") {
        SimplexIndex cell = parse_cell(head, line);
        if (!front.has_cell(cell)) die(line, "unknown cell " + simplex_name(cell));
        CellSheets cs;
        if (!body.empty()) {
          for (const std::string& block_text : split(body, '|')) {
            std::vector<std::string> block;
            for (const std::string& item : split(block_text, '=')) {
              std::string t = trim(item);
              if (t.empty()) die(line, "empty sheet entry");
              size_t slash = t.find('/');
              if (slash == std::string::npos)
                die(line, "sheet entry must be <label>/<maslov>: " + t);
              std::string label = trim(t.substr(0, slash));
              int m;
              try {
                m = std::stoi(trim(t.substr(slash + 1)));
              } catch (const std::exception&) {
                die(line, "bad Maslov value in " + t);
              }
              if (label.empty()) die(line, "empty sheet label");
              block.push_back(label);
              cs.mu[label] = m;
            }
            cs.blocks.push_back(std::move(block));
          }
        }
        front.set_sheets(cell, std::move(cs));
      } else if (keyword == "fcu") {
        SimplexIndex v = parse_cell(head, line);
        if (v.size() != 1) die(line, "fcu expects a single vertex");
        if (body.empty()) die(line, "fcu requires a sheet label");
        front.set_cusp_sheet_vertex(v[0], body);
      } else {
        size_t arrow = head.find("->");
        if (arrow == std::string::npos) die(line, keyword + " requires '<face> -> <coface>'");
        SimplexIndex face = parse_cell(trim(head.substr(0, arrow)), line);
        SimplexIndex coface = parse_cell(trim(head.substr(arrow + 2)), line);
        if (!front.has_cell(face)) die(line, "unknown cell " + simplex_name(face));
        if (!front.has_cell(coface)) die(line, "unknown cell " + simplex_name(coface));
        if (!is_face_of(face, coface) || face == coface)
          die(line, simplex_name(face) + " is not a proper face of " + simplex_name(coface));
        if (keyword == "iota") {
          std::map<std::string, std::string> io;
          if (body == "id") {
            for (const auto& s : front.sheet_order(face)) io[s] = s;
          } else if (!body.empty()) {
            for (const std::string& entry : split(body, ',')) {
              std::string t = trim(entry);
              size_t a = t.find("->");
              if (a == std::string::npos) die(line, "iota entry must be 'a -> b': " + t);
              std::string from = trim(t.substr(0, a)), to = trim(t.substr(a + 2));
              if (from.empty() || to.empty()) die(line, "bad iota entry: " + t);
              if (io.count(from)) die(line, "duplicate iota source " + from);
              io[from] = to;
            }
          }
          front.set_iota(face, coface, std::move(io));
        } else {  // cusp
          size_t gt = body.find('>');
          if (gt == std::string::npos) die(line, "cusp requires '<upper> > <lower>'");
          std::string upper = trim(body.substr(0, gt)), lower = trim(body.substr(gt + 1));
          if (upper.empty() || lower.empty()) die(line, "bad cusp pair");
          front.add_cusp(face, coface, {upper, lower});
        }
      }
    } else {
      die(line, "unknown keyword '" + keyword + "'");
    }
  }
  if (front.cells().empty()) throw FrontParseError("front file declares no simplices");
  return front;
}

FrontComplex load_front_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FrontParseError("cannot open front file: " + path);
  return parse_front(in);
}

}  // namespace frontsheaf
