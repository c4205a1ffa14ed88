#include "embhom/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "embhom/errors.hpp"

namespace embhom::io {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, col);
  }
}

VertexId to_vertex(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": vertex must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0 || x > std::numeric_limits<VertexId>::max()) throw ParseError(where + ": vertex out of range");
  return static_cast<VertexId>(x);
}

template <EdgeOrder O>
BasicHypergraph<O> parse_edges(const json& doc, const json& rows, std::vector<std::string>& warnings) {
  using Edge = BasicEdge<O>;
  if (!rows.is_array()) throw ParseError("edge list must be an array");
  std::set<Edge> edges;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "edge " + std::to_string(i);
    if (!rows[i].is_array() || rows[i].empty()) throw ParseError(where + ": must be a nonempty array");
    std::vector<VertexId> vs;
    for (const auto& v : rows[i]) vs.push_back(to_vertex(v, where));
    Edge e = [&] {
      try {
        return Edge::canonical(vs);
      } catch (const DomainError& err) {
        throw ParseError(where + ": " + err.what());
      }
    }();
    if (!edges.insert(e).second) warnings.push_back("duplicate edge " + e.to_string() + " dropped");
  }
  if (!doc.contains("vertices")) return BasicHypergraph<O>::from_edges(std::move(edges));
  const json& vj = doc["vertices"];
  if (!vj.is_array()) throw ParseError("\"vertices\" must be an array");
  std::set<VertexId> vertices;
  for (const auto& v : vj) {
    if (!vertices.insert(to_vertex(v, "vertices")).second) {
      warnings.push_back("duplicate vertex " + std::to_string(v.get<std::int64_t>()) + " dropped");
    }
  }
  try {
    return BasicHypergraph<O>(std::move(vertices), std::move(edges));
  } catch (const DomainError& err) {
    throw ParseError(err.what());
  }
}

bool is_numeric_field(const std::string& s) {
  try {
    parse_decimal(s);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<VertexId> read_ids(const json& doc, std::size_t n) {
  std::vector<VertexId> ids;
  if (!doc.contains("ids")) {
    for (std::size_t i = 0; i < n; ++i) ids.push_back(static_cast<VertexId>(i));
    return ids;
  }
  if (!doc["ids"].is_array() || doc["ids"].size() != n) throw ParseError("\"ids\" must list one id per point");
  for (const auto& v : doc["ids"]) ids.push_back(to_vertex(v, "ids"));
  return ids;
}

MetricPointSample parse_csv_sample(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<VertexId> ids;
  std::vector<std::vector<mpq_class>> coords;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<std::pair<std::string, std::size_t>> fields;  // text, 1-based column
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.emplace_back(trim(line.substr(start, comma - start)), start + 1);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (ids.empty() && coords.empty() && !is_numeric_field(fields[0].first)) continue;  // header
    if (fields.size() < 2) throw ParseError("point row needs an id and at least one coordinate", lineno, 1);
    mpq_class id;
    try {
      id = parse_decimal(fields[0].first);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno, fields[0].second);
    }
    if (id.get_den() != 1 || id < 0 || id > std::numeric_limits<VertexId>::max()) {
      throw ParseError("point id must be a nonnegative integer", lineno, fields[0].second);
    }
    std::vector<mpq_class> x;
    for (std::size_t k = 1; k < fields.size(); ++k) {
      try {
        x.push_back(parse_decimal(fields[k].first));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno, fields[k].second);
      }
    }
    if (!coords.empty() && x.size() != coords.front().size()) {
      throw ParseError("coordinate count differs from the first row", lineno, 1);
    }
    ids.push_back(static_cast<VertexId>(id.get_num().get_ui()));
    coords.push_back(std::move(x));
  }
  if (ids.empty()) throw ParseError("point sample is empty");
  try {
    return MetricPointSample::euclidean(std::move(ids), std::move(coords));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

ParsedHypergraph parse_hypergraph(const std::string& text, bool edges_as_directed) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("hypergraph document must be a JSON object");
  const bool undirected = doc.contains("edges");
  const bool directed = doc.contains("directed_edges");
  if (undirected == directed) throw ParseError("expected exactly one of \"edges\" and \"directed_edges\"");
  ParsedHypergraph out{Hypergraph(), {}};
  if (undirected && !edges_as_directed) {
    out.graph = parse_edges<EdgeOrder::unordered>(doc, doc["edges"], out.warnings);
  } else {
    out.graph = parse_edges<EdgeOrder::ordered>(doc, doc[directed ? "directed_edges" : "edges"], out.warnings);
  }
  return out;
}

ParsedHypergraph read_hypergraph(const std::string& path, bool edges_as_directed) {
  return parse_hypergraph(read_file(path), edges_as_directed);
}

template <EdgeOrder O>
nlohmann::json hypergraph_to_json(const BasicHypergraph<O>& h) {
  json edges = json::array();
  for (const auto& e : h.edges()) edges.push_back(std::vector<VertexId>(e.vertices().begin(), e.vertices().end()));
  json out;
  out["vertices"] = std::vector<VertexId>(h.vertices().begin(), h.vertices().end());
  out[O == EdgeOrder::unordered ? "edges" : "directed_edges"] = std::move(edges);
  return out;
}

template nlohmann::json hypergraph_to_json(const Hypergraph&);
template nlohmann::json hypergraph_to_json(const Hyperdigraph&);

mpq_class parse_decimal(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  std::string digits;
  std::size_t fraction_digits = 0;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      if (seen_point) ++fraction_digits;
    } else if (s[i] == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw ParseError("not a decimal number: \"" + s + "\"");
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool neg_exp = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg_exp = s[i++] == '-';
    const std::size_t begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) && i - begin < 6) {
      exponent = exponent * 10 + (s[i++] - '0');
    }
    if (i == begin) throw ParseError("not a decimal number: \"" + s + "\"");
    if (neg_exp) exponent = -exponent;
  }
  if (i != s.size()) throw ParseError("not a decimal number: \"" + s + "\"");
  mpz_class num(digits, 10);
  const long scale = exponent - static_cast<long>(fraction_digits);
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale < 0 ? mpq_class(num, ten_pow) : mpq_class(num * ten_pow);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

MetricPointSample parse_point_sample(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty() || t[0] != '{') return parse_csv_sample(text);
  const json doc = parse_json(text);
  try {
    if (doc.contains("distance_matrix")) {
      const auto d = doc["distance_matrix"].get<std::vector<std::vector<double>>>();
      return MetricPointSample::from_matrix(read_ids(doc, d.size()), d);
    }
    if (doc.contains("circle_angles")) {
      const auto a = doc["circle_angles"].get<std::vector<double>>();
      const double tol = doc.value("tolerance", MetricPointSample::kDefaultCircleTolerance);
      return MetricPointSample::circle(read_ids(doc, a.size()), a, tol);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad point sample: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("expected \"distance_matrix\" or \"circle_angles\"");
}

MetricPointSample read_point_sample(const std::string& path) { return parse_point_sample(read_file(path)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace embhom::io
