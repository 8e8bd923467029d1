#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>

#include "geodex/errors.hpp"
#include "geodex/graph.hpp"
#include "json.hpp"

namespace geodex {

namespace {

Graph rebuild(GraphMeta meta, std::vector<std::string> labels,
              const std::vector<std::vector<std::uint32_t>>& rows) {
  GraphBuilder builder(std::move(meta), std::move(labels));
  for (std::uint32_t u = 0; u < rows.size(); ++u)
    for (std::uint32_t v : rows[u]) {
      require(v < rows.size(), errc::malformed_input, "neighbor index out of range");
      bool mutual = std::find(rows[v].begin(), rows[v].end(), u) != rows[v].end();
      require(mutual, errc::malformed_input, "adjacency lists are not symmetric");
      if (u < v) builder.add_edge(u, v);
    }
  return builder.finish();
}

void put_u32(std::ostream& out, std::uint32_t x) {
  char raw[4];
  std::memcpy(raw, &x, 4);
  out.write(raw, 4);
}

std::uint32_t get_u32(std::istream& in) {
  char raw[4];
  in.read(raw, 4);
  require(in.good(), errc::malformed_input, "truncated binary graph");
  std::uint32_t x;
  std::memcpy(&x, raw, 4);
  return x;
}

void put_string(std::ostream& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_string(std::istream& in) {
  const std::uint32_t len = get_u32(in);
  require(len <= (1u << 24), errc::malformed_input, "implausible string length");
  std::string s(len, '\0');
  in.read(s.data(), len);
  require(in.good(), errc::malformed_input, "truncated binary graph");
  return s;
}

}  // namespace

std::string graph_to_json(const Graph& G) {
  nlohmann::json j;
  j["meta"] = {{"family", G.meta.family}, {"params", G.meta.params}};
  j["n"] = G.n;
  j["labels"] = G.labels;
  j["adjacency"] = G.adj;
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::malformed_input, std::string("bad graph JSON: ") + e.what());
  }
  try {
    GraphMeta meta{j.at("meta").at("family").get<std::string>(),
                   j.at("meta").at("params").get<std::string>()};
    const auto n = j.at("n").get<std::uint64_t>();
    auto labels = j.at("labels").get<std::vector<std::string>>();
    auto rows = j.at("adjacency").get<std::vector<std::vector<std::uint32_t>>>();
    require(labels.size() == n && rows.size() == n, errc::malformed_input,
            "n disagrees with labels/adjacency lengths");
    return rebuild(std::move(meta), std::move(labels), rows);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::malformed_input, std::string("bad graph JSON: ") + e.what());
  }
}

void write_graph_json(const Graph& G, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), errc::malformed_input, "cannot open " + path);
  out << graph_to_json(G) << "\n";
  require(out.good(), errc::malformed_input, "write to " + path + " failed");
}

Graph read_graph_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::malformed_input, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

void write_graph_binary(const Graph& G, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), errc::malformed_input, "cannot open " + path);
  out.write("GDX1", 4);
  put_u32(out, G.n);
  put_string(out, G.meta.family);
  put_string(out, G.meta.params);
  for (const auto& label : G.labels) put_string(out, label);
  const std::uint32_t row_bytes = (G.n + 7) / 8;
  std::vector<char> row(row_bytes);
  for (std::uint32_t u = 0; u < G.n; ++u) {
    std::fill(row.begin(), row.end(), 0);
    for (std::uint32_t v : G.adj[u]) row[v >> 3] |= static_cast<char>(1 << (v & 7));
    out.write(row.data(), row_bytes);
  }
  require(out.good(), errc::malformed_input, "write to " + path + " failed");
}

Graph read_graph_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), errc::malformed_input, "cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  require(in.good() && std::memcmp(magic, "GDX1", 4) == 0, errc::malformed_input,
          "not a GDX1 graph file");
  const std::uint32_t n = get_u32(in);
  require(n >= 1 && n <= kGraphVertexBound, errc::malformed_input, "vertex count out of range");
  GraphMeta meta;
  meta.family = get_string(in);
  meta.params = get_string(in);
  std::vector<std::string> labels(n);
  for (auto& label : labels) label = get_string(in);
  const std::uint32_t row_bytes = (n + 7) / 8;
  std::vector<std::vector<char>> raw(n, std::vector<char>(row_bytes));
  for (auto& row : raw) {
    in.read(row.data(), row_bytes);
    require(in.good(), errc::malformed_input, "truncated binary graph");
  }
  std::vector<std::vector<std::uint32_t>> rows(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      if ((raw[u][v >> 3] >> (v & 7)) & 1) rows[u].push_back(v);
  return rebuild(std::move(meta), std::move(labels), rows);
}

}  // namespace geodex
