#include "serialize.hpp"

#include "errors.hpp"

namespace bcp {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(ParseError::Kind::malformed_json, 1, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

template <typename T>
T get_uint(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned()) bad(std::string("field '") + name + "' must be a non-negative integer");
  return v.get<T>();
}

json set_to_json(const VertexSet& s) { return s.members(); }

VertexSet set_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) bad("vertex list must be an array");
  VertexSet s(n);
  for (const auto& x : j) {
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= n) bad("vertex index out of range");
    s.set(x.get<Vertex>());
  }
  return s;
}

std::vector<Vertex> list_from_json(const json& j) {
  if (!j.is_array()) bad("vertex list must be an array");
  std::vector<Vertex> out;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) bad("vertex index must be a non-negative integer");
    out.push_back(x.get<Vertex>());
  }
  return out;
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
}

json partition_to_json(const PartitionDocument& doc) {
  json blocks = json::array();
  for (const auto& b : doc.partition.blocks) blocks.push_back({{"left", set_to_json(b.left)}, {"right", set_to_json(b.right)}});
  return {{"n", doc.partition.n}, {"method", doc.method}, {"seed", doc.seed}, {"blocks", blocks}};
}

PartitionDocument partition_from_json(std::string_view text) { return partition_from_json(parse_json(text)); }

PartitionDocument partition_from_json(const json& j) {
  PartitionDocument doc;
  doc.partition.n = get_uint<std::size_t>(j, "n");
  if (j.contains("method") && j.at("method").is_string()) doc.method = j.at("method").get<std::string>();
  if (j.contains("seed") && j.at("seed").is_number_unsigned()) doc.seed = j.at("seed").get<std::uint64_t>();
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) bad("'blocks' must be an array");
  for (const auto& b : blocks) {
    doc.partition.add(set_from_json(field(b, "left"), doc.partition.n), set_from_json(field(b, "right"), doc.partition.n));
  }
  return doc;
}

json witness_to_json(const fk::PatternedBipartite& f) {
  json patterns = json::array();
  for (auto p : f.patterns) {
    std::string s(f.params.r, '0');
    for (unsigned i = 0; i < f.params.r; ++i)
      if ((p >> i) & 1U) s[i] = '1';
    patterns.push_back(s);
  }
  return {{"k", f.params.k}, {"r", f.params.r}, {"s", f.params.s}, {"tau", f.params.tau},
          {"groups", f.groups}, {"b", f.b}, {"patterns", patterns}};
}

fk::PatternedBipartite witness_from_json(std::string_view text) { return witness_from_json(parse_json(text)); }

fk::PatternedBipartite witness_from_json(const json& j) {
  fk::PatternedBipartite f;
  f.params = {get_uint<unsigned>(j, "k"), get_uint<unsigned>(j, "r"), get_uint<unsigned>(j, "s"),
              get_uint<unsigned>(j, "tau")};
  if (f.params.r > 64) bad("at most 64 groups supported");
  const json& groups = field(j, "groups");
  if (!groups.is_array()) bad("'groups' must be an array");
  for (const auto& g : groups) f.groups.push_back(list_from_json(g));
  f.b = list_from_json(field(j, "b"));
  const json& pats = field(j, "patterns");
  if (!pats.is_array()) bad("'patterns' must be an array");
  for (const auto& p : pats) {
    if (!p.is_string()) bad("patterns must be 0/1 strings");
    const auto s = p.get<std::string>();
    if (s.size() != f.params.r) bad("pattern length must equal r");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        bits |= std::uint64_t{1} << i;
      else if (s[i] != '0')
        bad("patterns must be 0/1 strings");
    }
    f.patterns.push_back(bits);
  }
  return f;
}

json labeling_to_json(const VectorLabeling& l) {
  json labels = json::array();
  for (const auto& lab : l.labels) labels.push_back(label_to_string(lab, l.r));
  return {{"r", l.r}, {"labels", labels}};
}

VectorLabeling labeling_from_json(std::string_view text) { return labeling_from_json(parse_json(text)); }

VectorLabeling labeling_from_json(const json& j) {
  VectorLabeling l;
  l.r = get_uint<unsigned>(j, "r");
  if (l.r > kMaxLabelDimension) bad("labeling dimension above 64");
  const json& labels = field(j, "labels");
  if (!labels.is_array()) bad("'labels' must be an array");
  for (const auto& x : labels) {
    if (!x.is_string() || x.get<std::string>().size() != l.r) bad("each label must be a string of length r");
    try {
      l.labels.push_back(label_from_string(x.get<std::string>()));
    } catch (const InvalidArgument& e) {
      bad(e.what());
    }
  }
  return l;
}

}  // namespace bcp
