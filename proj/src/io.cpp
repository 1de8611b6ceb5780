#include "stdpairs/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace stdpairs {

namespace {

[[noreturn]] void parse_error(const std::string &what) {
  throw Error(ErrorKind::ParseError, what);
}

Int parse_int(const Json &j, const std::string &where) {
  if (!j.is_number_integer())
    parse_error(where + ": expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() >
                                    static_cast<std::uint64_t>(INT64_MAX))
    parse_error(where + ": integer out of range");
  return j.get<Int>();
}

IntVec parse_vector(const Json &j, const std::string &where) {
  if (!j.is_array())
    parse_error(where + ": expected an array of integers");
  IntVec v;
  for (const auto &x : j)
    v.push_back(parse_int(x, where));
  return v;
}

const Json &field(const Json &j, const char *name) {
  if (!j.is_object() || !j.contains(name))
    parse_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Json vector_json(const IntVec &v) {
  Json out = Json::array();
  for (Int x : v)
    out.push_back(x);
  return out;
}

const char *kind_name(DecompositionKind k) {
  return k == DecompositionKind::primary ? "primary" : "irreducible";
}

} // namespace

Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    parse_error(e.what());
  }
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    parse_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

IntMatrix parse_matrix(const Json &j) {
  const Json &rows = field(j, "matrix");
  if (!rows.is_array() || rows.empty())
    parse_error("matrix: expected a nonempty array of rows");
  std::vector<IntVec> r;
  for (const auto &row : rows) {
    r.push_back(parse_vector(row, "matrix row"));
    if (r.back().size() != r.front().size() || r.back().empty())
      parse_error("matrix: rows must be nonempty and of equal length");
  }
  return IntMatrix::from_rows(r);
}

Json emit_matrix(const IntMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows.push_back(vector_json(m.row(i)));
  return Json{{"matrix", rows}};
}

std::vector<IntVec> parse_generators(const Json &j) {
  const Json &g = field(j, "generators");
  if (!g.is_array())
    parse_error("generators: expected an array");
  std::vector<IntVec> out;
  for (const auto &x : g)
    out.push_back(parse_vector(x, "generator"));
  return out;
}

Json emit_ideal(const MonomialIdeal &ideal) {
  Json g = Json::array();
  for (const auto &d : ideal.sorted_degrees())
    g.push_back(vector_json(d));
  return Json{{"generators", g}};
}

std::vector<Pair> parse_pairs(const Configuration &config, const Json &j) {
  const Json &ps = field(j, "pairs");
  if (!ps.is_array())
    parse_error("pairs: expected an array");
  std::vector<Pair> out;
  for (const auto &p : ps) {
    IntVec root = parse_vector(field(p, "root"), "pair root");
    IntVec face = parse_vector(field(p, "face"), "pair face");
    if (root.size() != config.dim())
      parse_error("pair root " + format_vector(root) + " has the wrong length");
    std::vector<std::size_t> idx;
    for (Int c : face) {
      if (c < 1 || static_cast<std::size_t>(c) > config.size())
        parse_error("pair face: column index " + std::to_string(c) +
                    " out of range");
      idx.push_back(static_cast<std::size_t>(c - 1));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    auto f = config.find_face(idx);
    if (!f)
      throw Error(ErrorKind::ValidationError,
                  "pair face " + format_vector(face) + " is not a face");
    if (!is_member(config, root))
      throw Error(ErrorKind::ValidationError,
                  "pair root " + format_vector(root) + " is not in the semigroup");
    out.push_back({root, *f});
  }
  return out;
}

Json emit_face(const Configuration &config, FaceId f) {
  Json out = Json::array();
  for (auto j : config.face(f).indices)
    out.push_back(static_cast<Int>(j + 1));
  return out;
}

Json emit_pair(const Configuration &config, const Pair &p) {
  return Json{{"root", vector_json(p.root)}, {"face", emit_face(config, p.face)}};
}

Json emit_standard_pairs(const Configuration &config, const StandardPairSet &s) {
  Json pairs = Json::array();
  for (const auto &p : s.pairs)
    pairs.push_back(emit_pair(config, p));
  Json classes = Json::array();
  for (std::size_t c = 0; c < s.classes.size(); ++c) {
    Json members = Json::array();
    for (auto i : s.classes[c])
      members.push_back(i);
    bool maximal = false;
    if (auto it = s.maximal_classes.find(s.class_faces[c]);
        it != s.maximal_classes.end())
      maximal = std::find(it->second.begin(), it->second.end(), c) !=
                it->second.end();
    classes.push_back(Json{{"face", emit_face(config, s.class_faces[c])},
                           {"pairs", members},
                           {"maximal", maximal}});
  }
  Json order = Json::array();
  for (const auto &[a, b] : s.class_order)
    order.push_back(Json::array({a, b}));
  return Json{{"pairs", pairs}, {"classes", classes}, {"class_order", order}};
}

Json emit_configuration(const Configuration &config) {
  Json facets = Json::array();
  for (const auto &f : config.facets()) {
    Json cols = Json::array();
    for (auto j : f.facet)
      cols.push_back(static_cast<Int>(j + 1));
    Json entry{{"coefficients", vector_json(f.coefficients)}};
    if (f.denominator != 1)
      entry["denominator"] = f.denominator;
    entry["facet"] = cols;
    facets.push_back(entry);
  }
  Json faces = Json::array();
  for (std::size_t k = 0; k < config.faces().size(); ++k)
    faces.push_back(emit_face(config, FaceId{k}));
  Json out = emit_matrix(config.matrix());
  out["facets"] = facets;
  out["faces"] = faces;
  return out;
}

Json emit_faces(const Configuration &config, const std::vector<FaceId> &faces) {
  Json out = Json::array();
  for (auto f : faces)
    out.push_back(emit_face(config, f));
  return Json{{"faces", out}};
}

Json emit_multiplicity(const Configuration &config, const MultiplicityTable &t) {
  Json out = Json::array();
  for (const auto &[f, n] : t)
    out.push_back(Json{{"face", emit_face(config, f)}, {"multiplicity", n}});
  return Json{{"multiplicities", out}};
}

Json emit_decomposition(const Configuration &config,
                        const DecompositionReport &report) {
  Json comps = Json::array();
  for (std::size_t k = 0; k < report.components.size(); ++k)
    comps.push_back(
        Json{{"face", emit_face(config, report.component_faces[k])},
             {"generators", emit_ideal(report.components[k])["generators"]}});
  Json out{{"kind", kind_name(report.kind)}, {"components", comps}};
  if (report.irredundant)
    out["irredundant"] = *report.irredundant;
  return out;
}

DecompositionReport parse_decomposition(ConfigPtr config, const Json &j) {
  DecompositionReport report;
  const Json &kind = field(j, "kind");
  if (kind == "primary")
    report.kind = DecompositionKind::primary;
  else if (kind == "irreducible")
    report.kind = DecompositionKind::irreducible;
  else
    parse_error("kind: expected \"primary\" or \"irreducible\"");
  const Json &comps = field(j, "components");
  if (!comps.is_array())
    parse_error("components: expected an array");
  for (const auto &c : comps) {
    Json pair{{"pairs", Json::array({Json{{"root", IntVec(config->dim(), 0)},
                                          {"face", field(c, "face")}}})}};
    report.component_faces.push_back(parse_pairs(*config, pair).front().face);
    report.components.push_back(
        MonomialIdeal::from_degrees(config, parse_generators(c)));
  }
  if (j.contains("irredundant")) {
    if (!j.at("irredundant").is_boolean())
      parse_error("irredundant: expected a boolean");
    report.irredundant = j.at("irredundant").get<bool>();
  }
  return report;
}

Json emit_error(const Error &e) {
  return Json{{"error",
               {{"kind", std::string(to_string(e.kind()))},
                {"message", e.what()},
                {"certificate", vector_json(e.certificate())}}}};
}

std::string text_vector(const IntVec &v) { return format_vector(v); }

std::string text_face(const Configuration &config, FaceId f) {
  std::string s = "{";
  const auto &idx = config.face(f).indices;
  for (std::size_t k = 0; k < idx.size(); ++k)
    s += (k ? "," : "") + std::to_string(idx[k] + 1);
  return s + "}";
}

std::string text_standard_pairs(const Configuration &config,
                                const StandardPairSet &s) {
  std::ostringstream out;
  out << s.pairs.size() << " standard pairs, " << s.classes.size()
      << " overlap classes\n";
  for (std::size_t c = 0; c < s.classes.size(); ++c) {
    const auto &max = s.maximal_classes.at(s.class_faces[c]);
    bool maximal = std::find(max.begin(), max.end(), c) != max.end();
    out << "class " << c << (maximal ? " (maximal)" : "") << ":";
    for (auto i : s.classes[c])
      out << " (" << format_vector(s.pairs[i].root) << ", "
          << text_face(config, s.pairs[i].face) << ")";
    out << "\n";
  }
  return out.str();
}

std::string text_ideal(const MonomialIdeal &ideal) {
  std::string s = "<";
  auto d = ideal.sorted_degrees();
  for (std::size_t k = 0; k < d.size(); ++k)
    s += (k ? ", " : "") + format_vector(d[k]);
  return s + ">";
}

std::string text_decomposition(const Configuration &config,
                               const DecompositionReport &report) {
  std::ostringstream out;
  out << kind_name(report.kind) << " decomposition, "
      << report.components.size() << " components\n";
  for (std::size_t k = 0; k < report.components.size(); ++k)
    out << text_face(config, report.component_faces[k]) << ": "
        << text_ideal(report.components[k]) << "\n";
  if (report.irredundant)
    out << (*report.irredundant ? "irredundant\n" : "redundant\n");
  return out.str();
}

} // namespace stdpairs
