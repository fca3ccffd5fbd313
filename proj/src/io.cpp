#include "lnet/io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

namespace lnet {

namespace {

using nlohmann::json;

json number(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

double read_number(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!j.is_number()) throw Error(ErrorKind::SchemaMismatch, "expected a number, got " + j.dump());
  return j.get<double>();
}

template <class V>
json row(const V& v) {
  json r = json::array();
  for (int k = 0; k < int(v.size()); ++k) r.push_back(number(v[k]));
  return r;
}

std::vector<double> read_row(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) {
    throw Error(ErrorKind::SchemaMismatch, "expected a row of " + std::to_string(n) + " numbers");
  }
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = read_number(j[k]);
  return out;
}

const json& field(const json& doc, const char* name, std::size_t count) {
  if (!doc.contains(name)) throw Error(ErrorKind::SchemaMismatch, std::string("missing field ") + name);
  const json& f = doc.at(name);
  if (!f.is_array() || f.size() != count) {
    throw Error(ErrorKind::SchemaMismatch, std::string("field ") + name + " has the wrong length");
  }
  return f;
}

template <class T, class Encode>
json encode_field(const std::vector<T>& data, Encode enc) {
  json out = json::array();
  for (const T& x : data) out.push_back(enc(x));
  return out;
}

json header(const std::string& schema, const QuadGrid& g) {
  return {{"schema", schema}, {"version", kFormatVersion}, {"grid", {{"width", g.width()}, {"height", g.height()}}}};
}

json encode(const ContactCongruence& cc) {
  json d = header("congruence", cc.grid());
  d["spheres"] = encode_field(cc.spheres.data(), [](const OrientedSphere& s) {
    return json::array({number(s.center[0]), number(s.center[1]), number(s.center[2]), number(s.rho)});
  });
  d["isolines"] = encode_field(cc.isolines.data(), [](const OrientedIsoLine& l) {
    json r = row(l.base);
    for (const json& x : row(l.dir)) r.push_back(x);
    for (const json& x : row(l.ospan)) r.push_back(x);
    return r;
  });
  return d;
}

json encode(const CirclePattern& p) {
  json d = header("circle_pattern", p.circles.grid());
  d["circles"] = encode_field(p.circles.data(), [](const Circle2& c) {
    return json::array({number(c.center[0]), number(c.center[1]), number(c.radius)});
  });
  d["points"] = encode_field(p.points.data(), [](const Vec2& x) { return row(x); });
  return d;
}

json encode(const CyclePattern& p) {
  json d = header("cycle_pattern", p.cycles.grid());
  d["cycles"] = encode_field(p.cycles.data(), [](const Cycle2& c) {
    return json::array({number(c.center[0]), number(c.center[1]), number(c.radius)});
  });
  d["lines"] = encode_field(p.lines.data(), [](const OrientedLine2& l) {
    return json::array({number(l.normal[0]), number(l.normal[1]), number(l.offset)});
  });
  return d;
}

json encode(const IncircularNet& inc) {
  json d = header("incircular_net", inc.grid());
  d["centers"] = encode_field(inc.centers.data(), [](const Vec2& x) { return row(x); });
  d["incircle_radius"] = encode_field(inc.incircle_radius.data(), [](double r) { return number(r); });
  return d;
}

json encode(const ConicalNet& net) {
  json d = header("conical_net", net.centers.grid());
  d["centers"] = encode_field(net.centers.data(), [](const Vec2& x) { return row(x); });
  return d;
}

json encode(const ScalarField& s) {
  json d = header("scalar_field", s.values.grid());
  d["label"] = s.label;
  d["values"] = encode_field(s.values.data(), [](double x) { return number(x); });
  return d;
}

QuadGrid read_grid(const json& d) {
  if (!d.contains("grid") || !d["grid"].is_object()) throw Error(ErrorKind::SchemaMismatch, "missing grid");
  const json& g = d["grid"];
  if (!g.contains("width") || !g.contains("height") || !g["width"].is_number_integer() ||
      !g["height"].is_number_integer()) {
    throw Error(ErrorKind::SchemaMismatch, "grid needs integer width and height");
  }
  return QuadGrid(g["width"].get<int>(), g["height"].get<int>());
}

template <class T, class Decode>
void decode_field(const json& f, std::vector<T>& out, std::size_t width, Decode dec) {
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = dec(read_row(f[k], width));
}

Vec2 vec2(const std::vector<double>& r) { return Vec2(r[0], r[1]); }

Document decode(const json& d) {
  if (!d.is_object() || !d.contains("schema") || !d["schema"].is_string()) {
    throw Error(ErrorKind::SchemaMismatch, "document has no schema");
  }
  if (!d.contains("version") || !d["version"].is_number_integer()) {
    throw Error(ErrorKind::VersionMismatch, "document has no version");
  }
  const int version = d["version"].get<int>();
  if (version != kFormatVersion) {
    throw Error(ErrorKind::VersionMismatch, "version " + std::to_string(version) + ", expected " +
                                                std::to_string(kFormatVersion));
  }
  const std::string schema = d["schema"].get<std::string>();
  const QuadGrid g = read_grid(d);
  const std::size_t nv = g.num_vertices();
  const std::size_t nf = g.num_faces();

  if (schema == "congruence") {
    ContactCongruence cc{VertexField<OrientedSphere>(g), FaceField<OrientedIsoLine>(g)};
    decode_field(field(d, "spheres", nv), cc.spheres.data(), 4, [](const std::vector<double>& r) {
      return OrientedSphere{LorentzPoint(r[0], r[1], r[2]), r[3]};
    });
    decode_field(field(d, "isolines", nf), cc.isolines.data(), 10, [](const std::vector<double>& r) {
      OrientedIsoLine l;
      l.base = LorentzPoint(r[0], r[1], r[2]);
      l.dir = LorentzPoint(r[3], r[4], r[5]);
      l.ospan = CycloPoint(r[6], r[7], r[8], r[9]);
      return l;
    });
    return cc;
  }
  if (schema == "circle_pattern") {
    CirclePattern p{VertexField<Circle2>(g), FaceField<Vec2>(g)};
    decode_field(field(d, "circles", nv), p.circles.data(), 3,
                 [](const std::vector<double>& r) { return Circle2{Vec2(r[0], r[1]), r[2]}; });
    decode_field(field(d, "points", nf), p.points.data(), 2, vec2);
    return p;
  }
  if (schema == "cycle_pattern") {
    CyclePattern p{VertexField<Cycle2>(g), FaceField<OrientedLine2>(g)};
    decode_field(field(d, "cycles", nv), p.cycles.data(), 3,
                 [](const std::vector<double>& r) { return Cycle2{Vec2(r[0], r[1]), r[2]}; });
    decode_field(field(d, "lines", nf), p.lines.data(), 3,
                 [](const std::vector<double>& r) { return OrientedLine2{Vec2(r[0], r[1]), r[2]}; });
    return p;
  }
  if (schema == "incircular_net") {
    IncircularNet inc{VertexField<Vec2>(g), VertexField<double>(g)};
    decode_field(field(d, "centers", nv), inc.centers.data(), 2, vec2);
    const json& radii = field(d, "incircle_radius", nv);
    for (std::size_t k = 0; k < nv; ++k) inc.incircle_radius.data()[k] = read_number(radii[k]);
    return inc;
  }
  if (schema == "conical_net") {
    ConicalNet net{VertexField<Vec2>(g)};
    decode_field(field(d, "centers", nv), net.centers.data(), 2, vec2);
    return net;
  }
  if (schema == "scalar_field") {
    ScalarField s{VertexField<double>(g), d.value("label", std::string())};
    const json& values = field(d, "values", nv);
    for (std::size_t k = 0; k < nv; ++k) s.values.data()[k] = read_number(values[k]);
    return s;
  }
  throw Error(ErrorKind::SchemaMismatch, "unknown schema " + schema);
}

}  // namespace

std::string schema_of(const Document& doc) {
  static const char* names[] = {"congruence", "circle_pattern", "cycle_pattern",
                                "incircular_net", "conical_net", "scalar_field"};
  return names[doc.index()];
}

std::string to_json(const Document& doc) {
  return std::visit([](const auto& obj) { return encode(obj).dump(1); }, doc) + "\n";
}

Document from_json(const std::string& text) {
  json d;
  try {
    d = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    return decode(d);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaMismatch, e.what());
  } catch (const Error& e) {
    // grid construction errors surface as schema problems
    if (e.kind() == ErrorKind::InvalidGrid) throw Error(ErrorKind::SchemaMismatch, e.what());
    throw;
  }
}

void save(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << to_json(doc);
  if (!out) throw Error(ErrorKind::ParseError, "write to " + path + " failed");
}

Document load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

}  // namespace lnet
