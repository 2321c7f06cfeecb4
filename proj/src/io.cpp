#include "torsion/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace torsion::io {

std::vector<Sample> read_samples_csv(std::istream& in) {
  std::vector<Sample> out;
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty CSV stream");
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line != "r,value") throw InputError("CSV header must be exactly 'r,value'");
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw InputError("CSV line " + std::to_string(lineno) + " has no comma");
    char* end = nullptr;
    std::string rs = line.substr(0, comma);
    long double r = strtold(rs.c_str(), &end);
    if (end == rs.c_str() || *end != '\0')
      throw InputError("CSV line " + std::to_string(lineno) + ": bad radius '" + rs + "'");
    std::string vs = line.substr(comma + 1);
    double v = strtod(vs.c_str(), &end);
    if (end == vs.c_str() || *end != '\0')
      throw InputError("CSV line " + std::to_string(lineno) + ": bad value '" + vs + "'");
    if (!(r > 0.0L) || r >= 1.0L)
      throw InputError("CSV line " + std::to_string(lineno) + ": radius outside (0,1)");
    out.push_back({r, v});
  }
  return out;
}

std::vector<Sample> read_samples_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open CSV file: " + path);
  return read_samples_csv(in);
}

void write_samples_csv(std::ostream& out, const std::vector<Sample>& samples) {
  out << "r,value\n";
  char buf[64];
  for (const auto& s : samples) {
    snprintf(buf, sizeof buf, "%.18Le", s.r);
    out << buf << ",";
    snprintf(buf, sizeof buf, "%.12g", s.value);
    out << buf << "\n";
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

Rat parse_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(BigInt(j.get<long long>()));
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw InputError("rational values must be integers or 'p/q' strings");
}

namespace {

const Json& need(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError("missing field '" + std::string(key) + "'");
  return *it;
}

std::vector<int> parse_exponents(const Json& j) {
  if (!j.is_array()) throw InputError("exponent vector must be an array");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(e.get<int>());
  return out;
}

MultiPoly parse_poly(const Json& j, int nvars_hint = 0) {
  MultiPoly p;
  if (!j.is_array()) throw InputError("polynomial must be an array of terms");
  for (const auto& term : j) {
    auto exps = parse_exponents(need(term, "exps"));
    p.terms.emplace_back(exps, parse_rat(need(term, "coeff")));
    p.nvars = static_cast<int>(exps.size());
  }
  if (p.nvars == 0) p.nvars = nvars_hint;
  p.validate();
  return p;
}

}  // namespace

Germ parse_germ(const Json& j) {
  std::string type = need(j, "type").get<std::string>();
  if (type == "brieskorn-pham") {
    BrieskornPham bp;
    for (const auto& e : need(j, "exponents")) bp.exponents.push_back(e.get<long>());
    return bp;
  }
  if (type == "quasi-homogeneous") {
    QuasiHomogeneous qh;
    for (const auto& w : need(j, "weights")) qh.weights.push_back(parse_rat(w));
    if (j.contains("poly")) qh.poly = parse_poly(j["poly"], static_cast<int>(qh.weights.size()));
    else qh.poly.nvars = static_cast<int>(qh.weights.size());
    return qh;
  }
  if (type == "newton") {
    NewtonConvenient nc;
    for (const auto& v : need(j, "vertices")) {
      std::vector<long> vertex;
      for (const auto& e : v) vertex.push_back(e.get<long>());
      nc.vertices.push_back(std::move(vertex));
      nc.nvars = static_cast<int>(nc.vertices.back().size());
    }
    return nc;
  }
  if (type == "explicit") {
    ExplicitGerm eg;
    eg.poly = parse_poly(need(j, "poly"));
    eg.degree_bound = need(j, "degree_bound").get<int>();
    return eg;
  }
  throw InputError("unknown germ type: " + type);
}

std::vector<Germ> parse_germ_list(const Json& j) {
  if (!j.is_array()) throw InputError("'germs' must be an array");
  std::vector<Germ> out;
  for (const auto& g : j) out.push_back(parse_germ(g));
  return out;
}

MonodromySpec parse_monodromy(const Json& j) {
  MonodromySpec spec;
  spec.n = need(j, "n").get<int>();
  for (const auto& [key, angles] : need(j, "per_degree").items()) {
    int q = std::stoi(key);
    std::vector<Rat> list;
    for (const auto& a : angles) list.push_back(parse_rat(a));
    spec.per_degree.emplace(q, std::move(list));
  }
  spec.validate();
  return spec;
}

ColengthSpec parse_colengths(const Json& j) {
  ColengthSpec spec;
  spec.deg_mu = need(j, "deg_mu").get<long>();
  for (const auto& [key, c] : need(j, "colengths").items())
    spec.colengths.emplace(std::stoi(key), c.get<long>());
  spec.validate();
  return spec;
}

RingCtx parse_ring(const Json& j) {
  int dim = need(j, "dim").get<int>();
  std::vector<RingCtx::Gen> gens;
  for (const auto& g : need(j, "generators"))
    gens.push_back({need(g, "name").get<std::string>(), need(g, "degree").get<int>()});
  return RingCtx(dim, std::move(gens));
}

namespace {

Mono parse_mono(const RingCtx& ctx, const Json& j) {
  Mono m(ctx.gens.size(), 0);
  for (const auto& [name, e] : j.items())
    m[static_cast<size_t>(ctx.gen_index(name))] = e.get<int>();
  return m;
}

}  // namespace

GradedElt parse_elt(const RingCtx& ctx, const Json& j) {
  GradedElt e(ctx);
  if (!j.is_array()) throw InputError("graded element must be an array of terms");
  for (const auto& term : j)
    e.add_term(parse_mono(ctx, need(term, "monomial")), parse_rat(need(term, "coeff")));
  return e;
}

BundleData parse_bundle(const RingCtx& ctx, const Json& j) {
  BundleData b;
  b.ctx = ctx;
  b.name = need(j, "name").get<std::string>();
  b.rank = need(j, "rank").get<int>();
  if (j.contains("chern"))
    for (const auto& c : j["chern"]) b.chern.push_back(parse_elt(ctx, c));
  b.validate();
  return b;
}

IntersectionData parse_intersections(const RingCtx& ctx, const Json& j) {
  IntersectionData data;
  data.ctx = ctx;
  if (!j.is_array()) throw InputError("intersections must be an array");
  for (const auto& entry : j)
    data.values.emplace(parse_mono(ctx, need(entry, "monomial")),
                        parse_rat(need(entry, "value")));
  data.validate();
  return data;
}

QuadraticRank2Config parse_quadratic(const Json& j) {
  QuadraticRank2Config cfg;
  cfg.dim_sigma = need(j, "dim_sigma").get<int>();
  RingCtx ctx = parse_ring(need(j, "ring"));
  const Json& bundles = need(j, "bundles");
  cfg.tangent = parse_bundle(ctx, need(bundles, "tangent"));
  cfg.normal = parse_bundle(ctx, need(bundles, "normal"));
  cfg.xi = parse_bundle(ctx, need(bundles, "xi"));
  cfg.hyperplane = parse_bundle(ctx, need(bundles, "h"));
  cfg.intersections = parse_intersections(ctx, need(j, "intersections"));
  cfg.m = j.contains("m") ? j["m"].get<long>() : 0;
  cfg.validate();
  return cfg;
}

std::string decimal(double v) {
  char buf[64];
  snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json rat_field(const Rat& v, const std::string& source) {
  Json j;
  j["exact"] = v.str();
  j["decimal"] = decimal(v.to_double());
  j["source"] = source;
  return j;
}

Json num_field(double v, const std::string& source) {
  Json j;
  j["decimal"] = decimal(v);
  j["source"] = source;
  return j;
}

}  // namespace torsion::io
