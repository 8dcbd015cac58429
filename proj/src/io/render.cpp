#include "trisym/io/render.hpp"

#include <algorithm>
#include <sstream>

namespace trisym::io {

Json to_json(const Rational& r) { return r.wire(); }

Json to_json(const QuadraticSurd& s) {
  Json j;
  j["p"] = s.p().wire();
  j["q"] = s.q().wire();
  if (s.d().fits_slong_p())
    j["D"] = s.d().get_si();
  else
    j["D"] = s.d().get_str();
  return j;
}

Json to_json(const Polynomial& p) { return p.wire(); }

Json to_json(const IsolatingInterval& iv) {
  Json j;
  j["lo"] = iv.lo.wire();
  j["hi"] = iv.hi.wire();
  j["poly"] = to_json(iv.poly);
  return j;
}

Json to_json(const Coordinate& c) {
  if (const auto* r = std::get_if<Rational>(&c)) return to_json(*r);
  if (const auto* s = std::get_if<QuadraticSurd>(&c)) return to_json(*s);
  const auto& iv = std::get<IsolatingInterval>(c);
  if (iv.exact) return to_json(*iv.exact);
  return to_json(iv);
}

Json to_json(const EinsteinSolution& s, int digits) {
  Json j;
  j["branch"] = branch_name(s.branch);
  j["x"] = Json::array();
  j["decimal"] = Json::array();
  for (const auto& c : s.x) {
    j["x"].push_back(to_json(c));
    j["decimal"].push_back(to_decimal(c, digits));
  }
  j["exact"] = s.exact();
  j["einstein_constant_sign"] = sign_name(s.einstein_constant_sign);
  j["residual_bound"] = s.residual_bound.wire();
  return j;
}

Json case_json(const SpaceCase& c) {
  Json j;
  j["tag"] = c.tag();
  j["label"] = c.label;
  j["name"] = c.display_name();
  j["params"] = Json::object();
  for (const auto& [k, v] : c.params) j["params"][k] = v;
  j["ambient"] = c.ambient.str();
  j["isotropy"] = c.isotropy_type();
  j["fixed"] = Json::array();
  for (const auto& f : c.fixed) j["fixed"].push_back(f.str());
  j["inner"] = c.inner();
  j["flagged"] = c.flagged;
  return j;
}

Json isotropy_json(const SpaceCase& c, const IsotropyData& iso, const GammaAnchor& anchor) {
  Json j;
  j["case"] = case_json(c);
  const CaseDims dims = case_dims(c);
  j["dim_g"] = dimension(c.ambient);
  j["dim_h"] = dims.dim_h;
  j["d"] = iso.dims;
  auto triple = [](const std::array<Rational, 3>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(r.wire());
    return out;
  };
  j["gamma"] = triple(iso.gammas);
  j["c"] = triple(iso.casimirs);
  j["a"] = triple(iso.a);
  j["A"] = iso.A.wire();
  j["anchor"] = {{"block", anchor.index}, {"gamma", anchor.gamma.wire()}, {"source", anchor.source}};
  return j;
}

Json envelope(const std::string& command, Json payload, const std::vector<std::string>& warnings) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["payload"] = std::move(payload);
  j["warnings"] = warnings;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_table(const std::vector<std::string>& header, const Rows& rows) {
  std::vector<size_t> w(header.size());
  for (size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
  for (const auto& r : rows)
    for (size_t c = 0; c < r.size() && c < w.size(); ++c) w[c] = std::max(w[c], r[c].size());

  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < w.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      os << cell;
      if (c + 1 < w.size()) os << std::string(w[c] - cell.size() + 2, ' ');
    }
    os << "\n";
  };
  line(header);
  size_t total = 0;
  for (size_t c = 0; c < w.size(); ++c) total += w[c] + (c + 1 < w.size() ? 2 : 0);
  os << std::string(total, '-') << "\n";
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string render_csv(const std::vector<std::string>& header, const Rows& rows) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << quote(cells[c]);
    os << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string params_string(const SpaceCase& c) {
  std::string out;
  for (const auto& name : required_params(c.inp)) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(c.params.at(name));
  }
  return out;
}

std::string triple_string(const std::array<Rational, 3>& v) {
  return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")";
}

std::string dims_string(const std::array<long, 3>& v) {
  return "(" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " + std::to_string(v[2]) + ")";
}

}  // namespace trisym::io
