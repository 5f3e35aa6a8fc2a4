#include "su11/io.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace su11 {

using nlohmann::json;

std::string format_double17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_dfunc_csv(std::ostream& os, const std::vector<std::string>& comments,
                     const std::vector<DFuncRow>& rows) {
  for (const std::string& c : comments) os << "# " << c << "\n";
  os << "twice_k,twice_mu,twice_mu_prime,tau,d_value\n";
  for (const DFuncRow& r : rows) {
    os << r.twice_k << ',' << r.twice_mu << ',' << r.twice_mu_prime << ','
       << format_double17(r.tau) << ',' << format_double17(r.d_value) << "\n";
  }
}

void write_wigner_csv(std::ostream& os, const WignerField& field,
                      const std::vector<std::string>& extra_comments, bool with_timestamp) {
  if (with_timestamp) {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    os << "# generated " << buf << "\n";
  }
  for (const auto& [key, value] : field.metadata) os << "# " << key << " = " << value << "\n";
  for (const std::string& c : extra_comments) os << "# " << c << "\n";
  os << "xi_re,xi_im,tau,chi,w_re,w_im,w_abs\n";
  for (std::size_t i = 0; i < field.points.size(); ++i) {
    const GridPoint& p = field.points[i];
    const Complex& w = field.values[i];
    os << format_double17(p.xi.xi.real()) << ',' << format_double17(p.xi.xi.imag()) << ','
       << format_double17(p.h.tau) << ',' << format_double17(p.h.chi) << ','
       << format_double17(w.real()) << ',' << format_double17(w.imag()) << ','
       << format_double17(std::abs(w)) << "\n";
  }
}

ParsedCsv parse_csv(std::istream& is) {
  ParsedCsv out;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
      out.comments.push_back(line.substr(start));
      continue;
    }
    if (!header_seen) {
      out.header = line;
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    out.rows.push_back(std::move(row));
  }
  return out;
}

void write_csv(std::ostream& os, const ParsedCsv& csv) {
  for (const std::string& c : csv.comments) os << "# " << c << "\n";
  os << csv.header << "\n";
  for (const auto& row : csv.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      // integral columns keep their integer spelling under %.17g
      os << format_double17(row[i]);
    }
    os << "\n";
  }
}

namespace {

Complex parse_complex(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SpecError("state spec: '" + what + "' must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

HalfInteger parse_k(const json& j) {
  if (j.is_string()) {
    try {
      return parse_half_integer(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string("state spec: ") + e.what());
    }
  }
  if (j.is_number()) {
    double v = j.get<double>();
    double twice = 2.0 * v;
    if (std::abs(twice - std::nearbyint(twice)) > 1e-12)
      throw SpecError("state spec: 'k' must be a half-integer");
    return HalfInteger::from_twice(static_cast<std::int64_t>(std::nearbyint(twice)));
  }
  throw SpecError("state spec: 'k' must be a number or a string like \"3/2\"");
}

}  // namespace

StateSpec parse_state_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("state spec: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string())
    throw SpecError("state spec: top level must be an object with a string 'variant'");
  if (!j.contains("params") || !j["params"].is_object())
    throw SpecError("state spec: missing 'params' object");
  const json& p = j["params"];

  StateSpec spec;
  std::string variant = j["variant"].get<std::string>();
  if (variant == "tmsv") {
    if (!p.contains("xi")) throw SpecError("state spec: tmsv needs params.xi");
    Complex xi = parse_complex(p["xi"], "xi");
    if (!(std::abs(xi) < 1.0)) throw SpecError("state spec: tmsv requires |xi| < 1");
    spec.params = StateSpec::Tmsv{xi};
  } else if (variant == "coherent_times_squeezed") {
    if (!p.contains("alpha") || !p.contains("xi"))
      throw SpecError("state spec: coherent_times_squeezed needs params.alpha and params.xi");
    spec.params = StateSpec::CoherentTimesSqueezed{parse_complex(p["alpha"], "alpha"),
                                                   parse_complex(p["xi"], "xi")};
  } else if (variant == "su11_coherent") {
    if (!p.contains("k") || !p.contains("xi"))
      throw SpecError("state spec: su11_coherent needs params.k and params.xi");
    HalfInteger k = parse_k(p["k"]);
    if (k.twice() < 1) throw SpecError("state spec: su11_coherent requires k >= 1/2");
    Complex xi = parse_complex(p["xi"], "xi");
    if (!(std::abs(xi) < 1.0)) throw SpecError("state spec: su11_coherent requires |xi| < 1");
    spec.params = StateSpec::Su11Coherent{k, xi};
  } else if (variant == "raw_amplitudes") {
    if (!p.contains("entries") || !p["entries"].is_array())
      throw SpecError("state spec: raw_amplitudes needs params.entries");
    StateSpec::RawAmplitudes raw;
    for (const json& e : p["entries"]) {
      if (!e.is_array() || e.size() != 4)
        throw SpecError("state spec: each entry must be [n_a, n_b, re, im]");
      int na = e[0].get<int>();
      int nb = e[1].get<int>();
      if (na < 0 || nb < 0) throw SpecError("state spec: occupation numbers must be >= 0");
      raw.entries.push_back({na, nb, Complex(e[2].get<double>(), e[3].get<double>())});
    }
    spec.params = std::move(raw);
  } else {
    throw SpecError("state spec: unknown variant '" + variant + "'");
  }

  if (j.contains("cutoff")) {
    if (!j["cutoff"].is_number_integer() || j["cutoff"].get<int>() < 0)
      throw SpecError("state spec: 'cutoff' must be a nonnegative integer");
    spec.cutoff = j["cutoff"].get<int>();
  }
  return spec;
}

StateSpec load_state_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open state spec file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_state_spec(ss.str());
}

std::string state_spec_to_json(const StateSpec& spec) {
  json j;
  j["variant"] = spec.variant_name();
  json p = json::object();
  if (const auto* t = std::get_if<StateSpec::Tmsv>(&spec.params)) {
    p["xi"] = complex_to_json(t->xi);
  } else if (const auto* cs = std::get_if<StateSpec::CoherentTimesSqueezed>(&spec.params)) {
    p["alpha"] = complex_to_json(cs->alpha);
    p["xi"] = complex_to_json(cs->zeta_sq);
  } else if (const auto* su = std::get_if<StateSpec::Su11Coherent>(&spec.params)) {
    p["k"] = su->k.str();
    p["xi"] = complex_to_json(su->xi);
  } else {
    const auto& raw = std::get<StateSpec::RawAmplitudes>(spec.params);
    json entries = json::array();
    for (const auto& e : raw.entries)
      entries.push_back(json::array({e.n_a, e.n_b, e.c.real(), e.c.imag()}));
    p["entries"] = std::move(entries);
  }
  j["params"] = std::move(p);
  if (spec.cutoff) j["cutoff"] = *spec.cutoff;
  return j.dump(2);
}

}  // namespace su11
