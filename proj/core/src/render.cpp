#include "betti/render.hpp"

#include <sstream>

namespace betti {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
  if (name == "m2") return OutputFormat::M2;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

static std::string render_m2(const BettiTable& T) {
  std::ostringstream out;
  if (T.empty()) {
    out << "(empty table)\n";
    return out.str();
  }
  const int pd = T.projdim();
  const int row_lo = T.min_row();
  const int row_hi = T.regularity();
  out << "    ";
  for (int i = 0; i <= pd; ++i) out << " " << i;
  out << "\n";
  for (int row = row_lo; row <= row_hi; ++row) {
    out << row << ":";
    for (int i = 0; i <= pd; ++i) {
      long long v = T.get(i, i + row);
      if (v == 0)
        out << " -";
      else
        out << " " << v;
    }
    out << "\n";
  }
  if (T.truncated) out << "(truncated at the degree cap)\n";
  return out.str();
}

static std::string render_csv(const BettiTable& T) {
  std::ostringstream out;
  out << "i,j,value\n";
  for (const auto& [k, v] : T.entries())
    out << k.first << "," << k.second << "," << v << "\n";
  return out.str();
}

std::string render_table(const BettiTable& T, OutputFormat format) {
  switch (format) {
    case OutputFormat::M2: return render_m2(T);
    case OutputFormat::Csv: return render_csv(T);
    case OutputFormat::Json: return table_to_json(T).dump(2) + "\n";
  }
  return "";
}

json table_to_json(const BettiTable& T) {
  json entries = json::array();
  for (const auto& [k, v] : T.entries())
    entries.push_back({{"i", k.first}, {"j", k.second}, {"value", v}});
  json j{{"schema", 1}, {"subject", "ideal"}, {"entries", entries},
         {"truncated", T.truncated}};
  if (!T.empty()) {
    j["reg"] = T.regularity();
    j["projdim"] = T.projdim();
  }
  return j;
}

BettiTable table_from_json(const json& j) {
  BettiTable T;
  for (const auto& e : j.at("entries"))
    T.set(e.at("i").get<int>(), e.at("j").get<int>(), e.at("value").get<long long>());
  T.truncated = j.value("truncated", false);
  return T;
}

static json ratpoly_to_json(const RatPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p) coeffs.push_back(c.get_str());
  return coeffs;
}

static RatPoly ratpoly_from_json(const json& j) {
  RatPoly p;
  for (const auto& c : j) p.emplace_back(c.get<std::string>());
  return p;
}

json fit_to_json(const FitResult& f) {
  json j;
  switch (f.kind) {
    case FitResult::Kind::Polynomial:
      j["kind"] = "polynomial";
      j["coeffs"] = ratpoly_to_json(f.poly);
      j["display"] = poly_str(f.poly);
      break;
    case FitResult::Kind::QuasiPolynomial: {
      j["kind"] = "quasi_polynomial";
      j["period"] = f.period;
      json b = json::array();
      for (const auto& br : f.branches) b.push_back(ratpoly_to_json(br));
      j["branches"] = b;
      json d = json::array();
      for (const auto& br : f.branches) d.push_back(poly_str(br));
      j["display"] = d;
      break;
    }
    case FitResult::Kind::None:
      j["kind"] = "none";
      break;
  }
  if (f.kind != FitResult::Kind::None) j["valid_from"] = f.valid_from;
  return j;
}

static FitResult fit_from_json(const json& j) {
  FitResult f;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "polynomial") {
    f.kind = FitResult::Kind::Polynomial;
    f.poly = ratpoly_from_json(j.at("coeffs"));
  } else if (kind == "quasi_polynomial") {
    f.kind = FitResult::Kind::QuasiPolynomial;
    f.period = j.at("period").get<int>();
    for (const auto& b : j.at("branches")) f.branches.push_back(ratpoly_from_json(b));
  }
  if (f.kind != FitResult::Kind::None) f.valid_from = j.at("valid_from").get<long>();
  return f;
}

json report_to_json(const SeriesReport& rep) {
  json tables = json::object();
  for (const auto& [k, T] : rep.tables) tables[std::to_string(k)] = table_to_json(T);
  json fits = json::array();
  for (const auto& [key, fit] : rep.fits) {
    json f = fit_to_json(fit);
    f["column"] = key.first;
    f["row_offset"] = key.second;
    fits.push_back(f);
  }
  json window = json::object();
  for (const auto& [k, ok] : rep.window_ok) window[std::to_string(k)] = ok;
  json certs = json::object();
  for (const auto& [k, c] : rep.certificates)
    certs[std::to_string(k)] = {{"trials", c.trials},
                                {"borel_fixed", c.borel_fixed},
                                {"all_trials_agree", c.all_trials_agree},
                                {"entry_bound", c.entry_bound},
                                {"certified", c.certified()}};
  json failures = json::object();
  for (const auto& [k, msg] : rep.failures) failures[std::to_string(k)] = msg;

  json stab{{"stabilized", rep.stabilization.stabilized},
            {"window", rep.stabilization.window}};
  if (rep.stabilization.k0) stab["k0"] = *rep.stabilization.k0;

  json j{{"schema", 1},       {"subject", "ideal"},   {"r", rep.r},
         {"tables", tables},  {"stabilization", stab}, {"fits", fits},
         {"window_ok", window}, {"window_c", rep.window_c}, {"certificates", certs},
         {"failures", failures}};
  if (rep.spread) j["analytic_spread"] = *rep.spread;
  return j;
}

SeriesReport report_from_json(const json& j) {
  SeriesReport rep;
  rep.r = j.at("r").get<int>();
  for (const auto& [k, t] : j.at("tables").items())
    rep.tables[std::stoi(k)] = table_from_json(t);
  const auto& stab = j.at("stabilization");
  rep.stabilization.stabilized = stab.at("stabilized").get<bool>();
  rep.stabilization.window = stab.at("window").get<int>();
  if (stab.contains("k0")) rep.stabilization.k0 = stab.at("k0").get<int>();
  for (const auto& f : j.at("fits"))
    rep.fits[{f.at("column").get<int>(), f.at("row_offset").get<int>()}] =
        fit_from_json(f);
  for (const auto& [k, ok] : j.at("window_ok").items())
    rep.window_ok[std::stoi(k)] = ok.get<bool>();
  rep.window_c = j.at("window_c").get<int>();
  if (j.contains("analytic_spread")) rep.spread = j.at("analytic_spread").get<int>();
  for (const auto& [k, c] : j.at("certificates").items()) {
    GinCertificate cert;
    cert.trials = c.at("trials").get<int>();
    cert.borel_fixed = c.at("borel_fixed").get<bool>();
    cert.all_trials_agree = c.at("all_trials_agree").get<bool>();
    cert.entry_bound = c.at("entry_bound").get<int>();
    rep.certificates[std::stoi(k)] = cert;
  }
  for (const auto& [k, msg] : j.at("failures").items())
    rep.failures[std::stoi(k)] = msg.get<std::string>();
  return rep;
}

json decomposition_to_json(const Decomposition& dec) {
  json parts = json::array();
  for (const auto& [w, ds] : dec.parts)
    parts.push_back({{"weight", w.get_str()}, {"degrees", ds.degrees}});
  return json{{"schema", 1}, {"parts", parts}};
}

std::string render_decomposition(const Decomposition& dec, OutputFormat format) {
  if (format == OutputFormat::Json) return decomposition_to_json(dec).dump(2) + "\n";
  std::ostringstream out;
  for (const auto& [w, ds] : dec.parts) {
    out << w.get_str() << " * pi(";
    for (std::size_t i = 0; i < ds.degrees.size(); ++i)
      out << (i ? "," : "") << ds.degrees[i];
    out << ")\n";
  }
  return out.str();
}

}  // namespace betti
